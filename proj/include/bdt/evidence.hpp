#pragma once

#include <string_view>

namespace bdt {

/// A Bayes factor that may be infinite, e.g. the positive-result factor of
/// a test with perfect specificity. Infinity is a state, never a double.
class BayesFactor {
 public:
  /// Throws Errc::invalid_bayes_factor unless value is finite and > 0.
  static BayesFactor finite(double value);
  static BayesFactor infinite() noexcept { return BayesFactor(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Throws Errc::infinite_bayes_factor for the infinite state.
  double value() const;

 private:
  BayesFactor() = default;
  double value_ = 0.0;
  bool infinite_ = true;
};

enum class EvidenceDirection { for_null, for_alternative, neutral };

enum class EvidenceCategory { not_worth_mention, substantial, strong, decisive };

enum class EvidenceScale { raw, log };

struct EvidenceReport {
  /// Raw Bayes factor; +inf only for the infinite-evidence state.
  double bf;
  double two_ln_bf;
  EvidenceDirection direction;
  EvidenceCategory category;
  EvidenceScale scale;
};

/// Raw-scale bands on max(bf, 1/bf), half-open [lo, hi):
///   [1, 3.2) not worth a mention, [3.2, 10) substantial,
///   [10, 100) strong, [100, inf) decisive.
EvidenceReport classify_bf(double bf);
EvidenceReport classify_bf(const BayesFactor& bf);

/// Log-scale bands on |2 ln bf|: [0, 2), [2, 6), [6, 10), [10, inf).
EvidenceReport classify_2ln_bf(double bf);
EvidenceReport classify_2ln_bf(const BayesFactor& bf);

/// Band of the raw-BF column that accompanies the log scale (boundaries
/// 3, 20, 150). Informational; classification on the log scale uses the
/// 2 ln bands.
EvidenceCategory log_table_raw_band(double bf);

std::string_view label(EvidenceCategory category) noexcept;
std::string_view label(EvidenceDirection direction) noexcept;
std::string_view label(EvidenceScale scale) noexcept;
int rank(EvidenceCategory category) noexcept;

}  // namespace bdt
