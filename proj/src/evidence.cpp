#include "bdt/evidence.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "bdt/error.hpp"

namespace bdt {
namespace {

struct Bands {
  // Lower edges of substantial, strong, decisive.
  std::array<double, 3> edges;
};

constexpr Bands kRawBands{{3.2, 10.0, 100.0}};
constexpr Bands kLogBands{{2.0, 6.0, 10.0}};
constexpr Bands kLogTableRawBands{{3.0, 20.0, 150.0}};

EvidenceCategory band(const Bands& bands, double magnitude) {
  if (magnitude >= bands.edges[2]) return EvidenceCategory::decisive;
  if (magnitude >= bands.edges[1]) return EvidenceCategory::strong;
  if (magnitude >= bands.edges[0]) return EvidenceCategory::substantial;
  return EvidenceCategory::not_worth_mention;
}

void require_valid(double bf) {
  if (!(bf > 0.0) || !std::isfinite(bf)) {
    throw Error(Errc::invalid_bayes_factor, "Bayes factor must be finite and positive");
  }
}

EvidenceDirection direction_of(double bf) {
  if (bf > 1.0) return EvidenceDirection::for_null;
  if (bf < 1.0) return EvidenceDirection::for_alternative;
  return EvidenceDirection::neutral;
}

EvidenceReport infinite_report(EvidenceScale scale) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {inf, inf, EvidenceDirection::for_null, EvidenceCategory::decisive, scale};
}

}  // namespace

BayesFactor BayesFactor::finite(double value) {
  require_valid(value);
  BayesFactor bf;
  bf.value_ = value;
  bf.infinite_ = false;
  return bf;
}

double BayesFactor::value() const {
  if (infinite_) throw Error(Errc::infinite_bayes_factor, "Bayes factor is infinite");
  return value_;
}

EvidenceReport classify_bf(double bf) {
  require_valid(bf);
  const double magnitude = bf >= 1.0 ? bf : 1.0 / bf;
  return {bf, 2.0 * std::log(bf), direction_of(bf), band(kRawBands, magnitude),
          EvidenceScale::raw};
}

EvidenceReport classify_bf(const BayesFactor& bf) {
  return bf.is_infinite() ? infinite_report(EvidenceScale::raw) : classify_bf(bf.value());
}

EvidenceReport classify_2ln_bf(double bf) {
  require_valid(bf);
  const double two_ln = 2.0 * std::log(bf);
  return {bf, two_ln, direction_of(bf), band(kLogBands, std::abs(two_ln)),
          EvidenceScale::log};
}

EvidenceReport classify_2ln_bf(const BayesFactor& bf) {
  return bf.is_infinite() ? infinite_report(EvidenceScale::log) : classify_2ln_bf(bf.value());
}

EvidenceCategory log_table_raw_band(double bf) {
  require_valid(bf);
  return band(kLogTableRawBands, bf >= 1.0 ? bf : 1.0 / bf);
}

std::string_view label(EvidenceCategory category) noexcept {
  switch (category) {
    case EvidenceCategory::not_worth_mention: return "Not worth more than a bare mention";
    case EvidenceCategory::substantial: return "Substantial";
    case EvidenceCategory::strong: return "Strong";
    case EvidenceCategory::decisive: return "Decisive";
  }
  return "";
}

std::string_view label(EvidenceDirection direction) noexcept {
  switch (direction) {
    case EvidenceDirection::for_null: return "for null";
    case EvidenceDirection::for_alternative: return "for alternative";
    case EvidenceDirection::neutral: return "neutral";
  }
  return "";
}

std::string_view label(EvidenceScale scale) noexcept {
  return scale == EvidenceScale::raw ? "raw" : "log";
}

int rank(EvidenceCategory category) noexcept { return static_cast<int>(category); }

}  // namespace bdt
