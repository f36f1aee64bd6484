#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bdt {

enum class Errc {
  invalid_parameter,
  zero_marginal,
  inconsistent_probabilities,
  invalid_partition,
  zero_evidence,
  infinite_odds,
  degenerate_test,
  infinite_bayes_factor,
  invalid_theta,
  all_zero_likelihood,
  zero_denominator,
  invalid_bayes_factor,
  invalid_counts,
  non_convergence,
  cycle_detected,
  malformed_input,
  io_failure,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bdt
