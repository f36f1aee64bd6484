#include "bdt/error.hpp"

namespace bdt {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::zero_marginal: return "zero-marginal";
    case Errc::inconsistent_probabilities: return "inconsistency";
    case Errc::invalid_partition: return "invalid-partition";
    case Errc::zero_evidence: return "zero-evidence";
    case Errc::infinite_odds: return "infinite-odds";
    case Errc::degenerate_test: return "degenerate-test";
    case Errc::infinite_bayes_factor: return "infinite-bf";
    case Errc::invalid_theta: return "invalid-theta";
    case Errc::all_zero_likelihood: return "all-zero-likelihood";
    case Errc::zero_denominator: return "zero-denominator";
    case Errc::invalid_bayes_factor: return "invalid-bf";
    case Errc::invalid_counts: return "invalid-counts";
    case Errc::non_convergence: return "non-convergence";
    case Errc::cycle_detected: return "cycle-detected";
    case Errc::malformed_input: return "malformed-input";
    case Errc::io_failure: return "io-failure";
  }
  return "unknown";
}

}  // namespace bdt
