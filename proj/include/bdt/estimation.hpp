#pragma once

#include <cstdint>

#include "bdt/grid_posterior.hpp"

namespace bdt {

enum class MleMethod { closed_form, numeric };

struct MleResult {
  double theta_hat;
  double log_likelihood_at_max;
  MleMethod method;
  /// Golden-section iterations; 0 for the closed form.
  int iterations;
};

inline constexpr int kGoldenSectionMaxIterations = 200;

/// theta_hat = m / n.
MleResult binomial_mle_closed(std::int64_t successes, std::int64_t trials);

/// Golden-section maximization of the binomial log-likelihood on [0, 1].
/// Both endpoints are evaluated explicitly so boundary maxima (m = 0 or
/// m = n) come out exact. Throws Errc::non_convergence if the bracket is
/// still wider than `tolerance` after kGoldenSectionMaxIterations.
MleResult binomial_mle_numeric(std::int64_t successes, std::int64_t trials, double tolerance);

/// Binomial log-likelihood log P(m | n, theta), -inf where it vanishes.
double binomial_log_likelihood(std::int64_t successes, std::int64_t trials, double theta);

struct GridMleComparison {
  double map_theta;
  double nearest_grid_mle;
  bool equal;
};

/// Posterior mode under the (uniform) prior versus the grid point nearest
/// m / n. Ties on either side go to the smaller theta.
GridMleComparison grid_map_equals_mle(std::int64_t successes, std::int64_t trials,
                                      const PriorGrid& uniform_prior);

}  // namespace bdt
