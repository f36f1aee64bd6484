#include "bdt/estimation.hpp"

#include <cmath>

#include "bdt/distributions.hpp"
#include "bdt/error.hpp"

namespace bdt {
namespace {

void require_counts(std::int64_t successes, std::int64_t trials) {
  if (trials < 1 || successes < 0 || successes > trials) {
    throw Error(Errc::invalid_counts, "MLE needs 0 <= m <= n and n >= 1");
  }
}

// 1 / golden ratio
constexpr double kInvPhi = 0.6180339887498949;

}  // namespace

double binomial_log_likelihood(std::int64_t successes, std::int64_t trials, double theta) {
  return Binomial(trials, theta).log_pmf(successes);
}

MleResult binomial_mle_closed(std::int64_t successes, std::int64_t trials) {
  require_counts(successes, trials);
  const double theta = static_cast<double>(successes) / static_cast<double>(trials);
  return {theta, binomial_log_likelihood(successes, trials, theta), MleMethod::closed_form, 0};
}

MleResult binomial_mle_numeric(std::int64_t successes, std::int64_t trials, double tolerance) {
  require_counts(successes, trials);
  if (!(tolerance > 0.0)) throw Error(Errc::invalid_parameter, "MLE tolerance must be positive");

  auto f = [&](double theta) { return binomial_log_likelihood(successes, trials, theta); };

  double lo = 0.0;
  double hi = 1.0;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (hi - lo > tolerance) {
    if (iterations == kGoldenSectionMaxIterations) {
      throw Error(Errc::non_convergence,
                  "golden-section search did not reach the requested tolerance");
    }
    ++iterations;
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }

  double theta = 0.5 * (lo + hi);
  double best = f(theta);
  for (double endpoint : {0.0, 1.0}) {
    const double at_end = f(endpoint);
    if (at_end >= best) {
      theta = endpoint;
      best = at_end;
    }
  }
  return {theta, best, MleMethod::numeric, iterations};
}

GridMleComparison grid_map_equals_mle(std::int64_t successes, std::int64_t trials,
                                      const PriorGrid& uniform_prior) {
  require_counts(successes, trials);
  if (!uniform_prior.is_uniform()) {
    throw Error(Errc::invalid_parameter, "MAP/MLE comparison needs a uniform prior grid");
  }
  const ObservationModel model{{Observation::binomial(trials, successes)}};
  const double map_theta = posterior_mode(posterior(uniform_prior, model)).first;

  const double mle = binomial_mle_closed(successes, trials).theta_hat;
  double nearest = uniform_prior.points().front().theta;
  for (const auto& p : uniform_prior.points()) {
    if (std::abs(p.theta - mle) < std::abs(nearest - mle)) nearest = p.theta;
  }
  return {map_theta, nearest, map_theta == nearest};
}

}  // namespace bdt
