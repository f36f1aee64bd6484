#include "bdt/grid_posterior.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bdt/distributions.hpp"
#include "bdt/error.hpp"

namespace bdt {
namespace {

[[noreturn]] void invalid_theta(double theta, const char* role) {
  throw Error(Errc::invalid_theta,
              "theta = " + std::to_string(theta) + " is not a valid " + role);
}

double observation_log_pmf(const Observation& obs, double theta) {
  switch (obs.family) {
    case Family::binomial:
      if (!(theta >= 0.0 && theta <= 1.0)) invalid_theta(theta, "success probability");
      return Binomial(obs.fixed, theta).log_pmf(obs.count);
    case Family::negative_binomial:
      if (!(theta > 0.0 && theta <= 1.0)) {
        invalid_theta(theta, "negative-binomial success probability");
      }
      return NegativeBinomial(obs.fixed, theta).log_pmf(obs.count);
    case Family::poisson:
      if (!(theta > 0.0) || !std::isfinite(theta)) invalid_theta(theta, "Poisson rate");
      return Poisson(theta).log_pmf(obs.count);
  }
  throw Error(Errc::invalid_parameter, "unknown observation family");
}

struct WeightedTerms {
  std::vector<double> log_likelihoods;
  std::vector<double> log_terms;  // log(weight) + log-likelihood
  double shift;                   // max of log_terms
  double shifted_sum;             // sum of exp(log_terms - shift), ascending theta
};

WeightedTerms weigh(const PriorGrid& prior, const ObservationModel& model) {
  WeightedTerms w;
  w.log_likelihoods.reserve(prior.size());
  w.log_terms.reserve(prior.size());
  w.shift = kLogZero;
  for (const auto& point : prior.points()) {
    const double ll = log_likelihood(model, point.theta);
    const double term = point.weight > 0.0 ? std::log(point.weight) + ll : kLogZero;
    w.log_likelihoods.push_back(ll);
    w.log_terms.push_back(term);
    w.shift = std::max(w.shift, term);
  }
  if (w.shift == kLogZero) {
    throw Error(Errc::all_zero_likelihood,
                "every grid point has zero prior weight or zero likelihood");
  }
  w.shifted_sum = 0.0;
  for (double term : w.log_terms) {
    if (term != kLogZero) w.shifted_sum += std::exp(term - w.shift);
  }
  return w;
}

}  // namespace

// --- PriorGrid -------------------------------------------------------------

PriorGrid::PriorGrid(std::vector<GridPoint> points, PriorNormalization normalization)
    : points_(std::move(points)), normalization_(normalization) {
  if (points_.empty()) throw Error(Errc::invalid_parameter, "prior grid is empty");
  double sum = 0.0;
  for (const auto& p : points_) {
    if (!std::isfinite(p.theta)) throw Error(Errc::invalid_parameter, "prior grid theta is not finite");
    if (!(p.weight >= 0.0) || !std::isfinite(p.weight)) {
      throw Error(Errc::invalid_parameter, "prior weights must be finite and nonnegative");
    }
    sum += p.weight;
  }
  std::sort(points_.begin(), points_.end(),
            [](const GridPoint& a, const GridPoint& b) { return a.theta < b.theta; });
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].theta == points_[i - 1].theta) {
      throw Error(Errc::invalid_parameter,
                  "prior grid lists theta = " + std::to_string(points_[i].theta) + " twice");
    }
  }
  if (!(sum > 0.0)) throw Error(Errc::invalid_parameter, "prior weights sum to 0");
  if (normalization_ == PriorNormalization::required &&
      std::abs(sum - 1.0) > kPriorSumTolerance) {
    throw Error(Errc::invalid_parameter,
                "prior weights sum to " + std::to_string(sum) +
                    "; pass normalized weights or mark the prior unnormalized");
  }
}

PriorGrid PriorGrid::uniform(std::vector<double> thetas) {
  if (thetas.empty()) throw Error(Errc::invalid_parameter, "prior grid is empty");
  const double w = 1.0 / static_cast<double>(thetas.size());
  std::vector<GridPoint> points;
  points.reserve(thetas.size());
  for (double t : thetas) points.push_back({t, w});
  return PriorGrid(std::move(points));
}

bool PriorGrid::is_uniform() const noexcept {
  return std::all_of(points_.begin(), points_.end(), [this](const GridPoint& p) {
    return std::abs(p.weight - points_.front().weight) <= 1e-12 * points_.front().weight;
  });
}

// --- observations ----------------------------------------------------------

Observation Observation::binomial(std::int64_t n, std::int64_t successes) {
  if (n < 1) throw Error(Errc::invalid_parameter, "binomial observation needs n >= 1");
  if (successes < 0 || successes > n) {
    throw Error(Errc::invalid_parameter, "binomial observation needs 0 <= m <= n");
  }
  return {Family::binomial, n, successes};
}

Observation Observation::negative_binomial(std::int64_t kappa, std::int64_t failures) {
  if (kappa < 1) throw Error(Errc::invalid_parameter, "negative-binomial observation needs kappa >= 1");
  if (failures < 0) throw Error(Errc::invalid_parameter, "negative-binomial observation needs m >= 0");
  return {Family::negative_binomial, kappa, failures};
}

Observation Observation::poisson(std::int64_t events) {
  if (events < 0) throw Error(Errc::invalid_parameter, "Poisson observation needs m >= 0");
  return {Family::poisson, 0, events};
}

// --- PosteriorTable --------------------------------------------------------

PosteriorTable::PosteriorTable(std::vector<PosteriorRow> rows, double marginal_likelihood)
    : rows_(std::move(rows)), marginal_(marginal_likelihood) {
  if (rows_.empty()) throw Error(Errc::invalid_parameter, "posterior table is empty");
}

PriorGrid PosteriorTable::as_prior() const {
  std::vector<GridPoint> points;
  points.reserve(rows_.size());
  for (const auto& r : rows_) points.push_back({r.theta, r.posterior});
  return PriorGrid(std::move(points));
}

// --- inference -------------------------------------------------------------

double log_likelihood(const ObservationModel& model, double theta) {
  double total = 0.0;
  for (const auto& obs : model.observations) {
    const double term = observation_log_pmf(obs, theta);
    if (term == kLogZero) total = kLogZero;
    else if (total != kLogZero) total += term;
  }
  return total;
}

double marginal_likelihood(const PriorGrid& prior, const ObservationModel& model) {
  const WeightedTerms w = weigh(prior, model);
  return std::exp(w.shift) * w.shifted_sum;
}

PosteriorTable posterior(const PriorGrid& prior, const ObservationModel& model) {
  const WeightedTerms w = weigh(prior, model);
  std::vector<PosteriorRow> rows;
  rows.reserve(prior.size());
  for (std::size_t i = 0; i < prior.size(); ++i) {
    const auto& point = prior.points()[i];
    const double mass =
        w.log_terms[i] == kLogZero ? 0.0 : std::exp(w.log_terms[i] - w.shift) / w.shifted_sum;
    rows.push_back({point.theta, point.weight, w.log_likelihoods[i], mass});
  }
  return PosteriorTable(std::move(rows), std::exp(w.shift) * w.shifted_sum);
}

double posterior_mean(const PosteriorTable& table) {
  double mean = 0.0;
  for (const auto& r : table.rows()) mean += r.theta * r.posterior;
  return mean;
}

std::pair<double, double> posterior_mode(const PosteriorTable& table) {
  const PosteriorRow* best = &table.rows().front();
  for (const auto& r : table.rows()) {
    if (r.posterior > best->posterior) best = &r;
  }
  return {best->theta, best->posterior};
}

double nearest_grid_estimate(const PosteriorTable& table) {
  const double mean = posterior_mean(table);
  double best = table.rows().front().theta;
  double best_distance = std::abs(best - mean);
  for (const auto& r : table.rows()) {
    const double d = std::abs(r.theta - mean);
    if (d < best_distance) {
      best = r.theta;
      best_distance = d;
    }
  }
  return best;
}

double point_bayes_factor(const ObservationModel& model, double theta0, double theta1) {
  const double ll1 = log_likelihood(model, theta1);
  if (ll1 == kLogZero) {
    throw Error(Errc::zero_denominator, "point Bayes factor: likelihood at theta1 is 0");
  }
  const double ll0 = log_likelihood(model, theta0);
  return ll0 == kLogZero ? 0.0 : std::exp(ll0 - ll1);
}

}  // namespace bdt
