#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bdt {

struct GridPoint {
  double theta;
  double weight;
};

enum class PriorNormalization {
  /// Weights must sum to 1 within kPriorSumTolerance.
  required,
  /// Any nonnegative weights with a positive sum are accepted as-is.
  unnormalized,
};

inline constexpr double kPriorSumTolerance = 1e-9;

/// Discrete prior over candidate parameter values. Points are stored in
/// ascending theta order regardless of input order; duplicate thetas are
/// rejected.
class PriorGrid {
 public:
  explicit PriorGrid(std::vector<GridPoint> points,
                     PriorNormalization normalization = PriorNormalization::required);

  /// Equal weights 1/size on the given thetas.
  static PriorGrid uniform(std::vector<double> thetas);

  const std::vector<GridPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  PriorNormalization normalization() const noexcept { return normalization_; }
  bool is_uniform() const noexcept;

 private:
  std::vector<GridPoint> points_;
  PriorNormalization normalization_;
};

enum class Family { binomial, negative_binomial, poisson };

/// One observed count. For binomial and negative-binomial observations the
/// shared parameter is the success probability; for Poisson it is the rate.
struct Observation {
  Family family;
  /// n for binomial, kappa for negative binomial, unused for Poisson.
  std::int64_t fixed;
  std::int64_t count;

  static Observation binomial(std::int64_t n, std::int64_t successes);
  static Observation negative_binomial(std::int64_t kappa, std::int64_t failures);
  static Observation poisson(std::int64_t events);
};

/// Conditionally independent observations sharing one unknown parameter.
struct ObservationModel {
  std::vector<Observation> observations;
};

struct PosteriorRow {
  double theta;
  double prior;
  double log_likelihood;
  double posterior;
};

class PosteriorTable {
 public:
  PosteriorTable(std::vector<PosteriorRow> rows, double marginal_likelihood);

  const std::vector<PosteriorRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  double marginal_likelihood() const noexcept { return marginal_; }

  /// Posterior as a normalized prior, for sequential updating.
  PriorGrid as_prior() const;

 private:
  std::vector<PosteriorRow> rows_;
  double marginal_;
};

/// Sum over observations of the log-pmf at the observed count. Throws
/// Errc::invalid_theta when theta is outside an observation's parameter
/// domain.
double log_likelihood(const ObservationModel& model, double theta);

/// sum_i weight_i * likelihood(theta_i), accumulated in ascending theta with
/// a max-shifted log-sum. Throws Errc::all_zero_likelihood when every term
/// vanishes.
double marginal_likelihood(const PriorGrid& prior, const ObservationModel& model);

PosteriorTable posterior(const PriorGrid& prior, const ObservationModel& model);

double posterior_mean(const PosteriorTable& table);

/// Theta with the largest posterior mass; ties go to the smaller theta.
std::pair<double, double> posterior_mode(const PosteriorTable& table);

/// Grid theta closest to the posterior mean; ties go to the smaller theta.
double nearest_grid_estimate(const PosteriorTable& table);

/// likelihood(theta0) / likelihood(theta1). Throws Errc::zero_denominator
/// when the likelihood at theta1 is 0.
double point_bayes_factor(const ObservationModel& model, double theta0, double theta1);

}  // namespace bdt
