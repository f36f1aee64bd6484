#pragma once

#include <cstdint>
#include <limits>
#include <variant>

namespace bdt {

/// Log-probability assigned to outcomes with zero mass.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

struct Moments {
  double mean;
  double variance;
};

/// Uniform law on {1, ..., M}.
class DiscreteUniform {
 public:
  explicit DiscreteUniform(std::int64_t m_max);

  std::int64_t m_max() const noexcept { return m_max_; }

  double pmf(std::int64_t m) const noexcept;
  double log_pmf(std::int64_t m) const noexcept;
  Moments moments() const noexcept;

 private:
  std::int64_t m_max_;
};

/// Number of successes in n independent trials with success probability p.
class Binomial {
 public:
  Binomial(std::int64_t n, double p);

  std::int64_t n() const noexcept { return n_; }
  double p() const noexcept { return p_; }

  double pmf(std::int64_t m) const noexcept;
  double log_pmf(std::int64_t m) const noexcept;
  Moments moments() const noexcept;

 private:
  std::int64_t n_;
  double p_;
};

class Poisson {
 public:
  explicit Poisson(double lambda);

  double lambda() const noexcept { return lambda_; }

  /// Negative counts are a precondition violation for the free function
  /// `poisson_pmf`; here they simply carry no mass.
  double pmf(std::int64_t m) const noexcept;
  double log_pmf(std::int64_t m) const noexcept;
  Moments moments() const noexcept;

 private:
  double lambda_;
};

/// Number of failures observed before the kappa-th success, with per-trial
/// success probability p:
///
///   P(m) = C(m + kappa - 1, m) p^kappa (1 - p)^m,   m = 0, 1, 2, ...
class NegativeBinomial {
 public:
  NegativeBinomial(std::int64_t kappa, double p);

  std::int64_t kappa() const noexcept { return kappa_; }
  double p() const noexcept { return p_; }

  double pmf(std::int64_t m) const noexcept;
  double log_pmf(std::int64_t m) const noexcept;
  Moments moments() const noexcept;

 private:
  std::int64_t kappa_;
  double p_;
};

using DiscreteDistribution =
    std::variant<DiscreteUniform, Binomial, Poisson, NegativeBinomial>;

double pmf(const DiscreteDistribution& dist, std::int64_t m);
double log_pmf(const DiscreteDistribution& dist, std::int64_t m);
Moments moments(const DiscreteDistribution& dist);

// Free-function forms. All validate their parameters and throw
// bdt::Error(Errc::invalid_parameter) on violation.

double uniform_pmf(std::int64_t m_max, std::int64_t m);
Moments uniform_moments(std::int64_t m_max);

double binomial_pmf(std::int64_t n, double p, std::int64_t m);
Moments binomial_moments(std::int64_t n, double p);

double poisson_pmf(double lambda, std::int64_t m);
Moments poisson_moments(double lambda);

double negbinom_pmf(std::int64_t kappa, double p, std::int64_t m);
Moments negbinom_moments(std::int64_t kappa, double p);

/// log C(n, k) through log-gamma; requires 0 <= k <= n.
double log_binomial_coefficient(std::int64_t n, std::int64_t k) noexcept;

/// Smallest m above lambda for which the Chernoff bound
/// exp(-lambda) (e lambda / m)^m on P(X >= m) drops below `tail_mass`.
std::int64_t poisson_tail_cutoff(double lambda, double tail_mass = 1e-15);

struct ApproximationDistance {
  double total_variation;
  /// Last count included in the summation; Poisson mass beyond it is below
  /// 1e-15.
  std::int64_t support_limit;
};

/// Total-variation distance between Bin(n, p) and Poisson(np). By
/// convention the distance is exactly 0 when p = 0.
ApproximationDistance poisson_approx_tv(std::int64_t n, double p);

}  // namespace bdt
