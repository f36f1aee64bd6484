#include "bdt/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bdt/error.hpp"

namespace bdt {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(Errc::invalid_parameter, what);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

// exp() of a log-mass, keeping the zero-mass sentinel exact.
double from_log(double log_mass) {
  return log_mass == kLogZero ? 0.0 : std::exp(log_mass);
}

}  // namespace

double log_binomial_coefficient(std::int64_t n, std::int64_t k) noexcept {
  if (k == 0 || k == n) return 0.0;
  const auto dn = static_cast<double>(n);
  const auto dk = static_cast<double>(k);
  return std::lgamma(dn + 1.0) - std::lgamma(dk + 1.0) -
         std::lgamma(dn - dk + 1.0);
}

// --- DiscreteUniform -------------------------------------------------------

DiscreteUniform::DiscreteUniform(std::int64_t m_max) : m_max_(m_max) {
  if (m_max < 1) invalid("uniform: M must be >= 1, got " + std::to_string(m_max));
}

double DiscreteUniform::pmf(std::int64_t m) const noexcept {
  return (m >= 1 && m <= m_max_) ? 1.0 / static_cast<double>(m_max_) : 0.0;
}

double DiscreteUniform::log_pmf(std::int64_t m) const noexcept {
  return (m >= 1 && m <= m_max_) ? -std::log(static_cast<double>(m_max_))
                                 : kLogZero;
}

Moments DiscreteUniform::moments() const noexcept {
  const auto m = static_cast<double>(m_max_);
  return {(m + 1.0) / 2.0, (m * m - 1.0) / 12.0};
}

// --- Binomial --------------------------------------------------------------

Binomial::Binomial(std::int64_t n, double p) : n_(n), p_(p) {
  if (n < 1) invalid("binomial: n must be >= 1, got " + std::to_string(n));
  if (!is_probability(p)) invalid("binomial: p must lie in [0, 1]");
}

double Binomial::log_pmf(std::int64_t m) const noexcept {
  if (m < 0 || m > n_) return kLogZero;
  if (p_ == 0.0) return m == 0 ? 0.0 : kLogZero;
  if (p_ == 1.0) return m == n_ ? 0.0 : kLogZero;
  const auto dm = static_cast<double>(m);
  const auto failures = static_cast<double>(n_ - m);
  return log_binomial_coefficient(n_, m) + dm * std::log(p_) +
         failures * std::log1p(-p_);
}

double Binomial::pmf(std::int64_t m) const noexcept { return from_log(log_pmf(m)); }

Moments Binomial::moments() const noexcept {
  const auto n = static_cast<double>(n_);
  return {n * p_, n * p_ * (1.0 - p_)};
}

// --- Poisson ---------------------------------------------------------------

Poisson::Poisson(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    invalid("poisson: lambda must be a finite positive rate");
  }
}

double Poisson::log_pmf(std::int64_t m) const noexcept {
  if (m < 0) return kLogZero;
  const auto dm = static_cast<double>(m);
  return dm * std::log(lambda_) - lambda_ - std::lgamma(dm + 1.0);
}

double Poisson::pmf(std::int64_t m) const noexcept { return from_log(log_pmf(m)); }

Moments Poisson::moments() const noexcept { return {lambda_, lambda_}; }

// --- NegativeBinomial ------------------------------------------------------

NegativeBinomial::NegativeBinomial(std::int64_t kappa, double p)
    : kappa_(kappa), p_(p) {
  if (kappa < 1) {
    invalid("negative binomial: kappa must be >= 1, got " + std::to_string(kappa));
  }
  if (!(p > 0.0 && p <= 1.0)) invalid("negative binomial: p must lie in (0, 1]");
}

double NegativeBinomial::log_pmf(std::int64_t m) const noexcept {
  if (m < 0) return kLogZero;
  if (p_ == 1.0) return m == 0 ? 0.0 : kLogZero;
  const auto dm = static_cast<double>(m);
  return log_binomial_coefficient(m + kappa_ - 1, m) +
         static_cast<double>(kappa_) * std::log(p_) + dm * std::log1p(-p_);
}

double NegativeBinomial::pmf(std::int64_t m) const noexcept {
  return from_log(log_pmf(m));
}

Moments NegativeBinomial::moments() const noexcept {
  const auto k = static_cast<double>(kappa_);
  return {k * (1.0 - p_) / p_, k * (1.0 - p_) / (p_ * p_)};
}

// --- variant dispatch ------------------------------------------------------

double pmf(const DiscreteDistribution& dist, std::int64_t m) {
  return std::visit([m](const auto& d) { return d.pmf(m); }, dist);
}

double log_pmf(const DiscreteDistribution& dist, std::int64_t m) {
  return std::visit([m](const auto& d) { return d.log_pmf(m); }, dist);
}

Moments moments(const DiscreteDistribution& dist) {
  return std::visit([](const auto& d) { return d.moments(); }, dist);
}

// --- free functions --------------------------------------------------------

double uniform_pmf(std::int64_t m_max, std::int64_t m) {
  return DiscreteUniform(m_max).pmf(m);
}

Moments uniform_moments(std::int64_t m_max) {
  return DiscreteUniform(m_max).moments();
}

double binomial_pmf(std::int64_t n, double p, std::int64_t m) {
  return Binomial(n, p).pmf(m);
}

Moments binomial_moments(std::int64_t n, double p) {
  return Binomial(n, p).moments();
}

double poisson_pmf(double lambda, std::int64_t m) {
  Poisson dist(lambda);
  if (m < 0) invalid("poisson: count must be >= 0");
  return dist.pmf(m);
}

Moments poisson_moments(double lambda) { return Poisson(lambda).moments(); }

double negbinom_pmf(std::int64_t kappa, double p, std::int64_t m) {
  NegativeBinomial dist(kappa, p);
  if (m < 0) invalid("negative binomial: failure count must be >= 0");
  return dist.pmf(m);
}

Moments negbinom_moments(std::int64_t kappa, double p) {
  return NegativeBinomial(kappa, p).moments();
}

std::int64_t poisson_tail_cutoff(double lambda, double tail_mass) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    invalid("poisson: lambda must be a finite positive rate");
  }
  if (!(tail_mass > 0.0 && tail_mass < 1.0)) {
    invalid("poisson tail cutoff: tail mass must lie in (0, 1)");
  }
  const double log_target = std::log(tail_mass);
  auto m = static_cast<std::int64_t>(std::floor(lambda)) + 1;
  // log of exp(-lambda) (e lambda / m)^m
  auto log_bound = [lambda](std::int64_t k) {
    const auto dk = static_cast<double>(k);
    return -lambda + dk * (1.0 + std::log(lambda) - std::log(dk));
  };
  while (log_bound(m) >= log_target) ++m;
  return m;
}

ApproximationDistance poisson_approx_tv(std::int64_t n, double p) {
  const Binomial binomial(n, p);
  if (p == 0.0) return {0.0, 0};

  const Poisson poisson(static_cast<double>(n) * p);
  const std::int64_t limit = std::max(n, poisson_tail_cutoff(poisson.lambda()));
  double l1 = 0.0;
  for (std::int64_t m = 0; m <= limit; ++m) {
    l1 += std::abs(binomial.pmf(m) - poisson.pmf(m));
  }
  return {0.5 * l1, limit};
}

}  // namespace bdt
