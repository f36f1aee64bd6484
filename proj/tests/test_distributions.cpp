#include "bdt/distributions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bdt/error.hpp"

namespace {

using bdt::Errc;

template <typename F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const bdt::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected bdt::Error";
  return Errc::io_failure;
}

// Independent of the log-gamma route used by the library: multiplicative
// binomial coefficient in long double.
long double oracle_binomial(int n, long double p, int m) {
  if (m < 0 || m > n) return 0.0L;
  long double coef = 1.0L;
  for (int k = 1; k <= m; ++k) coef = coef * (n - m + k) / k;
  return coef * std::pow(p, m) * std::pow(1.0L - p, n - m);
}

long double oracle_poisson(long double lambda, int m) {
  long double term = std::exp(-lambda);
  for (int k = 1; k <= m; ++k) term *= lambda / k;
  return term;
}

double oracle_tv(int n, double p, int upper) {
  const long double lambda = static_cast<long double>(n) * p;
  long double l1 = 0.0L;
  for (int m = 0; m <= upper; ++m) l1 += std::fabs(oracle_binomial(n, p, m) - oracle_poisson(lambda, m));
  return static_cast<double>(0.5L * l1);
}

TEST(Uniform, PmfOnAndOffSupport) {
  EXPECT_DOUBLE_EQ(bdt::uniform_pmf(5, 3), 0.2);
  EXPECT_DOUBLE_EQ(bdt::uniform_pmf(1, 1), 1.0);
  EXPECT_EQ(bdt::uniform_pmf(5, 6), 0.0);
  EXPECT_EQ(bdt::uniform_pmf(5, 0), 0.0);
}

TEST(Uniform, Moments) {
  EXPECT_EQ(bdt::uniform_moments(5).variance, 2.0);
  EXPECT_EQ(bdt::uniform_moments(5).mean, 3.0);
  EXPECT_EQ(bdt::uniform_moments(1).mean, 1.0);
  EXPECT_EQ(bdt::uniform_moments(1).variance, 0.0);
}

TEST(Uniform, RejectsEmptySupport) {
  EXPECT_EQ(error_code([] { bdt::uniform_pmf(0, 1); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::uniform_moments(-3); }), Errc::invalid_parameter);
}

TEST(Binomial, WorkedExamples) {
  EXPECT_NEAR(bdt::binomial_pmf(20, 0.3, 5), 0.1789, 1e-4);
  EXPECT_EQ(bdt::binomial_pmf(10, 0.0, 0), 1.0);
  EXPECT_NEAR(bdt::binomial_pmf(10, 0.7, 7), 0.266827932, 1e-6);
}

TEST(Binomial, DegenerateProbabilities) {
  EXPECT_EQ(bdt::binomial_pmf(10, 0.0, 3), 0.0);
  EXPECT_EQ(bdt::binomial_pmf(10, 1.0, 10), 1.0);
  EXPECT_EQ(bdt::binomial_pmf(10, 1.0, 9), 0.0);
  EXPECT_EQ(bdt::Binomial(10, 0.0).log_pmf(1), bdt::kLogZero);
  EXPECT_EQ(bdt::binomial_pmf(10, 0.4, 11), 0.0);
  EXPECT_EQ(bdt::binomial_pmf(10, 0.4, -1), 0.0);
}

TEST(Binomial, Moments) {
  const auto a = bdt::binomial_moments(20, 0.3);
  EXPECT_DOUBLE_EQ(a.mean, 6.0);
  EXPECT_DOUBLE_EQ(a.variance, 4.2);
  const auto b = bdt::binomial_moments(10, 1.0);
  EXPECT_EQ(b.mean, 10.0);
  EXPECT_EQ(b.variance, 0.0);
  EXPECT_EQ(bdt::binomial_moments(100, 0.5).variance, 25.0);
}

TEST(Binomial, RejectsInvalidParameters) {
  EXPECT_EQ(error_code([] { bdt::binomial_pmf(10, 1.5, 2); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::binomial_pmf(10, -0.1, 2); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::binomial_pmf(0, 0.5, 0); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::binomial_moments(10, NAN); }), Errc::invalid_parameter);
}

TEST(Poisson, WorkedExamples) {
  EXPECT_NEAR(bdt::poisson_pmf(2.1, 4), 0.0992, 1e-4);
  for (double lambda : {0.01, 1.0, 7.5, 300.0}) {
    EXPECT_NEAR(bdt::poisson_pmf(lambda, 0), std::exp(-lambda), 1e-15 + 1e-13 * std::exp(-lambda));
  }
  double sum = 0.0;
  for (int m = 0; m <= 50; ++m) sum += bdt::poisson_pmf(2.1, m);
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(Poisson, LargeCountsDoNotOverflow) {
  const double p = bdt::poisson_pmf(1000.0, 1000);
  EXPECT_TRUE(std::isfinite(p));
  EXPECT_NEAR(p, 0.012614611348721, 1e-12);  // 30-digit reference value
}

TEST(Poisson, RejectsInvalidParameters) {
  EXPECT_EQ(error_code([] { bdt::poisson_pmf(0.0, 1); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::poisson_pmf(-1.0, 1); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::poisson_pmf(1.0, -1); }), Errc::invalid_parameter);
}

TEST(NegativeBinomial, WorkedExamples) {
  EXPECT_NEAR(bdt::negbinom_pmf(3, 0.33, 10), 0.0432, 1e-4);
  EXPECT_NEAR(bdt::negbinom_pmf(1, 0.2, 7), 0.04194304, 1e-6);
  for (int kappa : {1, 2, 9}) EXPECT_EQ(bdt::negbinom_pmf(kappa, 1.0, 0), 1.0);
  EXPECT_EQ(bdt::negbinom_pmf(4, 1.0, 3), 0.0);
}

TEST(NegativeBinomial, Moments) {
  const auto geo = bdt::negbinom_moments(1, 0.5);
  EXPECT_DOUBLE_EQ(geo.mean, 1.0);
  EXPECT_DOUBLE_EQ(geo.variance, 2.0);
  EXPECT_NEAR(bdt::negbinom_moments(3, 0.33).mean, 6.090909090909, 1e-4);
  const auto sure = bdt::negbinom_moments(5, 1.0);
  EXPECT_EQ(sure.mean, 0.0);
  EXPECT_EQ(sure.variance, 0.0);
}

TEST(NegativeBinomial, RejectsInvalidParameters) {
  EXPECT_EQ(error_code([] { bdt::negbinom_pmf(0, 0.5, 1); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::negbinom_pmf(2, 0.0, 1); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::negbinom_pmf(2, 1.2, 1); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::negbinom_pmf(2, 0.5, -1); }), Errc::invalid_parameter);
}

TEST(NegativeBinomial, KappaOneIsGeometric) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> prob(0.01, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = prob(rng);
    for (int m = 0; m < 40; ++m) {
      const double geometric = p * std::pow(1.0 - p, m);
      EXPECT_NEAR(bdt::negbinom_pmf(1, p, m), geometric, 1e-12 * geometric);
    }
  }
}

TEST(Distributions, VariantDispatchMatchesMembers) {
  const bdt::DiscreteDistribution d = bdt::Binomial(20, 0.3);
  EXPECT_EQ(bdt::pmf(d, 5), bdt::binomial_pmf(20, 0.3, 5));
  EXPECT_EQ(bdt::log_pmf(d, 5), bdt::Binomial(20, 0.3).log_pmf(5));
  EXPECT_DOUBLE_EQ(bdt::moments(d).mean, 6.0);
}

TEST(Distributions, LogDomainConsistency) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const bdt::DiscreteDistribution families[] = {
        bdt::DiscreteUniform(1 + static_cast<int>(unit(rng) * 100)),
        bdt::Binomial(1 + static_cast<int>(unit(rng) * 300), unit(rng)),
        bdt::Poisson(0.01 + 80.0 * unit(rng)),
        bdt::NegativeBinomial(1 + static_cast<int>(unit(rng) * 15), 0.02 + 0.98 * unit(rng))};
    for (const auto& d : families) {
      for (int m = 0; m < 400; m += 7) {
        const double p = bdt::pmf(d, m);
        if (p > 1e-300) {
          EXPECT_NEAR(std::exp(bdt::log_pmf(d, m)) / p, 1.0, 1e-12);
        } else {
          EXPECT_TRUE(bdt::log_pmf(d, m) < -690.0);
        }
      }
    }
  }
}

TEST(Distributions, PmfAgreesWithMultiplicativeOracle) {
  for (int n : {1, 5, 20, 60}) {
    for (double p : {0.05, 0.3, 0.5, 0.91}) {
      for (int m = 0; m <= n; ++m) {
        const double want = static_cast<double>(oracle_binomial(n, p, m));
        EXPECT_NEAR(bdt::binomial_pmf(n, p, m), want, 1e-13 * want + 1e-300);
      }
    }
  }
}

// Summation over the (truncated) support against the closed-form moments.
TEST(Distributions, EmpiricalMomentsMatchClosedForms) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto check = [](const bdt::DiscreteDistribution& d, std::int64_t lo, std::int64_t hi) {
    double mass = 0.0, first = 0.0, second = 0.0;
    for (std::int64_t m = lo; m <= hi; ++m) {
      const double p = bdt::pmf(d, m);
      mass += p;
      first += p * static_cast<double>(m);
      second += p * static_cast<double>(m) * static_cast<double>(m);
    }
    const double mean = first;
    const double variance = second - first * first;
    const auto want = bdt::moments(d);
    EXPECT_NEAR(mass, 1.0, 1e-9);
    EXPECT_NEAR(mean, want.mean, 1e-6 * std::max(1.0, want.mean));
    EXPECT_NEAR(variance, want.variance, 1e-6 * std::max(1.0, want.variance));
  };
  for (int trial = 0; trial < 20; ++trial) {
    const int big_m = 1 + static_cast<int>(unit(rng) * 100);
    check(bdt::DiscreteUniform(big_m), 1, big_m);

    const int n = 1 + static_cast<int>(unit(rng) * 200);
    check(bdt::Binomial(n, unit(rng)), 0, n);

    const double lambda = 0.1 + 40.0 * unit(rng);
    check(bdt::Poisson(lambda), 0, bdt::poisson_tail_cutoff(lambda));

    const bdt::NegativeBinomial nb(1 + static_cast<int>(unit(rng) * 10), 0.1 + 0.9 * unit(rng));
    const auto mom = nb.moments();
    check(nb, 0, static_cast<std::int64_t>(mom.mean + 60.0 * std::sqrt(mom.variance)) + 200);
  }
}

TEST(PoissonTail, CutoffBoundsTheTail) {
  for (double lambda : {0.001, 0.5, 2.1, 30.0, 500.0}) {
    const auto cut = bdt::poisson_tail_cutoff(lambda);
    EXPECT_GT(static_cast<double>(cut), lambda);
    long double tail = 0.0L;
    for (auto m = cut + 1; m < cut + 2000; ++m) tail += bdt::poisson_pmf(lambda, m);
    EXPECT_LT(static_cast<double>(tail), 1e-15);
  }
}

TEST(PoissonApprox, WorkedExamples) {
  EXPECT_LE(bdt::poisson_approx_tv(100, 0.02).total_variation, 0.04);
  EXPECT_NEAR(bdt::poisson_approx_tv(100, 0.02).total_variation, oracle_tv(100, 0.02, 100), 1e-12);
  EXPECT_EQ(bdt::poisson_approx_tv(10, 0.0).total_variation, 0.0);
  EXPECT_EQ(bdt::poisson_approx_tv(500, 0.0).total_variation, 0.0);

  const double coarse = oracle_tv(10, 0.5, 60);
  const double fine = oracle_tv(1000, 0.005, 60);
  EXPECT_LT(fine, coarse);
  EXPECT_NEAR(bdt::poisson_approx_tv(10, 0.5).total_variation, coarse, 1e-12);
  EXPECT_NEAR(bdt::poisson_approx_tv(1000, 0.005).total_variation, fine, 1e-12);
}

TEST(PoissonApprox, LeCamBound) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(unit(rng) * 400);
    const double p = unit(rng) * (trial % 2 ? 1.0 : 0.05);
    const auto tv = bdt::poisson_approx_tv(n, p);
    EXPECT_LE(tv.total_variation, n * p * p + 1e-12) << "n=" << n << " p=" << p;
    EXPECT_GE(tv.support_limit, n);
  }
}

TEST(PoissonApprox, RejectsInvalidParameters) {
  EXPECT_EQ(error_code([] { bdt::poisson_approx_tv(0, 0.1); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::poisson_approx_tv(10, 1.1); }), Errc::invalid_parameter);
}

}  // namespace
