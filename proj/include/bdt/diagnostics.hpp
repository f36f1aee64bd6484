#pragma once

#include "bdt/evidence.hpp"

namespace bdt {

/// Screening test characteristics together with the base rate of disease.
class DiagnosticTest {
 public:
  /// All three arguments must lie in [0, 1].
  DiagnosticTest(double sensitivity, double specificity, double prevalence);

  double sensitivity() const noexcept { return sensitivity_; }
  double specificity() const noexcept { return specificity_; }
  double prevalence() const noexcept { return prevalence_; }

  /// P(Test+ | D-)
  double false_positive_rate() const noexcept { return 1.0 - specificity_; }
  /// P(Test- | D+)
  double false_negative_rate() const noexcept { return 1.0 - sensitivity_; }

 private:
  double sensitivity_;
  double specificity_;
  double prevalence_;
};

enum class TestResult { positive, negative };

/// P(D+ | Test+). Throws Errc::degenerate_test when P(Test+) = 0.
double ppv(const DiagnosticTest& test);

/// P(D- | Test-). Throws Errc::degenerate_test when P(Test-) = 0.
double npv(const DiagnosticTest& test);

/// sensitivity / (1 - specificity). Throws Errc::infinite_bayes_factor for a
/// perfectly specific test that can still return positive.
double bayes_factor_positive(const DiagnosticTest& test);

/// (1 - sensitivity) / specificity.
double bayes_factor_negative(const DiagnosticTest& test);

/// Typed variants: a perfectly specific (resp. perfectly sensitive) test
/// yields BayesFactor::infinite() instead of throwing. 0/0 still throws
/// Errc::degenerate_test; a zero factor throws Errc::invalid_bayes_factor.
BayesFactor positive_result_evidence(const DiagnosticTest& test);
BayesFactor negative_result_evidence(const DiagnosticTest& test);

struct PriorPosterior {
  double prior;
  double posterior;
};

/// Probability of disease before and after seeing `result`.
PriorPosterior posterior_from_test(const DiagnosticTest& test, TestResult result);

}  // namespace bdt
