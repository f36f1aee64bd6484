#include "bdt/diagnostics.hpp"

#include "bdt/error.hpp"

namespace bdt {
namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

DiagnosticTest::DiagnosticTest(double sensitivity, double specificity, double prevalence)
    : sensitivity_(sensitivity), specificity_(specificity), prevalence_(prevalence) {
  if (!is_probability(sensitivity)) throw Error(Errc::invalid_parameter, "sensitivity must lie in [0, 1]");
  if (!is_probability(specificity)) throw Error(Errc::invalid_parameter, "specificity must lie in [0, 1]");
  if (!is_probability(prevalence)) throw Error(Errc::invalid_parameter, "prevalence must lie in [0, 1]");
}

// The arithmetic order below (true-positive mass first, then the
// false-positive mass) is shared with the two-node network so both routes
// produce bit-identical values.
double ppv(const DiagnosticTest& test) {
  const double true_pos = test.sensitivity() * test.prevalence();
  const double false_pos = test.false_positive_rate() * (1.0 - test.prevalence());
  const double denom = true_pos + false_pos;
  if (denom == 0.0) throw Error(Errc::degenerate_test, "ppv: a positive result is impossible");
  return true_pos / denom;
}

double npv(const DiagnosticTest& test) {
  const double false_neg = test.false_negative_rate() * test.prevalence();
  const double true_neg = test.specificity() * (1.0 - test.prevalence());
  const double denom = false_neg + true_neg;
  if (denom == 0.0) throw Error(Errc::degenerate_test, "npv: a negative result is impossible");
  return true_neg / denom;
}

BayesFactor positive_result_evidence(const DiagnosticTest& test) {
  const double fpr = test.false_positive_rate();
  if (fpr == 0.0) {
    if (test.sensitivity() == 0.0) {
      throw Error(Errc::degenerate_test, "positive-result Bayes factor is 0/0");
    }
    return BayesFactor::infinite();
  }
  return BayesFactor::finite(test.sensitivity() / fpr);
}

BayesFactor negative_result_evidence(const DiagnosticTest& test) {
  if (test.specificity() == 0.0) {
    if (test.false_negative_rate() == 0.0) {
      throw Error(Errc::degenerate_test, "negative-result Bayes factor is 0/0");
    }
    return BayesFactor::infinite();
  }
  return BayesFactor::finite(test.false_negative_rate() / test.specificity());
}

double bayes_factor_positive(const DiagnosticTest& test) {
  if (test.false_positive_rate() == 0.0 && test.sensitivity() > 0.0) {
    throw Error(Errc::infinite_bayes_factor,
                "positive-result Bayes factor is infinite for a perfectly specific test");
  }
  if (test.false_positive_rate() == 0.0) {
    throw Error(Errc::degenerate_test, "positive-result Bayes factor is 0/0");
  }
  return test.sensitivity() / test.false_positive_rate();
}

double bayes_factor_negative(const DiagnosticTest& test) {
  if (test.specificity() == 0.0 && test.false_negative_rate() > 0.0) {
    throw Error(Errc::infinite_bayes_factor,
                "negative-result Bayes factor is infinite for a zero-specificity test");
  }
  if (test.specificity() == 0.0) {
    throw Error(Errc::degenerate_test, "negative-result Bayes factor is 0/0");
  }
  return test.false_negative_rate() / test.specificity();
}

PriorPosterior posterior_from_test(const DiagnosticTest& test, TestResult result) {
  if (result == TestResult::positive) return {test.prevalence(), ppv(test)};
  return {test.prevalence(), 1.0 - npv(test)};
}

}  // namespace bdt
