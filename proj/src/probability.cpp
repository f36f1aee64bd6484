#include "bdt/probability.hpp"

#include <cmath>
#include <string>

#include "bdt/error.hpp"

namespace bdt {
namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

Partition::Partition(std::vector<Branch> branches) : branches_(std::move(branches)) {
  if (branches_.empty()) {
    throw Error(Errc::invalid_partition, "partition needs at least one branch");
  }
  double sum = 0.0;
  for (const auto& b : branches_) {
    if (!is_probability(b.prior)) {
      throw Error(Errc::invalid_partition, "prior of branch '" + b.label + "' is not in [0, 1]");
    }
    if (!is_probability(b.likelihood)) {
      throw Error(Errc::invalid_partition,
                  "conditional probability of branch '" + b.label + "' is not in [0, 1]");
    }
    sum += b.prior;
  }
  if (std::abs(sum - 1.0) > kPartitionSumTolerance) {
    throw Error(Errc::invalid_partition,
                "partition priors sum to " + std::to_string(sum) + ", expected 1");
  }
}

std::size_t Partition::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    if (branches_[i].label == label) return i;
  }
  throw Error(Errc::invalid_parameter, "no branch labeled '" + std::string(label) + "'");
}

double conditional_probability(double joint, double marginal) {
  if (!is_probability(joint) || !is_probability(marginal)) {
    throw Error(Errc::invalid_parameter, "conditional probability: inputs must lie in [0, 1]");
  }
  if (marginal == 0.0) {
    throw Error(Errc::zero_marginal, "conditional probability: conditioning event has probability 0");
  }
  if (joint > marginal) {
    throw Error(Errc::inconsistent_probabilities,
                "conditional probability: joint probability exceeds the marginal");
  }
  return joint / marginal;
}

double total_probability(const Partition& partition) {
  double total = 0.0;
  for (const auto& b : partition.branches()) total += b.likelihood * b.prior;
  return total;
}

double bayes_posterior(const Partition& partition, std::size_t target) {
  if (target >= partition.size()) {
    throw Error(Errc::invalid_parameter, "bayes posterior: target branch out of range");
  }
  const double evidence = total_probability(partition);
  if (evidence == 0.0) {
    throw Error(Errc::zero_evidence, "bayes posterior: the evidence has probability 0");
  }
  const auto& b = partition.branches()[target];
  return b.likelihood * b.prior / evidence;
}

double bayes_posterior(const Partition& partition, std::string_view target) {
  return bayes_posterior(partition, partition.index_of(target));
}

double odds(double p) {
  if (!is_probability(p)) throw Error(Errc::invalid_parameter, "odds: p must lie in [0, 1)");
  if (p == 1.0) throw Error(Errc::infinite_odds, "odds: a certain event has infinite odds");
  return p / (1.0 - p);
}

double probability_from_odds(double odds_value) {
  if (!(odds_value >= 0.0) || !std::isfinite(odds_value)) {
    throw Error(Errc::invalid_parameter, "odds must be finite and nonnegative");
  }
  return odds_value / (1.0 + odds_value);
}

double posterior_odds(double prior_odds, double bayes_factor) {
  if (!(prior_odds >= 0.0) || !std::isfinite(prior_odds)) {
    throw Error(Errc::invalid_parameter, "posterior odds: prior odds must be finite and nonnegative");
  }
  if (!(bayes_factor >= 0.0) || !std::isfinite(bayes_factor)) {
    throw Error(Errc::invalid_parameter, "posterior odds: Bayes factor must be finite and nonnegative");
  }
  return bayes_factor * prior_odds;
}

}  // namespace bdt
