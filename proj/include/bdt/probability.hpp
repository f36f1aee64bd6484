#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bdt {

/// One cell of a finite partition: the branch prior and the probability of
/// the evidence conditional on the branch.
struct Branch {
  std::string label;
  double prior;
  double likelihood;
};

/// Finite labeled partition. Priors must already sum to 1 (within 1e-9);
/// they are never renormalized.
class Partition {
 public:
  explicit Partition(std::vector<Branch> branches);

  const std::vector<Branch>& branches() const noexcept { return branches_; }
  std::size_t size() const noexcept { return branches_.size(); }
  std::size_t index_of(std::string_view label) const;

 private:
  std::vector<Branch> branches_;
};

inline constexpr double kPartitionSumTolerance = 1e-9;

/// P(A | B) = P(A and B) / P(B).
double conditional_probability(double joint, double marginal);

/// Law of total probability: sum of likelihood * prior over branches.
double total_probability(const Partition& partition);

/// Posterior probability of one branch after observing the evidence.
double bayes_posterior(const Partition& partition, std::size_t target);
double bayes_posterior(const Partition& partition, std::string_view target);

/// p / (1 - p). Throws Errc::infinite_odds at p = 1.
double odds(double p);

/// Inverse of `odds`: o / (1 + o).
double probability_from_odds(double odds_value);

/// Bayes odds formula: posterior odds = Bayes factor x prior odds.
double posterior_odds(double prior_odds, double bayes_factor);

}  // namespace bdt
