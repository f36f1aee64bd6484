#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bdt/diagnostics.hpp"

namespace bdt {

/// Seedable generator used for DAG construction: std::mt19937_64, whose
/// output sequence is fixed by the C++ standard, with uniform draws built
/// from the top 53 bits, (x >> 11) * 2^-53. Identical seeds give identical
/// streams on every conforming platform.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed);
  double next();

 private:
  std::mt19937_64 engine_;
};

/// Directed graph over nodes V1..VN whose edges always point from a lower to
/// a higher index. Edges are kept in generation (row-major) order.
struct Dag {
  std::size_t node_count = 0;
  /// Zero-based (from, to) pairs with from < to.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::uint64_t seed = 0;
  double edge_prob = 0.0;
};

std::string node_label(std::size_t index);

/// Includes each pair (i, j), i < j, independently with probability
/// `edge_prob`, visiting i ascending then j ascending and drawing one
/// uniform per pair.
Dag random_dag(std::size_t node_count, double edge_prob, std::uint64_t seed);

struct DagPreset {
  const char* name;
  std::size_t node_count;
  double edge_prob;
};

/// "fig2" (100 nodes) and "fig3" (500 nodes), both with edge probability 0.01.
const std::vector<DagPreset>& dag_presets();

/// Node indices in an order respecting every edge. Throws
/// Errc::cycle_detected if some edge points backwards.
std::vector<std::size_t> topological_order(const Dag& dag);

/// Graphviz text: every node declared, then edges in generation order.
std::string to_dot(const Dag& dag);

/// from,to adjacency list.
std::string to_adjacency_csv(const Dag& dag);

/// Joint distribution of (disease status, test result) for the two-node
/// network status -> result.
struct DiagnosticJoint {
  double pos_pos;  // status +, result +
  double pos_neg;  // status +, result -
  double neg_pos;  // status -, result +
  double neg_neg;  // status -, result -

  double status_positive() const noexcept { return pos_pos + pos_neg; }
  double result_positive() const noexcept { return pos_pos + neg_pos; }
  double result_negative() const noexcept { return pos_neg + neg_neg; }
  /// P(status + | result +). Throws Errc::degenerate_test if P(result +) = 0.
  double status_given_positive() const;
  /// P(status - | result -). Throws Errc::degenerate_test if P(result -) = 0.
  double healthy_given_negative() const;
};

DiagnosticJoint two_node_diagnostic_net(const DiagnosticTest& test);

/// end + (start - end) * exp(-n / rate)
double converge(double n, double start, double end, double rate);

struct ConvergenceCurve {
  std::string label;
  std::vector<double> sample_sizes;
  double start;
  double end;
  double rate;
  /// P(positive) per sample size.
  std::vector<double> values;
};

struct RiskGroup {
  std::string label;
  double start;
};

std::vector<ConvergenceCurve> convergence_table(const std::vector<RiskGroup>& groups, double end,
                                                double rate,
                                                const std::vector<double>& sample_sizes);

struct ConvergencePreset {
  std::vector<RiskGroup> groups;
  double end;
  double rate;
  std::vector<double> sample_sizes;
};

/// LowRisk (0.1) and HighRisk (0.9) converging to 0.5 at rate 50 over
/// sample sizes 1, 2, 5, 10, 20, 50, 100, 200, 500.
ConvergencePreset fig4_preset();

/// Long format: group,n,result,probability, one row per (n, group, result)
/// in sample-size-major order.
std::string convergence_csv_long(const std::vector<ConvergenceCurve>& curves);

/// Wide format: group,n,positive,negative, one row per (group, n).
std::string convergence_csv_wide(const std::vector<ConvergenceCurve>& curves);

}  // namespace bdt
