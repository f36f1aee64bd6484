#include "bdt/network_sim.hpp"

#include <cmath>
#include <sstream>

#include "bdt/error.hpp"
#include "bdt/format.hpp"

namespace bdt {

UniformStream::UniformStream(std::uint64_t seed) : engine_(seed) {}

double UniformStream::next() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::string node_label(std::size_t index) { return "V" + std::to_string(index + 1); }

Dag random_dag(std::size_t node_count, double edge_prob, std::uint64_t seed) {
  if (node_count < 1) throw Error(Errc::invalid_parameter, "DAG needs at least one node");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(Errc::invalid_parameter, "edge probability must lie in [0, 1]");
  }
  Dag dag;
  dag.node_count = node_count;
  dag.seed = seed;
  dag.edge_prob = edge_prob;
  UniformStream uniform(seed);
  for (std::size_t i = 0; i + 1 < node_count; ++i) {
    for (std::size_t j = i + 1; j < node_count; ++j) {
      if (uniform.next() < edge_prob) dag.edges.emplace_back(i, j);
    }
  }
  return dag;
}

const std::vector<DagPreset>& dag_presets() {
  static const std::vector<DagPreset> presets{{"fig2", 100, 0.01}, {"fig3", 500, 0.01}};
  return presets;
}

std::vector<std::size_t> topological_order(const Dag& dag) {
  for (const auto& [from, to] : dag.edges) {
    if (from >= dag.node_count || to >= dag.node_count) {
      throw Error(Errc::invalid_parameter, "DAG edge refers to a missing node");
    }
    if (!(from < to)) {
      throw Error(Errc::cycle_detected,
                  "edge " + node_label(from) + " -> " + node_label(to) + " breaks index order");
    }
  }
  std::vector<std::size_t> order(dag.node_count);
  for (std::size_t i = 0; i < dag.node_count; ++i) order[i] = i;
  return order;
}

std::string to_dot(const Dag& dag) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (std::size_t i = 0; i < dag.node_count; ++i) out << "  " << node_label(i) << ";\n";
  for (const auto& [from, to] : dag.edges) {
    out << "  " << node_label(from) << " -> " << node_label(to) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_adjacency_csv(const Dag& dag) {
  std::ostringstream out;
  out << "from,to\n";
  for (const auto& [from, to] : dag.edges) {
    out << node_label(from) << ',' << node_label(to) << '\n';
  }
  return out.str();
}

double DiagnosticJoint::status_given_positive() const {
  const double denom = pos_pos + neg_pos;
  if (denom == 0.0) throw Error(Errc::degenerate_test, "a positive result is impossible");
  return pos_pos / denom;
}

double DiagnosticJoint::healthy_given_negative() const {
  const double denom = pos_neg + neg_neg;
  if (denom == 0.0) throw Error(Errc::degenerate_test, "a negative result is impossible");
  return neg_neg / denom;
}

DiagnosticJoint two_node_diagnostic_net(const DiagnosticTest& test) {
  const double prev = test.prevalence();
  return {
      test.sensitivity() * prev,
      test.false_negative_rate() * prev,
      test.false_positive_rate() * (1.0 - prev),
      test.specificity() * (1.0 - prev),
  };
}

double converge(double n, double start, double end, double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw Error(Errc::invalid_parameter, "convergence rate must be positive");
  }
  if (!(n >= 0.0)) throw Error(Errc::invalid_parameter, "sample size must be >= 0");
  if (!(start >= 0.0 && start <= 1.0) || !(end >= 0.0 && end <= 1.0)) {
    throw Error(Errc::invalid_parameter, "start and end must be probabilities");
  }
  const double w = std::exp(-n / rate);
  return start * w + end * (1.0 - w);
}

std::vector<ConvergenceCurve> convergence_table(const std::vector<RiskGroup>& groups, double end,
                                                double rate,
                                                const std::vector<double>& sample_sizes) {
  std::vector<ConvergenceCurve> curves;
  curves.reserve(groups.size());
  for (const auto& g : groups) {
    ConvergenceCurve curve{g.label, sample_sizes, g.start, end, rate, {}};
    curve.values.reserve(sample_sizes.size());
    for (double n : sample_sizes) curve.values.push_back(converge(n, g.start, end, rate));
    curves.push_back(std::move(curve));
  }
  return curves;
}

ConvergencePreset fig4_preset() {
  return {{{"LowRisk", 0.1}, {"HighRisk", 0.9}}, 0.5, 50.0,
          {1, 2, 5, 10, 20, 50, 100, 200, 500}};
}

namespace {

std::string sample_text(double n) {
  return n == std::floor(n) ? io::fixed(n, 0) : io::round_trip(n);
}

}  // namespace

std::string convergence_csv_long(const std::vector<ConvergenceCurve>& curves) {
  std::ostringstream out;
  out << "group,n,result,probability\n";
  if (curves.empty()) return out.str();
  for (std::size_t k = 0; k < curves.front().sample_sizes.size(); ++k) {
    for (const auto& c : curves) {
      const double positive = c.values.at(k);
      out << c.label << ',' << sample_text(c.sample_sizes[k]) << ",Positive,"
          << io::fixed(positive) << '\n';
      out << c.label << ',' << sample_text(c.sample_sizes[k]) << ",Negative,"
          << io::fixed(1.0 - positive) << '\n';
    }
  }
  return out.str();
}

std::string convergence_csv_wide(const std::vector<ConvergenceCurve>& curves) {
  std::ostringstream out;
  out << "group,n,positive,negative\n";
  for (const auto& c : curves) {
    for (std::size_t k = 0; k < c.sample_sizes.size(); ++k) {
      out << c.label << ',' << sample_text(c.sample_sizes[k]) << ',' << io::fixed(c.values[k])
          << ',' << io::fixed(1.0 - c.values[k]) << '\n';
    }
  }
  return out.str();
}

}  // namespace bdt
