#include "bdt/network_sim.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

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

std::size_t line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

TEST(UniformStream, RangeAndDeterminism) {
  bdt::UniformStream a(9), b(9), c(10);
  bool differs = false;
  for (int i = 0; i < 10000; ++i) {
    const double x = a.next();
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(UniformStream, KnownFirstDraw) {
  // First output of mt19937_64 with the default seed is fixed by the standard.
  bdt::UniformStream s(5489u);
  EXPECT_EQ(s.next(), static_cast<double>(14514284786278117030ull >> 11) * 0x1.0p-53);
}

TEST(Dag, EdgesPointForwardAndAreUnique) {
  const auto dag = bdt::random_dag(100, 0.01, 1);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [from, to] : dag.edges) {
    EXPECT_LT(from, to);
    EXPECT_LT(to, 100u);
    EXPECT_TRUE(seen.insert({from, to}).second);
  }
  EXPECT_GE(dag.edges.size(), 20u);
  EXPECT_LE(dag.edges.size(), 85u);
}

TEST(Dag, Degenerate) {
  EXPECT_TRUE(bdt::random_dag(1, 0.5, 3).edges.empty());
  EXPECT_EQ(bdt::random_dag(12, 1.0, 3).edges.size(), 66u);
  EXPECT_TRUE(bdt::random_dag(50, 0.0, 3).edges.empty());
  EXPECT_EQ(error_code([] { bdt::random_dag(0, 0.5, 1); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::random_dag(5, 1.5, 1); }), Errc::invalid_parameter);
}

TEST(Dag, TopologicalOrderRespectsEdges) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto dag = bdt::random_dag(500, 0.01, seed);
    const auto order = bdt::topological_order(dag);
    ASSERT_EQ(order.size(), 500u);
    std::vector<std::size_t> pos(500);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const auto& [from, to] : dag.edges) EXPECT_LT(pos[from], pos[to]);
  }
}

TEST(Dag, CycleDetected) {
  bdt::Dag bad{3, {{0, 1}, {2, 1}}, 0, 0.0};
  EXPECT_EQ(error_code([&] { bdt::topological_order(bad); }), Errc::cycle_detected);
}

TEST(Dag, DotOutputIsDeterministic) {
  const auto a = bdt::to_dot(bdt::random_dag(100, 0.01, 42));
  EXPECT_EQ(a, bdt::to_dot(bdt::random_dag(100, 0.01, 42)));
  EXPECT_NE(a, bdt::to_dot(bdt::random_dag(100, 0.01, 43)));
  EXPECT_EQ(a.rfind("digraph G {\n", 0), 0u);
  EXPECT_NE(a.find("  V100;\n"), std::string::npos);
  EXPECT_EQ(a.substr(a.size() - 2), "}\n");
}

TEST(Dag, SmallDotAndCsv) {
  const bdt::Dag dag{3, {{0, 2}, {1, 2}}, 0, 0.5};
  EXPECT_EQ(bdt::to_dot(dag), "digraph G {\n  V1;\n  V2;\n  V3;\n  V1 -> V3;\n  V2 -> V3;\n}\n");
  EXPECT_EQ(bdt::to_adjacency_csv(dag), "from,to\nV1,V3\nV2,V3\n");
}

TEST(Dag, Presets) {
  const auto& presets = bdt::dag_presets();
  ASSERT_EQ(presets.size(), 2u);
  EXPECT_EQ(presets[0].node_count, 100u);
  EXPECT_EQ(presets[1].node_count, 500u);
}

TEST(Dag, MeanEdgeCount) {
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) total += bdt::random_dag(100, 0.01, seed).edges.size();
  const double mean = total / 500.0;
  const double sigma = std::sqrt(4950 * 0.01 * 0.99 / 500.0);
  EXPECT_NEAR(mean, 49.5, 3 * sigma);
}

TEST(Converge, Values) {
  EXPECT_EQ(bdt::converge(0, 0.9, 0.5, 50), 0.9);
  EXPECT_EQ(bdt::converge(0, 0.1, 0.5, 50), 0.1);
  EXPECT_NEAR(bdt::converge(50, 0.9, 0.5, 50), 0.647151776468577, 1e-15);
  EXPECT_NEAR(bdt::converge(1, 0.9, 0.5, 50), 0.892079469322702, 1e-15);
  EXPECT_NEAR(bdt::converge(500, 0.1, 0.5, 50), 0.499981840028095, 1e-15);
  EXPECT_NEAR(bdt::converge(1e6, 0.9, 0.5, 50), 0.5, 1e-15);
  EXPECT_EQ(error_code([] { bdt::converge(-1, 0.9, 0.5, 50); }), Errc::invalid_parameter);
  EXPECT_EQ(error_code([] { bdt::converge(1, 0.9, 0.5, 0); }), Errc::invalid_parameter);
}

TEST(Converge, PresetIsMonotoneTowardEnd) {
  const auto preset = bdt::fig4_preset();
  const auto curves = bdt::convergence_table(preset.groups, preset.end, preset.rate, preset.sample_sizes);
  ASSERT_EQ(curves.size(), 2u);
  for (const auto& c : curves) {
    double gap = std::fabs(c.start - c.end);
    for (double v : c.values) {
      EXPECT_LT(std::fabs(v - c.end), gap);
      gap = std::fabs(v - c.end);
    }
  }
}

TEST(Converge, CsvShapes) {
  const auto preset = bdt::fig4_preset();
  const auto curves = bdt::convergence_table(preset.groups, preset.end, preset.rate, preset.sample_sizes);
  const auto lng = bdt::convergence_csv_long(curves);
  EXPECT_EQ(lng.rfind("group,n,result,probability\n", 0), 0u);
  EXPECT_EQ(line_count(lng), 37u);
  const auto wide = bdt::convergence_csv_wide(curves);
  EXPECT_EQ(wide.rfind("group,n,positive,negative\n", 0), 0u);
  EXPECT_EQ(line_count(wide), 19u);
  EXPECT_NE(lng.find("HighRisk,50,Positive,0.647152"), std::string::npos);
}

}  // namespace
