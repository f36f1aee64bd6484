#include "bdt/probability.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "bdt/contingency_table.hpp"
#include "bdt/error.hpp"
#include "bdt/fixtures.hpp"

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

bdt::ContingencyTable hospitalization() {
  std::ifstream in(std::string(BDT_DATA_DIR) + "/hospitalization.csv");
  return bdt::read_contingency_csv(in);
}

TEST(Conditional, Basic) {
  EXPECT_DOUBLE_EQ(bdt::conditional_probability(0.2, 0.5), 0.4);
  EXPECT_EQ(bdt::conditional_probability(0.0, 0.3), 0.0);
  EXPECT_EQ(bdt::conditional_probability(0.3, 0.3), 1.0);
}

TEST(Conditional, Errors) {
  EXPECT_EQ(error_code([] { bdt::conditional_probability(0.0, 0.0); }), Errc::zero_marginal);
  EXPECT_EQ(error_code([] { bdt::conditional_probability(0.4, 0.3); }),
            Errc::inconsistent_probabilities);
  EXPECT_EQ(error_code([] { bdt::conditional_probability(-0.1, 0.3); }), Errc::invalid_parameter);
}

TEST(ContingencyTable, ReadsGroupedCsv) {
  const auto t = hospitalization();
  ASSERT_EQ(t.stratum_headers().size(), 2u);
  ASSERT_EQ(t.count_headers().size(), 2u);
  ASSERT_EQ(t.rows().size(), 6u);
  EXPECT_EQ(t.rows()[2].strata[0], "Male");
  EXPECT_EQ(t.rows()[5].strata[0], "Female");
  EXPECT_EQ(t.rows()[5].strata[1], "Other");
  EXPECT_EQ(t.total(), 316u);
}

TEST(ContingencyTable, HospitalizationGivenMale) {
  const auto t = hospitalization();
  const auto male = bdt::stratum_equals(t, "Gender", "Male");
  const auto hosp = bdt::column_equals("Hospitalized");
  EXPECT_EQ(t.count(male, hosp), 117u);
  EXPECT_EQ(t.count(male, bdt::all_columns()), 289u);
  EXPECT_EQ(bdt::table_conditional(t, male, hosp), 117.0 / 289.0);
  EXPECT_NEAR(bdt::table_conditional(t, male, hosp), 0.405, 5e-4);
  EXPECT_EQ(bdt::table_conditional(t, bdt::all_rows(), hosp), 131.0 / 316.0);
}

TEST(ContingencyTable, FemaleOtherIsFourteenOverTwentySeven) {
  const auto t = hospitalization();
  const auto female = bdt::stratum_equals(t, "Gender", "Female");
  const auto hosp = bdt::column_equals("Hospitalized");
  EXPECT_EQ(bdt::table_conditional(t, female, hosp), 14.0 / 27.0);
}

TEST(ContingencyTable, MatchesEmbeddedCopy) {
  const auto a = hospitalization();
  const auto b = bdt::fixtures::hospitalization_table();
  EXPECT_EQ(a.total(), b.total());
  ASSERT_EQ(a.rows().size(), b.rows().size());
  for (std::size_t i = 0; i < a.rows().size(); ++i) EXPECT_EQ(a.rows()[i].counts, b.rows()[i].counts);
}

TEST(ContingencyTable, ZeroMarginal) {
  const auto t = hospitalization();
  const auto nobody = bdt::stratum_equals(t, "Gender", "Unknown");
  EXPECT_EQ(error_code([&] { bdt::table_conditional(t, nobody, bdt::all_columns()); }),
            Errc::zero_marginal);
}

TEST(ContingencyTable, ScalingCountsLeavesConditionalsUnchanged) {
  const auto t = hospitalization();
  std::vector<bdt::ContingencyTable::Row> rows = t.rows();
  for (auto& r : rows)
    for (auto& c : r.counts) c *= 7;
  const bdt::ContingencyTable scaled(t.stratum_headers(), t.count_headers(), rows);
  const auto hosp = bdt::column_equals("Hospitalized");
  for (const char* g : {"Male", "Female"}) {
    EXPECT_EQ(bdt::table_conditional(t, bdt::stratum_equals(t, "Gender", g), hosp),
              bdt::table_conditional(scaled, bdt::stratum_equals(scaled, "Gender", g), hosp));
  }
}

TEST(ContingencyTable, QuotedCells) {
  std::istringstream in("Group,Yes,No\n\"a, b\",1,2\n\"c\",3,4\n");
  const auto t = bdt::read_contingency_csv(in);
  EXPECT_EQ(t.rows()[0].strata[0], "a, b");
  EXPECT_EQ(t.total(), 10u);
}

TEST(ContingencyTable, MalformedInput) {
  std::istringstream ragged("A,Yes,No\nx,1\n");
  EXPECT_EQ(error_code([&] { bdt::read_contingency_csv(ragged); }), Errc::malformed_input);
  std::istringstream empty("");
  EXPECT_EQ(error_code([&] { bdt::read_contingency_csv(empty); }), Errc::malformed_input);
}

bdt::Partition cancer_partition() {
  return bdt::Partition({{"early", 0.8, 0.9}, {"late", 0.2, 0.1}});
}

TEST(TotalProbability, SurvivalExample) {
  const double survival = bdt::total_probability(cancer_partition());
  // 0.8 * 0.9 + 0.2 * 0.1 rounds to the double just above 0.74.
  EXPECT_LE(std::fabs(survival - 0.74), std::nextafter(0.74, 1.0) - 0.74);
}

TEST(BayesPosterior, EarlyStageGivenSurvival) {
  const auto part = cancer_partition();
  EXPECT_NEAR(bdt::bayes_posterior(part, "early"), 0.973, 1e-3);
  EXPECT_NEAR(bdt::bayes_posterior(part, "early"), 0.72 / 0.74, 1e-15);
  EXPECT_EQ(bdt::bayes_posterior(part, 0), bdt::bayes_posterior(part, "early"));
}

TEST(BayesPosterior, PosteriorsSumToOne) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(unit(rng) * 8);
    std::vector<double> w(k);
    double total = 0.0;
    for (auto& x : w) total += (x = unit(rng) + 1e-3);
    std::vector<bdt::Branch> branches;
    for (int i = 0; i < k; ++i) branches.push_back({"b" + std::to_string(i), w[i] / total, unit(rng)});
    double sum_prior = 0.0;
    for (const auto& b : branches) sum_prior += b.prior;
    if (std::fabs(sum_prior - 1.0) > 1e-12) continue;
    const bdt::Partition part(branches);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      const double post = bdt::bayes_posterior(part, static_cast<std::size_t>(i));
      // Bayes identity: P(B|A) P(A) = P(A|B) P(B)
      EXPECT_NEAR(post * bdt::total_probability(part), branches[i].likelihood * branches[i].prior,
                  1e-15);
      sum += post;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(BayesPosterior, ZeroEvidence) {
  const bdt::Partition part({{"a", 0.5, 0.0}, {"b", 0.5, 0.0}});
  EXPECT_EQ(error_code([&] { bdt::bayes_posterior(part, "a"); }), Errc::zero_evidence);
}

TEST(Partition, Validation) {
  EXPECT_EQ(error_code([] { bdt::Partition({}); }), Errc::invalid_partition);
  EXPECT_EQ(error_code([] { bdt::Partition({{"a", 0.5, 0.1}, {"b", 0.4, 0.1}}); }),
            Errc::invalid_partition);
  EXPECT_EQ(error_code([] { bdt::Partition({{"a", 1.2, 0.1}, {"b", -0.2, 0.1}}); }),
            Errc::invalid_partition);
  EXPECT_EQ(error_code([] { bdt::Partition({{"a", 1.0, 1.5}}); }), Errc::invalid_partition);
  EXPECT_NO_THROW(bdt::Partition({{"a", 0.5 + 5e-10, 0.1}, {"b", 0.5, 0.1}}));
  EXPECT_EQ(error_code([] { cancer_partition().index_of("missing"); }), Errc::invalid_parameter);
}

TEST(Odds, Examples) {
  EXPECT_NEAR(bdt::odds(0.001), 0.001001001001001, 1e-15);
  EXPECT_DOUBLE_EQ(bdt::odds(2.0 / 6.0), 0.5);
  EXPECT_EQ(bdt::odds(0.0), 0.0);
  EXPECT_EQ(error_code([] { bdt::odds(1.0); }), Errc::infinite_odds);
  EXPECT_EQ(error_code([] { bdt::odds(1.5); }), Errc::invalid_parameter);
}

TEST(Odds, RoundTrip) {
  for (double p : {0.0, 1e-9, 0.001, 0.25, 0.5, 0.9, 0.999999}) {
    EXPECT_NEAR(bdt::probability_from_odds(bdt::odds(p)), p, 1e-15);
  }
  EXPECT_NEAR(bdt::posterior_odds(bdt::odds(0.001), 47.5), 0.0475475475475475, 1e-15);
}

}  // namespace
