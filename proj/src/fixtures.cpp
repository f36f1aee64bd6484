#include "bdt/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bdt/diagnostics.hpp"
#include "bdt/distributions.hpp"
#include "bdt/error.hpp"
#include "bdt/estimation.hpp"
#include "bdt/evidence.hpp"
#include "bdt/network_sim.hpp"
#include "bdt/probability.hpp"

namespace bdt::fixtures {

ContingencyTable hospitalization_table() {
  std::istringstream in(kHospitalizationCsv);
  return read_contingency_csv(in);
}

ObservationModel two_test_model() {
  return {{Observation::binomial(10, 6), Observation::binomial(7, 4)}};
}

PriorGrid two_test_prior() { return PriorGrid({{0.35, 0.5}, {0.5, 0.5}}); }

ObservationModel blood_model() { return {{Observation::negative_binomial(1, 7)}}; }

PriorGrid blood_prior() { return PriorGrid({{0.2, 0.25}, {0.1, 0.75}}); }

PriorGrid blood_uniform_prior() { return PriorGrid({{0.2, 0.5}, {0.1, 0.5}}); }

ObservationModel vaccine_model() { return {{Observation::binomial(10, 7)}}; }

PriorGrid vaccine_prior() {
  std::vector<double> thetas;
  for (int i = 1; i <= 10; ++i) thetas.push_back(i / 10.0);
  return PriorGrid::uniform(std::move(thetas));
}

namespace {

const DiagnosticTest kHivTest(0.95, 0.98, 0.001);

Partition survival_partition() {
  return Partition({{"early", 0.9, 0.8}, {"late", 0.1, 0.2}});
}

double posterior_at(const PosteriorTable& table, double theta) {
  for (const auto& r : table.rows()) {
    if (r.theta == theta) return r.posterior;
  }
  throw Error(Errc::invalid_parameter, "theta not on the grid");
}

// Uniform draw in [lo, hi) and integer draw in [lo, hi].
double draw(UniformStream& u, double lo, double hi) { return lo + (hi - lo) * u.next(); }
std::int64_t draw_int(UniformStream& u, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(u.next() * static_cast<double>(hi - lo + 1));
}

// --- property checks -------------------------------------------------------

double normalization_max_error() {
  UniformStream u(2024);
  double worst = 0.0;
  auto track = [&worst](double sum) { worst = std::max(worst, std::abs(sum - 1.0)); };
  for (int k = 0; k < 20; ++k) {
    const DiscreteUniform uni(draw_int(u, 1, 200));
    double s = 0.0;
    for (std::int64_t m = 1; m <= uni.m_max(); ++m) s += uni.pmf(m);
    track(s);

    const Binomial bin(draw_int(u, 1, 200), u.next());
    s = 0.0;
    for (std::int64_t m = 0; m <= bin.n(); ++m) s += bin.pmf(m);
    track(s);

    const Poisson poi(draw(u, 0.05, 50.0));
    s = 0.0;
    const std::int64_t cut = poisson_tail_cutoff(poi.lambda());
    for (std::int64_t m = 0; m <= cut; ++m) s += poi.pmf(m);
    track(s);

    const NegativeBinomial nb(draw_int(u, 1, 20), draw(u, 0.05, 1.0));
    const auto mom = nb.moments();
    const auto limit = static_cast<std::int64_t>(mom.mean + 40.0 * std::sqrt(mom.variance)) + 100;
    s = 0.0;
    for (std::int64_t m = 0; m <= limit; ++m) s += nb.pmf(m);
    track(s);
  }
  return worst;
}

ObservationModel random_binomial_model(UniformStream& u, int observations) {
  ObservationModel model;
  for (int i = 0; i < observations; ++i) {
    const auto n = draw_int(u, 1, 12);
    model.observations.push_back(Observation::binomial(n, draw_int(u, 0, n)));
  }
  return model;
}

std::vector<double> random_thetas(UniformStream& u, int count) {
  std::vector<double> thetas;
  while (static_cast<int>(thetas.size()) < count) {
    const double t = draw(u, 0.01, 0.99);
    if (std::find(thetas.begin(), thetas.end(), t) == thetas.end()) thetas.push_back(t);
  }
  return thetas;
}

PriorGrid random_prior(UniformStream& u, const std::vector<double>& thetas) {
  std::vector<GridPoint> points;
  double sum = 0.0;
  for (double t : thetas) {
    points.push_back({t, draw(u, 0.05, 1.0)});
    sum += points.back().weight;
  }
  for (auto& p : points) p.weight /= sum;
  return PriorGrid(std::move(points));
}

double prior_scaling_max_error() {
  UniformStream u(7);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto thetas = random_thetas(u, static_cast<int>(draw_int(u, 1, 16)));
    const PriorGrid prior = random_prior(u, thetas);
    const ObservationModel model = random_binomial_model(u, 2);
    const double scale = std::exp(draw(u, -20.0, 20.0));
    std::vector<GridPoint> scaled = prior.points();
    for (auto& p : scaled) p.weight *= scale;
    const auto a = posterior(prior, model);
    const auto b = posterior(PriorGrid(scaled, PriorNormalization::unnormalized), model);
    for (std::size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, std::abs(a.rows()[i].posterior - b.rows()[i].posterior));
    }
  }
  return worst;
}

double sequential_update_max_error() {
  UniformStream u(11);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto thetas = random_thetas(u, static_cast<int>(draw_int(u, 1, 16)));
    const PriorGrid prior = random_prior(u, thetas);
    const ObservationModel first = random_binomial_model(u, 1);
    const ObservationModel second = random_binomial_model(u, 1);
    ObservationModel both = first;
    both.observations.push_back(second.observations.front());
    const auto joint = posterior(prior, both);
    const auto staged = posterior(posterior(prior, first).as_prior(), second);
    for (std::size_t i = 0; i < joint.size(); ++i) {
      worst = std::max(worst, std::abs(joint.rows()[i].posterior - staged.rows()[i].posterior));
    }
  }
  return worst;
}

// Likelihood by enumerating every success/failure sequence of length n and
// keeping those with exactly m successes.
double enumerated_likelihood(int n, int m, double theta) {
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int successes = 0;
    double prob = 1.0;
    for (int bit = 0; bit < n; ++bit) {
      if (mask & (1u << bit)) {
        ++successes;
        prob *= theta;
      } else {
        prob *= 1.0 - theta;
      }
    }
    if (successes == m) total += prob;
  }
  return total;
}

double brute_force_max_error() {
  UniformStream u(99);
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (int m = 0; m <= n; m += (n > 6 ? 3 : 1)) {
      const auto thetas = random_thetas(u, static_cast<int>(draw_int(u, 2, 16)));
      const PriorGrid prior = random_prior(u, thetas);
      const auto table = posterior(prior, {{Observation::binomial(n, m)}});
      std::vector<double> joint;
      double evidence = 0.0;
      for (const auto& p : prior.points()) {
        joint.push_back(p.weight * enumerated_likelihood(n, m, p.theta));
        evidence += joint.back();
      }
      for (std::size_t i = 0; i < joint.size(); ++i) {
        worst = std::max(worst, std::abs(table.rows()[i].posterior - joint[i] / evidence));
      }
    }
  }
  return worst;
}

double uniform_mode_mismatches() {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
  const PriorGrid prior = PriorGrid::uniform(grid);
  int mismatches = 0;
  for (int n = 1; n <= 20; ++n) {
    for (int m = 0; m <= n; ++m) {
      const double mode = posterior_mode(posterior(prior, {{Observation::binomial(n, m)}})).first;
      double best = 0.0;
      double at_mode = 0.0;
      for (double t : grid) {
        const double lik = std::pow(t, m) * std::pow(1.0 - t, n - m);
        best = std::max(best, lik);
        if (t == mode) at_mode = lik;
      }
      if (at_mode < best * (1.0 - 1e-12)) ++mismatches;
    }
  }
  return mismatches;
}

double le_cam_violations() {
  UniformStream u(31);
  int violations = 0;
  for (int k = 0; k < 50; ++k) {
    const auto n = draw_int(u, 1, 500);
    const double p = u.next();
    const double bound = static_cast<double>(n) * p * p;
    if (poisson_approx_tv(n, p).total_variation > bound + 1e-12) ++violations;
  }
  return violations;
}

double reciprocal_symmetry_violations() {
  UniformStream u(5);
  int violations = 0;
  for (int k = 0; k < 1000; ++k) {
    const double bf = std::exp(draw(u, -12.0, 12.0));
    const auto a = classify_bf(bf);
    const auto b = classify_bf(1.0 / bf);
    const bool opposite =
        (a.direction == EvidenceDirection::neutral && b.direction == EvidenceDirection::neutral) ||
        (a.direction == EvidenceDirection::for_null &&
         b.direction == EvidenceDirection::for_alternative) ||
        (a.direction == EvidenceDirection::for_alternative &&
         b.direction == EvidenceDirection::for_null);
    if (a.category != b.category || !opposite) ++violations;
  }
  return violations;
}

double dag_failures() {
  UniformStream u(17);
  int failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto n = static_cast<std::size_t>(draw_int(u, 1, 200));
    const double p = u.next() * 0.2;
    const std::uint64_t seed = static_cast<std::uint64_t>(draw_int(u, 0, 1'000'000'000));
    const Dag dag = random_dag(n, p, seed);
    bool ok = std::all_of(dag.edges.begin(), dag.edges.end(),
                          [](const auto& e) { return e.first < e.second; });
    try {
      topological_order(dag);
    } catch (const Error&) {
      ok = false;
    }
    ok = ok && to_dot(dag) == to_dot(random_dag(n, p, seed));
    if (!ok) ++failures;
  }
  return failures;
}

double mean_edge_count() {
  double total = 0.0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    total += static_cast<double>(random_dag(100, 0.01, seed).edges.size());
  }
  return total / 500.0;
}

double fig4_monotone_violations() {
  const auto preset = fig4_preset();
  const auto curves = convergence_table(preset.groups, preset.end, preset.rate, preset.sample_sizes);
  int violations = 0;
  for (const auto& c : curves) {
    for (std::size_t k = 1; k < c.values.size(); ++k) {
      const double before = c.values[k - 1];
      const double now = c.values[k];
      if (!(std::abs(now - c.end) < std::abs(before - c.end))) ++violations;
      if (c.start > c.end && !(now < before)) ++violations;
      if (c.start < c.end && !(now > before)) ++violations;
    }
  }
  return violations;
}

std::vector<Fixture> build_registry() {
  std::vector<Fixture> f;
  auto add = [&f](std::string id, std::string provenance, double expected, double tol,
                  std::function<double()> compute) {
    f.push_back({std::move(id), std::move(provenance), expected, tol, std::move(compute)});
  };
  const double ulp_074 = std::nextafter(0.74, 1.0) - 0.74;

  // distributions
  add("dist.binomial_20_0.3_m5", "Bin(20, 0.3) at 5 = 0.1789", 0.1789, 1e-4,
      [] { return binomial_pmf(20, 0.3, 5); });
  add("dist.poisson_2.1_m4", "Poisson(2.1) at 4 = 0.0992", 0.0992, 1e-4,
      [] { return poisson_pmf(2.1, 4); });
  add("dist.negbinom_3_0.33_m10", "NB(3, 0.33) at 10 failures = 0.0432", 0.0432, 1e-4,
      [] { return negbinom_pmf(3, 0.33, 10); });
  add("dist.uniform_variance_M5", "uniform on 1..5 has variance 24/12 = 2", 2.0, 0.0,
      [] { return uniform_moments(5).variance; });

  // probability core
  add("prob.table1_hospitalized_given_male", "P(H | M) = 0.405", 0.405, 5e-4, [] {
    const auto t = hospitalization_table();
    return table_conditional(t, stratum_equals(t, "Gender", "Male"), column_equals("Hospitalized"));
  });
  add("prob.survival_total", "0.8 x 0.9 + 0.2 x 0.1 = 0.74 (to 1 ulp)", 0.74, ulp_074,
      [] { return total_probability(survival_partition()); });
  add("prob.early_stage_given_survival", "P(ES | S) = 0.973", 0.973, 1e-3,
      [] { return bayes_posterior(survival_partition(), "early"); });

  // diagnostics (single HIV test)
  add("hiv.ppv", "P(HIV+ | Test+) = 0.045", 0.045, 1e-3, [] { return ppv(kHivTest); });
  add("hiv.bf_positive", "BF = 0.95 / 0.02 = 47.5", 47.5, 1e-9,
      [] { return bayes_factor_positive(kHivTest); });
  add("hiv.posterior_odds", "posterior odds = 47.5 x 0.001/0.999 = 0.0475", 0.0475, 5e-4,
      [] { return posterior_odds(odds(0.001), bayes_factor_positive(kHivTest)); });
  add("hiv.fig1_prior_positive", "prior bar HIV+ 0.001", 0.001, 1e-3,
      [] { return posterior_from_test(kHivTest, TestResult::positive).prior; });
  add("hiv.fig1_prior_negative", "prior bar HIV- 0.999", 0.999, 1e-3,
      [] { return 1.0 - posterior_from_test(kHivTest, TestResult::positive).prior; });
  add("hiv.fig1_posterior_positive", "posterior bar HIV+ 0.045", 0.045, 1e-3,
      [] { return posterior_from_test(kHivTest, TestResult::positive).posterior; });
  add("hiv.fig1_posterior_negative", "posterior bar HIV- 0.955", 0.955, 1e-3,
      [] { return 1.0 - posterior_from_test(kHivTest, TestResult::positive).posterior; });

  // two-test grid
  add("hiv2.marginal", "sum of LIKELIHOOD*PRIOR = 0.0330077", 0.0330077, 1e-6,
      [] { return marginal_likelihood(two_test_prior(), two_test_model()); });
  add("hiv2.posterior_0.35", "P(theta = 0.35 | Z) = 0.151", 0.151, 1e-3,
      [] { return posterior_at(posterior(two_test_prior(), two_test_model()), 0.35); });
  add("hiv2.posterior_0.5", "P(theta = 0.5 | Z) = 0.849", 0.849, 1e-3,
      [] { return posterior_at(posterior(two_test_prior(), two_test_model()), 0.5); });
  add("hiv2.point_bf", "Bayes factor for theta = 0.5 vs 0.35 = 5.64", 5.64, 0.01,
      [] { return point_bayes_factor(two_test_model(), 0.5, 0.35); });
  add("hiv2.point_bf_ratio", "BF = 0.056076/0.0099389", 0.056076 / 0.0099389, 1e-3,
      [] { return point_bayes_factor(two_test_model(), 0.5, 0.35); });
  add("hiv2.likelihood_0.5", "likelihood at theta = 0.5 is 0.056076", 0.056076, 1e-6,
      [] { return std::exp(log_likelihood(two_test_model(), 0.5)); });
  add("hiv2.bf_is_substantial", "BF 5.64 is substantial evidence (rank 1)",
      rank(EvidenceCategory::substantial), 0.0, [] {
        return rank(classify_bf(point_bayes_factor(two_test_model(), 0.5, 0.35)).category);
      });

  // blood donation
  add("blood.marginal", "sum of LIKELIHOOD*PRIOR = 0.0463580", 0.046358, 1e-5,
      [] { return marginal_likelihood(blood_prior(), blood_model()); });
  add("blood.posterior_0.2", "P(theta = 0.2 | data) = 0.226", 0.226, 1e-3,
      [] { return posterior_at(posterior(blood_prior(), blood_model()), 0.2); });
  add("blood.posterior_0.1", "P(theta = 0.1 | data) = 0.774", 0.774, 1e-3,
      [] { return posterior_at(posterior(blood_prior(), blood_model()), 0.1); });
  add("blood.uniform_posterior_0.2", "uniform prior: P(theta = 0.2 | data) = 0.467", 0.467, 1e-3,
      [] { return posterior_at(posterior(blood_uniform_prior(), blood_model()), 0.2); });
  add("blood.uniform_posterior_0.1", "uniform prior: P(theta = 0.1 | data) = 0.533", 0.533, 1e-3,
      [] { return posterior_at(posterior(blood_uniform_prior(), blood_model()), 0.1); });
  add("blood.uniform_marginal", "uniform prior marginal 0.0448864", 0.0448864, 1e-6,
      [] { return marginal_likelihood(blood_uniform_prior(), blood_model()); });

  // vaccine
  add("vaccine.marginal", "sum of LIKELIHOOD*PRIOR = 0.0909993", 0.0909993, 1e-6,
      [] { return marginal_likelihood(vaccine_prior(), vaccine_model()); });
  const double table4[] = {0.000, 0.001, 0.010, 0.047, 0.129, 0.236, 0.293, 0.221, 0.063, 0.000};
  for (int i = 1; i <= 10; ++i) {
    const double theta = i / 10.0;
    std::ostringstream id;
    id << "vaccine.table4_theta_" << (i == 10 ? std::string("1.0") : "0." + std::to_string(i));
    add(id.str(), "posterior of theta in the vaccine table", table4[i - 1], 1e-3,
        [theta] { return posterior_at(posterior(vaccine_prior(), vaccine_model()), theta); });
  }
  add("vaccine.posterior_mean", "posterior mean = 0.667", 0.667, 1e-3,
      [] { return posterior_mean(posterior(vaccine_prior(), vaccine_model())); });
  add("vaccine.posterior_mode", "posterior mode = 0.7", 0.7, 0.0,
      [] { return posterior_mode(posterior(vaccine_prior(), vaccine_model())).first; });
  add("vaccine.mode_mass", "mass at the mode = 0.293", 0.293, 1e-3,
      [] { return posterior_mode(posterior(vaccine_prior(), vaccine_model())).second; });
  add("vaccine.nearest_grid_estimate", "grid estimate becomes 0.7", 0.7, 0.0,
      [] { return nearest_grid_estimate(posterior(vaccine_prior(), vaccine_model())); });
  add("vaccine.mle_closed", "MLE = 7/10 = 0.7", 0.7, 0.0,
      [] { return binomial_mle_closed(7, 10).theta_hat; });
  add("vaccine.mle_numeric", "numeric MLE = 0.7", 0.7, 1e-8,
      [] { return binomial_mle_numeric(7, 10, 1e-8).theta_hat; });
  add("vaccine.map_equals_mle", "uniform prior: mode coincides with MLE (1 = yes)", 1.0, 0.0,
      [] { return grid_map_equals_mle(7, 10, vaccine_prior()).equal ? 1.0 : 0.0; });

  // evidence
  add("evidence.hiv_bf_strong", "BF 47.5 is strong evidence (rank 2)",
      rank(EvidenceCategory::strong), 0.0, [] { return rank(classify_bf(47.5).category); });
  add("evidence.bf_5.64_substantial", "BF 5.64 is substantial evidence (rank 1)",
      rank(EvidenceCategory::substantial), 0.0, [] { return rank(classify_bf(5.64).category); });
  add("evidence.two_ln_47.5", "2 ln(47.5) = 7.721", 7.721, 1e-3,
      [] { return classify_2ln_bf(47.5).two_ln_bf; });
  add("evidence.two_ln_47.5_strong", "2 ln(47.5) lies in 6..10: strong (rank 2)",
      rank(EvidenceCategory::strong), 0.0, [] { return rank(classify_2ln_bf(47.5).category); });
  add("evidence.reciprocal_symmetry", "violations over 1000 random Bayes factors", 0.0, 0.0,
      reciprocal_symmetry_violations);

  // properties
  add("property.pmf_normalization", "max |sum pmf - 1|, 20 parameter sets per family", 0.0, 1e-9,
      normalization_max_error);
  add("property.prior_scaling", "max posterior change under prior rescaling", 0.0, 1e-12,
      prior_scaling_max_error);
  add("property.sequential_update", "max |joint - staged| posterior difference", 0.0, 1e-12,
      sequential_update_max_error);
  add("property.brute_force_posterior", "max difference to sequence enumeration", 0.0, 1e-10,
      brute_force_max_error);
  add("property.uniform_mode_is_grid_mle", "mode/argmax mismatches, n <= 20, step 0.05", 0.0, 0.0,
      uniform_mode_mismatches);
  add("property.le_cam_bound", "TV(Bin, Poisson) > n p^2 violations, 50 draws", 0.0, 0.0,
      le_cam_violations);

  // networks
  add("dag.acyclic_deterministic", "failures over 1000 generated DAGs", 0.0, 0.0, dag_failures);
  add("dag.mean_edge_count", "mean edges at (100, 0.01) over 500 seeds, 49.5 +- 3 sigma", 49.5,
      3.0 * std::sqrt(4950.0 * 0.01 * 0.99 / 500.0), mean_edge_count);
  add("fig4.start", "converge(0) returns start", 0.9, 0.0,
      [] { return converge(0.0, 0.9, 0.5, 50.0); });
  add("fig4.monotone", "monotonicity violations", 0.0, 0.0, fig4_monotone_violations);
  add("fig4.csv_rows", "2 groups x 9 sizes x 2 results", 36.0, 0.0, [] {
    const auto p = fig4_preset();
    const std::string csv =
        convergence_csv_long(convergence_table(p.groups, p.end, p.rate, p.sample_sizes));
    return static_cast<double>(std::count(csv.begin(), csv.end(), '\n') - 1);
  });
  add("fig4.highrisk_n50", "0.5 + 0.4 e^-1 = 0.64715", 0.64715, 1e-5,
      [] { return converge(50.0, 0.9, 0.5, 50.0); });
  return f;
}

}  // namespace

const std::vector<Fixture>& registry() {
  static const std::vector<Fixture> fixtures = build_registry();
  return fixtures;
}

std::vector<FixtureResult> run(std::string_view filter) {
  std::vector<FixtureResult> results;
  for (const auto& fx : registry()) {
    if (!filter.empty() && fx.id.find(filter) == std::string::npos) continue;
    FixtureResult r{fx.id, fx.provenance, fx.expected,
                    std::numeric_limits<double>::quiet_NaN(), fx.tolerance, false, {}};
    try {
      r.computed = fx.compute();
      r.pass = std::abs(r.computed - r.expected) <= r.tolerance;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace bdt::fixtures
