#include "bdt/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bdt/diagnostics.hpp"
#include "bdt/distributions.hpp"
#include "bdt/error.hpp"
#include "bdt/estimation.hpp"
#include "bdt/evidence.hpp"
#include "bdt/fixtures.hpp"
#include "bdt/format.hpp"
#include "bdt/grid_posterior.hpp"
#include "bdt/network_sim.hpp"
#include "bdt/probability.hpp"
#include "bdt/problem_spec.hpp"
#include "bdt/svg.hpp"
#include "json.hpp"

namespace bdt::cli {
namespace {

using io::fixed;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::all_zero_likelihood:
    case Errc::zero_evidence:
    case Errc::degenerate_test:
    case Errc::zero_denominator:
    case Errc::non_convergence:
    case Errc::cycle_detected:
      return kDegenerate;
    case Errc::io_failure:
      return kIoError;
    default:
      return kUsage;
  }
}

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::invalid_parameter, what); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::io_failure, "cannot open '" + path + "' for writing");
  file << content;
  file.flush();
  if (!file) throw Error(Errc::io_failure, "failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::io_failure, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// --- dist --------------------------------------------------------------------

struct DistArgs {
  std::string family;
  std::optional<std::int64_t> n, kappa, m_max, m;
  std::optional<double> p, lambda;
  bool moments = false;
  bool poisson_tv = false;
};

template <typename T>
T need(const std::optional<T>& v, const char* flag, const std::string& family) {
  if (!v) usage(family + " needs " + flag);
  return *v;
}

DiscreteDistribution make_distribution(const DistArgs& a) {
  if (a.family == "uniform") return DiscreteUniform(need(a.m_max, "--M", a.family));
  if (a.family == "binomial") return Binomial(need(a.n, "--n", a.family), need(a.p, "--p", a.family));
  if (a.family == "poisson") return Poisson(need(a.lambda, "--lambda", a.family));
  if (a.family == "negbinomial") {
    return NegativeBinomial(need(a.kappa, "--kappa", a.family), need(a.p, "--p", a.family));
  }
  usage("unknown family '" + a.family + "'");
}

int cmd_dist(const DistArgs& a, std::ostream& out) {
  const DiscreteDistribution dist = make_distribution(a);
  if (!a.m && !a.moments && !a.poisson_tv) usage("dist needs --m, --moments or --poisson-tv");
  if (a.m) {
    const std::int64_t m = *a.m;
    if (m < 0 && (a.family == "poisson" || a.family == "negbinomial")) {
      usage("count --m must be >= 0");
    }
    out << fixed(pmf(dist, m)) << '\n';
  }
  if (a.moments) {
    const Moments mom = moments(dist);
    out << "mean=" << fixed(mom.mean) << " variance=" << fixed(mom.variance) << '\n';
  }
  if (a.poisson_tv) {
    if (a.family != "binomial") usage("--poisson-tv applies to the binomial family");
    const auto tv = poisson_approx_tv(*a.n, *a.p);
    out << "tv=" << fixed(tv.total_variation) << " le_cam_bound="
        << fixed(static_cast<double>(*a.n) * *a.p * *a.p) << " support_limit=" << tv.support_limit
        << '\n';
  }
  return kSuccess;
}

// --- posterior -----------------------------------------------------------------

int cmd_posterior(const std::string& spec_path, const std::string& out_path, std::ostream& out) {
  const io::ProblemSpec spec = io::parse_problem_spec(read_file(spec_path));
  const PosteriorTable table = posterior(spec.prior, spec.model);
  const std::string csv = io::posterior_csv(table);
  if (out_path.empty()) out << csv;
  else write_file(out_path, csv);
  const auto mode = posterior_mode(table);
  out << "# marginal=" << fixed(table.marginal_likelihood())
      << " mean=" << fixed(posterior_mean(table), 3) << " mode=" << fixed(mode.first, 3)
      << " nearest=" << fixed(nearest_grid_estimate(table), 3) << '\n';
  return kSuccess;
}

// --- diagnostic ----------------------------------------------------------------

std::string bf_text(const BayesFactor& bf, int decimals) {
  return bf.is_infinite() ? "inf" : fixed(bf.value(), decimals);
}

int cmd_diagnostic(double sens, double spec, double prev, const std::string& plot_path,
                   std::ostream& out) {
  const DiagnosticTest test(sens, spec, prev);
  const double positive_predictive = ppv(test);
  const BayesFactor bf_pos = positive_result_evidence(test);
  const auto report = classify_bf(bf_pos);

  out << "ppv=" << fixed(positive_predictive, 3) << " bf=" << bf_text(bf_pos, 3)
      << " evidence=" << label(report.category) << '\n';
  out << "ppv_exact=" << fixed(positive_predictive) << '\n';
  auto or_undefined = [](auto compute) -> std::string {
    try {
      return compute();
    } catch (const Error& e) {
      if (e.code() == Errc::infinite_bayes_factor) return "inf";
      return "undefined";
    }
  };
  out << "npv=" << or_undefined([&] { return fixed(npv(test)); }) << '\n';
  out << "bf_negative=" << or_undefined([&] { return fixed(bayes_factor_negative(test)); })
      << '\n';
  if (prev < 1.0) {
    const double prior_odds = odds(prev);
    out << "prior_odds=" << fixed(prior_odds) << '\n';
    if (bf_pos.is_infinite()) {
      out << "posterior_odds=" << (prior_odds > 0.0 ? "inf" : "undefined") << '\n';
    } else {
      out << "posterior_odds=" << fixed(posterior_odds(prior_odds, bf_pos.value()), 4) << '\n';
    }
  } else {
    out << "prior_odds=inf\nposterior_odds=inf\n";
  }
  out << "direction=" << label(report.direction) << '\n';
  if (!plot_path.empty()) write_file(plot_path, io::render_svg(io::prior_posterior_plot(test)));
  return kSuccess;
}

// --- bf --------------------------------------------------------------------------

int cmd_bf(double bf, bool log_scale, std::ostream& out) {
  const EvidenceReport r = log_scale ? classify_2ln_bf(bf) : classify_bf(bf);
  out << label(r.category);
  if (r.direction != EvidenceDirection::neutral) out << " (" << label(r.direction) << ')';
  out << '\n';
  out << "bf=" << fixed(r.bf) << '\n';
  out << "2ln_bf=" << fixed(r.two_ln_bf, 3) << '\n';
  out << "scale=" << label(r.scale) << '\n';
  return kSuccess;
}

// --- mle ---------------------------------------------------------------------------

int cmd_mle(std::int64_t m, std::int64_t n, const std::string& method, double tol,
            std::ostream& out) {
  if (method != "closed" && method != "numeric" && method != "both") {
    usage("--method must be closed, numeric or both");
  }
  if (method != "numeric") {
    const auto r = binomial_mle_closed(m, n);
    out << "method=closed-form theta_hat=" << fixed(r.theta_hat)
        << " loglik=" << fixed(r.log_likelihood_at_max) << '\n';
  }
  if (method != "closed") {
    const auto r = binomial_mle_numeric(m, n, tol);
    out << "method=numeric theta_hat=" << fixed(r.theta_hat)
        << " loglik=" << fixed(r.log_likelihood_at_max) << " iterations=" << r.iterations << '\n';
  }
  return kSuccess;
}

// --- dag -----------------------------------------------------------------------------

struct DagArgs {
  std::string preset;
  std::optional<std::size_t> nodes;
  std::optional<double> edge_prob;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string csv_path;
};

int cmd_dag(const DagArgs& a, std::ostream& out) {
  std::size_t nodes = 0;
  double prob = 0.0;
  if (!a.preset.empty()) {
    bool found = false;
    for (const auto& p : dag_presets()) {
      if (a.preset == p.name) {
        nodes = p.node_count;
        prob = p.edge_prob;
        found = true;
      }
    }
    if (!found) usage("unknown DAG preset '" + a.preset + "'");
  } else {
    if (!a.nodes || !a.edge_prob) usage("dag needs --preset or both --nodes and --edge-prob");
  }
  if (a.nodes) nodes = *a.nodes;
  if (a.edge_prob) prob = *a.edge_prob;

  const Dag dag = random_dag(nodes, prob, a.seed);
  topological_order(dag);
  const std::string dot = to_dot(dag);
  if (a.out_path.empty()) out << dot;
  else write_file(a.out_path, dot);
  if (!a.csv_path.empty()) write_file(a.csv_path, to_adjacency_csv(dag));
  return kSuccess;
}

// --- converge ----------------------------------------------------------------------

struct ConvergeArgs {
  std::string preset;
  std::optional<double> start, end;
  double rate = 50.0;
  std::vector<double> samples;
  bool wide = false;
  std::string out_path;
  std::string plot_path;
};

int cmd_converge(const ConvergeArgs& a, std::ostream& out) {
  ConvergencePreset setup = fig4_preset();
  if (!a.preset.empty()) {
    if (a.preset != "fig4") usage("unknown convergence preset '" + a.preset + "'");
  } else {
    if (!a.start || !a.end) usage("converge needs --preset or both --start and --end");
    setup.groups = {{"Group", *a.start}};
    setup.end = *a.end;
    setup.rate = a.rate;
  }
  if (!a.samples.empty()) setup.sample_sizes = a.samples;
  const auto curves = convergence_table(setup.groups, setup.end, setup.rate, setup.sample_sizes);
  const std::string csv = a.wide ? convergence_csv_wide(curves) : convergence_csv_long(curves);
  if (a.out_path.empty()) out << csv;
  else write_file(a.out_path, csv);
  if (!a.plot_path.empty()) write_file(a.plot_path, io::render_svg(io::convergence_plot(curves)));
  return kSuccess;
}

// --- paper-fixtures ------------------------------------------------------------------

int cmd_fixtures(const std::string& only, bool as_json, Terminal term, std::ostream& out) {
  const auto results = fixtures::run(only);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;

  if (as_json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json row{{"id", r.id},       {"provenance", r.provenance},
                         {"expected", r.expected}, {"tolerance", r.tolerance},
                         {"pass", r.pass}};
      row["computed"] = std::isfinite(r.computed) ? nlohmann::json(r.computed) : nlohmann::json();
      if (!r.error.empty()) row["error"] = r.error;
      doc.push_back(std::move(row));
    }
    out << nlohmann::json{{"fixtures", doc}, {"passed", passed}, {"total", results.size()}}.dump(2)
        << '\n';
  } else {
    const char* green = term.color ? "\x1b[32m" : "";
    const char* red = term.color ? "\x1b[31m" : "";
    const char* reset = term.color ? "\x1b[0m" : "";
    for (const auto& r : results) {
      out << (r.pass ? green : red) << (r.pass ? "PASS" : "FAIL") << reset << "  " << r.id
          << "  computed=" << io::round_trip(r.computed) << " expected=" << io::round_trip(r.expected)
          << " tol=" << io::round_trip(r.tolerance) << "  [" << r.provenance << ']';
      if (!r.error.empty()) out << "  error: " << r.error;
      out << '\n';
    }
    out << passed << '/' << results.size() << " fixtures passed\n";
  }
  if (results.empty()) return kUsage;
  return passed == results.size() ? kSuccess : kFixtureFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        Terminal terminal) {
  CLI::App app{"Bayesian discrete-inference toolkit for clinical trial design", "bdt"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "pmf and moments of a discrete distribution");
  dist_cmd->add_option("--family", dist.family, "uniform | binomial | poisson | negbinomial")
      ->required();
  dist_cmd->add_option("--n", dist.n, "binomial trial count");
  dist_cmd->add_option("--p", dist.p, "success probability");
  dist_cmd->add_option("--lambda", dist.lambda, "Poisson rate");
  dist_cmd->add_option("--kappa", dist.kappa, "negative binomial success target");
  dist_cmd->add_option("--M", dist.m_max, "uniform support size");
  dist_cmd->add_option("--m", dist.m, "outcome at which to evaluate the pmf");
  dist_cmd->add_flag("--moments", dist.moments, "print mean and variance");
  dist_cmd->add_flag("--poisson-tv", dist.poisson_tv,
                     "binomial only: total variation distance to Poisson(np)");

  std::string spec_path, posterior_out;
  auto* post_cmd = app.add_subcommand("posterior", "grid posterior from a JSON problem spec");
  post_cmd->add_option("spec", spec_path, "problem spec file ('-' for stdin)")->required();
  post_cmd->add_option("--out", posterior_out, "write the CSV here instead of stdout");

  double sens = 0, spec = 0, prev = 0;
  std::string diag_plot;
  auto* diag_cmd = app.add_subcommand("diagnostic", "PPV, NPV and Bayes factors of a test");
  diag_cmd->add_option("--sens", sens, "sensitivity")->required();
  diag_cmd->add_option("--spec", spec, "specificity")->required();
  diag_cmd->add_option("--prev", prev, "prevalence")->required();
  diag_cmd->add_option("--plot", diag_plot, "write a prior/posterior bar chart (SVG)");

  double bf = 0;
  bool log_scale = false;
  auto* bf_cmd = app.add_subcommand("bf", "classify the evidence carried by a Bayes factor");
  bf_cmd->add_option("--bf", bf, "Bayes factor")->required();
  bf_cmd->add_flag("--log-scale", log_scale, "use the 2 ln(BF) bands");

  std::int64_t mle_m = 0, mle_n = 0;
  std::string mle_method = "both";
  double mle_tol = 1e-8;
  auto* mle_cmd = app.add_subcommand("mle", "binomial maximum likelihood estimate");
  mle_cmd->add_option("--m", mle_m, "successes")->required();
  mle_cmd->add_option("--n", mle_n, "trials")->required();
  mle_cmd->add_option("--method", mle_method, "closed | numeric | both");
  mle_cmd->add_option("--tol", mle_tol, "numeric tolerance");

  DagArgs dag;
  auto* dag_cmd = app.add_subcommand("dag", "seeded random DAG as Graphviz DOT");
  dag_cmd->add_option("--preset", dag.preset, "fig2 (100 nodes) | fig3 (500 nodes)");
  dag_cmd->add_option("--nodes", dag.nodes, "node count");
  dag_cmd->add_option("--edge-prob", dag.edge_prob, "edge inclusion probability");
  dag_cmd->add_option("--seed", dag.seed, "generator seed")->required();
  dag_cmd->add_option("--out", dag.out_path, "write DOT here instead of stdout");
  dag_cmd->add_option("--csv", dag.csv_path, "also write a from,to adjacency CSV");

  ConvergeArgs conv;
  auto* conv_cmd = app.add_subcommand("converge", "prior-strength convergence curves");
  conv_cmd->add_option("--preset", conv.preset, "fig4");
  conv_cmd->add_option("--start", conv.start, "P(positive) with no data");
  conv_cmd->add_option("--end", conv.end, "limit as the sample grows");
  conv_cmd->add_option("--rate", conv.rate, "decay scale in patients");
  conv_cmd->add_option("--samples", conv.samples, "sample sizes")->delimiter(',');
  conv_cmd->add_flag("--wide", conv.wide, "one row per group and sample size");
  conv_cmd->add_option("--out", conv.out_path, "write the CSV here instead of stdout");
  conv_cmd->add_option("--plot", conv.plot_path, "write a two-panel SVG");

  std::string only;
  bool as_json = false;
  auto* fix_cmd = app.add_subcommand("paper-fixtures", "reproduce every worked example");
  fix_cmd->add_option("--only", only, "run fixtures whose id contains this text");
  fix_cmd->add_flag("--json", as_json, "machine-readable output");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (dist_cmd->parsed()) return cmd_dist(dist, out);
    if (post_cmd->parsed()) return cmd_posterior(spec_path, posterior_out, out);
    if (diag_cmd->parsed()) return cmd_diagnostic(sens, spec, prev, diag_plot, out);
    if (bf_cmd->parsed()) return cmd_bf(bf, log_scale, out);
    if (mle_cmd->parsed()) return cmd_mle(mle_m, mle_n, mle_method, mle_tol, out);
    if (dag_cmd->parsed()) return cmd_dag(dag, out);
    if (conv_cmd->parsed()) return cmd_converge(conv, out);
    if (fix_cmd->parsed()) return cmd_fixtures(only, as_json, terminal, out);
  } catch (const Error& e) {
    err << "bdt: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "bdt: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bdt::cli
