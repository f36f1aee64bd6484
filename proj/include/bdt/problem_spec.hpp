#pragma once

#include <istream>
#include <string>
#include <vector>

#include "bdt/grid_posterior.hpp"

namespace bdt::io {

/// A grid-posterior problem as read from JSON:
///
///   {
///     "prior": [{"theta": 0.35, "weight": 0.5}, ...],
///     "observations": [{"family": "binomial", "n": 10, "m": 6},
///                      {"family": "negbinomial", "kappa": 1, "m": 7},
///                      {"family": "poisson", "m": 3}],
///     "normalized": true
///   }
///
/// "normalized" defaults to true; "observations" may be empty.
struct ProblemSpec {
  PriorGrid prior;
  ObservationModel model;
};

ProblemSpec parse_problem_spec(std::istream& in);
ProblemSpec parse_problem_spec(const std::string& text);

/// theta,prior,likelihood,posterior at 6 decimals, preceded by a
/// "# marginal_likelihood=<exact>" metadata line.
std::string posterior_csv(const PosteriorTable& table);

/// Rows read back from `posterior_csv` output; '#' lines are skipped.
struct PosteriorCsvRow {
  double theta;
  double prior;
  double likelihood;
  double posterior;
};

struct PosteriorCsv {
  double marginal_likelihood;
  std::vector<PosteriorCsvRow> rows;
};

PosteriorCsv parse_posterior_csv(std::istream& in);

}  // namespace bdt::io
