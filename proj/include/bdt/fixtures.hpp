#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bdt/contingency_table.hpp"
#include "bdt/grid_posterior.hpp"

namespace bdt::fixtures {

/// A reproducible number together with where it comes from. Property
/// checks are registered the same way, with the measured deviation (or
/// violation count) as the computed value and 0 as the expectation.
struct Fixture {
  std::string id;
  std::string provenance;
  double expected;
  double tolerance;
  std::function<double()> compute;
};

struct FixtureResult {
  std::string id;
  std::string provenance;
  double expected;
  double computed;
  double tolerance;
  bool pass;
  /// Set when the computation threw.
  std::string error;
};

const std::vector<Fixture>& registry();

/// Runs every fixture whose id contains `filter` (all when empty), in
/// registry order.
std::vector<FixtureResult> run(std::string_view filter = {});

// Worked examples, shared by the fixtures, the CLI data files and tests.

/// Hospitalization within one year by gender and race.
ContingencyTable hospitalization_table();
inline constexpr const char* kHospitalizationCsv =
    "Gender,Race,Hospitalized,NotHospitalized\n"
    "Male,Caucasian,56,79\n"
    ",African American,56,80\n"
    ",Other,5,13\n"
    "Female,Caucasian,7,3\n"
    ",African American,6,9\n"
    ",Other,1,1\n";

/// Test A: 6 of 10 positive; test B: 4 of 7 positive.
ObservationModel two_test_model();
PriorGrid two_test_prior();

/// Geometric waiting time: 7 failed donations before the first match.
ObservationModel blood_model();
PriorGrid blood_prior();
PriorGrid blood_uniform_prior();

/// 7 adequate responders out of 10, uniform prior on 0.1, ..., 1.0.
ObservationModel vaccine_model();
PriorGrid vaccine_prior();

}  // namespace bdt::fixtures
