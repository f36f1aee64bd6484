#pragma once

#include <string>
#include <vector>

#include "bdt/diagnostics.hpp"
#include "bdt/network_sim.hpp"

namespace bdt::io {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  /// Grouped bars only: one label per x position (x values are indices).
  std::vector<std::string> categories;
  std::vector<Series> series;
};

enum class PlotKind { grouped_bar, multi_line };

/// Static figure description. Panels stack vertically. Every y value must be
/// a probability and every series within a panel must have matching x and y
/// lengths.
struct PlotSpec {
  PlotKind kind = PlotKind::multi_line;
  std::string title;
  std::vector<Panel> panels;
  std::string output_path;
};

/// Throws Errc::invalid_parameter if the spec breaks its invariants.
void validate(const PlotSpec& spec);

std::string render_svg(const PlotSpec& spec);

/// Prior vs posterior probability of each disease status after a positive
/// result, as grouped bars.
PlotSpec prior_posterior_plot(const DiagnosticTest& test);

/// One panel per curve: P(positive) and P(negative) against sample size on
/// a log axis.
PlotSpec convergence_plot(const std::vector<ConvergenceCurve>& curves);

}  // namespace bdt::io
