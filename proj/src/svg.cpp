#include "bdt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bdt/error.hpp"
#include "bdt/format.hpp"

namespace bdt::io {
namespace {

constexpr double kWidth = 640.0;
constexpr double kPanelHeight = 320.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 130.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

const char* const kPalette[] = {"#1f4e9c", "#c0392b", "#2e7d32", "#8e44ad"};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return fixed(v, 2); }

struct Frame {
  double left, top, width, height;
  double x_min, x_max;
  bool log_x;

  double px(double x) const {
    const double a = log_x ? std::log10(x) : x;
    const double lo = log_x ? std::log10(x_min) : x_min;
    const double hi = log_x ? std::log10(x_max) : x_max;
    const double t = hi > lo ? (a - lo) / (hi - lo) : 0.5;
    return left + t * width;
  }
  double py(double y) const { return top + (1.0 - y) * height; }
};

void axes(std::ostringstream& out, const Panel& panel, const Frame& f) {
  out << "  <g class=\"axes\">\n";
  out << "    <line x1=\"" << num(f.left) << "\" y1=\"" << num(f.top + f.height) << "\" x2=\""
      << num(f.left + f.width) << "\" y2=\"" << num(f.top + f.height) << "\" stroke=\"black\"/>\n";
  out << "    <line x1=\"" << num(f.left) << "\" y1=\"" << num(f.top) << "\" x2=\"" << num(f.left)
      << "\" y2=\"" << num(f.top + f.height) << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 10; k += 2) {
    const double y = k / 10.0;
    out << "    <text x=\"" << num(f.left - 8) << "\" y=\"" << num(f.py(y) + 4)
        << "\" font-size=\"10\" text-anchor=\"end\">" << fixed(y, 1) << "</text>\n";
  }
  out << "    <text x=\"" << num(f.left + f.width / 2) << "\" y=\"" << num(f.top + f.height + 38)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(panel.x_label) << "</text>\n";
  out << "    <text x=\"" << num(f.left - 50) << "\" y=\"" << num(f.top + f.height / 2)
      << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 " << num(f.left - 50)
      << ' ' << num(f.top + f.height / 2) << ")\">" << escape(panel.y_label) << "</text>\n";
  out << "    <text x=\"" << num(f.left + f.width / 2) << "\" y=\"" << num(f.top - 14)
      << "\" font-size=\"13\" text-anchor=\"middle\">" << escape(panel.title) << "</text>\n";
  out << "  </g>\n";
}

void legend(std::ostringstream& out, const Panel& panel, const Frame& f) {
  out << "  <g class=\"legend\">\n";
  for (std::size_t s = 0; s < panel.series.size(); ++s) {
    const double y = f.top + 12 + 18.0 * static_cast<double>(s);
    out << "    <rect x=\"" << num(f.left + f.width + 12) << "\" y=\"" << num(y - 9)
        << "\" width=\"10\" height=\"10\" fill=\"" << kPalette[s % 4] << "\"/>\n";
    out << "    <text x=\"" << num(f.left + f.width + 28) << "\" y=\"" << num(y)
        << "\" font-size=\"11\">" << escape(panel.series[s].name) << "</text>\n";
  }
  out << "  </g>\n";
}

void bars(std::ostringstream& out, const Panel& panel, const Frame& f) {
  const std::size_t groups = panel.categories.size();
  const std::size_t per_group = panel.series.size();
  const double slot = f.width / static_cast<double>(groups);
  const double bar_width = 0.7 * slot / static_cast<double>(per_group);
  for (std::size_t g = 0; g < groups; ++g) {
    const double base = f.left + slot * static_cast<double>(g) + 0.15 * slot;
    for (std::size_t s = 0; s < per_group; ++s) {
      const double value = panel.series[s].y[g];
      const double x = base + bar_width * static_cast<double>(s);
      out << "  <rect class=\"bar\" data-series=\"" << escape(panel.series[s].name)
          << "\" x=\"" << num(x) << "\" y=\"" << num(f.py(value)) << "\" width=\""
          << num(bar_width) << "\" height=\"" << num(f.py(0) - f.py(value)) << "\" fill=\""
          << kPalette[s % 4] << "\"/>\n";
      out << "  <text x=\"" << num(x + bar_width / 2) << "\" y=\"" << num(f.py(value) - 4)
          << "\" font-size=\"10\" text-anchor=\"middle\">" << fixed(value, 3) << "</text>\n";
    }
    out << "  <text x=\"" << num(f.left + slot * (static_cast<double>(g) + 0.5)) << "\" y=\""
        << num(f.top + f.height + 18) << "\" font-size=\"11\" text-anchor=\"middle\">"
        << escape(panel.categories[g]) << "</text>\n";
  }
}

void lines(std::ostringstream& out, const Panel& panel, const Frame& f) {
  for (std::size_t s = 0; s < panel.series.size(); ++s) {
    const auto& series = panel.series[s];
    out << "  <polyline class=\"series\" data-series=\"" << escape(series.name)
        << "\" fill=\"none\" stroke=\"" << kPalette[s % 4] << "\" stroke-dasharray=\""
        << (s == 0 ? "2,3" : "6,3") << "\" points=\"";
    for (std::size_t k = 0; k < series.x.size(); ++k) {
      if (k) out << ' ';
      out << num(f.px(series.x[k])) << ',' << num(f.py(series.y[k]));
    }
    out << "\"/>\n";
  }
  // x tick labels at the data positions of the first series
  if (!panel.series.empty()) {
    for (double x : panel.series.front().x) {
      out << "  <text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.top + f.height + 16)
          << "\" font-size=\"10\" text-anchor=\"middle\">" << round_trip(x) << "</text>\n";
    }
  }
}

}  // namespace

void validate(const PlotSpec& spec) {
  if (spec.panels.empty()) throw Error(Errc::invalid_parameter, "plot has no panels");
  for (const auto& panel : spec.panels) {
    if (panel.series.empty()) throw Error(Errc::invalid_parameter, "plot panel has no series");
    const std::size_t len = panel.series.front().y.size();
    for (const auto& s : panel.series) {
      if (s.x.size() != s.y.size() || s.y.size() != len) {
        throw Error(Errc::invalid_parameter, "plot series '" + s.name + "' has inconsistent length");
      }
      for (double y : s.y) {
        if (!(y >= 0.0 && y <= 1.0)) {
          throw Error(Errc::invalid_parameter, "plot series '" + s.name + "' leaves [0, 1]");
        }
      }
      if (panel.log_x && std::any_of(s.x.begin(), s.x.end(), [](double x) { return !(x > 0.0); })) {
        throw Error(Errc::invalid_parameter, "log-scale axis needs positive x values");
      }
    }
    if (spec.kind == PlotKind::grouped_bar && panel.categories.size() != len) {
      throw Error(Errc::invalid_parameter, "bar plot needs one category per value");
    }
  }
}

std::string render_svg(const PlotSpec& spec) {
  validate(spec);
  const double height = kPanelHeight * static_cast<double>(spec.panels.size()) + 30.0;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(height) << "\">\n";
  out << "  <title>" << escape(spec.title) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";
  for (std::size_t p = 0; p < spec.panels.size(); ++p) {
    const Panel& panel = spec.panels[p];
    Frame frame{kMarginLeft,
                30.0 + kPanelHeight * static_cast<double>(p) + kMarginTop,
                kWidth - kMarginLeft - kMarginRight,
                kPanelHeight - kMarginTop - kMarginBottom,
                0.0,
                1.0,
                panel.log_x};
    if (spec.kind == PlotKind::multi_line) {
      frame.x_min = panel.series.front().x.front();
      frame.x_max = panel.series.front().x.front();
      for (const auto& s : panel.series) {
        for (double x : s.x) {
          frame.x_min = std::min(frame.x_min, x);
          frame.x_max = std::max(frame.x_max, x);
        }
      }
    }
    out << " <g class=\"panel\">\n";
    axes(out, panel, frame);
    if (spec.kind == PlotKind::grouped_bar) bars(out, panel, frame);
    else lines(out, panel, frame);
    legend(out, panel, frame);
    out << " </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

PlotSpec prior_posterior_plot(const DiagnosticTest& test) {
  const auto update = posterior_from_test(test, TestResult::positive);
  Panel panel;
  panel.title = "Prior vs Posterior Probabilities of Disease Status";
  panel.x_label = "Hypothesis";
  panel.y_label = "Probability";
  panel.categories = {"Positive", "Negative"};
  panel.series = {{"Prior", {0, 1}, {update.prior, 1.0 - update.prior}},
                  {"Posterior", {0, 1}, {update.posterior, 1.0 - update.posterior}}};
  PlotSpec spec;
  spec.kind = PlotKind::grouped_bar;
  spec.title = "Updating beliefs after a positive test result";
  spec.panels.push_back(std::move(panel));
  return spec;
}

PlotSpec convergence_plot(const std::vector<ConvergenceCurve>& curves) {
  PlotSpec spec;
  spec.kind = PlotKind::multi_line;
  spec.title = "Test result probabilities as prior strength grows";
  for (const auto& c : curves) {
    Panel panel;
    panel.title = "Estimated test result probabilities (" + c.label + ")";
    panel.x_label = "Total number of patients (log scale)";
    panel.y_label = "P(TestResult | " + c.label + ")";
    panel.log_x = true;
    std::vector<double> negative;
    negative.reserve(c.values.size());
    for (double v : c.values) negative.push_back(1.0 - v);
    panel.series = {{"Positive", c.sample_sizes, c.values},
                    {"Negative", c.sample_sizes, std::move(negative)}};
    spec.panels.push_back(std::move(panel));
  }
  return spec;
}

}  // namespace bdt::io
