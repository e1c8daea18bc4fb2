#include "perfprof/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "perfprof/format.hpp"

namespace perfprof {

namespace {

constexpr double kFocusShare = 0.7;
constexpr int kFocusTicks = 5;

double map_region(const AxisRegion& r, double tau) {
  double t = 0.0;
  if (r.logarithmic)
    t = (std::log10(tau) - std::log10(r.tau_lo)) /
        (std::log10(r.tau_hi) - std::log10(r.tau_lo));
  else
    t = (tau - r.tau_lo) / (r.tau_hi - r.tau_lo);
  return r.px_lo + t * (r.px_hi - r.px_lo);
}

double unmap_region(const AxisRegion& r, double px) {
  double t = (px - r.px_lo) / (r.px_hi - r.px_lo);
  if (r.logarithmic)
    return std::pow(10.0, std::log10(r.tau_lo) +
                              t * (std::log10(r.tau_hi) - std::log10(r.tau_lo)));
  return r.tau_lo + t * (r.tau_hi - r.tau_lo);
}

std::string point(double x, double y) { return format_g6(x) + "," + format_g6(y); }

}  // namespace

double PlotSpec::x_px(double tau) const {
  tau = std::clamp(tau, tau_lo(), tau_hi());
  for (const auto& r : x_regions)
    if (tau <= r.tau_hi) return map_region(r, tau);
  return map_region(x_regions.back(), tau);
}

double PlotSpec::y_px(double fraction) const {
  return plot_bottom - fraction * (plot_bottom - plot_top);
}

double PlotSpec::tau_at(double px) const {
  for (const auto& r : x_regions)
    if (px <= r.px_hi) return unmap_region(r, px);
  return unmap_region(x_regions.back(), px);
}

double PlotSpec::fraction_at(double px) const {
  return (plot_bottom - px) / (plot_bottom - plot_top);
}

const std::vector<std::string>& palette() {
  static const std::vector<std::string> colors = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors;
}

PlotSpec make_plot_spec(const ProfileSet& profiles, const AnalysisConfig& config) {
  PlotSpec spec;
  spec.legend_title = profiles.metric_name;
  for (std::size_t k = 0; k < profiles.curves.size(); ++k)
    spec.colors.push_back(palette()[k % palette().size()]);

  const double global_max = profiles.max_ratio.value_or(config.tau_max);
  const double left = spec.plot_left;
  const double right = spec.plot_right;

  if (config.x_scale == XScale::logarithmic) {
    spec.x_regions.push_back(
        {config.tau_min, std::max(global_max, config.tau_max), left, right, true});
  } else if (global_max > config.tau_max) {
    const double split = left + kFocusShare * (right - left);
    spec.x_regions.push_back({config.tau_min, config.tau_max, left, split, false});
    spec.x_regions.push_back({config.tau_max, global_max, split, right, false});
  } else {
    spec.x_regions.push_back({config.tau_min, config.tau_max, left, right, false});
  }
  return spec;
}

std::vector<std::pair<double, double>> step_vertices(const ProfileCurve& curve,
                                                     double tau_lo, double tau_hi) {
  std::vector<std::pair<double, double>> out;
  double level = evaluate_profile(curve, tau_lo);
  out.emplace_back(tau_lo, level);
  for (std::size_t k = 0; k < curve.tau.size(); ++k) {
    double b = curve.tau[k];
    if (b <= tau_lo) continue;
    if (b > tau_hi) break;
    out.emplace_back(b, level);
    level = curve.fraction[k];
    out.emplace_back(b, level);
  }
  if (out.back().first != tau_hi) out.emplace_back(tau_hi, level);
  return out;
}

std::string render_svg(const ProfileSet& profiles, const AnalysisConfig& config) {
  if (profiles.empty() || profiles.curves.empty())
    throw RenderError("nothing to plot");

  const auto spec = make_plot_spec(profiles, config);
  const std::string metric = xml_escape(profiles.metric_name);
  std::ostringstream os;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << spec.width << "\" height=\"" << spec.height << "\" viewBox=\"0 0 "
     << spec.width << ' ' << spec.height << "\" font-family=\"sans-serif\""
     << " font-size=\"12\">\n";
  os << "<title>" << metric << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
     << spec.height << "\" fill=\"#ffffff\"/>\n";

  // grid and y ticks
  os << "<g class=\"y-axis\" stroke=\"#dddddd\">\n";
  for (int k = 0; k <= 5; ++k) {
    double f = k / 5.0;
    double y = spec.y_px(f);
    os << "<line x1=\"" << format_g6(spec.plot_left) << "\" y1=\"" << format_g6(y)
       << "\" x2=\"" << format_g6(spec.plot_right) << "\" y2=\"" << format_g6(y)
       << "\"/>\n";
    os << "<text x=\"" << format_g6(spec.plot_left - 6) << "\" y=\""
       << format_g6(y + 4) << "\" text-anchor=\"end\" stroke=\"none\""
       << " fill=\"#000000\">" << format_g6(f) << "</text>\n";
  }
  os << "</g>\n";

  // x ticks
  std::vector<double> ticks;
  const auto& focus = spec.x_regions.front();
  for (int k = 0; k < kFocusTicks; ++k) {
    double t = static_cast<double>(k) / (kFocusTicks - 1);
    ticks.push_back(focus.logarithmic
                        ? std::pow(10.0, std::log10(focus.tau_lo) +
                                             t * (std::log10(focus.tau_hi) -
                                                  std::log10(focus.tau_lo)))
                        : focus.tau_lo + t * (focus.tau_hi - focus.tau_lo));
  }
  if (spec.x_regions.size() > 1) ticks.push_back(spec.x_regions.back().tau_hi);
  os << "<g class=\"x-axis\">\n";
  for (double t : ticks) {
    double x = spec.x_px(t);
    os << "<line x1=\"" << format_g6(x) << "\" y1=\"" << format_g6(spec.plot_bottom)
       << "\" x2=\"" << format_g6(x) << "\" y2=\"" << format_g6(spec.plot_bottom + 5)
       << "\" stroke=\"#000000\"/>\n";
    os << "<text x=\"" << format_g6(x) << "\" y=\"" << format_g6(spec.plot_bottom + 18)
       << "\" text-anchor=\"middle\">" << format_g6(t) << "</text>\n";
  }
  os << "</g>\n";

  if (spec.x_regions.size() > 1) {
    double x = spec.x_regions.front().px_hi;
    os << "<line class=\"region-divider\" x1=\"" << format_g6(x) << "\" y1=\""
       << format_g6(spec.plot_top) << "\" x2=\"" << format_g6(x) << "\" y2=\""
       << format_g6(spec.plot_bottom)
       << "\" stroke=\"#888888\" stroke-dasharray=\"4,3\"/>\n";
  }

  // frame
  os << "<rect x=\"" << format_g6(spec.plot_left) << "\" y=\""
     << format_g6(spec.plot_top) << "\" width=\""
     << format_g6(spec.plot_right - spec.plot_left) << "\" height=\""
     << format_g6(spec.plot_bottom - spec.plot_top)
     << "\" fill=\"none\" stroke=\"#000000\"/>\n";

  os << "<text x=\"" << format_g6((spec.plot_left + spec.plot_right) / 2) << "\" y=\""
     << format_g6(spec.plot_bottom + 40) << "\" text-anchor=\"middle\">"
     << "τ (" << metric << " ratio to best baseline"
     << (config.x_scale == XScale::logarithmic ? ", log scale" : "") << ")</text>\n";
  os << "<text transform=\"translate(" << format_g6(spec.plot_left - 45) << ","
     << format_g6((spec.plot_top + spec.plot_bottom) / 2)
     << ") rotate(-90)\" text-anchor=\"middle\">fraction of instances</text>\n";

  os << "<g class=\"curves\" fill=\"none\" stroke-width=\"2\">\n";
  for (std::size_t k = 0; k < profiles.curves.size(); ++k) {
    const auto& curve = profiles.curves[k];
    os << "<polyline class=\"curve\" data-solver=\"" << xml_escape(curve.solver)
       << "\" stroke=\"" << spec.colors[k] << "\" points=\"";
    bool first = true;
    for (const auto& [tau, f] : step_vertices(curve, spec.tau_lo(), spec.tau_hi())) {
      if (!first) os << ' ';
      first = false;
      os << point(spec.x_px(tau), spec.y_px(f));
    }
    os << "\"/>\n";
  }
  os << "</g>\n";

  const double lx = spec.plot_right + 20;
  os << "<g class=\"legend\">\n";
  os << "<text x=\"" << format_g6(lx) << "\" y=\"" << format_g6(spec.plot_top + 4)
     << "\" font-weight=\"bold\">" << metric << "</text>\n";
  for (std::size_t k = 0; k < profiles.curves.size(); ++k) {
    double y = spec.plot_top + 24 + 20.0 * static_cast<double>(k);
    os << "<line x1=\"" << format_g6(lx) << "\" y1=\"" << format_g6(y) << "\" x2=\""
       << format_g6(lx + 24) << "\" y2=\"" << format_g6(y) << "\" stroke=\""
       << spec.colors[k] << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << format_g6(lx + 30) << "\" y=\"" << format_g6(y + 4) << "\">"
       << xml_escape(profiles.curves[k].solver) << "</text>\n";
  }
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_html(std::string_view svg, std::string_view title) {
  std::string heading;
  if (title.empty()) {
    // already escaped inside the SVG
    auto open = svg.find("<title>");
    auto close = svg.find("</title>");
    if (open != std::string_view::npos && close != std::string_view::npos && close > open)
      heading = std::string(svg.substr(open + 7, close - open - 7));
  } else {
    heading = xml_escape(title);
  }

  std::string out;
  out.reserve(svg.size() + 256);
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\"/>\n";
  out += "<title>";
  out += heading;
  out += "</title>\n</head>\n<body>\n";
  out += svg;
  if (!svg.empty() && svg.back() != '\n') out += '\n';
  out += "</body>\n</html>\n";
  return out;
}

}  // namespace perfprof
