#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "perfprof/engine.hpp"

namespace perfprof {

/// A contiguous tau interval mapped onto a horizontal pixel span.
struct AxisRegion {
  double tau_lo = 0.0;
  double tau_hi = 1.0;
  double px_lo = 0.0;
  double px_hi = 1.0;
  bool logarithmic = false;
};

/// Resolved drawing parameters for one profile plot.
///
/// A linear axis has a focus region [tau_min, tau_max] over 70% of the plot
/// width and, when the largest finite ratio exceeds tau_max, a long-term
/// region (tau_max, max_ratio] over the remaining 30%. A logarithmic axis has
/// a single log10 region from tau_min up to the larger of max_ratio and
/// tau_max.
struct PlotSpec {
  int width = 800;
  int height = 500;
  double plot_left = 70;
  double plot_right = 610;
  double plot_top = 30;
  double plot_bottom = 440;
  std::vector<AxisRegion> x_regions;
  std::vector<std::string> colors;  // one per curve, dataset order
  std::string legend_title;

  double tau_lo() const { return x_regions.front().tau_lo; }
  double tau_hi() const { return x_regions.back().tau_hi; }
  /// Clamps tau into [tau_lo(), tau_hi()] before mapping.
  double x_px(double tau) const;
  double y_px(double fraction) const;
  /// Inverse of x_px on [plot_left, plot_right].
  double tau_at(double px) const;
  double fraction_at(double px) const;
};

/// The fixed qualitative palette; solver k gets entry k mod size.
const std::vector<std::string>& palette();

PlotSpec make_plot_spec(const ProfileSet& profiles, const AnalysisConfig& config);

/// Vertices of the step polyline for `curve` in tau/fraction space, clipped to
/// [tau_lo, tau_hi]. Every visible breakpoint appears as a vertex.
std::vector<std::pair<double, double>> step_vertices(const ProfileCurve& curve,
                                                     double tau_lo, double tau_hi);

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic SVG 1.1 document. Throws RenderError("nothing to plot") when
/// no instance survived filtering.
std::string render_svg(const ProfileSet& profiles, const AnalysisConfig& config);

/// Minimal standalone HTML5 page with `svg` inlined verbatim. An empty title
/// falls back to the SVG's <title>, which carries the metric name.
std::string render_html(std::string_view svg, std::string_view title);

}  // namespace perfprof
