#include <cmath>
#include <random>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "perfprof/format.hpp"
#include "perfprof/render.hpp"
#include "support/fixtures.hpp"

using namespace perfprof;
using perfprof::testing::cars;

namespace {

struct Polyline {
  std::string solver;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

std::vector<Polyline> polylines(const std::string& svg) {
  static const std::regex re(
      R"re(<polyline class="curve" data-solver="([^"]*)" stroke="([^"]*)" points="([^"]*)"/>)re");
  std::vector<Polyline> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator();
       ++it) {
    Polyline p{(*it)[1], (*it)[2], {}};
    std::istringstream pts((*it)[3]);
    std::string pair;
    while (pts >> pair) {
      auto comma = pair.find(',');
      p.points.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("car plot uses a split linear axis from 0 to 2 and 2 to 12") {
  const auto ds = cars();
  const auto config = default_config(ds);
  const auto p = analyze(ds, config);
  const auto spec = make_plot_spec(p, config);
  REQUIRE(spec.x_regions.size() == 2);
  CHECK(spec.x_regions[0].tau_lo == 0.0);
  CHECK(spec.x_regions[0].tau_hi == 2.0);
  CHECK(spec.x_regions[1].tau_lo == 2.0);
  CHECK(spec.x_regions[1].tau_hi == 12.0);
  const double width = spec.plot_right - spec.plot_left;
  CHECK(spec.x_regions[0].px_hi - spec.x_regions[0].px_lo == doctest::Approx(0.7 * width));
  CHECK(spec.x_regions[1].px_hi - spec.x_regions[1].px_lo == doctest::Approx(0.3 * width));
  CHECK(spec.x_px(2.0) == doctest::Approx(spec.x_regions[0].px_hi));
  CHECK(spec.x_px(12.0) == doctest::Approx(spec.plot_right));
  CHECK(spec.x_px(7.0) == doctest::Approx(spec.x_regions[1].px_lo + 0.5 * 0.3 * width));

  const auto svg = render_svg(p, config);
  CHECK(count(svg, "class=\"region-divider\"") == 1);
  CHECK(svg.find(">12</text>") != std::string::npos);
  CHECK(svg.find("<title>time</title>") != std::string::npos);
}

TEST_CASE("no long-term region when the largest ratio fits the focus window") {
  const auto ds = cars();
  auto config = default_config(ds);
  config.tau_max = 20;
  const auto p = analyze(ds, config);
  const auto spec = make_plot_spec(p, config);
  REQUIRE(spec.x_regions.size() == 1);
  CHECK(spec.x_regions[0].tau_hi == 20.0);
  CHECK(render_svg(p, config).find("region-divider") == std::string::npos);
}

TEST_CASE("degenerate single-instance profile is one step at tau=1") {
  Dataset ds;
  ds.metric_name = "time";
  ds.instance_labels = {{}};
  ds.solvers = {{"only", {{"t", {3.0}}}}};
  const auto config = default_config(ds);
  const auto svg = render_svg(analyze(ds, config), config);
  auto lines = polylines(svg);
  REQUIRE(lines.size() == 1);
  const std::vector<std::pair<double, double>> expected = {
      {70, 440}, {340, 440}, {340, 30}, {610, 30}};
  CHECK(lines[0].points == expected);
}

TEST_CASE("rendering is deterministic") {
  const auto ds = cars();
  const auto config = default_config(ds);
  CHECK(render_svg(analyze(ds, config), config) == render_svg(analyze(ds, config), config));
}

TEST_CASE("logarithmic axis is a single log10 region") {
  const auto ds = cars();
  auto config = default_config(ds);
  config.x_scale = XScale::logarithmic;
  config.tau_min = 0.5;
  const auto p = analyze(ds, config);
  const auto spec = make_plot_spec(p, config);
  REQUIRE(spec.x_regions.size() == 1);
  CHECK(spec.x_regions[0].logarithmic);
  CHECK(spec.x_regions[0].tau_hi == 12.0);
  const double mid = std::sqrt(0.5 * 12.0);
  CHECK(spec.x_px(mid) == doctest::Approx((spec.plot_left + spec.plot_right) / 2));
  CHECK(spec.tau_at(spec.x_px(3.0)) == doctest::Approx(3.0));
}

TEST_CASE("polylines pass through every visible breakpoint") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ds = perfprof::testing::random_dataset(rng);
    auto config = perfprof::testing::random_config(rng, ds);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    config.tau_min = trial % 3 == 0 ? 0.0 : 0.2 + u(rng);
    config.tau_max = config.tau_min + 0.5 + 3.0 * u(rng);
    config.x_scale = (trial % 2 == 1 && config.tau_min > 0) ? XScale::logarithmic : XScale::linear;
    const auto p = analyze(ds, config);
    if (p.empty()) {
      CHECK_THROWS_WITH_AS(render_svg(p, config), "nothing to plot", RenderError);
      continue;
    }
    const auto spec = make_plot_spec(p, config);
    const auto lines = polylines(render_svg(p, config));
    REQUIRE(lines.size() == p.curves.size());
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const auto& curve = p.curves[k];
      CHECK(lines[k].solver == curve.solver);
      for (std::size_t b = 0; b < curve.tau.size(); ++b) {
        double tau = curve.tau[b];
        if (tau < spec.tau_lo() || tau > spec.tau_hi()) continue;
        bool found = false;
        for (const auto& [x, y] : lines[k].points) {
          // invert the axis transform and compare in pixel space
          double back_tau = spec.tau_at(x);
          double back_f = spec.fraction_at(y);
          if (std::fabs(spec.x_px(back_tau) - spec.x_px(tau)) <= 0.5 &&
              std::fabs(spec.y_px(back_f) - spec.y_px(curve.fraction[b])) <= 0.5)
            found = true;
        }
        CAPTURE(tau);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("legend and palette follow solver order") {
  std::mt19937_64 rng(9);
  testing::GenLimits limits;
  limits.max_solvers = 12;
  Dataset ds;
  do {
    ds = testing::random_dataset(rng, limits);
  } while (ds.solvers.size() < 12);
  const auto config = default_config(ds);
  const auto svg = render_svg(analyze(ds, config), config);
  const auto lines = polylines(svg);
  REQUIRE(lines.size() == 12);
  for (std::size_t k = 0; k < 12; ++k) CHECK(lines[k].color == palette()[k % 10]);
  auto legend = svg.substr(svg.find("<g class=\"legend\">"));
  CHECK(count(legend, "<line ") == 12);
  for (const auto& s : ds.solvers) CHECK(legend.find(">" + s.name + "</text>") != std::string::npos);
}

TEST_CASE("names are escaped") {
  Dataset ds;
  ds.metric_name = "t<&>";
  ds.instance_labels = {{}};
  ds.solvers = {{"a\"<b>&'c", {{"t", {1.0}}}}};
  const auto config = default_config(ds);
  const auto svg = render_svg(analyze(ds, config), config);
  CHECK(svg.find("a&quot;&lt;b&gt;&amp;&#39;c") != std::string::npos);
  CHECK(svg.find("<title>t&lt;&amp;&gt;</title>") != std::string::npos);
  CHECK(svg.find("a\"<b>") == std::string::npos);
}

TEST_CASE("empty profile set has nothing to plot") {
  const auto ds = cars();
  auto config = default_config(ds);
  config.active_labels = {};
  CHECK_THROWS_WITH_AS(render_svg(analyze(ds, config), config), "nothing to plot", RenderError);
}

TEST_CASE("html wraps the svg verbatim") {
  const auto ds = cars();
  const auto config = default_config(ds);
  const auto svg = render_svg(analyze(ds, config), config);
  const auto html = render_html(svg, "Cars & co");
  CHECK(html.rfind("<!DOCTYPE html>", 0) == 0);
  auto body = html.find("<body>");
  REQUIRE(body != std::string::npos);
  CHECK(html.find(svg) > body);
  CHECK(html.find("<title>Cars &amp; co</title>") != std::string::npos);
  CHECK(html.find("http") == html.find("http://www.w3.org/2000/svg"));
  CHECK(render_html(svg, "").find("<title>time</title>") != std::string::npos);
}

TEST_CASE("number formatting") {
  CHECK(format_g6(0.0) == "0");
  CHECK(format_g6(-0.0) == "0");
  CHECK(format_g6(448.0) == "448");
  CHECK(format_g6(1.0 / 3.0) == "0.333333");
  CHECK(format_g6(123456789.0) == "1.23457e+08");
  CHECK(format_exact(0.1) == "0.1");
  CHECK(format_exact(12.0) == "12");
  CHECK(xml_escape("<&>") == "&lt;&amp;&gt;");
}
