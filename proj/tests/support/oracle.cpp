#include "oracle.hpp"

#include <cmath>
#include <limits>

namespace perfprof::oracle {

namespace {

const double inf = std::numeric_limits<double>::infinity();

double raw_total(const Dataset& ds, const AnalysisConfig& config, const Solver& s,
                 std::size_t i) {
  double sum = 0.0;
  for (const auto& c : s.components) {
    double f = 1.0;
    for (const auto& [key, factor] : config.scale_factors)
      if (key.first == s.name && key.second == c.name) f = factor;
    sum += f * c.values[i];
  }
  return sum;
}

bool label_active(const AnalysisConfig& config, const std::string& label) {
  for (const auto& a : config.active_labels)
    if (a == label) return true;
  return false;
}

bool is_baseline(const AnalysisConfig& config, const std::string& name) {
  for (const auto& b : config.baselines)
    if (b == name) return true;
  return false;
}

double effective(const Dataset& ds, const AnalysisConfig& config, const Solver& s,
                 std::size_t i) {
  double t = raw_total(ds, config, s, i);
  return t > config.unsolved_threshold ? inf : t;
}

}  // namespace

std::vector<std::pair<std::size_t, double>> brute_force_ratios(
    const Dataset& ds, const AnalysisConfig& config, const std::string& solver) {
  std::vector<std::pair<std::size_t, double>> out;
  const Solver* target = nullptr;
  for (const auto& s : ds.solvers)
    if (s.name == solver) target = &s;
  if (!target) return out;

  for (std::size_t i = 0; i < ds.instance_labels.size(); ++i) {
    bool keep = true;
    for (auto j : ds.instance_labels[i])
      if (!label_active(config, ds.labels[j])) keep = false;
    if (!keep) continue;

    bool floor_ok = true;
    double best = inf;
    for (const auto& s : ds.solvers) {
      if (!is_baseline(config, s.name)) continue;
      if (raw_total(ds, config, s, i) < config.min_baseline_threshold) floor_ok = false;
      double e = effective(ds, config, s, i);
      if (e < best) best = e;
    }
    if (!floor_ok) continue;
    if (best == inf) continue;

    double m = effective(ds, config, *target, i);
    double r;
    if (m == inf)
      r = inf;
    else if (best == 0.0)
      r = (m == 0.0) ? 1.0 : inf;
    else
      r = m / best;
    out.emplace_back(i, r);
  }
  return out;
}

Fraction brute_force_count(const Dataset& ds, const AnalysisConfig& config,
                           const std::string& solver, double tau) {
  Fraction f;
  for (const auto& [i, r] : brute_force_ratios(ds, config, solver)) {
    ++f.denominator;
    if (r <= tau) ++f.count;
  }
  return f;
}

double brute_force_profile(const Dataset& ds, const AnalysisConfig& config,
                           const std::string& solver, double tau) {
  return brute_force_count(ds, config, solver, tau).value();
}

}  // namespace perfprof::oracle
