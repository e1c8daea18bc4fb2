#include "perfprof/engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace perfprof {

namespace {

std::string at_index(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

std::vector<std::size_t> resolve_baselines(
    const std::vector<std::string>& solver_names,
    const std::vector<std::string>& baselines) {
  if (baselines.empty())
    throw std::invalid_argument("baseline set must not be empty");
  std::vector<std::size_t> out;
  for (const auto& name : baselines) {
    auto it = std::find(solver_names.begin(), solver_names.end(), name);
    if (it == solver_names.end())
      throw std::invalid_argument("unknown baseline solver '" + name + "'");
    out.push_back(static_cast<std::size_t>(it - solver_names.begin()));
  }
  return out;
}

}  // namespace

std::string_view to_string(XScale scale) {
  return scale == XScale::linear ? "linear" : "log";
}

std::optional<XScale> parse_x_scale(std::string_view text) {
  if (text == "linear") return XScale::linear;
  if (text == "log" || text == "logarithmic") return XScale::logarithmic;
  return std::nullopt;
}

ConfigError::ConfigError(ValidationReport report)
    : std::invalid_argument("invalid analysis configuration:\n" +
                            report.to_text()),
      report_(std::move(report)) {}

AnalysisConfig default_config(const Dataset& dataset) {
  AnalysisConfig config;
  for (const auto& s : dataset.solvers) config.baselines.push_back(s.name);
  config.active_labels = dataset.labels;
  return config;
}

ValidationReport validate_config(const Dataset& dataset,
                                 const AnalysisConfig& config) {
  ValidationReport r;

  if (config.baselines.empty())
    r.error("baselines", "at least one baseline solver is required");
  std::set<std::string> seen;
  for (std::size_t k = 0; k < config.baselines.size(); ++k) {
    const auto& name = config.baselines[k];
    if (!dataset.solver_index(name))
      r.error(at_index("baselines", k), "unknown solver '" + name + "'");
    else if (!seen.insert(name).second)
      r.error(at_index("baselines", k), "duplicate baseline '" + name + "'");
  }

  for (std::size_t k = 0; k < config.active_labels.size(); ++k) {
    const auto& name = config.active_labels[k];
    if (!dataset.label_index(name))
      r.error(at_index("active_labels", k), "unknown label '" + name + "'");
  }

  for (const auto& [key, factor] : config.scale_factors) {
    const auto& [solver, component] = key;
    auto s = dataset.solver_index(solver);
    if (!s) {
      r.error("scale_factors/" + solver, "unknown solver '" + solver + "'");
      continue;
    }
    auto path = "scale_factors/" + solver + "/" + component;
    if (!dataset.component_index(*s, component))
      r.error(path, "unknown component '" + component + "' of solver '" + solver + "'");
    else if (!std::isfinite(factor) || factor < 0)
      r.error(path, "scale factor must be a finite non-negative number");
  }

  if (!std::isfinite(config.min_baseline_threshold) ||
      config.min_baseline_threshold < 0)
    r.error("min_baseline_threshold", "must be a finite number >= 0");
  if (std::isnan(config.unsolved_threshold) || config.unsolved_threshold <= 0)
    r.error("unsolved_threshold", "must be > 0 (or infinite to disable)");
  if (!std::isfinite(config.tau_min) || config.tau_min < 0)
    r.error("tau_min", "must be a finite number >= 0");
  if (!std::isfinite(config.tau_max))
    r.error("tau_max", "must be finite");
  else if (config.tau_max <= config.tau_min)
    r.error("tau_max", "must be greater than tau_min");
  if (config.x_scale == XScale::logarithmic && !(config.tau_min > 0))
    r.error("tau_min", "must be > 0 on a logarithmic axis");

  return r;
}

double total_metric(const Dataset& dataset, const ScaleFactors& factors,
                    std::string_view solver, std::size_t instance) {
  auto s = dataset.solver_index(solver);
  if (!s) throw std::out_of_range("unknown solver '" + std::string(solver) + "'");
  if (instance >= dataset.instance_count())
    throw std::out_of_range("instance " + std::to_string(instance) + " out of range");
  double total = 0.0;
  for (const auto& comp : dataset.solvers[*s].components) {
    auto it = factors.find({dataset.solvers[*s].name, comp.name});
    double factor = it == factors.end() ? 1.0 : it->second;
    total += factor * comp.values[instance];
  }
  return total;
}

std::vector<std::size_t> filter_by_labels(
    const Dataset& dataset, const std::vector<std::string>& active_labels) {
  std::vector<bool> active(dataset.labels.size(), false);
  for (const auto& name : active_labels)
    if (auto j = dataset.label_index(name)) active[*j] = true;

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < dataset.instance_count(); ++i) {
    const auto& labels = dataset.instance_labels[i];
    bool keep = std::all_of(labels.begin(), labels.end(),
                            [&](std::size_t j) { return active[j]; });
    if (keep) kept.push_back(i);
  }
  return kept;
}

EffectiveMatrix scaled_totals(const Dataset& dataset,
                              const ScaleFactors& factors,
                              const std::vector<std::size_t>& instances) {
  EffectiveMatrix m;
  m.metric_name = dataset.metric_name;
  m.kept_instances = instances;
  for (const auto& solver : dataset.solvers) {
    m.solver_names.push_back(solver.name);
    std::vector<double> row;
    row.reserve(instances.size());
    for (auto i : instances) row.push_back(total_metric(dataset, factors, solver.name, i));
    m.values.push_back(std::move(row));
  }
  return m;
}

void drop_below_baseline_floor(EffectiveMatrix& matrix,
                               const std::vector<std::size_t>& baselines,
                               double threshold) {
  const std::size_t cols = matrix.kept_instances.size();
  std::vector<bool> keep(cols, true);
  for (std::size_t c = 0; c < cols; ++c)
    for (auto b : baselines)
      if (matrix.values.at(b)[c] < threshold) keep[c] = false;

  std::vector<std::size_t> instances;
  for (std::size_t c = 0; c < cols; ++c)
    if (keep[c]) instances.push_back(matrix.kept_instances[c]);
  for (auto& row : matrix.values) {
    std::vector<double> filtered;
    filtered.reserve(instances.size());
    for (std::size_t c = 0; c < cols; ++c)
      if (keep[c]) filtered.push_back(row[c]);
    row = std::move(filtered);
  }
  matrix.kept_instances = std::move(instances);
}

void mark_unsolved(EffectiveMatrix& matrix, double threshold) {
  for (auto& row : matrix.values)
    for (auto& v : row)
      if (v > threshold) v = kInfinity;
}

EffectiveMatrix build_effective_matrix(const Dataset& dataset,
                                       const AnalysisConfig& config) {
  if (auto report = validate_config(dataset, config); !report.ok())
    throw ConfigError(std::move(report));

  auto instances = filter_by_labels(dataset, config.active_labels);
  auto matrix = scaled_totals(dataset, config.scale_factors, instances);
  drop_below_baseline_floor(
      matrix, resolve_baselines(matrix.solver_names, config.baselines),
      config.min_baseline_threshold);
  mark_unsolved(matrix, config.unsolved_threshold);
  return matrix;
}

double performance_ratio(double value, double best_baseline) {
  if (std::isinf(value)) return kInfinity;
  if (best_baseline == 0.0) return value == 0.0 ? 1.0 : kInfinity;
  return value / best_baseline;
}

const ProfileCurve* ProfileSet::curve(std::string_view solver) const {
  for (const auto& c : curves)
    if (c.solver == solver) return &c;
  return nullptr;
}

ProfileSet compute_profiles(const EffectiveMatrix& matrix,
                            const std::vector<std::string>& baselines) {
  const auto base = resolve_baselines(matrix.solver_names, baselines);
  const std::size_t cols = matrix.kept_instances.size();

  ProfileSet out;
  out.metric_name = matrix.metric_name;
  out.kept_instances = matrix.kept_instances;

  std::vector<double> best;
  std::vector<std::size_t> columns;
  for (std::size_t c = 0; c < cols; ++c) {
    double d = kInfinity;
    for (auto b : base) d = std::min(d, matrix.values[b][c]);
    if (std::isinf(d)) {
      ++out.excluded_no_baseline;
      continue;
    }
    best.push_back(d);
    columns.push_back(c);
    out.profiled_instances.push_back(matrix.kept_instances[c]);
  }
  out.denominator = columns.size();

  for (std::size_t s = 0; s < matrix.solver_names.size(); ++s) {
    std::vector<double> row;
    row.reserve(columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k)
      row.push_back(performance_ratio(matrix.values[s][columns[k]], best[k]));

    std::vector<double> finite;
    for (double r : row)
      if (std::isfinite(r)) finite.push_back(r);
    std::sort(finite.begin(), finite.end());

    ProfileCurve curve;
    curve.solver = matrix.solver_names[s];
    curve.denominator = out.denominator;
    curve.solved = finite.size();
    for (std::size_t k = 0; k < finite.size(); ++k) {
      // equal ratios collapse into one step
      if (k + 1 < finite.size() && finite[k + 1] == finite[k]) continue;
      curve.tau.push_back(finite[k]);
      curve.counts.push_back(k + 1);
      curve.fraction.push_back(static_cast<double>(k + 1) /
                               static_cast<double>(out.denominator));
    }
    if (!finite.empty())
      out.max_ratio = std::max(out.max_ratio.value_or(finite.back()), finite.back());

    out.curves.push_back(std::move(curve));
    out.ratios.push_back(std::move(row));
  }
  return out;
}

ProfileSet analyze(const Dataset& dataset, const AnalysisConfig& config) {
  return compute_profiles(build_effective_matrix(dataset, config),
                          config.baselines);
}

std::size_t count_at(const ProfileCurve& curve, double tau) {
  auto it = std::upper_bound(curve.tau.begin(), curve.tau.end(), tau);
  if (it == curve.tau.begin()) return 0;
  return curve.counts[static_cast<std::size_t>(it - curve.tau.begin()) - 1];
}

double evaluate_profile(const ProfileCurve& curve, double tau) {
  if (curve.denominator == 0) return 0.0;
  return static_cast<double>(count_at(curve, tau)) /
         static_cast<double>(curve.denominator);
}

}  // namespace perfprof
