#include "fixtures.hpp"

#include <cmath>
#include <stdexcept>

namespace perfprof::testing {

Dataset cars() {
  auto parsed = parse_dataset(kCarsJson);
  if (!parsed.dataset) throw std::logic_error(parsed.report.to_text());
  return *parsed.dataset;
}

Dataset random_dataset(std::mt19937_64& rng, const GenLimits& limits) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::uniform_real_distribution<double> value(0.0, 100.0);
  const bool integral = pick(0, 2) == 0;

  Dataset ds;
  ds.metric_name = "time";
  const auto n_labels = pick(0, limits.max_labels);
  for (std::size_t j = 0; j < n_labels; ++j) ds.labels.push_back("L" + std::to_string(j));
  const auto n_instances = pick(1, limits.max_instances);
  ds.instance_labels.resize(n_instances);
  for (auto& inst : ds.instance_labels)
    for (std::size_t j = 0; j < n_labels; ++j)
      if (pick(0, 2) == 0) inst.push_back(j);

  const auto n_solvers = pick(1, limits.max_solvers);
  for (std::size_t s = 0; s < n_solvers; ++s) {
    Solver solver{"S" + std::to_string(s), {}};
    const auto n_comp = pick(1, limits.max_components);
    for (std::size_t c = 0; c < n_comp; ++c) {
      Component comp{"c" + std::to_string(c), {}};
      for (std::size_t i = 0; i < n_instances; ++i) {
        double v = value(rng);
        comp.values.push_back(integral ? std::floor(v / 10.0) : v);
      }
      solver.components.push_back(std::move(comp));
    }
    ds.solvers.push_back(std::move(solver));
  }
  auto report = check_invariants(ds);
  if (!report.ok()) throw std::logic_error(report.to_text());
  return ds;
}

AnalysisConfig random_config(std::mt19937_64& rng, const Dataset& ds) {
  auto coin = [&] { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  AnalysisConfig config = default_config(ds);
  config.baselines.clear();
  for (const auto& s : ds.solvers)
    if (coin()) config.baselines.push_back(s.name);
  if (config.baselines.empty()) {
    auto k = std::uniform_int_distribution<std::size_t>(0, ds.solvers.size() - 1)(rng);
    config.baselines.push_back(ds.solvers[k].name);
  }
  config.active_labels.clear();
  for (const auto& l : ds.labels)
    if (std::uniform_int_distribution<int>(0, 3)(rng) != 0) config.active_labels.push_back(l);
  for (const auto& s : ds.solvers)
    for (const auto& c : s.components)
      if (coin()) config.scale_factors[{s.name, c.name}] = unit(rng);
  if (coin()) config.min_baseline_threshold = 30.0 * unit(rng);
  if (coin()) config.unsolved_threshold = 20.0 + 150.0 * unit(rng);
  return config;
}

AnalysisConfig plain_config(const Dataset& ds, std::vector<std::string> baselines) {
  auto config = default_config(ds);
  config.baselines = std::move(baselines);
  return config;
}

}  // namespace perfprof::testing
