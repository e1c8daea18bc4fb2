#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "perfprof/dataset.hpp"
#include "perfprof/engine.hpp"

namespace perfprof {

/// A config resolved against a dataset. `config` is meaningful only when
/// `report.ok()`.
struct ConfigOutcome {
  AnalysisConfig config;
  ValidationReport report;
};

/// Scenario settings as they arrive on the command line. Labels are given by
/// removal; omitted baselines mean every solver.
struct ConfigFlags {
  std::vector<std::string> baselines;
  std::vector<std::string> drop_labels;
  std::vector<std::string> scales;  // "SOLVER/COMPONENT=FACTOR"
  std::optional<double> tau_min;
  std::optional<double> tau_max;
  std::optional<double> min_baseline;
  std::optional<double> unsolved;
  std::optional<std::string> x_scale;
};

ConfigOutcome config_from_flags(const Dataset& dataset, const ConfigFlags& flags);

/// Reads the request-body form of a config. Every field is optional; absent
/// fields take the defaults of default_config(). `unsolved_threshold: null`
/// disables the unsolved threshold. Issue paths are relative to the config
/// object.
ConfigOutcome config_from_json(const Dataset& dataset,
                               const nlohmann::ordered_json& node);

nlohmann::ordered_json config_to_json(const AnalysisConfig& config);

/// Flags reproducing `config` on the command line (without -i/-o/--format).
std::vector<std::string> config_to_arguments(const Dataset& dataset,
                                             const AnalysisConfig& config);

/// Splits "SOLVER/COMPONENT=FACTOR" against the dataset's names; solver and
/// component names may themselves contain '/' as long as the split is
/// unambiguous.
struct ScaleSpec {
  std::string solver;
  std::string component;
  double factor = 1.0;
};
std::optional<ScaleSpec> parse_scale_spec(const Dataset& dataset,
                                          std::string_view text,
                                          std::string& error);

/// Locale-independent full-string number parse ("inf" accepted).
std::optional<double> parse_number(std::string_view text);

}  // namespace perfprof
