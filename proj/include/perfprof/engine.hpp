#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perfprof/dataset.hpp"

namespace perfprof {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class XScale { linear, logarithmic };

std::string_view to_string(XScale scale);
std::optional<XScale> parse_x_scale(std::string_view text);

/// (solver, component) -> multiplier. Absent pairs use 1.
using ScaleFactors = std::map<std::pair<std::string, std::string>, double>;

/// One what-if scenario over a dataset.
struct AnalysisConfig {
  std::vector<std::string> baselines;
  std::vector<std::string> active_labels;
  ScaleFactors scale_factors;
  double min_baseline_threshold = 0.0;     // 0 disables
  double unsolved_threshold = kInfinity;   // +inf disables
  double tau_min = 0.0;
  double tau_max = 2.0;
  XScale x_scale = XScale::linear;

  bool operator==(const AnalysisConfig&) const = default;
};

/// All solvers as baselines, all labels active, no scaling, no thresholds.
AnalysisConfig default_config(const Dataset& dataset);

/// Checks `config` against `dataset`. Issue paths are relative to the
/// config object (`baselines[0]`, `scale_factors/Car A/motor`, ...).
ValidationReport validate_config(const Dataset& dataset,
                                 const AnalysisConfig& config);

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Sum over the solver's components of factor * value. Throws
/// std::out_of_range for an unknown solver or instance.
double total_metric(const Dataset& dataset, const ScaleFactors& factors,
                    std::string_view solver, std::size_t instance);

/// Instances carrying no label outside `active_labels`, in original order.
/// Unlabelled instances are always kept.
std::vector<std::size_t> filter_by_labels(
    const Dataset& dataset, const std::vector<std::string>& active_labels);

/// Per (solver, kept instance) total metric after scaling and unsolved
/// marking. +inf marks an unsolved pair.
struct EffectiveMatrix {
  std::string metric_name;
  std::vector<std::string> solver_names;
  std::vector<std::size_t> kept_instances;
  std::vector<std::vector<double>> values;  // [solver][column]
};

// Individual pipeline stages. build_effective_matrix runs them in order:
// label filter, scaled totals, baseline floor, unsolved marking.

EffectiveMatrix scaled_totals(const Dataset& dataset,
                              const ScaleFactors& factors,
                              const std::vector<std::size_t>& instances);

/// Drops every column where some baseline is strictly below `threshold`.
void drop_below_baseline_floor(EffectiveMatrix& matrix,
                               const std::vector<std::size_t>& baselines,
                               double threshold);

/// Replaces every value strictly above `threshold` with +inf.
void mark_unsolved(EffectiveMatrix& matrix, double threshold);

/// Throws ConfigError when `config` does not validate against `dataset`.
EffectiveMatrix build_effective_matrix(const Dataset& dataset,
                                       const AnalysisConfig& config);

/// Right-continuous step function F(tau). `tau` holds the distinct finite
/// ratios attained by the solver in increasing order; `counts[k]` is the
/// number of instances with ratio <= tau[k].
struct ProfileCurve {
  std::string solver;
  std::vector<double> tau;
  std::vector<std::size_t> counts;
  std::vector<double> fraction;
  std::size_t denominator = 0;
  std::size_t solved = 0;  // instances with a finite ratio

  bool operator==(const ProfileCurve&) const = default;
};

struct ProfileSet {
  std::string metric_name;
  std::vector<ProfileCurve> curves;  // dataset solver order
  std::optional<double> max_ratio;   // largest finite ratio, if any
  std::size_t denominator = 0;
  std::size_t excluded_no_baseline = 0;
  std::vector<std::size_t> kept_instances;      // after label/floor filters
  std::vector<std::size_t> profiled_instances;  // kept minus excluded
  std::vector<std::vector<double>> ratios;      // [solver][profiled column]

  bool empty() const { return denominator == 0; }
  const ProfileCurve* curve(std::string_view solver) const;

  bool operator==(const ProfileSet&) const = default;
};

/// Ratio of `value` to the per-instance baseline minimum, with 0/0 = 1 and
/// positive/0 = +inf.
double performance_ratio(double value, double best_baseline);

/// Builds one curve per solver. `baselines` must name rows of `matrix`;
/// throws std::invalid_argument otherwise or when empty.
ProfileSet compute_profiles(const EffectiveMatrix& matrix,
                            const std::vector<std::string>& baselines);

/// Full pipeline. Throws ConfigError on an invalid config.
ProfileSet analyze(const Dataset& dataset, const AnalysisConfig& config);

/// Fraction of instances with ratio <= tau; 0 below the first breakpoint.
double evaluate_profile(const ProfileCurve& curve, double tau);

/// Same as evaluate_profile but returns the exact numerator.
std::size_t count_at(const ProfileCurve& curve, double tau);

}  // namespace perfprof
