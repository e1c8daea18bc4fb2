#include "perfprof/config_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "perfprof/format.hpp"

namespace perfprof {

using Json = nlohmann::ordered_json;

std::optional<double> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<ScaleSpec> parse_scale_spec(const Dataset& dataset,
                                          std::string_view text,
                                          std::string& error) {
  auto eq = text.rfind('=');
  if (eq == std::string_view::npos) {
    error = "expected SOLVER/COMPONENT=FACTOR";
    return std::nullopt;
  }
  auto factor = parse_number(text.substr(eq + 1));
  if (!factor) {
    error = "invalid factor '" + std::string(text.substr(eq + 1)) + "'";
    return std::nullopt;
  }
  auto target = text.substr(0, eq);

  std::vector<ScaleSpec> matches;
  bool any_solver = false;
  for (auto slash = target.find('/'); slash != std::string_view::npos;
       slash = target.find('/', slash + 1)) {
    auto solver = target.substr(0, slash);
    auto component = target.substr(slash + 1);
    auto s = dataset.solver_index(solver);
    if (!s) continue;
    any_solver = true;
    if (dataset.component_index(*s, component))
      matches.push_back({std::string(solver), std::string(component), *factor});
  }
  if (matches.size() == 1) return matches.front();
  if (matches.size() > 1)
    error = "ambiguous target '" + std::string(target) + "'";
  else if (target.find('/') == std::string_view::npos)
    error = "expected SOLVER/COMPONENT=FACTOR";
  else if (any_solver)
    error = "unknown component in '" + std::string(target) + "'";
  else
    error = "unknown solver in '" + std::string(target) + "'";
  return std::nullopt;
}

ConfigOutcome config_from_flags(const Dataset& dataset, const ConfigFlags& flags) {
  ConfigOutcome out;
  auto& config = out.config;
  config = default_config(dataset);

  if (!flags.baselines.empty()) config.baselines = flags.baselines;

  for (std::size_t k = 0; k < flags.drop_labels.size(); ++k) {
    const auto& name = flags.drop_labels[k];
    if (!dataset.label_index(name)) {
      out.report.error("--drop-label", "unknown label '" + name + "'");
      continue;
    }
    std::erase(config.active_labels, name);
  }

  for (const auto& text : flags.scales) {
    std::string error;
    auto spec = parse_scale_spec(dataset, text, error);
    if (!spec) {
      out.report.error("--scale", error);
      continue;
    }
    config.scale_factors[{spec->solver, spec->component}] = spec->factor;
  }

  if (flags.tau_min) config.tau_min = *flags.tau_min;
  if (flags.tau_max) config.tau_max = *flags.tau_max;
  if (flags.min_baseline) config.min_baseline_threshold = *flags.min_baseline;
  if (flags.unsolved) config.unsolved_threshold = *flags.unsolved;
  if (flags.x_scale) {
    auto scale = parse_x_scale(*flags.x_scale);
    if (!scale)
      out.report.error("--x-scale", "expected 'linear' or 'log'");
    else
      config.x_scale = *scale;
  }

  out.report.merge(validate_config(dataset, config));
  return out;
}

namespace {

void read_names(const Json& node, std::string_view key,
                std::vector<std::string>& target, ValidationReport& report) {
  if (!node.is_array()) {
    report.error(std::string(key), "expected an array of strings");
    return;
  }
  target.clear();
  for (std::size_t k = 0; k < node.size(); ++k) {
    if (!node[k].is_string()) {
      report.error(std::string(key) + "[" + std::to_string(k) + "]", "expected a string");
      continue;
    }
    target.push_back(node[k].get<std::string>());
  }
}

void read_number(const Json& node, std::string_view key, double& target,
                 ValidationReport& report) {
  if (!node.is_number()) {
    report.error(std::string(key), "expected a number");
    return;
  }
  target = node.get<double>();
}

}  // namespace

ConfigOutcome config_from_json(const Dataset& dataset, const Json& node) {
  ConfigOutcome out;
  auto& config = out.config;
  auto& report = out.report;
  config = default_config(dataset);

  if (node.is_null()) return out;
  if (!node.is_object()) {
    report.error("", "expected an object");
    return out;
  }

  for (const auto& [key, value] : node.items()) {
    if (key == "baselines") {
      read_names(value, key, config.baselines, report);
    } else if (key == "active_labels") {
      read_names(value, key, config.active_labels, report);
    } else if (key == "scale_factors") {
      if (!value.is_object()) {
        report.error(key, "expected an object: solver -> component -> factor");
        continue;
      }
      for (const auto& [solver, comps] : value.items()) {
        if (!comps.is_object()) {
          report.error(key + "/" + solver, "expected an object: component -> factor");
          continue;
        }
        for (const auto& [component, factor] : comps.items()) {
          if (!factor.is_number()) {
            report.error(key + "/" + solver + "/" + component, "expected a number");
            continue;
          }
          config.scale_factors[{solver, component}] = factor.get<double>();
        }
      }
    } else if (key == "min_baseline_threshold") {
      read_number(value, key, config.min_baseline_threshold, report);
    } else if (key == "unsolved_threshold") {
      if (value.is_null())
        config.unsolved_threshold = kInfinity;
      else
        read_number(value, key, config.unsolved_threshold, report);
    } else if (key == "tau_min") {
      read_number(value, key, config.tau_min, report);
    } else if (key == "tau_max") {
      read_number(value, key, config.tau_max, report);
    } else if (key == "x_scale") {
      auto scale = value.is_string() ? parse_x_scale(value.get<std::string>())
                                     : std::nullopt;
      if (!scale)
        report.error(key, "expected 'linear' or 'log'");
      else
        config.x_scale = *scale;
    } else {
      report.error(key, "unknown config field");
    }
  }

  if (report.ok()) report.merge(validate_config(dataset, config));
  return out;
}

Json config_to_json(const AnalysisConfig& config) {
  Json j;
  j["baselines"] = config.baselines;
  j["active_labels"] = config.active_labels;
  Json scales = Json::object();
  for (const auto& [key, factor] : config.scale_factors)
    scales[key.first][key.second] = factor;
  j["scale_factors"] = std::move(scales);
  j["min_baseline_threshold"] = config.min_baseline_threshold;
  if (std::isinf(config.unsolved_threshold))
    j["unsolved_threshold"] = nullptr;
  else
    j["unsolved_threshold"] = config.unsolved_threshold;
  j["tau_min"] = config.tau_min;
  j["tau_max"] = config.tau_max;
  j["x_scale"] = std::string(to_string(config.x_scale));
  return j;
}

std::vector<std::string> config_to_arguments(const Dataset& dataset,
                                             const AnalysisConfig& config) {
  std::vector<std::string> args;
  auto all = default_config(dataset);
  if (config.baselines != all.baselines)
    for (const auto& b : config.baselines) args.insert(args.end(), {"--baseline", b});
  for (const auto& label : dataset.labels)
    if (std::find(config.active_labels.begin(), config.active_labels.end(), label) ==
        config.active_labels.end())
      args.insert(args.end(), {"--drop-label", label});
  for (const auto& [key, factor] : config.scale_factors)
    args.insert(args.end(),
                {"--scale", key.first + "/" + key.second + "=" + format_exact(factor)});
  auto number = [&](const char* flag, double value, double fallback) {
    if (value != fallback) args.insert(args.end(), {flag, format_exact(value)});
  };
  number("--tau-min", config.tau_min, all.tau_min);
  number("--tau-max", config.tau_max, all.tau_max);
  number("--min-baseline", config.min_baseline_threshold, all.min_baseline_threshold);
  number("--unsolved", config.unsolved_threshold, all.unsolved_threshold);
  if (config.x_scale != all.x_scale)
    args.insert(args.end(), {"--x-scale", std::string(to_string(config.x_scale))});
  return args;
}

}  // namespace perfprof
