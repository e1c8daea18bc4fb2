#include "perfprof/curve_json.hpp"

namespace perfprof {

nlohmann::ordered_json curves_to_json(const ProfileSet& profiles) {
  nlohmann::ordered_json doc;
  doc["metric"] = profiles.metric_name;
  if (profiles.max_ratio)
    doc["max_ratio"] = *profiles.max_ratio;
  else
    doc["max_ratio"] = nullptr;
  doc["denominator"] = profiles.denominator;
  doc["excluded_no_baseline"] = profiles.excluded_no_baseline;
  doc["kept_instances"] = profiles.kept_instances;
  auto curves = nlohmann::ordered_json::object();
  for (const auto& c : profiles.curves) {
    nlohmann::ordered_json entry;
    entry["tau"] = c.tau;
    entry["F"] = c.fraction;
    entry["solved"] = c.solved;
    curves[c.solver] = std::move(entry);
  }
  doc["curves"] = std::move(curves);
  return doc;
}

std::string curves_document(const ProfileSet& profiles) {
  return curves_to_json(profiles).dump(2) + "\n";
}

}  // namespace perfprof
