#include "perfprof/dataset.hpp"
#include "perfprof/json_util.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace perfprof {

using Json = nlohmann::ordered_json;

namespace {

std::string index_path(std::string_view base, std::size_t i) {
  std::string out(base);
  out += '[';
  out += std::to_string(i);
  out += ']';
  return out;
}

std::string join_path(std::string_view base, std::string_view key) {
  if (base.empty()) return std::string(key);
  std::string out(base);
  out += '/';
  out += key;
  return out;
}

// Tracks object keys while parsing so duplicated solver or component names
// can be reported; the DOM silently keeps only the last value.
class DuplicateKeyTracker {
 public:
  explicit DuplicateKeyTracker(ValidationReport& report) : report_(report) {}

  bool operator()(int /*depth*/, nlohmann::detail::parse_event_t event,
                  Json& parsed) {
    using Event = nlohmann::detail::parse_event_t;
    switch (event) {
      case Event::object_start:
        frames_.push_back({});
        break;
      case Event::object_end:
        if (!frames_.empty()) frames_.pop_back();
        break;
      case Event::key: {
        if (frames_.empty()) break;
        auto& top = frames_.back();
        top.current = parsed.get<std::string>();
        if (!top.seen.insert(top.current).second) {
          report_.error(current_path(), "duplicate key '" + top.current + "'");
        }
        break;
      }
      default:
        break;
    }
    return true;
  }

 private:
  struct Frame {
    std::set<std::string> seen;
    std::string current;
  };

  std::string current_path() const {
    std::string out;
    for (const auto& f : frames_) out = join_path(out, f.current);
    return out;
  }

  ValidationReport& report_;
  std::vector<Frame> frames_;
};

bool integral_index(const Json& v, std::size_t& out) {
  if (v.is_number_unsigned()) {
    out = v.get<std::uint64_t>();
    return true;
  }
  if (v.is_number_integer()) {
    auto i = v.get<std::int64_t>();
    if (i < 0) return false;
    out = static_cast<std::size_t>(i);
    return true;
  }
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (!std::isfinite(d) || d < 0 || std::floor(d) != d || d > 1e15) return false;
    out = static_cast<std::size_t>(d);
    return true;
  }
  return false;
}

void parse_labels(const Json& node, Dataset& ds, ValidationReport& report,
                  bool& labels_ok) {
  labels_ok = false;
  if (!node.is_array()) {
    report.error("labels", "expected an array of strings");
    return;
  }
  labels_ok = true;
  std::set<std::string> seen;
  for (std::size_t j = 0; j < node.size(); ++j) {
    const auto& v = node[j];
    if (!v.is_string()) {
      report.error(index_path("labels", j), "label must be a string");
      labels_ok = false;
      continue;
    }
    auto s = v.get<std::string>();
    if (!seen.insert(s).second) {
      report.error(index_path("labels", j), "duplicate label '" + s + "'");
      labels_ok = false;
    }
    ds.labels.push_back(std::move(s));
  }
}

void parse_instances(const Json& node, Dataset& ds, ValidationReport& report,
                     bool labels_ok, bool& instances_ok) {
  instances_ok = false;
  if (!node.is_array()) {
    report.error("instances", "expected an array of label-index arrays");
    return;
  }
  if (node.empty()) {
    report.error("instances", "at least one instance is required");
    return;
  }
  // The instance count is known from here on, even if some entries are bad.
  instances_ok = true;
  ds.instance_labels.resize(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto& inst = node[i];
    auto ipath = index_path("instances", i);
    if (!inst.is_array()) {
      report.error(ipath, "expected an array of label indices");
      continue;
    }
    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < inst.size(); ++k) {
      std::size_t idx = 0;
      auto kpath = index_path(ipath, k);
      if (!integral_index(inst[k], idx)) {
        report.error(kpath, "label index must be a non-negative integer");
        continue;
      }
      if (labels_ok && idx >= ds.labels.size()) {
        report.error(kpath, "label index " + std::to_string(idx) +
                                " out of range for " +
                                std::to_string(ds.labels.size()) + " labels");
        continue;
      }
      if (!seen.insert(idx).second) {
        report.error(kpath, "duplicate label index " + std::to_string(idx));
        continue;
      }
      ds.instance_labels[i].push_back(idx);
    }
  }
}

void parse_data(const Json& node, Dataset& ds, ValidationReport& report,
                bool instances_ok) {
  if (!node.is_object()) {
    report.error("data", "expected an object mapping solver names to components");
    return;
  }
  if (node.empty()) {
    report.error("data", "at least one solver is required");
    return;
  }
  for (const auto& [solver_name, solver_node] : node.items()) {
    auto spath = join_path("data", solver_name);
    if (!solver_node.is_object()) {
      report.error(spath, "expected an object mapping component names to arrays");
      continue;
    }
    if (solver_node.empty()) {
      report.error(spath, "solver must have at least one component");
      continue;
    }
    Solver solver{solver_name, {}};
    for (const auto& [comp_name, comp_node] : solver_node.items()) {
      auto cpath = join_path(spath, comp_name);
      if (!comp_node.is_array()) {
        report.error(cpath, "expected an array of metric values");
        continue;
      }
      if (instances_ok && comp_node.size() != ds.instance_count()) {
        report.error(cpath, "length " + std::to_string(comp_node.size()) +
                                " does not match instance count " +
                                std::to_string(ds.instance_count()));
      }
      Component comp{comp_name, {}};
      comp.values.reserve(comp_node.size());
      for (std::size_t i = 0; i < comp_node.size(); ++i) {
        const auto& v = comp_node[i];
        if (!v.is_number()) {
          report.error(index_path(cpath, i), "metric value must be a number");
          comp.values.push_back(0.0);
          continue;
        }
        double d = v.get<double>();
        if (!std::isfinite(d)) {
          report.error(index_path(cpath, i), "metric value must be finite");
        } else if (d < 0) {
          report.error(index_path(cpath, i), "metric value must be non-negative");
        }
        comp.values.push_back(d);
      }
      solver.components.push_back(std::move(comp));
    }
    ds.solvers.push_back(std::move(solver));
  }
}

}  // namespace

void ValidationReport::merge(const ValidationReport& other,
                             std::string_view prefix) {
  auto fix = [&](const Issue& is) {
    if (prefix.empty()) return is;
    if (is.path.empty()) return Issue{std::string(prefix), is.message};
    return Issue{join_path(prefix, is.path), is.message};
  };
  for (const auto& e : other.errors) errors.push_back(fix(e));
  for (const auto& w : other.warnings) warnings.push_back(fix(w));
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  auto line = [&](std::string_view kind, const Issue& is) {
    os << kind << ": " << (is.path.empty() ? "(document)" : is.path) << ": "
       << is.message << '\n';
  };
  for (const auto& e : errors) line("error", e);
  for (const auto& w : warnings) line("warning", w);
  return os.str();
}

std::optional<std::size_t> Dataset::solver_index(std::string_view name) const {
  for (std::size_t s = 0; s < solvers.size(); ++s)
    if (solvers[s].name == name) return s;
  return std::nullopt;
}

std::optional<std::size_t> Dataset::component_index(std::size_t solver,
                                                    std::string_view name) const {
  const auto& comps = solvers.at(solver).components;
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (comps[c].name == name) return c;
  return std::nullopt;
}

std::optional<std::size_t> Dataset::label_index(std::string_view name) const {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

ValidationReport check_invariants(const Dataset& ds) {
  ValidationReport r;
  if (ds.instance_count() == 0) r.error("instances", "at least one instance is required");
  std::set<std::string> labels(ds.labels.begin(), ds.labels.end());
  if (labels.size() != ds.labels.size()) r.error("labels", "duplicate label");
  for (std::size_t i = 0; i < ds.instance_labels.size(); ++i) {
    std::set<std::size_t> seen;
    for (auto idx : ds.instance_labels[i]) {
      if (idx >= ds.labels.size())
        r.error(index_path("instances", i), "label index out of range");
      if (!seen.insert(idx).second)
        r.error(index_path("instances", i), "duplicate label index");
    }
  }
  if (ds.solvers.empty()) r.error("data", "at least one solver is required");
  std::set<std::string> solver_names;
  for (const auto& s : ds.solvers) {
    auto spath = join_path("data", s.name);
    if (!solver_names.insert(s.name).second) r.error(spath, "duplicate solver");
    if (s.components.empty()) r.error(spath, "solver must have at least one component");
    std::set<std::string> comp_names;
    for (const auto& c : s.components) {
      auto cpath = join_path(spath, c.name);
      if (!comp_names.insert(c.name).second) r.error(cpath, "duplicate component");
      if (c.values.size() != ds.instance_count())
        r.error(cpath, "length does not match instance count");
      for (std::size_t i = 0; i < c.values.size(); ++i)
        if (!std::isfinite(c.values[i]) || c.values[i] < 0)
          r.error(index_path(cpath, i), "metric value must be finite and non-negative");
    }
  }
  return r;
}

std::optional<Json> parse_json_strict(std::string_view text,
                                      ValidationReport& report,
                                      std::string& syntax_error) {
  try {
    return Json::parse(text.begin(), text.end(), DuplicateKeyTracker(report));
  } catch (const Json::exception& e) {
    syntax_error = e.what();
    return std::nullopt;
  }
}

Json report_to_json(const ValidationReport& report) {
  auto list = [](const std::vector<Issue>& issues) {
    auto arr = Json::array();
    for (const auto& is : issues) arr.push_back({{"path", is.path}, {"message", is.message}});
    return arr;
  };
  Json j;
  j["errors"] = list(report.errors);
  j["warnings"] = list(report.warnings);
  return j;
}

ParseOutcome parse_dataset_json(const Json& root) {
  ParseOutcome out;
  auto& report = out.report;

  if (!root.is_object()) {
    report.error("", "expected a top-level object");
    return out;
  }

  for (const auto& [key, _] : root.items()) {
    if (key != "metric" && key != "labels" && key != "instances" && key != "data")
      report.warning(key, "unknown top-level key ignored");
  }

  Dataset ds;
  if (!root.contains("metric")) {
    report.error("metric", "missing required key");
  } else if (!root["metric"].is_string()) {
    report.error("metric", "expected a string");
  } else {
    ds.metric_name = root["metric"].get<std::string>();
  }

  bool labels_ok = false;
  if (!root.contains("labels"))
    report.error("labels", "missing required key");
  else
    parse_labels(root["labels"], ds, report, labels_ok);

  bool instances_ok = false;
  if (!root.contains("instances"))
    report.error("instances", "missing required key");
  else
    parse_instances(root["instances"], ds, report, labels_ok, instances_ok);

  if (!root.contains("data"))
    report.error("data", "missing required key");
  else
    parse_data(root["data"], ds, report, instances_ok);

  if (report.ok()) out.dataset = std::move(ds);
  return out;
}

ParseOutcome parse_dataset(std::string_view document) {
  ValidationReport duplicates;
  std::string syntax_error;
  auto root = parse_json_strict(document, duplicates, syntax_error);
  if (!root) {
    ParseOutcome out;
    out.report.error("", "malformed JSON: " + syntax_error);
    return out;
  }
  auto out = parse_dataset_json(*root);
  if (!duplicates.ok()) {
    out.report.merge(duplicates);
    out.dataset.reset();
  }
  return out;
}

std::string serialize_dataset(const Dataset& ds) {
  Json doc;
  doc["metric"] = ds.metric_name;
  doc["labels"] = ds.labels;
  doc["instances"] = Json::array();
  for (const auto& inst : ds.instance_labels) doc["instances"].push_back(inst);
  Json data = Json::object();
  for (const auto& s : ds.solvers) {
    Json comps = Json::object();
    for (const auto& c : s.components) comps[c.name] = c.values;
    data[s.name] = std::move(comps);
  }
  doc["data"] = std::move(data);
  return doc.dump(2);
}

std::string_view dataset_schema() {
  static constexpr std::string_view kSchema = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "perfprof-results.schema.json",
  "title": "Benchmark results for performance profiles",
  "description": "Per-solver, per-component metric values over a labelled instance set. Every component array must have one entry per element of 'instances', and every label index must be smaller than the length of 'labels'.",
  "type": "object",
  "required": ["metric", "labels", "instances", "data"],
  "additionalProperties": false,
  "properties": {
    "metric": {
      "type": "string",
      "description": "Metric name shown in the plot legend."
    },
    "labels": {
      "type": "array",
      "items": {"type": "string"},
      "uniqueItems": true
    },
    "instances": {
      "type": "array",
      "minItems": 1,
      "items": {
        "type": "array",
        "items": {"type": "integer", "minimum": 0},
        "uniqueItems": true
      }
    },
    "data": {
      "type": "object",
      "minProperties": 1,
      "additionalProperties": {
        "type": "object",
        "minProperties": 1,
        "additionalProperties": {
          "type": "array",
          "items": {"type": "number", "minimum": 0}
        }
      }
    }
  }
}
)json";
  return kSchema;
}

}  // namespace perfprof
