#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace perfprof {

/// One located diagnostic. `path` uses slash-separated keys with bracketed
/// array indices, e.g. `data/Car A/wheels[3]`.
struct Issue {
  std::string path;
  std::string message;

  bool operator==(const Issue&) const = default;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool ok() const { return errors.empty(); }
  void error(std::string path, std::string message) {
    errors.push_back({std::move(path), std::move(message)});
  }
  void warning(std::string path, std::string message) {
    warnings.push_back({std::move(path), std::move(message)});
  }
  /// Appends every issue of `other`, prefixing its paths with `prefix/`.
  void merge(const ValidationReport& other, std::string_view prefix = {});
  /// One line per issue: `error: <path>: <message>`.
  std::string to_text() const;
};

struct Component {
  std::string name;
  std::vector<double> values;

  bool operator==(const Component&) const = default;
};

struct Solver {
  std::string name;
  std::vector<Component> components;

  bool operator==(const Solver&) const = default;
};

/// Validated benchmark results. Instances are implicit (0..instance_count-1);
/// solver and component order follows the source document.
///
/// Only `parse_dataset` constructs these from untrusted input; code building
/// one by hand (tests, generators) should run `check_invariants` on it.
struct Dataset {
  std::string metric_name;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> instance_labels;
  std::vector<Solver> solvers;

  std::size_t instance_count() const { return instance_labels.size(); }

  std::optional<std::size_t> solver_index(std::string_view name) const;
  std::optional<std::size_t> component_index(std::size_t solver,
                                             std::string_view name) const;
  std::optional<std::size_t> label_index(std::string_view name) const;

  bool operator==(const Dataset&) const = default;
};

/// Structural checks shared by the parser and hand-built datasets.
ValidationReport check_invariants(const Dataset& dataset);

struct ParseOutcome {
  std::optional<Dataset> dataset;  // engaged iff report.ok()
  ValidationReport report;
};

/// Parses and validates a results document. Never throws on bad input:
/// every problem found is recorded in the report, and parsing keeps going
/// where the document structure allows it.
ParseOutcome parse_dataset(std::string_view document);

/// Serializes back to the input format (keys in canonical order).
std::string serialize_dataset(const Dataset& dataset);

/// JSON Schema (draft-07) for the input format.
std::string_view dataset_schema();

}  // namespace perfprof
