#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "perfprof/dataset.hpp"

namespace perfprof {

/// Parses `text`, preserving key order. Returns nullopt on a syntax error
/// (message in `syntax_error`). Duplicate object keys are not a syntax error
/// but are reported in `report` with their key path.
std::optional<nlohmann::ordered_json> parse_json_strict(std::string_view text,
                                                        ValidationReport& report,
                                                        std::string& syntax_error);

/// Validates an already-parsed results document. Paths in the report are
/// relative to `root`.
ParseOutcome parse_dataset_json(const nlohmann::ordered_json& root);

nlohmann::ordered_json report_to_json(const ValidationReport& report);

}  // namespace perfprof
