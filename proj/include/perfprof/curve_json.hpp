#pragma once

#include <string>

#include "json.hpp"
#include "perfprof/engine.hpp"

namespace perfprof {

/// Curve document: per solver `tau` and `F` arrays of equal length plus
/// `solved`, and the set-level `max_ratio` (null when no finite ratio
/// exists), `denominator`, `excluded_no_baseline` and `kept_instances`.
nlohmann::ordered_json curves_to_json(const ProfileSet& profiles);

/// Pretty-printed, newline-terminated form of curves_to_json.
std::string curves_document(const ProfileSet& profiles);

}  // namespace perfprof
