#pragma once

// JSON instance format:
//
//   {"d": 2,
//    "points": [["0", 1], ["1/2", 2], ...],
//    "sets": [{"name": "A", "levels": [{"level": 1, "lo": "0", "hi": "1"}]}, ...],
//    "families": [[0, 1], [2]],          // optional, colour classes
//    "spec": {...}}                      // optional, generation provenance
//
// Coordinates are strings holding integers, decimals or p/q fractions.
// Levels missing from a set are empty. Sets are canonicalised to traces on
// ingestion and serialised back as their minimal d-intervals.

#include "helly/generators.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace helly {

struct ParseOptions {
  /// Unknown fields produce warnings instead of errors.
  bool lenient = false;
};

struct ParsedInstance {
  Instance instance;
  std::vector<std::string> warnings;
};

/// Throws InputError with a JSON path ("$.sets[1].levels[0].lo: ...").
ParsedInstance parse_instance(const nlohmann::json& doc, const ParseOptions& options = {});
ParsedInstance parse_instance_text(const std::string& text, const ParseOptions& options = {});

nlohmann::json serialize_instance(const Instance& instance);

nlohmann::json spec_to_json(const GenSpec& spec);
GenSpec spec_from_json(const nlohmann::json& doc, const std::string& path = "$.spec");

}  // namespace helly
