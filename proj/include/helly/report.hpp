#pragma once

#include "helly/complex.hpp"
#include "helly/helly.hpp"
#include "helly/piercing.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace helly {

using CsvRow = std::vector<std::pair<std::string, std::string>>;

/// Output of one CLI command. Everything except `timing` is a deterministic
/// function of the inputs and seed.
struct Report {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = true;
  nlohmann::json verdicts = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::object();
  nlohmann::json statistics = nlohmann::json::object();
  nlohmann::json provenance = nlohmann::json::object();
  nlohmann::json timing = nlohmann::json::object();
  /// One row per corpus instance for CSV output.
  std::vector<CsvRow> rows;

  nlohmann::json to_json() const;
};

enum class ReportFormat { json, csv };

std::string report_csv(const Report& report);
/// Writes to `path`, or to stdout when path is "-". Throws std::runtime_error on I/O failure.
void emit_report(const Report& report, ReportFormat format, const std::string& path);

/// Sets obj[key] = "p/q" and obj[key + "_decimal"] = "1.5".
void put_rat(nlohmann::json& obj, const std::string& key, const Rat& value);
void put_rat(CsvRow& row, const std::string& key, const Rat& value);

nlohmann::json point_json(const Point& p);
nlohmann::json points_json(const std::vector<Point>& pts);
/// Per-level [lo, hi] of the trace's minimal d-interval, plus its point list.
nlohmann::json trace_json(const TraceSet& trace);
nlohmann::json face_json(const SimplicialComplex& complex, Face f);
nlohmann::json complex_json(const SimplicialComplex& complex);
nlohmann::json collapse_json(const SimplicialComplex& initial, const CollapseSequence& seq);
nlohmann::json helly_json(const HellyReport& report);
nlohmann::json lp_json(const LPSolution& sol);
nlohmann::json piercing_json(const PiercingResult& result);
nlohmann::json radon_json(const RadonPartition& partition);

}  // namespace helly
