#include "helly/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace helly {

using nlohmann::json;

json Report::to_json() const {
  // nlohmann::json keeps keys sorted, so dumps are byte-stable.
  return json{{"command", command},   {"parameters", parameters}, {"pass", pass},
              {"verdicts", verdicts}, {"witnesses", witnesses},   {"statistics", statistics},
              {"provenance", provenance}, {"timing", timing}};
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv(const Report& report) {
  std::vector<std::string> header;
  for (const auto& row : report.rows) {
    for (const auto& [k, _] : row) {
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_escape(header[i]);
  os << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      std::string cell;
      for (const auto& [k, v] : row) {
        if (k == header[i]) {
          cell = v;
          break;
        }
      }
      os << (i ? "," : "") << csv_escape(cell);
    }
    os << '\n';
  }
  return os.str();
}

void emit_report(const Report& report, ReportFormat format, const std::string& path) {
  const std::string body = format == ReportFormat::json ? report.to_json().dump(2) + "\n" : report_csv(report);
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << body;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

void put_rat(json& obj, const std::string& key, const Rat& value) {
  obj[key] = to_string(value);
  obj[key + "_decimal"] = to_decimal(value);
}

void put_rat(CsvRow& row, const std::string& key, const Rat& value) {
  row.emplace_back(key, to_string(value));
  row.emplace_back(key + "_decimal", to_decimal(value));
}

json point_json(const Point& p) { return json::array({to_string(p.coord), p.level}); }

json points_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

json trace_json(const TraceSet& trace) {
  json levels = json::array();
  const auto box = minimal_dinterval(trace);
  for (int level = 1; level <= box.dims(); ++level) {
    const auto& iv = box.levels[level - 1];
    if (iv.is_empty()) continue;
    levels.push_back({{"level", level}, {"lo", to_string(*iv.lo)}, {"hi", to_string(*iv.hi)}});
  }
  return json{{"levels", std::move(levels)}, {"points", points_json(trace.points())}};
}

json face_json(const SimplicialComplex& complex, Face f) { return complex.face_labels(f); }

json complex_json(const SimplicialComplex& complex) {
  json faces = json::array();
  for (Face f : complex.faces()) faces.push_back(face_json(complex, f));
  return json{{"labels", complex.labels()}, {"faces", std::move(faces)}, {"dim", complex.dim()}};
}

json collapse_json(const SimplicialComplex& initial, const CollapseSequence& seq) {
  json steps = json::array();
  for (const auto& s : seq.steps) {
    steps.push_back({{"free_face", face_json(initial, s.free_face)},
                     {"free_face_dim", face_dim(s.free_face)},
                     {"unique_maximal", face_json(initial, s.unique_maximal)},
                     {"removed_faces", s.removed.size()}});
  }
  return json{{"bound", seq.bound}, {"steps", std::move(steps)}};
}

json helly_json(const HellyReport& r) {
  json out{{"mode", to_string(r.mode)},
           {"params", r.params},
           {"verdict", r.verdict},
           {"hypothesis_held", r.hypothesis_held},
           {"note", r.note},
           {"witness_indices", r.witness_indices},
           {"witness_points", points_json(r.witness_points)}};
  if (r.alpha) put_rat(out, "alpha", *r.alpha);
  if (r.beta_hat) put_rat(out, "beta_hat", *r.beta_hat);
  if (r.beta_required) put_rat(out, "beta_required", *r.beta_required);
  if (!r.per_family.empty()) {
    json per = json::array();
    for (const auto& v : r.per_family) per.push_back(to_string(v));
    out["per_family"] = std::move(per);
  }
  for (const auto& [k, v] : r.extras) out[k] = v;
  return out;
}

json lp_json(const LPSolution& sol) {
  json primal = json::array();
  for (const auto& v : sol.primal) primal.push_back(to_string(v));
  json dual = json::array();
  for (const auto& v : sol.dual) dual.push_back(to_string(v));
  json out{{"primal", std::move(primal)}, {"dual", std::move(dual)}, {"certified", sol.certified}, {"pivots", sol.pivots}};
  put_rat(out, "objective", sol.objective);
  return out;
}

json piercing_json(const PiercingResult& r) {
  json out{{"tau", r.tau.tau},
           {"piercing_points", points_json(r.tau.points)},
           {"nu", r.nu.nu},
           {"matching", r.nu.subfamily},
           {"lp", lp_json(r.fractional.lp)},
           {"candidates", points_json(r.fractional.candidates)},
           {"sandwich_holds", r.sandwich_holds}};
  put_rat(out, "nu_star", r.fractional.nu_star);
  put_rat(out, "tau_star", r.fractional.tau_star);
  return out;
}

json radon_json(const RadonPartition& p) {
  return json{{"first", points_json(p.first)},
              {"second", points_json(p.second)},
              {"witness", point_json(p.witness)},
              {"constructive", p.constructive}};
}

}  // namespace helly
