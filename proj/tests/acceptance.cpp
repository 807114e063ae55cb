// One line per acceptance criterion. Exit status is nonzero if any fails.
//
//   acceptance [path-to-helly-cli]
//
// The CLI path enables the byte-identical rerun check; without it that
// criterion compares two in-process runs instead.

#include "helly/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

using namespace helly;
using nlohmann::json;

namespace {

struct Line {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Line> lines;

void record(int id, std::string name, bool pass, std::string detail) {
  lines.push_back({id, std::move(name), pass, std::move(detail)});
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << ". " << lines.back().name << ": " << lines.back().detail
            << std::endl;
}

long long stat(const Report& r, const std::string& key) {
  return r.statistics.contains(key) ? r.statistics.at(key).get<long long>() : 0;
}

/// Instances per dimension, read from the per-trial rows.
std::map<int, long long> per_dim(const Report& r) {
  std::map<int, long long> out;
  for (const auto& row : r.rows) {
    for (const auto& [k, v] : row) {
      if (k == "d") ++out[std::stoi(v)];
    }
  }
  return out;
}

bool min_per_dim(const Report& r, std::initializer_list<int> dims, long long floor) {
  const auto m = per_dim(r);
  for (int d : dims) {
    if (!m.contains(d) || m.at(d) < floor) return false;
  }
  return true;
}

std::string summary(const Report& r) {
  std::ostringstream os;
  os << stat(r, "passed") << "/" << stat(r, "instances") << " instances pass";
  if (stat(r, "failed") > 0) {
    os << "; first failure: " << r.witnesses["failures"][0]["message"].get<std::string>();
  }
  return os.str();
}

struct Timed {
  Report report;
  double seconds;
};

Timed run(const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  const auto t0 = std::chrono::steady_clock::now();
  Report r = run_suite(cfg);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  return {std::move(r), dt.count()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion_collapse() {
  const auto [r, secs] = run("collapse");
  const bool ok = r.pass && stat(r, "instances") >= 1000 && stat(r, "theorem_violations") == 0 && secs < 60;
  std::ostringstream os;
  os << summary(r) << ", free faces within 2d-2, replay and nerve conservation verified, " << secs << " s; "
     << "lexmin truncation alone fails its nerve check on " << stat(r, "literal_rule_failures") << " ("
     << stat(r, "rule_deletion") << " deletion, " << stat(r, "rule_cut") << " cut, " << stat(r, "rule_trim")
     << " trim steps used)";
  record(1, "collapsibility", ok, os.str());
}

void criterion_radon() {
  const auto [r, secs] = run("radon");
  record(2, "Radon number 2d+1", r.pass && min_per_dim(r, {1, 2, 3}, 1),
         summary(r) + ", " + std::to_string(stat(r, "subsets")) + " (2d+1)-subsets partitioned");
}

void criterion_helly() {
  const auto [r, secs] = run("helly");
  record(3, "Helly number 2d", r.pass && min_per_dim(r, {1, 2, 3}, 1),
         summary(r) + ", hypothesis held on " + std::to_string(stat(r, "nonvacuous")) +
             ", lower-bound family violates at 2d-1 on every P");
}

void criterion_colorful() {
  const auto [r, secs] = run("colorful");
  bool enough = true;
  std::ostringstream os;
  for (int d = 1; d <= 3; ++d) {
    for (int k = 1; k <= d; ++k) {
      const auto n = stat(r, "found_d" + std::to_string(d) + "_k" + std::to_string(k));
      enough = enough && n >= 200;
      os << " d" << d << "k" << k << "=" << n;
    }
  }
  record(4, "colorful k-intersecting Helly", r.pass && enough && stat(r, "theorem_violations") == 0,
         summary(r) + ", accepted per case:" + os.str());
}

void criterion_fractional() {
  const auto [r, secs] = run("fractional");
  record(5, "fractional and colorful fractional Helly", r.pass && min_per_dim(r, {1, 2, 3}, 500),
         summary(r) + ", alpha > 0 in " + std::to_string(stat(r, "positive_alpha")) + " (d, k) cases");
}

void criterion_lemma2() {
  const auto [r, secs] = run("lemma2");
  const auto checked = stat(r, "checked_k1") + stat(r, "checked_k2") + stat(r, "checked_k3");
  record(6, "f-preserving witness subfamilies", r.pass && checked > 0,
         summary(r) + ", " + std::to_string(checked) + " (family, k) pairs checked against brute force");
}

void criterion_lp() {
  const auto [r, secs] = run("lp");
  const bool triple = r.verdicts.value("triple", false);
  record(7, "LP duality", r.pass && stat(r, "instances") >= 200 && triple,
         summary(r) + ", triple tau=2 nu=1 nu*=tau*=3/2 " + (triple ? "reproduced" : "NOT reproduced"));
}

void criterion_tardos() {
  const auto [r, secs] = run("tardos");
  const bool tight = r.verdicts.value("triple", false);
  record(8, "Tardos-Kaiser", r.pass && min_per_dim(r, {2, 3}, 1) && tight,
         summary(r) + ", triple " + (tight ? "tight (2 = 2*1)" : "NOT tight"));
}

void criterion_oracle() {
  const auto [r, secs] = run("oracle");
  const bool tri = r.verdicts.value("hollow_triangle", false);
  record(9, "collapsibility oracle", r.pass && stat(r, "instances") >= 100 && tri,
         summary(r) + ", hollow triangle " + (tri ? "not 1- but 2-collapsible" : "WRONG"));
}

void criterion_reproducibility(const char* cli) {
  if (!cli) {
    const auto [r, secs] = run("reproducibility");
    record(10, "reproducibility", r.pass, "in-process reruns identical: " + std::string(r.pass ? "yes" : "no"));
    return;
  }
  const auto dir = std::filesystem::temp_directory_path() / ("helly_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::vector<std::string> bodies;
  bool ran = true;
  for (int i = 0; i < 2; ++i) {
    const auto out = dir / ("run" + std::to_string(i) + ".json");
    const std::string cmd = std::string("OMP_NUM_THREADS=") + (i == 0 ? "4" : "1") + " \"" + cli +
                            "\" experiment --suite collapse --seed 11 --trials 300 --out \"" + out.string() + "\"";
    ran = ran && std::system(cmd.c_str()) == 0;
    // Keys are sorted, so "timing" is the last top-level entry.
    const std::string text = read_file(out);
    const auto cut = text.find("\n  \"timing\": {");
    if (cut == std::string::npos || json::parse(text, nullptr, false).is_discarded()) {
      ran = false;
      continue;
    }
    bodies.push_back(text.substr(0, cut));
  }
  std::filesystem::remove_all(dir);
  const bool same = ran && bodies.size() == 2 && bodies[0] == bodies[1];
  record(10, "reproducibility", same,
         std::string("two CLI runs (4 and 1 threads) ") + (same ? "byte-identical" : "DIFFER") + " outside timing");
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  criterion_collapse();
  criterion_radon();
  criterion_helly();
  criterion_colorful();
  criterion_fractional();
  criterion_lemma2();
  criterion_lp();
  criterion_tardos();
  criterion_oracle();
  criterion_reproducibility(cli);
  std::size_t failed = 0;
  for (const auto& l : lines) failed += l.pass ? 0 : 1;
  std::cout << lines.size() - failed << "/" << lines.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
