#pragma once

// Seeded corpus runs. Each suite draws its instances from independent
// generator streams, evaluates them concurrently and assembles the report in
// trial order, so the report (minus timing) depends only on the config.

#include "helly/generators.hpp"
#include "helly/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace helly {

struct SuiteConfig {
  std::string suite;
  /// Corpus size; 0 selects the suite default.
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  /// Dimensions to cycle through; empty selects the suite default.
  std::vector<int> dims;
  Guards guards;
};

/// collapse, radon, helly, colorful, fractional, lemma2, lp, tardos, oracle,
/// reproducibility.
const std::vector<std::string>& suite_names();
std::size_t default_trials(const std::string& suite);

/// Throws InputError for unknown suites or dimensions outside the suite's range.
Report run_suite(const SuiteConfig& config);

/// The report with its timing section removed, serialised.
std::string report_fingerprint(const Report& report);

/// d = 2: A = ([0,1],[0,1]), B = ([1,2],[2,3]), C = ([4,5],[1,2]) over their
/// endpoints. Pairwise intersecting with no common point.
Instance example_triple();
/// Three vertices and three edges, no triangle.
SimplicialComplex hollow_triangle();

}  // namespace helly
