#pragma once

// Constructive procedures and brute-force verifiers for the Radon, Helly,
// colorful, k-intersecting, fractional and colorful fractional Helly
// statements in the ≡-convexity space of separated d-intervals.

#include "helly/errors.hpp"
#include "helly/interval.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace helly {

using Family = std::vector<TraceSet>;

struct RadonPartition {
  std::vector<Point> first;
  std::vector<Point> second;
  Point witness;
  /// True when built from three same-level points rather than by search.
  bool constructive = false;
};

/// For |A| >= 2d+1 uses the pigeonhole construction (middle point against
/// the two outer ones); otherwise searches all 2^{|A|-1} splits.
/// Throws InputError if A ⊄ P.
std::optional<RadonPartition> radon_partition(const PointSetPtr& ground, const std::vector<Point>& subset);

/// Exhaustive split search only; the independent check for radon_partition.
std::optional<RadonPartition> radon_partition_search(const PointSetPtr& ground, const std::vector<Point>& subset);

bool verify_radon(const PointSetPtr& ground, const RadonPartition& partition);

/// Smallest n <= cap such that every n-subset of P has a Radon partition,
/// or nullopt ("> cap"). Throws GuardError when |P| exceeds the guard.
std::optional<int> radon_number_bruteforce(const PointSetPtr& ground, int cap, const Guards& guards = {});

enum class HellyMode { plain, colorful, k_intersect, fractional, colorful_fractional };
std::string to_string(HellyMode mode);

struct HellyReport {
  HellyMode mode = HellyMode::plain;
  std::map<std::string, long long> params;
  bool verdict = true;
  /// Whether the theorem's hypothesis held (false means the verdict is vacuous).
  bool hypothesis_held = true;
  std::string note;
  /// Indices (0-based) of the witness subfamily or tuple; for colorful
  /// inputs, one index per family.
  std::vector<std::size_t> witness_indices;
  std::vector<Point> witness_points;
  std::optional<Rat> alpha;
  std::optional<Rat> beta_hat;
  std::optional<Rat> beta_required;
  /// Per-family values for colorful statistics.
  std::vector<Rat> per_family;
  /// Irrational or advisory quantities, already formatted.
  std::map<std::string, std::string> extras;
};

/// Verdict: (every min(m, n)-subfamily k-intersects) ⇒ the family k-intersects.
HellyReport helly_check(const Family& family, int m, int k = 1);

/// Subfamily of size <= 2d−k whose intersection has the same f-value as the
/// whole family. Throws InputError if the family does not k-intersect.
std::vector<std::size_t> lemma2_witness(const Family& family, int k);

struct ColorfulHellyResult {
  bool precondition_held = true;
  /// Violating colorful tuple (one index per family) when the precondition fails.
  std::vector<std::size_t> violating_tuple;
  /// Minimising tuple, one index per non-designated family in family order.
  std::vector<std::size_t> minimizing_tuple;
  std::vector<Point> points;
  std::size_t designated = 0;
  /// True when every member of the designated family contains all points.
  bool claim_holds = false;
};

/// Takes 2d−k+1 families. Minimises f over colorful (2d−k)-tuples that skip
/// one family, reads off the first k finite coordinates and checks them
/// against the skipped family. By default every family may be skipped and
/// a failed claim throws TheoremViolation. With `designated` only tuples
/// skipping that family are used and a failed claim is returned as
/// claim_holds = false.
ColorfulHellyResult colorful_helly_points(const std::vector<Family>& families, int k,
                                          std::optional<std::size_t> designated = std::nullopt);

/// True when every colorful tuple (one member per family) k-intersects;
/// otherwise `violating` receives the first failing tuple.
bool colorful_property(const std::vector<Family>& families, int k, std::vector<std::size_t>* violating = nullptr);

/// α over (2d−k+1)-tuples, and the largest k-intersecting subfamily both by
/// the grouping construction and by exact candidate-point search.
HellyReport frac_helly_stats(const Family& family, int k);

/// Colorful fractional statistics over exactly 2d families.
HellyReport cfh_stats(const std::vector<Family>& families);

/// Size of the largest subfamily sharing a point of P (exact, by candidate sweep).
std::size_t max_intersecting_subfamily(const Family& family, std::vector<std::size_t>* members = nullptr);
std::size_t max_intersecting_subfamily_serial(const Family& family);

/// Largest subfamily whose intersection meets at least k levels.
std::size_t max_k_intersecting_subfamily(const Family& family, int k, std::vector<Point>* points = nullptr);

/// Smallest N with N·β(1) >= m where β(1) = 1 − (1 − 1/d)^{1/2}; exact.
long long partial_colorful_size(long long m, int d);

}  // namespace helly
