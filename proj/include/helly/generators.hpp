#pragma once

// Seeded instance generation. Output depends only on (GenSpec, seed, stream)
// and uses integer arithmetic throughout, so corpora are reproducible across
// runs, thread counts and platforms.

#include "helly/helly.hpp"
#include "helly/piercing.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace helly {

/// Counter-based generator: value i of stream s under seed k is a pure
/// function of (k, s, i), so streams can be generated independently.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform integer in [lo, hi] (rejection sampling, no modulo bias).
  long long uniform(long long lo, long long hi);
  /// True with probability `probability` quantised to 2^-32.
  bool bernoulli(double probability);

  static std::uint64_t mix(std::uint64_t x);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct GenSpec {
  int d = 2;
  /// Points per level; a single entry applies to every level.
  std::vector<int> points_per_level{4};
  long long coord_lo = 0;
  long long coord_hi = 9;
  std::size_t n = 4;
  /// Probability that a set is nonempty on a given level.
  double presence = 1.0;
  /// Interval widths are uniform in [0, max_width].
  long long max_width = 4;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  /// Number of colour classes the sets are dealt into (round robin); 0 = none.
  std::size_t families = 0;

  int points_on(int level) const;
  /// Throws InputError for negative counts, bad probabilities, or more points
  /// than integer coordinates in range.
  void validate() const;
};

struct Instance {
  PointSetPtr ground;
  Family sets;
  std::vector<std::string> names;
  /// Colour classes as member indices; empty when the instance is uncoloured.
  std::vector<std::vector<std::size_t>> families;
  /// Generation provenance, when the instance came from gen_instance.
  std::optional<GenSpec> spec;

  std::vector<Family> colour_families() const;
};

Instance gen_instance(const GenSpec& spec);

/// Designated points per level, as (first, second) with first < second.
using Designated = std::vector<std::pair<Rat, Rat>>;

/// Defaults to the per-level minimum and maximum of P. Throws InputError
/// when a level has fewer than two points or a designated point is not in P.
Designated designated_points(const PointSetPtr& ground, const std::optional<Designated>& override = std::nullopt);

/// The 2d sets: set k holds a single designated point on level ⌈k/2⌉
/// (first point for odd k, second for even k) and the designated hull on
/// every other level. Every 2d−1 of them intersect; all 2d do not.
Family gen_helly_lower_bound(const PointSetPtr& ground, const std::optional<Designated>& designated = std::nullopt);

/// The 2d designated points, which admit no Radon partition.
std::vector<Point> gen_radon_lower_bound(const PointSetPtr& ground,
                                         const std::optional<Designated>& designated = std::nullopt);

struct Predicate {
  enum class Kind { none, colorful_helly, pq_property, k_intersect_rich };
  Kind kind = Kind::none;
  int k = 1;
  int p = 2;
  int q = 2;
  PqKind pq_kind = PqKind::plain;
  Rat alpha_min = 0;

  std::string describe() const;
};

/// Parses "none", "colorful-helly[:k]", "pq:p:q[:kind]", "k-intersect-rich:alpha[:k]".
Predicate parse_predicate(const std::string& text);

bool predicate_holds(const Instance& instance, const Predicate& predicate);

struct ConditionedOutcome {
  std::optional<Instance> instance;
  std::size_t draws = 0;
  /// Stream used for the accepted draw.
  std::uint64_t stream = 0;
};

/// Rejection sampling over substreams of spec.stream; the accepted instance
/// is re-verified. Running out of draws is a reported outcome, not an error.
ConditionedOutcome gen_conditioned(const GenSpec& spec, const Predicate& predicate, std::size_t cap_draws = 100000);

}  // namespace helly
