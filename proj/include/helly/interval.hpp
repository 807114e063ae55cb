#pragma once

// Separated d-intervals over a finite ground set P on d labelled copies of
// the real line. Convex sets of the space are traces I ∩ P; every trace is a
// contiguous run of P's sorted coordinates on each level, so a trace is stored
// as one optional index run per level.

#include "helly/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace helly {

/// A point (coord, level) with level in [1, d].
struct Point {
  Rat coord;
  int level = 1;

  friend bool operator==(const Point& a, const Point& b) {
    return a.level == b.level && a.coord == b.coord;
  }
  friend bool operator<(const Point& a, const Point& b) {
    return a.level != b.level ? a.level < b.level : a.coord < b.coord;
  }
};

/// The ground set P. Per-level coordinates are kept strictly increasing.
class PointSet {
 public:
  explicit PointSet(int d);

  /// Throws InputError on duplicate points or out-of-range levels.
  static PointSet from_points(int d, std::vector<Point> points);

  int dims() const { return static_cast<int>(levels_.size()); }
  std::size_t size() const;
  std::size_t level_size(int level) const { return levels_.at(level - 1).size(); }
  const std::vector<Rat>& level_coords(int level) const { return levels_.at(level - 1); }
  const Rat& coord(int level, std::size_t index) const { return levels_.at(level - 1).at(index); }

  /// Index of the point within its level, if present.
  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p).has_value(); }

  /// All points, level-major and increasing within a level.
  std::vector<Point> points() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<std::vector<Rat>> levels_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

inline PointSetPtr share(PointSet p) { return std::make_shared<const PointSet>(std::move(p)); }

/// One level of a d-interval: empty or a closed interval [lo, hi].
struct LevelInterval {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  static LevelInterval empty() { return {}; }
  /// Throws InputError when lo > hi.
  static LevelInterval closed(Rat lo, Rat hi);

  bool is_empty() const { return !lo.has_value(); }
  bool contains(const Rat& x) const { return lo && *lo <= x && x <= *hi; }

  friend bool operator==(const LevelInterval&, const LevelInterval&) = default;
};

struct DInterval {
  std::vector<LevelInterval> levels;

  int dims() const { return static_cast<int>(levels.size()); }
  friend bool operator==(const DInterval&, const DInterval&) = default;
};

/// Inclusive run [first, last] of indices into one level of P.
struct Run {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  bool contains(std::size_t i) const { return first <= i && i <= last; }
  friend bool operator==(const Run&, const Run&) = default;
};

/// Canonical trace I ∩ P.
class TraceSet {
 public:
  /// Throws InputError if the run count differs from P's dimension or a run
  /// is out of bounds.
  TraceSet(PointSetPtr ground, std::vector<std::optional<Run>> runs);
  static TraceSet empty(PointSetPtr ground);

  const PointSetPtr& ground() const { return ground_; }
  int dims() const { return static_cast<int>(runs_.size()); }
  const std::optional<Run>& run(int level) const { return runs_.at(level - 1); }
  const std::vector<std::optional<Run>>& runs() const { return runs_; }

  bool empty() const;
  /// Number of levels on which the trace is nonempty.
  int level_count() const;
  std::size_t size() const;
  bool contains(int level, std::size_t index) const;
  bool contains(const Point& p) const;
  /// Largest coordinate on the level, if the level is nonempty.
  std::optional<Rat> level_max(int level) const;
  std::vector<Point> points() const;

  bool subset_of(const TraceSet& other) const;

  /// Same ground set (by identity) and the same runs.
  friend bool operator==(const TraceSet& a, const TraceSet& b) {
    return a.ground_ == b.ground_ && a.runs_ == b.runs_;
  }

 private:
  PointSetPtr ground_;
  std::vector<std::optional<Run>> runs_;
};

/// Lexicographically ordered value in (R ∪ {−∞})^d; nullopt stands for −∞.
struct FLexValue {
  std::vector<std::optional<Rat>> comps;

  int dims() const { return static_cast<int>(comps.size()); }
  friend bool operator==(const FLexValue& a, const FLexValue& b) { return a.comps == b.comps; }
  friend bool operator<(const FLexValue& a, const FLexValue& b);
  friend bool operator>(const FLexValue& a, const FLexValue& b) { return b < a; }
  friend bool operator<=(const FLexValue& a, const FLexValue& b) { return !(b < a); }

  /// The first `count` finite components as points (a_i, i). Fewer are
  /// returned if the value has fewer finite components.
  std::vector<Point> first_finite(int count) const;
};

struct IntersectResult {
  TraceSet trace;
  int level_count = 0;
};

TraceSet trace_of(const DInterval& interval, const PointSetPtr& ground);

/// Closure of Y in the convexity space: per level, every point of P between
/// the extreme points of Y. Throws InputError if Y ⊄ P.
TraceSet hull(const PointSetPtr& ground, std::span<const Point> subset);

/// Throws InputError on an empty input or mixed ground sets.
IntersectResult intersect_all(std::span<const TraceSet> traces);
TraceSet intersect(const TraceSet& a, const TraceSet& b);

/// Smallest d-interval containing the trace.
DInterval minimal_dinterval(const TraceSet& trace);

FLexValue f_value(const TraceSet& trace);

}  // namespace helly
