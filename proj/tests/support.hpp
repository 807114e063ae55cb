#pragma once

#include "helly/complex.hpp"
#include "helly/generators.hpp"
#include "helly/helly.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace helly::test {

/// Integer coordinates per level.
inline PointSetPtr ground(std::initializer_list<std::initializer_list<long>> levels) {
  std::vector<Point> pts;
  int level = 1;
  for (const auto& coords : levels) {
    for (long c : coords) pts.push_back({Rat(c), level});
    ++level;
  }
  return share(PointSet::from_points(level - 1, std::move(pts)));
}

/// Trace of a d-interval given as optional [lo, hi] integer pairs per level.
using Box = std::vector<std::optional<std::pair<long, long>>>;

inline TraceSet box(const PointSetPtr& p, const Box& levels) {
  DInterval iv;
  for (const auto& l : levels) {
    iv.levels.push_back(l ? LevelInterval::closed(Rat(l->first), Rat(l->second)) : LevelInterval::empty());
  }
  return trace_of(iv, p);
}

inline Point pt(long coord, int level) { return {Rat(coord), level}; }

inline Face mask(std::initializer_list<int> labels) {
  Face f = 0;
  for (int l : labels) f |= Face{1} << (l - 1);
  return f;
}

/// Nerve by direct enumeration of every index subset.
inline std::vector<Face> brute_nerve(const Family& family) {
  std::vector<Face> faces;
  const auto n = static_cast<unsigned>(family.size());
  for (Face m = 0; m < (Face{1} << n); ++m) {
    if (m == 0) {
      faces.push_back(0);
      continue;
    }
    Family sub;
    for (unsigned j = 0; j < n; ++j) {
      if (m >> j & 1u) sub.push_back(family[j]);
    }
    if (!intersect_all(sub).trace.empty()) faces.push_back(m);
  }
  return faces;
}

inline Instance random_instance(std::uint64_t stream, int d, int ppl, std::size_t n, long long width = 4,
                                double presence = 1.0) {
  GenSpec spec;
  spec.d = d;
  spec.points_per_level = {ppl};
  spec.coord_hi = 9;
  spec.n = n;
  spec.max_width = width;
  spec.presence = presence;
  spec.seed = 7;
  spec.stream = stream;
  return gen_instance(spec);
}

}  // namespace helly::test
