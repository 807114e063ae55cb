#include "helly/interval.hpp"

#include "helly/errors.hpp"

#include <algorithm>
#include <string>

namespace helly {

PointSet::PointSet(int d) {
  if (d < 1) throw InputError("dimension d must be positive, got " + std::to_string(d));
  levels_.resize(static_cast<std::size_t>(d));
}

PointSet PointSet::from_points(int d, std::vector<Point> points) {
  PointSet out(d);
  for (auto& p : points) {
    if (p.level < 1 || p.level > d) {
      throw InputError("point level " + std::to_string(p.level) + " outside [1, " +
                       std::to_string(d) + "]");
    }
    out.levels_[p.level - 1].push_back(std::move(p.coord));
  }
  for (std::size_t l = 0; l < out.levels_.size(); ++l) {
    auto& coords = out.levels_[l];
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
      throw InputError("duplicate point on level " + std::to_string(l + 1));
    }
  }
  return out;
}

std::size_t PointSet::size() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
  if (p.level < 1 || p.level > dims()) return std::nullopt;
  const auto& coords = levels_[p.level - 1];
  auto it = std::lower_bound(coords.begin(), coords.end(), p.coord);
  if (it == coords.end() || *it != p.coord) return std::nullopt;
  return static_cast<std::size_t>(it - coords.begin());
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& c : levels_[l]) out.push_back({c, static_cast<int>(l + 1)});
  }
  return out;
}

LevelInterval LevelInterval::closed(Rat lo, Rat hi) {
  if (lo > hi) throw InputError("interval has lo > hi: [" + to_string(lo) + ", " + to_string(hi) + "]");
  return {std::move(lo), std::move(hi)};
}

TraceSet::TraceSet(PointSetPtr ground, std::vector<std::optional<Run>> runs)
    : ground_(std::move(ground)), runs_(std::move(runs)) {
  if (!ground_) throw InputError("trace without a ground set");
  if (static_cast<int>(runs_.size()) != ground_->dims()) {
    throw InputError("trace has " + std::to_string(runs_.size()) + " levels, ground set has " +
                     std::to_string(ground_->dims()));
  }
  for (std::size_t l = 0; l < runs_.size(); ++l) {
    const auto& r = runs_[l];
    if (r && (r->first > r->last || r->last >= ground_->level_size(static_cast<int>(l + 1)))) {
      throw InputError("trace run out of bounds on level " + std::to_string(l + 1));
    }
  }
}

TraceSet TraceSet::empty(PointSetPtr ground) {
  const auto d = static_cast<std::size_t>(ground->dims());
  return TraceSet(std::move(ground), std::vector<std::optional<Run>>(d));
}

bool TraceSet::empty() const {
  return std::none_of(runs_.begin(), runs_.end(), [](const auto& r) { return r.has_value(); });
}

int TraceSet::level_count() const {
  return static_cast<int>(std::count_if(runs_.begin(), runs_.end(), [](const auto& r) { return r.has_value(); }));
}

std::size_t TraceSet::size() const {
  std::size_t n = 0;
  for (const auto& r : runs_) n += r ? r->size() : 0;
  return n;
}

bool TraceSet::contains(int level, std::size_t index) const {
  if (level < 1 || level > dims()) return false;
  const auto& r = runs_[level - 1];
  return r && r->contains(index);
}

bool TraceSet::contains(const Point& p) const {
  auto idx = ground_->index_of(p);
  return idx && contains(p.level, *idx);
}

std::optional<Rat> TraceSet::level_max(int level) const {
  const auto& r = runs_.at(level - 1);
  if (!r) return std::nullopt;
  return ground_->coord(level, r->last);
}

std::vector<Point> TraceSet::points() const {
  std::vector<Point> out;
  for (int level = 1; level <= dims(); ++level) {
    const auto& r = runs_[level - 1];
    if (!r) continue;
    for (std::size_t i = r->first; i <= r->last; ++i) out.push_back({ground_->coord(level, i), level});
  }
  return out;
}

bool TraceSet::subset_of(const TraceSet& other) const {
  for (std::size_t l = 0; l < runs_.size(); ++l) {
    const auto& a = runs_[l];
    if (!a) continue;
    const auto& b = other.runs_.at(l);
    if (!b || a->first < b->first || a->last > b->last) return false;
  }
  return true;
}

bool operator<(const FLexValue& a, const FLexValue& b) {
  // nullopt (−∞) orders below every finite value.
  return std::lexicographical_compare(a.comps.begin(), a.comps.end(), b.comps.begin(), b.comps.end(),
                                      [](const std::optional<Rat>& x, const std::optional<Rat>& y) {
                                        if (!x) return y.has_value();
                                        if (!y) return false;
                                        return *x < *y;
                                      });
}

std::vector<Point> FLexValue::first_finite(int count) const {
  std::vector<Point> out;
  for (std::size_t l = 0; l < comps.size() && static_cast<int>(out.size()) < count; ++l) {
    if (comps[l]) out.push_back({*comps[l], static_cast<int>(l + 1)});
  }
  return out;
}

TraceSet trace_of(const DInterval& interval, const PointSetPtr& ground) {
  if (interval.dims() != ground->dims()) {
    throw InputError("d-interval has " + std::to_string(interval.dims()) + " levels, ground set has " +
                     std::to_string(ground->dims()));
  }
  std::vector<std::optional<Run>> runs(static_cast<std::size_t>(ground->dims()));
  for (int level = 1; level <= ground->dims(); ++level) {
    const auto& iv = interval.levels[level - 1];
    if (iv.is_empty()) continue;
    const auto& coords = ground->level_coords(level);
    auto lo = std::lower_bound(coords.begin(), coords.end(), *iv.lo);
    auto hi = std::upper_bound(coords.begin(), coords.end(), *iv.hi);
    if (lo < hi) {
      runs[level - 1] = Run{static_cast<std::size_t>(lo - coords.begin()),
                            static_cast<std::size_t>(hi - coords.begin()) - 1};
    }
  }
  return TraceSet(ground, std::move(runs));
}

TraceSet hull(const PointSetPtr& ground, std::span<const Point> subset) {
  std::vector<std::optional<Run>> runs(static_cast<std::size_t>(ground->dims()));
  for (const auto& p : subset) {
    auto idx = ground->index_of(p);
    if (!idx) {
      throw InputError("point (" + to_string(p.coord) + ", " + std::to_string(p.level) +
                       ") is not in the ground set");
    }
    auto& r = runs[p.level - 1];
    if (!r) {
      r = Run{*idx, *idx};
    } else {
      r->first = std::min(r->first, *idx);
      r->last = std::max(r->last, *idx);
    }
  }
  return TraceSet(ground, std::move(runs));
}

TraceSet intersect(const TraceSet& a, const TraceSet& b) {
  if (a.ground() != b.ground()) throw InputError("intersecting traces over different ground sets");
  std::vector<std::optional<Run>> runs(a.runs().size());
  for (std::size_t l = 0; l < runs.size(); ++l) {
    const auto& x = a.runs()[l];
    const auto& y = b.runs()[l];
    if (!x || !y) continue;
    std::size_t first = std::max(x->first, y->first);
    std::size_t last = std::min(x->last, y->last);
    if (first <= last) runs[l] = Run{first, last};
  }
  return TraceSet(a.ground(), std::move(runs));
}

IntersectResult intersect_all(std::span<const TraceSet> traces) {
  if (traces.empty()) throw InputError("intersection of an empty family is undefined");
  TraceSet acc = traces.front();
  for (std::size_t i = 1; i < traces.size(); ++i) acc = intersect(acc, traces[i]);
  int count = acc.level_count();
  return {std::move(acc), count};
}

DInterval minimal_dinterval(const TraceSet& trace) {
  DInterval out;
  out.levels.resize(static_cast<std::size_t>(trace.dims()));
  for (int level = 1; level <= trace.dims(); ++level) {
    const auto& r = trace.run(level);
    if (!r) continue;
    out.levels[level - 1] =
        LevelInterval{trace.ground()->coord(level, r->first), trace.ground()->coord(level, r->last)};
  }
  return out;
}

FLexValue f_value(const TraceSet& trace) {
  FLexValue out;
  out.comps.resize(static_cast<std::size_t>(trace.dims()));
  for (int level = 1; level <= trace.dims(); ++level) out.comps[level - 1] = trace.level_max(level);
  return out;
}

}  // namespace helly
