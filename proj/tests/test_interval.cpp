#include "support.hpp"

#include <doctest.h>

using namespace helly;
using namespace helly::test;

namespace {

PointSetPtr six() { return ground({{0, 1, 2}, {0, 1, 2}}); }

std::vector<Point> pts(std::initializer_list<std::pair<long, int>> list) {
  std::vector<Point> out;
  for (auto [c, l] : list) out.push_back(pt(c, l));
  return out;
}

/// Random subset of P as a point list.
std::vector<Point> random_subset(const PointSetPtr& p, CounterRng& rng) {
  std::vector<Point> out;
  for (const auto& q : p->points()) {
    if (rng.bernoulli(0.4)) out.push_back(q);
  }
  return out;
}

bool point_subset(const std::vector<Point>& a, const TraceSet& t) {
  return std::all_of(a.begin(), a.end(), [&](const Point& q) { return t.contains(q); });
}

}  // namespace

TEST_CASE("rationals parse exactly and reject floating point") {
  CHECK(parse_rat("3/2") == Rat(3, 2));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rat("1e3"), InputError);
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("abc"), InputError);
  CHECK_THROWS_AS(parse_rat(""), InputError);
}

TEST_CASE("trace_of") {
  const auto p = six();
  CHECK(box(p, {{{0, 1}}, std::nullopt}).points() == pts({{0, 1}, {1, 1}}));
  DInterval frac{{LevelInterval::closed(Rat(1, 2), Rat(3, 4)), LevelInterval::empty()}};
  CHECK(trace_of(frac, p).empty());
  CHECK(box(p, {{{0, 2}}, {{0, 2}}}).points() == p->points());
  CHECK_THROWS_AS(LevelInterval::closed(Rat(2), Rat(1)), InputError);
}

TEST_CASE("hull") {
  const auto p = six();
  const auto y1 = pts({{0, 1}, {2, 1}});
  CHECK(hull(p, y1).points() == pts({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(hull(p, std::vector<Point>{}).empty());
  const auto y3 = pts({{1, 1}, {0, 2}});
  CHECK(hull(p, y3).points() == y3);
  const auto outside = pts({{5, 1}});
  CHECK_THROWS_AS(hull(p, outside), InputError);
}

TEST_CASE("intersect_all") {
  const auto p = six();
  const auto a = hull(p, pts({{0, 1}, {1, 1}}));
  const auto b = hull(p, pts({{1, 1}, {2, 1}, {0, 2}}));
  const std::vector<TraceSet> ab{a, b};
  const auto r = intersect_all(ab);
  CHECK(r.trace.points() == pts({{1, 1}}));
  CHECK(r.level_count == 1);
  const std::vector<TraceSet> disjoint{hull(p, pts({{0, 1}})), hull(p, pts({{2, 1}}))};
  CHECK(intersect_all(disjoint).trace.empty());
  CHECK(intersect_all(disjoint).level_count == 0);
  const auto all = box(p, {{{0, 2}}, {{0, 2}}});
  const std::vector<TraceSet> pp{all, all};
  CHECK(intersect_all(pp).trace.points() == p->points());
  CHECK(intersect_all(pp).level_count == 2);
  CHECK_THROWS_AS(intersect_all(std::vector<TraceSet>{}), InputError);
  const auto other = six();
  const std::vector<TraceSet> mixed{all, box(other, {{{0, 2}}, {{0, 2}}})};
  CHECK_THROWS_AS(intersect_all(mixed), InputError);
}

TEST_CASE("minimal_dinterval") {
  const auto p = six();
  const auto c = hull(p, pts({{0, 1}, {2, 1}, {1, 2}}));
  const auto box1 = minimal_dinterval(c);
  CHECK(box1.levels[0] == LevelInterval::closed(Rat(0), Rat(2)));
  CHECK(box1.levels[1] == LevelInterval::closed(Rat(1), Rat(1)));
  const auto e = minimal_dinterval(TraceSet::empty(p));
  CHECK(e.levels[0].is_empty());
  CHECK(e.levels[1].is_empty());
  const auto q = ground({{0}, {5}});
  const auto single = minimal_dinterval(hull(q, pts({{5, 2}})));
  CHECK(single.levels[0].is_empty());
  CHECK(single.levels[1] == LevelInterval::closed(Rat(5), Rat(5)));
}

TEST_CASE("f_value") {
  const auto p = ground({{0, 1}, {2}});
  const auto f = f_value(box(p, {{{0, 1}}, {{2, 2}}}));
  REQUIRE(f.comps.size() == 2);
  CHECK(*f.comps[0] == Rat(1));
  CHECK(*f.comps[1] == Rat(2));
  const auto fe = f_value(TraceSet::empty(p));
  CHECK(!fe.comps[0]);
  CHECK(!fe.comps[1]);
  // −∞ sorts first.
  CHECK(fe < f);
  FLexValue a{{std::nullopt, Rat(5)}};
  FLexValue b{{Rat(0), std::nullopt}};
  CHECK(a < b);
  CHECK(a.first_finite(2).size() == 1);
  CHECK(b.first_finite(1) == std::vector<Point>{pt(0, 1)});
}

TEST_CASE("hull is a closure operator") {
  CounterRng rng(3, 11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_instance(static_cast<std::uint64_t>(trial), 1 + trial % 3, 4, 0);
    const auto& p = inst.ground;
    const auto y = random_subset(p, rng);
    auto z = random_subset(p, rng);
    z.insert(z.end(), y.begin(), y.end());
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    const auto hy = hull(p, y);
    CHECK(point_subset(y, hy));
    const auto hy_pts = hy.points();
    CHECK(hull(p, hy_pts) == hy);
    CHECK(hy.subset_of(hull(p, z)));
    // Per-level convexity: no point of P strictly between two members is missing.
    for (int level = 1; level <= p->dims(); ++level) {
      if (const auto& r = hy.run(level)) {
        for (auto i = r->first; i <= r->last; ++i) CHECK(hy.contains(level, i));
      }
    }
  }
}

TEST_CASE("intersections are traces and f is antitone") {
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 3;
    const auto inst = random_instance(1000 + static_cast<std::uint64_t>(trial), d, 5, 5, 5, 0.8);
    const auto& fam = inst.sets;
    const auto all = intersect_all(fam);
    // Pointwise check of the intersection.
    for (const auto& q : inst.ground->points()) {
      const bool in_all = std::all_of(fam.begin(), fam.end(), [&](const TraceSet& t) { return t.contains(q); });
      CHECK(all.trace.contains(q) == in_all);
    }
    CHECK(hull(inst.ground, all.trace.points()) == all.trace);
    CHECK(all.level_count == all.trace.level_count());
    const auto f_all = f_value(all.trace);
    for (std::size_t drop = 0; drop < fam.size(); ++drop) {
      Family sub;
      for (std::size_t j = 0; j < fam.size(); ++j) {
        if (j != drop) sub.push_back(fam[j]);
      }
      const auto f_sub = f_value(intersect_all(sub).trace);
      for (int i = 0; i < d; ++i) {
        const auto& x = f_all.comps[i];
        const auto& y = f_sub.comps[i];
        CHECK((!x || (y && *x <= *y)));
      }
      CHECK(f_all <= f_sub);
    }
  }
}

TEST_CASE("arithmetic stays exact") {
  const auto p = share(PointSet::from_points(1, {{Rat(1, 3), 1}, {Rat(2, 3), 1}, {Rat(1), 1}}));
  DInterval iv{{LevelInterval::closed(Rat(1, 3), Rat(2, 3))}};
  const auto t = trace_of(iv, p);
  CHECK(t.size() == 2);
  CHECK(*t.level_max(1) == Rat(2, 3));
  CHECK(to_string(*f_value(t).comps[0]) == "2/3");
}
