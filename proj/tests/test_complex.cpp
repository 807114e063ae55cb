#include "support.hpp"

#include <doctest.h>

using namespace helly;
using namespace helly::test;

namespace {

PointSetPtr six() { return ground({{0, 1, 2}, {0, 1, 2}}); }

/// C1 = {(0,1),(1,1)}, C2 = {(0,2),(1,2)}, C3 = {(1,1),(0,2)}.
Family three_sets(const PointSetPtr& p) {
  return {box(p, {{{0, 1}}, std::nullopt}), box(p, {std::nullopt, {{0, 1}}}), box(p, {{{1, 1}}, {{0, 0}}})};
}

SimplicialComplex k5() {
  return SimplicialComplex({1, 2, 3}, {0, mask({1}), mask({2}), mask({3}), mask({1, 3}), mask({2, 3})});
}

std::vector<Face> sorted(std::vector<Face> f) {
  std::sort(f.begin(), f.end());
  return f;
}

void check_sweep(const Family& family, int d) {
  const auto r = sweep_collapse(family);
  CHECK(r.initial == nerve(family));
  CHECK(r.sequence.bound == 2 * d - 1);
  CHECK(!verify_collapse_sequence(r.initial, r.sequence));
  for (const auto& s : r.sequence.steps) CHECK(face_dim(s.free_face) <= 2 * d - 2);
}

}  // namespace

TEST_CASE("nerve examples") {
  const auto p = six();
  const auto fam = three_sets(p);
  CHECK(nerve(fam) == k5());
  CHECK(nerve(fam).faces() == brute_nerve(fam));
  CHECK(nerve(Family{fam[0]}).faces() == std::vector<Face>{0, mask({1})});
  const Family disjoint{box(p, {{{0, 0}}, std::nullopt}), box(p, {{{2, 2}}, std::nullopt})};
  CHECK(nerve(disjoint).faces() == std::vector<Face>{0, mask({1}), mask({2})});
  // An empty member keeps its label but is not a vertex.
  const Family with_empty{fam[0], TraceSet::empty(p), fam[2]};
  CHECK(nerve(with_empty).faces() == std::vector<Face>{0, mask({1}), mask({3}), mask({1, 3})});
}

TEST_CASE("nerve guard") {
  const auto p = six();
  Family many(21, box(p, {{{0, 2}}, std::nullopt}));
  CHECK_THROWS_AS(nerve(many), GuardError);
  Guards g;
  g.nerve_sets = 3;
  try {
    nerve(three_sets(p), g);
    nerve(Family(4, many[0]), g);
    FAIL("guard not enforced");
  } catch (const GuardError& e) {
    CHECK(e.limit() == 3);
    CHECK(std::string(e.what()).find("limit 3") != std::string::npos);
  }
}

TEST_CASE("nerve matches brute force and the serial kernel") {
  for (std::uint64_t s = 0; s < 400; ++s) {
    const int d = 1 + static_cast<int>(s % 3);
    const auto inst = random_instance(s, d, 1 + static_cast<int>(s % 6), 2 + s % 9, 1 + static_cast<long long>(s % 6),
                                      s % 2 ? 0.75 : 1.0);
    const auto k = nerve(inst.sets);
    CHECK(k.faces() == brute_nerve(inst.sets));
    CHECK(k == nerve_serial(inst.sets));
  }
}

TEST_CASE("elementary_collapse") {
  const auto k = k5();
  const auto c = elementary_collapse(k, mask({1}));
  CHECK(c.complex.faces() == sorted({0, mask({2}), mask({3}), mask({2, 3})}));
  CHECK(c.step.unique_maximal == mask({1, 3}));
  CHECK(c.step.removed == sorted({mask({1}), mask({1, 3})}));
  try {
    elementary_collapse(k, mask({3}));
    FAIL("expected NotFreeError");
  } catch (const NotFreeError& e) {
    CHECK(sorted(e.maximal()) == sorted({mask({1, 3}), mask({2, 3})}));
  }
  CHECK_THROWS_AS(elementary_collapse(k, mask({1, 2})), InputError);

  const SimplicialComplex point({1}, {0, mask({1})});
  const auto a = elementary_collapse(point, mask({1}));
  CHECK(a.complex.faces() == std::vector<Face>{0});
  const auto b = elementary_collapse(a.complex, 0);
  CHECK(b.complex.empty());
}

TEST_CASE("complexes must be downward closed") {
  CHECK_THROWS_AS(SimplicialComplex({1, 2}, {0, mask({1, 2})}), InputError);
  const auto c = SimplicialComplex::closure({1, 2, 3}, {mask({1, 2, 3})});
  CHECK(c.faces().size() == 8);
  CHECK(c.dim() == 2);
}

TEST_CASE("sweep on two intervals") {
  const auto p = ground({{0, 1, 2, 3}});
  const Family fam{box(p, {{{0, 2}}}), box(p, {{{1, 3}}})};
  const auto r = sweep_collapse(fam);
  REQUIRE(r.sequence.steps.size() == 2);
  CHECK(r.sequence.steps[0].free_face == mask({1}));
  CHECK(r.sequence.steps[1].free_face == mask({2}));
  CHECK(*r.info[0].f.comps[0] == Rat(2));
  CHECK(r.info[0].support_size == 1);
  CHECK(r.info[0].rule == SweepRule::lexmin);
  CHECK(r.fallback_steps == 0);
  CHECK(!verify_collapse_sequence(r.initial, r.sequence));
  for (const auto& s : r.sequence.steps) CHECK(face_dim(s.free_face) == 0);
}

TEST_CASE("sweep on the three-set family") {
  const auto fam = three_sets(six());
  const auto r = sweep_collapse(fam, {}, SweepMode::literal);
  REQUIRE(r.sequence.steps.size() == 4);
  CHECK(r.sequence.steps[0].free_face == mask({2, 3}));
  CHECK(r.sequence.steps[1].free_face == mask({2}));
  CHECK(r.sequence.steps[2].free_face == mask({1}));
  CHECK(r.sequence.steps[3].free_face == mask({3}));
  for (const auto& s : r.sequence.steps) CHECK(face_dim(s.free_face) <= 2);
  CHECK(!verify_collapse_sequence(r.initial, r.sequence));
  CHECK(is_d_collapsible(r.initial, 3).collapsible);
}

TEST_CASE("sweep on the empty family") {
  const auto r = sweep_collapse(Family{});
  CHECK(r.sequence.steps.empty());
}

TEST_CASE("lexmin truncation can empty every supported set") {
  // C1 and C2 meet only on level 1; f of the pair is (3, −∞). Clearing level
  // 2 from both empties them, while coll(K, {1,2}) keeps both vertices.
  const auto p = ground({{0, 2, 3}, {2, 6, 9}});
  const Family fam{box(p, {{{2, 3}}, {{9, 9}}}), box(p, {{{0, 3}}, {{6, 6}}})};
  CHECK_THROWS_AS(sweep_collapse(fam, {}, SweepMode::literal), TheoremViolation);
  const auto truncated = truncate_family(fam, {0, 1}, 1, Rat(3));
  CHECK(truncated[0].empty());
  CHECK(truncated[1].empty());

  const auto r = sweep_collapse(fam);
  CHECK(r.fallback_steps >= 1);
  CHECK(!verify_collapse_sequence(r.initial, r.sequence));
  for (const auto& s : r.sequence.steps) CHECK(face_dim(s.free_face) <= 2);
}

TEST_CASE("truncate_family") {
  const auto p = six();
  const Family fam{box(p, {{{0, 2}}, {{0, 2}}}), box(p, {{{0, 2}}, {{0, 2}}})};
  const auto t = truncate_family(fam, {0}, 1, Rat(1));
  CHECK(t[0].points() == std::vector<Point>{pt(2, 1)});
  CHECK(t[1] == fam[1]);
  const auto top = truncate_family(fam, {0}, 2, Rat(0));
  CHECK(top[0].points() == std::vector<Point>{pt(0, 1), pt(1, 1), pt(2, 1), pt(1, 2), pt(2, 2)});
  const auto below = truncate_family(fam, {0}, 1, Rat(-5));
  CHECK(below[0].run(1) == fam[0].run(1));
  CHECK(!below[0].run(2));
}

TEST_CASE("sweep validity and step conservation on random families") {
  std::size_t literal_failures = 0;
  for (std::uint64_t s = 0; s < 600; ++s) {
    const int d = 1 + static_cast<int>(s % 3);
    const auto inst = random_instance(5000 + s, d, 1 + static_cast<int>(s % 6), 2 + s % 7,
                                      1 + static_cast<long long>(s % 6), s % 2 ? 0.75 : 1.0);
    check_sweep(inst.sets, d);
    try {
      sweep_collapse(inst.sets, {}, SweepMode::literal);
    } catch (const TheoremViolation& e) {
      ++literal_failures;
      CHECK(std::string(e.what()).find("sigma") != std::string::npos);
    }
  }
  // The lexmin rule alone is not enough on this corpus.
  CHECK(literal_failures > 0);
}

TEST_CASE("the lexmin rule is exact in one dimension") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto inst = random_instance(9000 + s, 1, 1 + static_cast<int>(s % 8), 2 + s % 7,
                                      static_cast<long long>(s % 6), s % 2 ? 0.75 : 1.0);
    const auto r = sweep_collapse(inst.sets, {}, SweepMode::literal);
    CHECK(!verify_collapse_sequence(r.initial, r.sequence));
  }
}

TEST_CASE("collapsibility oracle") {
  const auto tri = SimplicialComplex::closure({1, 2, 3}, {mask({1, 2}), mask({1, 3}), mask({2, 3})});
  CHECK(!is_d_collapsible(tri, 1).collapsible);
  const auto two = is_d_collapsible(tri, 2);
  REQUIRE(two.collapsible);
  REQUIRE(two.witness);
  CHECK(!verify_collapse_sequence(tri, *two.witness));
  const auto full = SimplicialComplex::closure({1, 2, 3}, {mask({1, 2, 3})});
  const auto f1 = is_d_collapsible(full, 1);
  CHECK(f1.collapsible);
  CHECK(!verify_collapse_sequence(full, *f1.witness));
  Guards g;
  g.collapse_faces = 4;
  CHECK_THROWS_AS(is_d_collapsible(full, 1, g), GuardError);
}

TEST_CASE("oracle agrees with the sweep on random nerves") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const int d = 1 + static_cast<int>(s % 2);
    const auto inst = random_instance(20000 + s, d, 2 + static_cast<int>(s % 4), 2 + s % 6, 3);
    const auto k = nerve(inst.sets);
    const auto o = is_d_collapsible(k, 2 * d - 1);
    CHECK(o.collapsible);
    CHECK(!verify_collapse_sequence(k, *o.witness));
    const auto r = sweep_collapse(inst.sets);
    CHECK(!verify_collapse_sequence(k, r.sequence));
  }
}

TEST_CASE("replay rejects bad sequences") {
  const auto k = k5();
  CollapseSequence seq{1, {}};
  CHECK(verify_collapse_sequence(k, seq));
  const auto c = elementary_collapse(k, mask({1, 3}));
  seq.steps.push_back(c.step);
  // dim 1 exceeds bound − 1 = 0.
  CHECK(verify_collapse_sequence(k, seq));
}

TEST_CASE("colorful_face_stats") {
  const auto edge = SimplicialComplex::closure({1, 2}, {mask({1, 2})});
  const auto s1 = colorful_face_stats(edge, {{1}, {2}});
  CHECK(s1.colorful_faces == 1);
  CHECK(s1.induced_dims == std::vector<int>{0, 0});
  const auto pair = SimplicialComplex({1, 2}, {0, mask({1}), mask({2})});
  CHECK(colorful_face_stats(pair, {{1}, {2}}).colorful_faces == 0);
  const auto s3 = colorful_face_stats(k5(), {{1, 2}, {3}});
  CHECK(s3.colorful_faces == 2);
  CHECK(s3.induced_dims == std::vector<int>{0, 0});
  CHECK_THROWS_AS(colorful_face_stats(k5(), {{1, 2}, {2, 3}}), InputError);
  CHECK_THROWS_AS(colorful_face_stats(k5(), {{1}, {3}}), InputError);
}

TEST_CASE("colorful consistency on one-dimensional nerves") {
  // Nerves of interval families are 1-collapsible. With two classes and
  // α·n1·n2 colorful edges, some class has dim K[N_i] + 1 >= (1 − √(1−α))·n_i,
  // i.e. 1 − α >= (1 − (dim + 1)/n_i)² whenever the right side's base is positive.
  std::size_t tested = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto inst = random_instance(30000 + s, 1, 6, 4 + s % 5, 5);
    const auto k = nerve(inst.sets);
    std::vector<int> verts;
    for (std::size_t j = 0; j < inst.sets.size(); ++j) {
      if (!inst.sets[j].empty()) verts.push_back(static_cast<int>(j + 1));
    }
    const auto half = static_cast<long>(verts.size() / 2);
    const std::vector<std::vector<int>> classes{{verts.begin(), verts.begin() + half}, {verts.begin() + half, verts.end()}};
    const auto st = colorful_face_stats(k, classes);
    if (st.colorful_faces == 0) continue;
    ++tested;
    const Rat alpha = Rat(static_cast<unsigned long>(st.colorful_faces)) /
                      Rat(static_cast<unsigned long>(classes[0].size() * classes[1].size()));
    bool ok = false;
    for (std::size_t i = 0; i < 2; ++i) {
      const Rat base = 1 - Rat(st.induced_dims[i] + 1) / Rat(static_cast<unsigned long>(classes[i].size()));
      ok = ok || base <= 0 || 1 - alpha >= base * base;
    }
    CHECK(ok);
  }
  CHECK(tested > 100);
}
