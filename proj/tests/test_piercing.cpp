#include "support.hpp"

#include "helly/combinatorics.hpp"
#include "helly/experiment.hpp"
#include "helly/lp.hpp"
#include "helly/piercing.hpp"

#include <doctest.h>

using namespace helly;
using namespace helly::test;

namespace {

/// Smallest transversal by trying every subset of candidate points.
std::size_t brute_tau(const Family& fam) {
  const auto cands = piercing_candidates(fam);
  for (std::size_t r = 0; r <= cands.size(); ++r) {
    bool found = false;
    for_each_combination(cands.size(), r, [&](const std::vector<std::size_t>& combo) {
      std::vector<Point> pts;
      for (auto i : combo) pts.push_back(cands[i]);
      found = is_transversal(fam, pts);
      return !found;
    });
    if (found) return r;
  }
  return cands.size();
}

std::size_t brute_nu(const Family& fam) {
  std::size_t best = 0;
  const auto n = fam.size();
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j) {
      if (m >> j & 1u) idx.push_back(j);
    }
    if (idx.size() > best && pairwise_disjoint(fam, idx)) best = idx.size();
  }
  return best;
}

Family nonempty_members(const Family& fam) {
  Family out;
  for (const auto& t : fam) {
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("the d = 2 triple") {
  const auto inst = example_triple();
  const auto r = pierce(inst.sets);
  CHECK(r.tau.tau == 2);
  CHECK(is_transversal(inst.sets, r.tau.points));
  CHECK(r.nu.nu == 1);
  CHECK(r.fractional.nu_star == Rat(3, 2));
  CHECK(r.fractional.tau_star == Rat(3, 2));
  CHECK(r.fractional.lp.certified);
  for (const auto& w : r.fractional.lp.primal) CHECK(w == Rat(1, 2));
  CHECK(r.sandwich_holds);
  const auto tk = tardos_kaiser_check(inst.sets);
  CHECK(tk.holds);
  CHECK(tk.factor == 2);
  CHECK(tk.tau == tk.factor * static_cast<long long>(tk.nu));
}

TEST_CASE("piercing on simple families") {
  const auto p = ground({{0, 1, 2, 3}, {0, 1}});
  const Family common{box(p, {{{0, 2}}, std::nullopt}), box(p, {{{1, 3}}, {{0, 1}}}), box(p, {{{1, 1}}, std::nullopt})};
  const auto c = pierce(common);
  CHECK(c.tau.tau == 1);
  CHECK(c.fractional.nu_star == 1);
  CHECK(c.fractional.tau_star == 1);
  const Family disjoint{box(p, {{{0, 0}}, std::nullopt}), box(p, {{{2, 3}}, std::nullopt}),
                        box(p, {std::nullopt, {{1, 1}}})};
  const auto d = pierce(disjoint);
  CHECK(d.tau.tau == 3);
  CHECK(d.nu.nu == 3);
  CHECK(d.fractional.nu_star == 3);
  const auto q = ground({{0, 1, 2, 3}});
  const Family chain{box(q, {{{0, 1}}}), box(q, {{{2, 3}}}), box(q, {{{1, 2}}})};
  const auto nu = nu_exact(chain);
  CHECK(nu.nu == 2);
  CHECK(nu.subfamily == std::vector<std::size_t>{0, 1});
  const Family two{box(q, {{{0, 1}}}), box(q, {{{2, 3}}})};
  const auto tk = tardos_kaiser_check(two);
  CHECK(tk.tau == 2);
  CHECK(tk.nu == 2);
  CHECK(tk.holds);
  CHECK_THROWS_AS(pierce(Family{box(q, {{{0, 1}}}), TraceSet::empty(q)}), InputError);
}

TEST_CASE("piercing numbers against brute force") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int d = 1 + static_cast<int>(s % 3);
    const auto inst = random_instance(800 + s, d, 4, 2 + s % 6, 3, 0.8);
    const auto fam = nonempty_members(inst.sets);
    if (fam.empty()) continue;
    const auto r = pierce(fam);
    CHECK(r.tau.tau == brute_tau(fam));
    CHECK(r.nu.nu == brute_nu(fam));
    CHECK(is_transversal(fam, r.tau.points));
    CHECK(pairwise_disjoint(fam, r.nu.subfamily));
    CHECK(r.fractional.nu_star == r.fractional.tau_star);
    CHECK(r.fractional.lp.certified);
    CHECK(Rat(static_cast<unsigned long>(r.nu.nu)) <= r.fractional.nu_star);
    CHECK(r.fractional.tau_star <= Rat(static_cast<unsigned long>(r.tau.tau)));
    CHECK(r.sandwich_holds);
    if (d >= 2) CHECK(tardos_kaiser_check(fam).holds);
  }
}

TEST_CASE("exact simplex") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
  const std::vector<std::vector<Rat>> a{{1, 2}, {3, 1}};
  const std::vector<Rat> b{4, 6};
  const std::vector<Rat> c{1, 1};
  const auto sol = solve_packing_lp(a, b, c);
  CHECK(sol.objective == Rat(14, 5));
  CHECK(sol.primal == std::vector<Rat>{Rat(8, 5), Rat(6, 5)});
  CHECK(sol.certified);
  CHECK(check_certificate(a, b, c, sol));
  auto broken = sol;
  broken.dual[0] += 1;
  CHECK(!check_certificate(a, b, c, broken));
  CHECK_THROWS_AS(solve_packing_lp(a, {-1, 6}, c), InputError);
  CHECK_THROWS_AS(solve_packing_lp({{-1, 0}}, {1}, {1, 0}), std::domain_error);
}

TEST_CASE("pq checks") {
  const auto q = ground({{0, 1, 2, 3}});
  const Family chain{box(q, {{{0, 1}}}), box(q, {{{2, 3}}}), box(q, {{{1, 2}}})};
  CHECK(pq_check({chain}, 3, 2, PqKind::plain).holds);
  const Family apart{box(q, {{{0, 0}}}), box(q, {{{2, 2}}}), box(q, {{{3, 3}}})};
  const auto r = pq_check({apart}, 3, 2, PqKind::plain);
  CHECK(!r.holds);
  CHECK(r.counterexample == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  const auto split = pq_check({chain, chain}, 2, 2, PqKind::colorful_second);
  CHECK(!split.holds);
  CHECK(split.counterexample == std::vector<std::vector<std::size_t>>{{0, 1}});
  const Family meet{box(q, {{{0, 1}}}), box(q, {{{1, 2}}})};
  CHECK(pq_check({meet, chain}, 2, 2, PqKind::colorful_second).holds == false);
  CHECK(pq_check({meet, meet}, 2, 2, PqKind::colorful_second).holds);
  CHECK_THROWS_AS(pq_check({chain}, 4, 2, PqKind::plain), InputError);
  CHECK(parse_pq_kind("colorful-first") == PqKind::colorful_first);
  CHECK_THROWS_AS(parse_pq_kind("other"), InputError);
}

TEST_CASE("blow_up") {
  const auto q = ground({{0, 1}});
  const Family fam{box(q, {{{0, 0}}}), box(q, {{{1, 1}}})};
  const auto b = blow_up(fam, {2, 1});
  CHECK(b.sets == Family{fam[0], fam[0], fam[1]});
  CHECK(b.origin == std::vector<std::size_t>{0, 0, 1});
}
