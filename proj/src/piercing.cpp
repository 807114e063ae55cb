#include "helly/piercing.hpp"

#include "helly/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace helly {

namespace {

using SetMask = std::uint64_t;
constexpr std::size_t kMaxSets = 64;

void require_pierceable(const Family& family, const Guards& guards) {
  const std::size_t limit = std::min(guards.pierce_sets, kMaxSets);
  if (family.size() > limit) {
    throw GuardError("piercing search over " + std::to_string(family.size()) + " sets", limit);
  }
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (family[j].empty()) throw InputError("member " + std::to_string(j) + " is empty; tau is undefined");
    if (family[j].ground() != family[0].ground()) throw InputError("family mixes ground sets");
  }
}

/// For each candidate point, the mask of members containing it.
std::vector<SetMask> coverage(const Family& family, const std::vector<Point>& candidates) {
  std::vector<SetMask> cover(candidates.size(), 0);
  for (std::size_t x = 0; x < candidates.size(); ++x) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (family[j].contains(candidates[x])) cover[x] |= SetMask{1} << j;
    }
  }
  return cover;
}

std::vector<SetMask> intersection_graph(const Family& family) {
  std::vector<SetMask> adj(family.size(), 0);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!intersect(family[i], family[j]).empty()) {
        adj[i] |= SetMask{1} << j;
        adj[j] |= SetMask{1} << i;
      }
    }
  }
  return adj;
}

int lowest(SetMask m) { return std::countr_zero(m); }

struct HittingSearch {
  const std::vector<SetMask>& cover;
  const std::vector<SetMask>& adj;
  std::vector<std::vector<std::size_t>> points_of_set;
  std::size_t lower_bound;
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  std::size_t nodes = 0;
  bool done = false;

  /// Greedy packing of pairwise-disjoint uncovered sets; each needs its own point.
  std::size_t packing_bound(SetMask uncovered) const {
    std::size_t count = 0;
    while (uncovered) {
      const int j = lowest(uncovered);
      uncovered &= ~(adj[j] | (SetMask{1} << j));
      ++count;
    }
    return count;
  }

  void run(SetMask uncovered) {
    if (done) return;
    ++nodes;
    if (uncovered == 0) {
      if (current.size() < best.size()) {
        best = current;
        if (best.size() <= lower_bound) done = true;
      }
      return;
    }
    if (current.size() + packing_bound(uncovered) >= best.size()) return;
    // Branch on the uncovered set with the fewest candidate points.
    int pick = -1;
    for (SetMask m = uncovered; m; m &= m - 1) {
      const int j = lowest(m);
      if (pick < 0 || points_of_set[j].size() < points_of_set[pick].size()) pick = j;
    }
    auto options = points_of_set[pick];
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(cover[a] & uncovered) > std::popcount(cover[b] & uncovered);
    });
    for (auto x : options) {
      current.push_back(x);
      run(uncovered & ~cover[x]);
      current.pop_back();
      if (done) return;
    }
  }
};

struct IndependentSearch {
  const std::vector<SetMask>& adj;
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;

  void run(SetMask cand) {
    if (current.size() + static_cast<std::size_t>(std::popcount(cand)) <= best.size()) return;
    if (cand == 0) {
      best = current;
      return;
    }
    const int v = lowest(cand);
    const SetMask bit = SetMask{1} << v;
    current.push_back(static_cast<std::size_t>(v));
    run(cand & ~adj[v] & ~bit);
    current.pop_back();
    run(cand & ~bit);
  }
};

}  // namespace

std::vector<Point> piercing_candidates(const Family& family) {
  std::vector<Point> out;
  if (family.empty()) return out;
  for (const auto& p : family.front().ground()->points()) {
    if (std::any_of(family.begin(), family.end(), [&](const TraceSet& c) { return c.contains(p); })) out.push_back(p);
  }
  return out;
}

bool is_transversal(const Family& family, const std::vector<Point>& points) {
  return std::all_of(family.begin(), family.end(), [&](const TraceSet& c) {
    return std::any_of(points.begin(), points.end(), [&](const Point& p) { return c.contains(p); });
  });
}

bool pairwise_disjoint(const Family& family, const std::vector<std::size_t>& subfamily) {
  for (std::size_t a = 0; a < subfamily.size(); ++a) {
    for (std::size_t b = a + 1; b < subfamily.size(); ++b) {
      if (!intersect(family.at(subfamily[a]), family.at(subfamily[b])).empty()) return false;
    }
  }
  return true;
}

FractionalResult fractional_lp(const Family& family, const Guards& guards) {
  require_pierceable(family, guards);
  FractionalResult out;
  out.candidates = piercing_candidates(family);
  std::vector<std::vector<Rat>> a(out.candidates.size(), std::vector<Rat>(family.size(), Rat(0)));
  for (std::size_t x = 0; x < out.candidates.size(); ++x) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (family[j].contains(out.candidates[x])) a[x][j] = 1;
    }
  }
  out.lp = solve_packing_lp(a, std::vector<Rat>(out.candidates.size(), Rat(1)),
                            std::vector<Rat>(family.size(), Rat(1)));
  out.nu_star = out.lp.objective;
  out.tau_star = 0;
  for (const auto& y : out.lp.dual) out.tau_star += y;
  return out;
}

TauResult tau_exact(const Family& family, const Guards& guards) {
  require_pierceable(family, guards);
  TauResult out;
  if (family.empty()) return out;
  const auto candidates = piercing_candidates(family);
  const auto cover = coverage(family, candidates);
  const auto adj = intersection_graph(family);

  // ⌈τ*⌉ is a global lower bound: stop as soon as it is met.
  const Rat tau_star = fractional_lp(family, guards).tau_star;
  mpz_class ceil_star;
  mpz_cdiv_q(ceil_star.get_mpz_t(), tau_star.get_num_mpz_t(), tau_star.get_den_mpz_t());

  HittingSearch search{cover, adj, {}, ceil_star.get_ui(), {}, {}, 0, false};
  search.points_of_set.resize(family.size());
  for (std::size_t x = 0; x < candidates.size(); ++x) {
    for (SetMask m = cover[x]; m; m &= m - 1) search.points_of_set[lowest(m)].push_back(x);
  }
  // Greedy upper bound seeds the search.
  SetMask uncovered = family.size() == 64 ? ~SetMask{0} : ((SetMask{1} << family.size()) - 1);
  while (uncovered) {
    std::size_t best_x = 0;
    int best_gain = -1;
    for (std::size_t x = 0; x < candidates.size(); ++x) {
      int gain = std::popcount(cover[x] & uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best_x = x;
      }
    }
    search.best.push_back(best_x);
    uncovered &= ~cover[best_x];
  }
  if (search.best.size() > search.lower_bound) {
    search.run(family.size() == 64 ? ~SetMask{0} : ((SetMask{1} << family.size()) - 1));
  }
  out.tau = search.best.size();
  for (auto x : search.best) out.points.push_back(candidates[x]);
  out.nodes = search.nodes;
  return out;
}

NuResult nu_exact(const Family& family, const Guards& guards) {
  require_pierceable(family, guards);
  const auto adj = intersection_graph(family);
  IndependentSearch search{adj, {}, {}};
  search.run(family.size() == 64 ? ~SetMask{0} : ((SetMask{1} << family.size()) - 1));
  std::sort(search.best.begin(), search.best.end());
  return {search.best.size(), search.best};
}

PiercingResult pierce(const Family& family, const Guards& guards) {
  PiercingResult out;
  out.tau = tau_exact(family, guards);
  out.nu = nu_exact(family, guards);
  out.fractional = fractional_lp(family, guards);
  const Rat nu(static_cast<unsigned long>(out.nu.nu));
  const Rat tau(static_cast<unsigned long>(out.tau.tau));
  out.sandwich_holds = out.fractional.lp.certified && out.fractional.nu_star == out.fractional.tau_star &&
                       nu <= out.fractional.nu_star && out.fractional.tau_star <= tau &&
                       is_transversal(family, out.tau.points) && pairwise_disjoint(family, out.nu.subfamily);
  return out;
}

std::string to_string(PqKind kind) {
  switch (kind) {
    case PqKind::plain: return "plain";
    case PqKind::colorful_first: return "colorful-first";
    case PqKind::colorful_second: return "colorful-second";
  }
  return "unknown";
}

PqKind parse_pq_kind(const std::string& text) {
  if (text == "plain") return PqKind::plain;
  if (text == "colorful-first") return PqKind::colorful_first;
  if (text == "colorful-second") return PqKind::colorful_second;
  throw InputError("unknown (p,q) kind \"" + text + "\"");
}

PqResult pq_check(const std::vector<Family>& families, int p, int q, PqKind kind) {
  if (q < 1 || p < q) throw InputError("(p,q) needs p >= q >= 1");
  const auto up = static_cast<std::size_t>(p);
  const auto uq = static_cast<std::size_t>(q);
  std::size_t total_sets = 0;
  for (const auto& f : families) total_sets += f.size();
  if (total_sets == 0) throw InputError("(p,q) check over no sets");
  for (const auto& f : families) {
    if (f.size() > kMaxSets) throw GuardError("(p,q) family of " + std::to_string(f.size()) + " sets", kMaxSets);
  }
  const PointSetPtr ground = [&] {
    for (const auto& f : families) {
      if (!f.empty()) return f.front().ground();
    }
    return PointSetPtr{};
  }();
  const auto points = ground->points();
  std::vector<std::vector<SetMask>> cover;
  for (const auto& f : families) cover.push_back(coverage(f, points));

  PqResult out;
  switch (kind) {
    case PqKind::plain: {
      if (families.size() != 1) throw InputError("plain (p,q) takes exactly one family");
      if (families[0].size() < up) throw InputError("plain (p,q) needs |F| >= p");
      out.holds = for_each_combination(families[0].size(), up, [&](const auto& combo) {
        SetMask chosen = 0;
        for (auto j : combo) chosen |= SetMask{1} << j;
        for (SetMask m : cover[0]) {
          if (static_cast<std::size_t>(std::popcount(m & chosen)) >= uq) return true;
        }
        out.counterexample = {combo};
        return false;
      });
      break;
    }
    case PqKind::colorful_first: {
      if (families.size() != uq) throw InputError("colorful-first (p,q) takes q families");
      std::vector<std::vector<std::vector<std::size_t>>> choices(uq);
      std::vector<std::size_t> sizes;
      for (std::size_t i = 0; i < uq; ++i) {
        if (families[i].size() < up) throw InputError("colorful-first (p,q) needs every family of size >= p");
        for_each_combination(families[i].size(), up, [&](const auto& combo) {
          choices[i].push_back(combo);
          return true;
        });
        sizes.push_back(choices[i].size());
      }
      out.holds = for_each_product(sizes, [&](const auto& pick) {
        std::vector<SetMask> chosen(uq, 0);
        for (std::size_t i = 0; i < uq; ++i) {
          for (auto j : choices[i][pick[i]]) chosen[i] |= SetMask{1} << j;
        }
        for (std::size_t x = 0; x < points.size(); ++x) {
          bool all = true;
          for (std::size_t i = 0; i < uq && all; ++i) all = (cover[i][x] & chosen[i]) != 0;
          if (all) return true;
        }
        out.counterexample.clear();
        for (std::size_t i = 0; i < uq; ++i) out.counterexample.push_back(choices[i][pick[i]]);
        return false;
      });
      break;
    }
    case PqKind::colorful_second: {
      if (families.size() != up) throw InputError("colorful-second (p,q) takes p families");
      std::vector<std::size_t> sizes;
      for (const auto& f : families) sizes.push_back(f.size());
      out.holds = for_each_product(sizes, [&](const auto& tuple) {
        for (std::size_t x = 0; x < points.size(); ++x) {
          std::size_t depth = 0;
          for (std::size_t i = 0; i < up; ++i) depth += (cover[i][x] >> tuple[i]) & 1u;
          if (depth >= uq) return true;
        }
        out.counterexample = {tuple};
        return false;
      });
      break;
    }
  }
  return out;
}

BlowUp blow_up(const Family& family, const std::vector<std::size_t>& multiplicities) {
  if (family.size() != multiplicities.size()) throw InputError("one multiplicity per member required");
  BlowUp out;
  for (std::size_t j = 0; j < family.size(); ++j) {
    for (std::size_t c = 0; c < multiplicities[j]; ++c) {
      out.sets.push_back(family[j]);
      out.origin.push_back(j);
    }
  }
  return out;
}

TardosKaiserResult tardos_kaiser_check(const Family& family, const Guards& guards) {
  TardosKaiserResult out;
  out.tau = tau_exact(family, guards).tau;
  out.nu = nu_exact(family, guards).nu;
  const long long d = family.empty() ? 1 : family.front().dims();
  out.factor = d * d - d;
  if (d == 1) {
    out.holds = out.tau == out.nu;
  } else {
    out.holds = static_cast<long long>(out.tau) <= out.factor * static_cast<long long>(out.nu);
  }
  return out;
}

}  // namespace helly
