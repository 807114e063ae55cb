#include "helly/helly.hpp"

#include "helly/combinatorics.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

namespace helly {

namespace {

int family_dims(const Family& family) {
  if (family.empty()) throw InputError("family is empty");
  return family.front().dims();
}

void require_subset(const PointSetPtr& ground, const std::vector<Point>& subset) {
  std::set<Point> seen;
  for (const auto& p : subset) {
    if (!ground->contains(p)) {
      throw InputError("point (" + to_string(p.coord) + ", " + std::to_string(p.level) + ") is not in P");
    }
    if (!seen.insert(p).second) throw InputError("point listed twice in subset");
  }
}

std::optional<Point> first_point(const TraceSet& t) {
  for (int level = 1; level <= t.dims(); ++level) {
    if (const auto& r = t.run(level)) return Point{t.ground()->coord(level, r->first), level};
  }
  return std::nullopt;
}

/// Depth-first walk over colorful tuples with incremental intersections.
/// fn(tuple, intersection) returns false to stop; returns false iff stopped.
bool walk_colorful(const std::vector<const Family*>& families, std::vector<std::size_t>& tuple,
                   const std::optional<TraceSet>& acc,
                   const std::function<bool(const std::vector<std::size_t>&, const TraceSet&)>& fn) {
  const std::size_t depth = tuple.size();
  if (depth == families.size()) return fn(tuple, *acc);
  const Family& fam = *families[depth];
  for (std::size_t j = 0; j < fam.size(); ++j) {
    tuple.push_back(j);
    std::optional<TraceSet> next = acc ? intersect(*acc, fam[j]) : fam[j];
    bool go = walk_colorful(families, tuple, next, fn);
    tuple.pop_back();
    if (!go) return false;
  }
  return true;
}

/// Same over r-subsets of one family.
bool walk_subsets(const Family& family, std::size_t r, std::size_t start, std::vector<std::size_t>& chosen,
                  const std::optional<TraceSet>& acc,
                  const std::function<bool(const std::vector<std::size_t>&, const TraceSet&)>& fn) {
  if (chosen.size() == r) return fn(chosen, *acc);
  const std::size_t need = r - chosen.size();
  for (std::size_t j = start; j + need <= family.size(); ++j) {
    chosen.push_back(j);
    std::optional<TraceSet> next = acc ? intersect(*acc, family[j]) : family[j];
    bool go = walk_subsets(family, r, j + 1, chosen, next, fn);
    chosen.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace

std::string to_string(HellyMode mode) {
  switch (mode) {
    case HellyMode::plain: return "plain";
    case HellyMode::colorful: return "colorful";
    case HellyMode::k_intersect: return "k-intersect";
    case HellyMode::fractional: return "fractional";
    case HellyMode::colorful_fractional: return "colorful-fractional";
  }
  return "unknown";
}

bool verify_radon(const PointSetPtr& ground, const RadonPartition& partition) {
  auto a = hull(ground, partition.first);
  auto b = hull(ground, partition.second);
  return a.contains(partition.witness) && b.contains(partition.witness);
}

std::optional<RadonPartition> radon_partition_search(const PointSetPtr& ground, const std::vector<Point>& subset) {
  require_subset(ground, subset);
  const std::size_t m = subset.size();
  if (m < 2) return std::nullopt;
  if (m > 30) throw GuardError("Radon split search over " + std::to_string(m) + " points", 30);
  const std::uint64_t splits = std::uint64_t{1} << (m - 1);
  for (std::uint64_t mask = 0; mask < splits; ++mask) {
    RadonPartition part;
    part.first.push_back(subset[0]);
    for (std::size_t i = 1; i < m; ++i) {
      ((mask >> (i - 1)) & 1u ? part.first : part.second).push_back(subset[i]);
    }
    if (part.second.empty()) continue;
    auto meet = intersect(hull(ground, part.first), hull(ground, part.second));
    if (auto w = first_point(meet)) {
      part.witness = *w;
      return part;
    }
  }
  return std::nullopt;
}

std::optional<RadonPartition> radon_partition(const PointSetPtr& ground, const std::vector<Point>& subset) {
  require_subset(ground, subset);
  const int d = ground->dims();
  if (static_cast<int>(subset.size()) >= 2 * d + 1) {
    for (int level = 1; level <= d; ++level) {
      std::vector<std::size_t> on_level;
      for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i].level == level) on_level.push_back(i);
      }
      if (on_level.size() < 3) continue;
      std::sort(on_level.begin(), on_level.end(),
                [&](std::size_t a, std::size_t b) { return subset[a].coord < subset[b].coord; });
      const std::size_t middle = on_level[1];
      RadonPartition part;
      part.constructive = true;
      part.first.push_back(subset[middle]);
      for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i != middle) part.second.push_back(subset[i]);
      }
      part.witness = subset[middle];
      if (!verify_radon(ground, part)) throw TheoremViolation("constructed Radon partition does not verify");
      return part;
    }
    throw TheoremViolation("pigeonhole failed: no level holds three points of a (2d+1)-set");
  }
  return radon_partition_search(ground, subset);
}

std::optional<int> radon_number_bruteforce(const PointSetPtr& ground, int cap, const Guards& guards) {
  const auto all = ground->points();
  if (all.size() > guards.radon_points) {
    throw GuardError("Radon number over " + std::to_string(all.size()) + " points", guards.radon_points);
  }
  for (int n = 1; n <= cap; ++n) {
    if (static_cast<std::size_t>(n) > all.size()) return n;
    bool every = for_each_combination(all.size(), static_cast<std::size_t>(n), [&](const auto& combo) {
      std::vector<Point> subset;
      for (auto i : combo) subset.push_back(all[i]);
      return radon_partition_search(ground, subset).has_value();
    });
    if (every) return n;
  }
  return std::nullopt;
}

HellyReport helly_check(const Family& family, int m, int k) {
  HellyReport rep;
  rep.mode = k == 1 ? HellyMode::plain : HellyMode::k_intersect;
  rep.params = {{"m", m}, {"k", k}, {"n", static_cast<long long>(family.size())}};
  if (m < 1) throw InputError("m must be at least 1");
  if (family.empty()) {
    rep.note = "empty family";
    return rep;
  }
  const int d = family_dims(family);
  if (k < 1 || k > d) throw InputError("k must lie in [1, d]");
  rep.params["d"] = d;
  const std::size_t s = std::min<std::size_t>(static_cast<std::size_t>(m), family.size());
  std::vector<std::size_t> chosen;
  bool hypothesis = walk_subsets(family, s, 0, chosen, std::nullopt, [&](const auto& combo, const TraceSet& meet) {
    if (meet.level_count() >= k) return true;
    rep.witness_indices = combo;
    return false;
  });
  if (!hypothesis) {
    rep.hypothesis_held = false;
    rep.note = "hypothesis fails on a subfamily of size " + std::to_string(s) + "; verdict vacuous";
    return rep;
  }
  auto whole = intersect_all(family);
  if (whole.level_count >= k) {
    rep.note = "family " + std::to_string(k) + "-intersects";
    rep.witness_points = whole.trace.points();
    return rep;
  }
  rep.verdict = false;
  rep.note = "every " + std::to_string(s) + " members " + std::to_string(k) +
             "-intersect but the family meets only " + std::to_string(whole.level_count) + " levels";
  rep.witness_indices.resize(family.size());
  for (std::size_t j = 0; j < family.size(); ++j) rep.witness_indices[j] = j;
  rep.witness_points = whole.trace.points();
  return rep;
}

std::vector<std::size_t> lemma2_witness(const Family& family, int k) {
  const int d = family_dims(family);
  auto whole = intersect_all(family);
  if (whole.level_count < k) {
    throw InputError("family meets " + std::to_string(whole.level_count) + " levels, fewer than k = " +
                     std::to_string(k));
  }
  std::set<std::size_t> chosen;
  for (int level = 1; level <= d; ++level) {
    if (whole.trace.run(level)) {
      // One member attains the level maximum of the intersection.
      const std::size_t target = whole.trace.run(level)->last;
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (family[j].run(level)->last == target) {
          chosen.insert(j);
          break;
        }
      }
      continue;
    }
    // Empty level: either a member is empty there, or two enclosing
    // intervals on the line are disjoint (Helly on R).
    bool single = false;
    for (std::size_t j = 0; j < family.size() && !single; ++j) {
      if (!family[j].run(level)) {
        chosen.insert(j);
        single = true;
      }
    }
    if (single) continue;
    std::size_t left_end = 0;
    std::size_t right_start = 0;
    for (std::size_t j = 1; j < family.size(); ++j) {
      if (family[j].run(level)->last < family[left_end].run(level)->last) left_end = j;
      if (family[j].run(level)->first > family[right_start].run(level)->first) right_start = j;
    }
    chosen.insert(left_end);
    chosen.insert(right_start);
  }
  std::vector<std::size_t> out(chosen.begin(), chosen.end());
  Family sub;
  for (auto j : out) sub.push_back(family[j]);
  if (!(f_value(intersect_all(sub).trace) == f_value(whole.trace))) {
    throw TheoremViolation("witness subfamily does not reproduce f of the full intersection");
  }
  if (static_cast<int>(out.size()) > 2 * d - k) throw TheoremViolation("witness subfamily exceeds 2d-k members");
  return out;
}

bool colorful_property(const std::vector<Family>& families, int k, std::vector<std::size_t>* violating) {
  std::vector<const Family*> ptrs;
  for (const auto& f : families) ptrs.push_back(&f);
  std::vector<std::size_t> tuple;
  return walk_colorful(ptrs, tuple, std::nullopt, [&](const auto& t, const TraceSet& meet) {
    if (meet.level_count() >= k) return true;
    if (violating) *violating = t;
    return false;
  });
}

ColorfulHellyResult colorful_helly_points(const std::vector<Family>& families, int k,
                                          std::optional<std::size_t> designated) {
  if (families.empty()) throw InputError("no families given");
  for (const auto& f : families) {
    if (f.empty()) throw InputError("colorful Helly needs nonempty families");
  }
  const int d = families.front().front().dims();
  if (k < 1 || k > d) throw InputError("k must lie in [1, d]");
  const auto t = static_cast<std::size_t>(2 * d - k + 1);
  if (families.size() != t) {
    throw InputError("expected 2d-k+1 = " + std::to_string(t) + " families, got " + std::to_string(families.size()));
  }
  ColorfulHellyResult out;
  if (designated && *designated >= t) throw InputError("designated family index out of range");
  if (!colorful_property(families, k, &out.violating_tuple)) {
    out.precondition_held = false;
    out.designated = designated.value_or(t - 1);
    return out;
  }
  // Without a designation the minimum ranges over tuples from every choice
  // of 2d-k families, and the claim is checked on the family left out.
  std::optional<FLexValue> best;
  for (std::size_t omit = 0; omit < t; ++omit) {
    if (designated && omit != *designated) continue;
    std::vector<const Family*> drawing;
    for (std::size_t i = 0; i < t; ++i) {
      if (i != omit) drawing.push_back(&families[i]);
    }
    std::vector<std::size_t> tuple;
    walk_colorful(drawing, tuple, std::nullopt, [&](const auto& tup, const TraceSet& meet) {
      FLexValue f = f_value(meet);
      if (!best || f < *best) {
        best = std::move(f);
        out.designated = omit;
        out.minimizing_tuple = tup;
      }
      return true;
    });
  }
  out.points = best->first_finite(k);
  if (static_cast<int>(out.points.size()) < k) {
    throw TheoremViolation("minimising colorful tuple has fewer than k finite coordinates");
  }
  const Family& claim = families[out.designated];
  for (std::size_t j = 0; j < claim.size(); ++j) {
    for (const auto& p : out.points) {
      if (claim[j].contains(p)) continue;
      if (designated) return out;
      std::ostringstream os;
      os << "member " << j << " of family " << out.designated << " misses (" << to_string(p.coord) << ", "
         << p.level << ")";
      throw TheoremViolation(os.str());
    }
  }
  out.claim_holds = true;
  return out;
}

std::size_t max_intersecting_subfamily_serial(const Family& family) {
  if (family.empty()) return 0;
  const auto& ground = family.front().ground();
  std::size_t best = 0;
  for (int level = 1; level <= ground->dims(); ++level) {
    for (std::size_t i = 0; i < ground->level_size(level); ++i) {
      std::size_t count = 0;
      for (const auto& c : family) count += c.contains(level, i) ? 1 : 0;
      best = std::max(best, count);
    }
  }
  return best;
}

std::size_t max_intersecting_subfamily(const Family& family, std::vector<std::size_t>* members) {
  if (family.empty()) return 0;
  const auto all = family.front().ground()->points();
  const auto& ground = family.front().ground();
  std::vector<std::size_t> depth(all.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(all.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < count; ++p) {
    const auto idx = *ground->index_of(all[p]);
    std::size_t c = 0;
    for (const auto& set : family) c += set.contains(all[p].level, idx) ? 1 : 0;
    depth[p] = c;
  }
  // First maximum keeps the answer deterministic.
  auto it = std::max_element(depth.begin(), depth.end());
  if (it == depth.end()) return 0;
  if (members) {
    members->clear();
    const auto& p = all[static_cast<std::size_t>(it - depth.begin())];
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (family[j].contains(p)) members->push_back(j);
    }
  }
  return *it;
}

std::size_t max_k_intersecting_subfamily(const Family& family, int k, std::vector<Point>* points) {
  if (family.empty()) return 0;
  const auto& ground = family.front().ground();
  const int d = ground->dims();
  std::size_t best = 0;
  for_each_combination(static_cast<std::size_t>(d), static_cast<std::size_t>(k), [&](const auto& levels) {
    std::vector<std::size_t> sizes;
    for (auto l : levels) sizes.push_back(ground->level_size(static_cast<int>(l + 1)));
    for_each_product(sizes, [&](const auto& pick) {
      std::size_t c = 0;
      for (const auto& set : family) {
        bool all_in = true;
        for (std::size_t q = 0; q < levels.size() && all_in; ++q) {
          all_in = set.contains(static_cast<int>(levels[q] + 1), pick[q]);
        }
        c += all_in ? 1 : 0;
      }
      if (c > best) {
        best = c;
        if (points) {
          points->clear();
          for (std::size_t q = 0; q < levels.size(); ++q) {
            const int level = static_cast<int>(levels[q] + 1);
            points->push_back({ground->coord(level, pick[q]), level});
          }
        }
      }
      return true;
    });
    return true;
  });
  return best;
}

HellyReport frac_helly_stats(const Family& family, int k) {
  HellyReport rep;
  rep.mode = HellyMode::fractional;
  const int d = family_dims(family);
  if (k < 1 || k > d) throw InputError("k must lie in [1, d]");
  const auto t = static_cast<std::size_t>(2 * d - k + 1);
  const std::size_t n = family.size();
  rep.params = {{"d", d}, {"k", k}, {"n", static_cast<long long>(n)}, {"tuple_size", static_cast<long long>(t)}};
  if (n < t) {
    rep.hypothesis_held = false;
    rep.note = "alpha undefined: family smaller than 2d-k+1";
    return rep;
  }
  std::size_t good = 0;
  std::vector<std::size_t> chosen;
  walk_subsets(family, t, 0, chosen, std::nullopt, [&](const auto&, const TraceSet& meet) {
    good += meet.level_count() >= k ? 1 : 0;
    return true;
  });
  Rat alpha(mpz_class(static_cast<unsigned long>(good)), binomial(n, t));
  alpha.canonicalize();

  // Grouping construction: every k-intersecting (t−1)-tuple C0 and the sets
  // containing all finite maxima of its intersection.
  std::size_t construction = 0;
  std::vector<std::size_t> construction_members;
  walk_subsets(family, t - 1, 0, chosen, std::nullopt, [&](const auto&, const TraceSet& meet) {
    if (meet.level_count() < k) return true;
    const auto pts = f_value(meet).first_finite(d);
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return family[j].contains(p); })) {
        members.push_back(j);
      }
    }
    if (members.size() > construction) {
      construction = members.size();
      construction_members = std::move(members);
    }
    return true;
  });

  std::vector<Point> exact_points;
  const std::size_t exact = max_k_intersecting_subfamily(family, k, &exact_points);
  const Rat nn(static_cast<unsigned long>(n));
  rep.alpha = alpha;
  rep.beta_hat = Rat(static_cast<unsigned long>(exact)) / nn;
  rep.beta_required = alpha / Rat(static_cast<unsigned long>(t));
  rep.params["k_intersecting_tuples"] = static_cast<long long>(good);
  rep.params["construction_size"] = static_cast<long long>(construction);
  rep.params["exact_size"] = static_cast<long long>(exact);
  rep.witness_indices = construction_members;
  rep.witness_points = exact_points;
  const bool exact_ok = *rep.beta_hat >= *rep.beta_required;
  const bool construction_ok = Rat(static_cast<unsigned long>(construction)) / nn >= *rep.beta_required;
  rep.verdict = exact_ok && construction_ok && construction <= exact;
  if (!rep.verdict) rep.note = "fractional bound violated";
  return rep;
}

HellyReport cfh_stats(const std::vector<Family>& families) {
  HellyReport rep;
  rep.mode = HellyMode::colorful_fractional;
  if (families.empty() || families.front().empty()) throw InputError("cfh needs 2d nonempty families");
  const int d = families.front().front().dims();
  if (families.size() != static_cast<std::size_t>(2 * d)) {
    throw InputError("cfh needs exactly 2d = " + std::to_string(2 * d) + " families, got " +
                     std::to_string(families.size()));
  }
  for (const auto& f : families) {
    if (f.empty()) throw InputError("cfh needs 2d nonempty families");
  }
  rep.params = {{"d", d}, {"families", static_cast<long long>(families.size())}};

  std::vector<const Family*> ptrs;
  mpz_class total = 1;
  for (const auto& f : families) {
    ptrs.push_back(&f);
    total *= static_cast<unsigned long>(f.size());
  }
  unsigned long good = 0;
  std::vector<std::size_t> tuple;
  walk_colorful(ptrs, tuple, std::nullopt, [&](const auto&, const TraceSet& meet) {
    good += meet.empty() ? 0 : 1;
    return true;
  });
  Rat alpha(mpz_class(good), total);
  alpha.canonicalize();
  rep.alpha = alpha;
  rep.params["intersecting_tuples"] = static_cast<long long>(good);

  const Rat slack = 1 - alpha;
  rep.verdict = false;
  Rat best = 0;
  for (std::size_t i = 0; i < families.size(); ++i) {
    std::size_t s = max_intersecting_subfamily(families[i]);
    Rat ratio = Rat(static_cast<unsigned long>(s)) / Rat(static_cast<unsigned long>(families[i].size()));
    rep.per_family.push_back(ratio);
    if (ratio > best) best = ratio;
    if (pow(Rat(1 - ratio), static_cast<unsigned>(2 * d)) <= slack) {
      if (!rep.verdict) rep.witness_indices.push_back(i);
      rep.verdict = true;
    }
  }
  rep.beta_hat = best;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", 1.0 - std::pow(slack.get_d(), 1.0 / (2.0 * d)));
  rep.extras["beta_bound_decimal"] = buf;
  if (!rep.verdict) rep.note = "no family reaches the colorful fractional bound";
  return rep;
}

long long partial_colorful_size(long long m, int d) {
  if (d < 1) throw InputError("d must be positive");
  if (m <= 0) return 0;
  if (d == 1) return m;
  // N·(1 − s) >= m with s² = 1 − 1/d  ⇔  N − m >= 0 and (N − m)² >= N²·s².
  const Rat s2 = Rat(1) - Rat(1, d);
  for (long long n = m;; ++n) {
    const Rat gap(static_cast<long>(n - m));
    const Rat nn(static_cast<long>(n));
    if (gap * gap >= nn * nn * s2) return n;
  }
}

}  // namespace helly
