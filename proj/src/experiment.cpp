#include "helly/experiment.hpp"

#include "helly/combinatorics.hpp"

#include <omp.h>

#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace helly {

using nlohmann::json;

namespace {

struct TrialOutcome {
  bool ok = true;
  std::string failure;
  CsvRow row;
  std::map<std::string, long long> counts;

  void fail(const std::string& why) {
    if (ok) failure = why;
    ok = false;
  }
  void check(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void put(const std::string& key, long long v) { row.emplace_back(key, std::to_string(v)); }
  void put(const std::string& key, const std::string& v) { row.emplace_back(key, v); }
};

struct TrialContext {
  const SuiteConfig& config;
  std::size_t trial;
  int d;
  CounterRng rng;
};

using TrialFn = std::function<void(TrialContext&, TrialOutcome&)>;

std::uint64_t suite_tag(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

/// Random corpus spec drawn from the trial's own stream.
GenSpec draw_spec(TrialContext& ctx, int ppl_lo, int ppl_hi, long long n_lo, long long n_hi) {
  GenSpec spec;
  spec.d = ctx.d;
  spec.seed = ctx.config.seed;
  spec.stream = CounterRng::mix(suite_tag(ctx.config.suite) + ctx.trial);
  spec.points_per_level.clear();
  for (int level = 1; level <= ctx.d; ++level) {
    spec.points_per_level.push_back(static_cast<int>(ctx.rng.uniform(ppl_lo, ppl_hi)));
  }
  spec.coord_lo = 0;
  spec.coord_hi = std::max<long long>(9, ppl_hi - 1);
  spec.n = static_cast<std::size_t>(ctx.rng.uniform(n_lo, n_hi));
  spec.max_width = ctx.rng.uniform(1, 6);
  spec.presence = ctx.rng.bernoulli(0.5) ? 1.0 : 0.75;
  return spec;
}

/// Replaces empty members by a single random point of P, keeping the
/// instance deterministic.
void make_nonempty(Instance& inst, CounterRng& rng) {
  const auto pts = inst.ground->points();
  for (auto& s : inst.sets) {
    if (!s.empty()) continue;
    const Point& p = pts.at(static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(pts.size()) - 1)));
    s = hull(inst.ground, std::span<const Point>(&p, 1));
  }
}

std::string describe_spec(const GenSpec& s) {
  std::string ppl;
  for (std::size_t i = 0; i < s.points_per_level.size(); ++i) ppl += (i ? "/" : "") + std::to_string(s.points_per_level[i]);
  return "seed=" + std::to_string(s.seed) + " stream=" + std::to_string(s.stream) + " ppl=" + ppl +
         " n=" + std::to_string(s.n);
}

std::vector<TrialOutcome> run_trials(const SuiteConfig& config, std::size_t trials, const std::vector<int>& dims,
                                     const TrialFn& fn) {
  std::vector<TrialOutcome> out(trials);
  const auto tag = suite_tag(config.suite);
#pragma omp parallel for schedule(dynamic)
  for (long long t = 0; t < static_cast<long long>(trials); ++t) {
    const auto idx = static_cast<std::size_t>(t);
    TrialOutcome& o = out[idx];
    const int d = dims[idx % dims.size()];
    TrialContext ctx{config, idx, d, CounterRng(config.seed, tag ^ (0x9e3779b97f4a7c15ULL * (idx + 1)))};
    o.put("trial", static_cast<long long>(idx));
    o.put("d", d);
    try {
      fn(ctx, o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    o.put("ok", o.ok ? "true" : "false");
  }
  return out;
}

/// Stretches members so that each contains a common anchor point on
/// `levels` random levels. Members listed in `skip` are left alone.
void anchor_family(Instance& inst, CounterRng& rng, int levels, std::optional<std::size_t> skip = std::nullopt) {
  const auto& ground = inst.ground;
  const int d = ground->dims();
  std::vector<int> order(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) order[i] = i + 1;
  for (int i = d - 1; i > 0; --i) std::swap(order[i], order[rng.uniform(0, i)]);
  for (int q = 0; q < levels && q < d; ++q) {
    const int level = order[q];
    const auto size = ground->level_size(level);
    if (size == 0) continue;
    const auto anchor = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(size) - 1));
    for (std::size_t j = 0; j < inst.sets.size(); ++j) {
      if (skip && *skip == j) continue;
      auto runs = inst.sets[j].runs();
      auto& r = runs[level - 1];
      r = r ? Run{std::min(r->first, anchor), std::max(r->last, anchor)} : Run{anchor, anchor};
      inst.sets[j] = TraceSet(ground, std::move(runs));
    }
  }
}

// Independent checks shared by several suites.

bool subfamily_meets(const Family& family, const std::vector<std::size_t>& idx, int k) {
  Family sub;
  for (auto j : idx) sub.push_back(family[j]);
  return intersect_all(sub).level_count >= k;
}

FLexValue f_of(const Family& family, const std::vector<std::size_t>& idx) {
  Family sub;
  for (auto j : idx) sub.push_back(family[j]);
  return f_value(intersect_all(sub).trace);
}

/// Largest subfamily whose intersection meets >= k levels, over all subsets.
std::size_t brute_max_k_intersecting(const Family& family, int k) {
  const std::size_t n = family.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1u) idx.push_back(j);
    }
    if (subfamily_meets(family, idx, k)) best = size;
  }
  return best;
}

// --- suites ---------------------------------------------------------------

void trial_collapse(TrialContext& ctx, TrialOutcome& o) {
  const GenSpec spec = draw_spec(ctx, 1, 6, 2, 8);
  const Instance inst = gen_instance(spec);
  o.put("n", static_cast<long long>(inst.sets.size()));
  o.put("points", static_cast<long long>(inst.ground->size()));
  const auto k_par = nerve(inst.sets, ctx.config.guards);
  const auto k_ser = nerve_serial(inst.sets, ctx.config.guards);
  o.check(k_par == k_ser, "parallel and serial nerves differ (" + describe_spec(spec) + ")");
  SweepResult sweep;
  try {
    sweep = sweep_collapse(inst.sets, ctx.config.guards);
  } catch (const TheoremViolation& e) {
    o.counts["theorem_violations"] += 1;
    o.fail(std::string("sweep assertion: ") + e.what());
    return;
  }
  const int bound = 2 * ctx.d - 1;
  o.check(sweep.sequence.bound == bound, "sweep used the wrong collapse bound");
  int max_free_dim = -1;
  for (const auto& s : sweep.sequence.steps) max_free_dim = std::max(max_free_dim, face_dim(s.free_face));
  o.check(max_free_dim <= 2 * ctx.d - 2, "free face of dimension " + std::to_string(max_free_dim) + " exceeds 2d-2");
  const auto replay = verify_collapse_sequence(sweep.initial, sweep.sequence);
  o.check(!replay, "replay failed: " + replay.value_or(""));
  o.check(sweep.initial == k_ser, "sweep started from a different nerve");
  o.put("faces", static_cast<long long>(k_ser.faces().size()));
  o.put("dim", k_ser.dim());
  o.put("steps", static_cast<long long>(sweep.sequence.steps.size()));
  o.put("max_free_dim", max_free_dim);
  o.counts["steps"] += static_cast<long long>(sweep.sequence.steps.size());
  if (max_free_dim == 2 * ctx.d - 2) o.counts["bound_attained"] += 1;
  for (const auto& info : sweep.info) o.counts["rule_" + to_string(info.rule)] += 1;
  o.counts["backtracks"] += static_cast<long long>(sweep.backtracks);
  o.put("fallback_steps", static_cast<long long>(sweep.fallback_steps));
  // The lexmin rule alone, reported but not asserted.
  bool literal_ok = true;
  try {
    sweep_collapse(inst.sets, ctx.config.guards, SweepMode::literal);
  } catch (const TheoremViolation&) {
    literal_ok = false;
    o.counts["literal_rule_failures"] += 1;
  }
  o.put("literal_rule_ok", literal_ok ? "true" : "false");
}

void trial_radon(TrialContext& ctx, TrialOutcome& o) {
  // |P| <= 12 with at least two points per level.
  const int hi = std::min(12 / ctx.d, 6);
  GenSpec spec = draw_spec(ctx, 2, hi, 1, 1);
  const Instance inst = gen_instance(spec);
  const auto& ground = inst.ground;
  const auto pts = ground->points();
  const auto r = static_cast<std::size_t>(2 * ctx.d + 1);
  o.put("points", static_cast<long long>(pts.size()));
  long long subsets = 0;
  for_each_combination(pts.size(), r, [&](const std::vector<std::size_t>& combo) {
    std::vector<Point> a;
    for (auto i : combo) a.push_back(pts[i]);
    ++subsets;
    const auto part = radon_partition(ground, a);
    if (!part || !verify_radon(ground, *part)) {
      o.fail("no verified partition for a " + std::to_string(r) + "-subset (" + describe_spec(spec) + ")");
      return false;
    }
    return true;
  });
  const auto lower = gen_radon_lower_bound(ground);
  o.check(!radon_partition(ground, lower), "lower-bound set admits a partition");
  o.check(!radon_partition_search(ground, lower), "exhaustive search partitions the lower-bound set");
  const auto number = radon_number_bruteforce(ground, 2 * ctx.d + 2, ctx.config.guards);
  o.check(number && *number == 2 * ctx.d + 1,
          "radon number " + (number ? std::to_string(*number) : std::string("> cap")) + " != 2d+1");
  o.put("subsets", subsets);
  o.put("radon_number", number ? *number : -1);
  o.counts["subsets"] += subsets;
}

void trial_helly(TrialContext& ctx, TrialOutcome& o) {
  GenSpec spec = draw_spec(ctx, 2, 6, 2, 8);
  if (ctx.trial % 2 == 0) {
    spec.max_width = 9;
    spec.presence = 1.0;
  }
  Instance inst = gen_instance(spec);
  const int d = ctx.d;
  if (ctx.trial % 3 == 1) {
    const auto odd = static_cast<std::size_t>(ctx.rng.uniform(0, static_cast<long long>(inst.sets.size()) - 1));
    anchor_family(inst, ctx.rng, static_cast<int>(ctx.rng.uniform(1, d)), odd);
  }
  o.put("n", static_cast<long long>(inst.sets.size()));
  const auto rep = helly_check(inst.sets, 2 * d, 1);
  o.check(rep.verdict, "Helly violation at 2d (" + describe_spec(spec) + ")");
  o.put("hypothesis_held", rep.hypothesis_held ? 1 : 0);
  if (rep.hypothesis_held) o.counts["nonvacuous"] += 1;
  for (int k = 2; k <= d; ++k) {
    const auto rk = helly_check(inst.sets, 2 * d - k + 1, k);
    o.check(rk.verdict, "k-intersecting Helly violation at k=" + std::to_string(k));
    if (rk.hypothesis_held) o.counts["nonvacuous_k"] += 1;
  }
  const Family lower = gen_helly_lower_bound(inst.ground);
  const auto below = helly_check(lower, 2 * d - 1, 1);
  o.check(below.hypothesis_held && !below.verdict, "lower-bound family does not violate Helly at 2d-1");
  o.check(intersect_all(lower).trace.empty(), "lower-bound family has a common point");
  o.put("lower_bound_violates", below.hypothesis_held && !below.verdict ? 1 : 0);
}

struct ColorfulCase {
  int d;
  int k;
};

std::vector<ColorfulCase> colorful_cases(const std::vector<int>& dims) {
  std::vector<ColorfulCase> out;
  for (int d : dims) {
    for (int k = 1; k <= d; ++k) out.push_back({d, k});
  }
  return out;
}

void trial_colorful(TrialContext& ctx, TrialOutcome& o, const ColorfulCase& c) {
  const int families = 2 * c.d - c.k + 1;
  GenSpec spec;
  spec.d = c.d;
  spec.seed = ctx.config.seed;
  spec.stream = CounterRng::mix(suite_tag(ctx.config.suite) + ctx.trial);
  spec.points_per_level = {static_cast<int>(ctx.rng.uniform(2, 4))};
  // Fewer positions per level when every tuple must meet several levels.
  spec.coord_lo = 0;
  spec.coord_hi = c.k == 1 ? 5 : 3;
  spec.max_width = 5;
  spec.presence = 1.0;
  spec.families = static_cast<std::size_t>(families);
  spec.n = static_cast<std::size_t>(families * ctx.rng.uniform(1, 2));
  Predicate pred;
  pred.kind = Predicate::Kind::colorful_helly;
  pred.k = c.k;
  const auto found = gen_conditioned(spec, pred, 20000);
  o.put("k", c.k);
  o.put("draws", static_cast<long long>(found.draws));
  if (!found.instance) {
    o.fail("no instance with the colorful precondition within the draw cap");
    return;
  }
  o.counts["found_d" + std::to_string(c.d) + "_k" + std::to_string(c.k)] += 1;
  const auto fams = found.instance->colour_families();
  ColorfulHellyResult res;
  try {
    res = colorful_helly_points(fams, c.k);
  } catch (const TheoremViolation& e) {
    o.counts["theorem_violations"] += 1;
    o.fail(std::string("colorful Helly: ") + e.what());
    return;
  }
  o.check(res.precondition_held, "precondition reported false on an accepted instance");
  o.check(res.claim_holds, "claim does not hold");
  o.check(res.points.size() == static_cast<std::size_t>(c.k), "wrong number of points");
  std::set<int> levels;
  for (const auto& p : res.points) levels.insert(p.level);
  o.check(levels.size() == res.points.size(), "points share a level");
  for (const auto& member : fams[res.designated]) {
    for (const auto& p : res.points) o.check(member.contains(p), "designated member misses a point");
  }
  // Fixed designations, recorded only.
  long long rotations_ok = 0;
  for (std::size_t r = 0; r < fams.size(); ++r) {
    if (colorful_helly_points(fams, c.k, r).claim_holds) ++rotations_ok;
  }
  if (colorful_helly_points(fams, c.k, fams.size() - 1).claim_holds) o.counts["last_designated_ok"] += 1;
  o.put("rotations_ok", rotations_ok);
  o.counts["rotations_tried"] += static_cast<long long>(fams.size());
  o.counts["rotations_ok"] += rotations_ok;
}

void trial_fractional(TrialContext& ctx, TrialOutcome& o) {
  const int d = ctx.d;
  const GenSpec spec = draw_spec(ctx, 1, 5, 2 * d, 8);
  const Instance inst = gen_instance(spec);
  const std::size_t n = inst.sets.size();
  o.put("n", static_cast<long long>(n));
  for (int k = 1; k <= d; ++k) {
    const auto rep = frac_helly_stats(inst.sets, k);
    const auto t = static_cast<std::size_t>(2 * d - k + 1);
    const std::string tag = "k" + std::to_string(k);
    o.check(rep.verdict, "fractional bound fails at k=" + std::to_string(k) + " (" + describe_spec(spec) + ")");
    // Independent recount of alpha and of the largest k-intersecting subfamily.
    unsigned long good = 0;
    for_each_combination(n, t, [&](const std::vector<std::size_t>& combo) {
      good += subfamily_meets(inst.sets, combo, k) ? 1 : 0;
      return true;
    });
    Rat alpha(mpz_class(good), binomial(n, t));
    alpha.canonicalize();
    const std::size_t exact = brute_max_k_intersecting(inst.sets, k);
    const Rat beta = Rat(static_cast<unsigned long>(exact)) / Rat(static_cast<unsigned long>(n));
    o.check(rep.alpha && *rep.alpha == alpha, "alpha disagrees with brute force at k=" + std::to_string(k));
    o.check(rep.beta_hat && *rep.beta_hat == beta, "beta disagrees with brute force at k=" + std::to_string(k));
    o.check(beta >= alpha / Rat(static_cast<unsigned long>(t)), "brute-force beta below alpha/(2d-k+1)");
    put_rat(o.row, "alpha_" + tag, alpha);
    put_rat(o.row, "beta_" + tag, beta);
    if (alpha > 0) o.counts["positive_alpha"] += 1;
  }

  // Colorful fractional: 2d families of 1..3 members each.
  GenSpec cspec = spec;
  cspec.families = static_cast<std::size_t>(2 * d);
  cspec.n = static_cast<std::size_t>(2 * d * ctx.rng.uniform(1, 3));
  cspec.stream = CounterRng::mix(cspec.stream + 1);
  const Instance cinst = gen_instance(cspec);
  const auto fams = cinst.colour_families();
  const auto crep = cfh_stats(fams);
  o.check(crep.verdict, "colorful fractional bound fails (" + describe_spec(cspec) + ")");
  std::vector<std::size_t> sizes;
  for (const auto& f : fams) sizes.push_back(f.size());
  unsigned long good = 0;
  mpz_class total = 1;
  for (auto s : sizes) total *= static_cast<unsigned long>(s);
  for_each_product(sizes, [&](const std::vector<std::size_t>& tuple) {
    Family pick;
    for (std::size_t i = 0; i < tuple.size(); ++i) pick.push_back(fams[i][tuple[i]]);
    good += intersect_all(pick).trace.empty() ? 0 : 1;
    return true;
  });
  Rat alpha(mpz_class(good), total);
  alpha.canonicalize();
  bool some = false;
  for (const auto& f : fams) {
    const Rat bi(static_cast<unsigned long>(brute_max_k_intersecting(f, 1)), static_cast<unsigned long>(f.size()));
    some = some || pow(Rat(1 - bi), static_cast<unsigned>(2 * d)) <= 1 - alpha;
  }
  o.check(crep.alpha && *crep.alpha == alpha, "colorful alpha disagrees with brute force");
  o.check(some, "brute force finds no family meeting the colorful fractional bound");
  put_rat(o.row, "cfh_alpha", alpha);
}

void trial_lemma2(TrialContext& ctx, TrialOutcome& o) {
  const int d = ctx.d;
  GenSpec spec = draw_spec(ctx, 1, 6, 2, 8);
  spec.max_width = 9;
  spec.presence = ctx.trial % 3 == 0 ? 0.75 : 1.0;
  Instance inst = gen_instance(spec);
  anchor_family(inst, ctx.rng, static_cast<int>(ctx.rng.uniform(0, d)));
  const auto& family = inst.sets;
  const int meets = intersect_all(family).level_count;
  o.put("n", static_cast<long long>(family.size()));
  o.put("levels_met", meets);
  std::vector<std::size_t> all(family.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  const FLexValue target = f_of(family, all);
  for (int k = 1; k <= std::min(d, meets); ++k) {
    const auto w = lemma2_witness(family, k);
    const auto limit = static_cast<std::size_t>(2 * d - k);
    o.check(!w.empty() && w.size() <= limit, "witness size " + std::to_string(w.size()) + " exceeds 2d-k");
    o.check(f_of(family, w) == target, "witness f differs at k=" + std::to_string(k) + " (" + describe_spec(spec) + ")");
    // Brute force: some subfamily of size <= 2d-k attains f, and none goes below it.
    std::size_t smallest = 0;
    for (std::size_t r = 1; r <= std::min(limit, family.size()) && smallest == 0; ++r) {
      for_each_combination(family.size(), r, [&](const std::vector<std::size_t>& combo) {
        const auto fv = f_of(family, combo);
        o.check(!(fv < target), "a subfamily has smaller f than the whole family");
        if (fv == target) {
          smallest = r;
          return false;
        }
        return true;
      });
    }
    o.check(smallest != 0, "brute force finds no subfamily of size <= 2d-k with the same f");
    o.check(smallest <= w.size(), "brute-force minimum exceeds the witness size");
    o.put("witness_k" + std::to_string(k), static_cast<long long>(w.size()));
    o.put("brute_min_k" + std::to_string(k), static_cast<long long>(smallest));
    o.counts["checked_k" + std::to_string(k)] += 1;
  }
}

/// Matching LP rebuilt from scratch: sets are variables, candidate points rows.
void recheck_lp(const Family& family, const FractionalResult& fr, TrialOutcome& o) {
  std::vector<std::vector<Rat>> a(fr.candidates.size(), std::vector<Rat>(family.size(), 0));
  for (std::size_t i = 0; i < fr.candidates.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (family[j].contains(fr.candidates[i])) a[i][j] = 1;
    }
  }
  const std::vector<Rat> b(fr.candidates.size(), Rat(1));
  const std::vector<Rat> c(family.size(), Rat(1));
  o.check(check_certificate(a, b, c, fr.lp), "LP certificate fails the recheck");
  Rat primal = 0;
  for (const auto& x : fr.lp.primal) primal += x;
  Rat dual = 0;
  for (const auto& y : fr.lp.dual) dual += y;
  o.check(primal == dual, "primal and dual objectives differ");
  o.check(primal == fr.nu_star && dual == fr.tau_star, "reported nu*/tau* disagree with the solution vectors");
}

void trial_lp(TrialContext& ctx, TrialOutcome& o) {
  GenSpec spec = draw_spec(ctx, 1, 6, 2, 8);
  Instance inst = gen_instance(spec);
  make_nonempty(inst, ctx.rng);
  const auto res = pierce(inst.sets, ctx.config.guards);
  const auto& fr = res.fractional;
  o.check(fr.lp.certified, "LP not certified");
  o.check(fr.nu_star == fr.tau_star, "nu* != tau*");
  recheck_lp(inst.sets, fr, o);
  o.check(Rat(static_cast<unsigned long>(res.nu.nu)) <= fr.nu_star, "nu > nu*");
  o.check(fr.tau_star <= Rat(static_cast<unsigned long>(res.tau.tau)), "tau* > tau");
  o.check(res.sandwich_holds, "sandwich flag false");
  o.check(is_transversal(inst.sets, res.tau.points) && res.tau.points.size() == res.tau.tau, "tau witness invalid");
  o.check(pairwise_disjoint(inst.sets, res.nu.subfamily) && res.nu.subfamily.size() == res.nu.nu,
          "nu witness invalid");
  o.put("n", static_cast<long long>(inst.sets.size()));
  o.put("tau", static_cast<long long>(res.tau.tau));
  o.put("nu", static_cast<long long>(res.nu.nu));
  put_rat(o.row, "nu_star", fr.nu_star);
  put_rat(o.row, "tau_star", fr.tau_star);
  if (fr.nu_star.get_den() != 1) o.counts["fractional_optimum"] += 1;
  if (res.tau.tau > res.nu.nu) o.counts["gap"] += 1;
}

void trial_tardos(TrialContext& ctx, TrialOutcome& o) {
  GenSpec spec = draw_spec(ctx, 1, 6, 2, 8);
  Instance inst = gen_instance(spec);
  make_nonempty(inst, ctx.rng);
  const auto res = tardos_kaiser_check(inst.sets, ctx.config.guards);
  o.check(res.holds, "tau exceeds (d^2-d)nu (" + describe_spec(spec) + ")");
  o.check(static_cast<long long>(res.tau) <= res.factor * static_cast<long long>(res.nu), "recomputed bound fails");
  o.put("n", static_cast<long long>(inst.sets.size()));
  o.put("tau", static_cast<long long>(res.tau));
  o.put("nu", static_cast<long long>(res.nu));
  o.put("factor", res.factor);
  if (static_cast<long long>(res.tau) == res.factor * static_cast<long long>(res.nu)) o.counts["tight"] += 1;
}

void trial_oracle(TrialContext& ctx, TrialOutcome& o) {
  const GenSpec spec = draw_spec(ctx, 1, 5, 2, 7);
  const Instance inst = gen_instance(spec);
  const auto k = nerve(inst.sets, ctx.config.guards);
  bool sweep_ok = true;
  try {
    sweep_ok = !verify_collapse_sequence(k, sweep_collapse(inst.sets, ctx.config.guards).sequence);
  } catch (const TheoremViolation&) {
    sweep_ok = false;
  }
  const auto oracle = is_d_collapsible(k, 2 * ctx.d - 1, ctx.config.guards);
  o.check(oracle.collapsible == sweep_ok, "oracle and sweep disagree (" + describe_spec(spec) + ")");
  if (oracle.collapsible) {
    o.check(oracle.witness && !verify_collapse_sequence(k, *oracle.witness), "oracle witness fails replay");
  }
  o.put("faces", static_cast<long long>(k.faces().size()));
  o.put("oracle", oracle.collapsible ? 1 : 0);
  o.put("sweep", sweep_ok ? 1 : 0);
  o.put("states", static_cast<long long>(oracle.states_explored));
}

struct SuiteDef {
  std::size_t trials;
  std::vector<int> dims;
};

const std::map<std::string, SuiteDef>& suite_table() {
  static const std::map<std::string, SuiteDef> table = {
      {"collapse", {1200, {1, 2, 3}}}, {"radon", {60, {1, 2, 3}}},       {"helly", {600, {1, 2, 3}}},
      {"colorful", {1200, {1, 2, 3}}}, {"fractional", {1500, {1, 2, 3}}}, {"lemma2", {600, {1, 2, 3}}},
      {"lp", {240, {1, 2, 3}}},        {"tardos", {200, {2, 3}}},         {"oracle", {100, {1, 2}}},
      {"reproducibility", {200, {1, 2, 3}}}};
  return table;
}

json check_triple(bool tardos) {
  const Instance inst = example_triple();
  if (tardos) {
    const auto r = tardos_kaiser_check(inst.sets);
    return json{{"tau", r.tau}, {"nu", r.nu}, {"factor", r.factor},
                {"tight", r.holds && static_cast<long long>(r.tau) == r.factor * static_cast<long long>(r.nu) &&
                              r.tau == 2 && r.nu == 1}};
  }
  const auto r = pierce(inst.sets);
  json out{{"tau", r.tau.tau}, {"nu", r.nu.nu}, {"certified", r.fractional.lp.certified}};
  put_rat(out, "nu_star", r.fractional.nu_star);
  put_rat(out, "tau_star", r.fractional.tau_star);
  out["matches"] = r.tau.tau == 2 && r.nu.nu == 1 && r.fractional.nu_star == Rat(3, 2) &&
                   r.fractional.tau_star == Rat(3, 2) && r.fractional.lp.certified;
  return out;
}

json check_hollow_triangle() {
  const auto k = hollow_triangle();
  const auto one = is_d_collapsible(k, 1);
  const auto two = is_d_collapsible(k, 2);
  const bool replay = two.witness && !verify_collapse_sequence(k, *two.witness);
  return json{{"one_collapsible", one.collapsible},
              {"two_collapsible", two.collapsible},
              {"witness_replays", replay},
              {"matches", !one.collapsible && two.collapsible && replay}};
}

Report run_reproducibility(const SuiteConfig& config, std::size_t trials, const std::vector<int>& dims) {
  SuiteConfig inner = config;
  inner.suite = "collapse";
  inner.trials = trials;
  inner.dims = dims;
  const Report a = run_suite(inner);
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const Report b = run_suite(inner);
  omp_set_num_threads(threads);
  Report rep;
  const bool same_json = report_fingerprint(a) == report_fingerprint(b);
  const bool same_csv = report_csv(a) == report_csv(b);
  rep.verdicts = {{"json_identical", same_json}, {"csv_identical", same_csv}, {"inner_pass", a.pass && b.pass}};
  rep.statistics = {{"inner_suite", "collapse"}, {"inner_instances", a.rows.size()}};
  rep.pass = same_json && same_csv;
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::size_t default_trials(const std::string& suite) {
  const auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw InputError("unknown suite \"" + suite + "\"");
  return it->second.trials;
}

std::string report_fingerprint(const Report& report) {
  auto j = report.to_json();
  j.erase("timing");
  return j.dump(2);
}

Report run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto it = suite_table().find(config.suite);
  if (it == suite_table().end()) throw InputError("unknown suite \"" + config.suite + "\"");
  const std::size_t trials = config.trials ? config.trials : it->second.trials;
  const std::vector<int> dims = config.dims.empty() ? it->second.dims : config.dims;
  for (int d : dims) {
    if (d < 1 || d > 3) throw InputError("suite dimensions must lie in [1, 3], got " + std::to_string(d));
  }

  Report rep;
  if (config.suite == "reproducibility") {
    rep = run_reproducibility(config, trials, dims);
  } else {
    std::vector<TrialOutcome> outcomes;
    json fixed = json::object();
    const std::string& s = config.suite;
    if (s == "colorful") {
      const auto cases = colorful_cases(dims);
      std::vector<int> case_dims;
      for (const auto& c : cases) case_dims.push_back(c.d);
      outcomes = run_trials(config, trials, case_dims, [&](TrialContext& ctx, TrialOutcome& o) {
        trial_colorful(ctx, o, cases[ctx.trial % cases.size()]);
      });
    } else {
      static const std::map<std::string, void (*)(TrialContext&, TrialOutcome&)> fns = {
          {"collapse", trial_collapse}, {"radon", trial_radon}, {"helly", trial_helly},
          {"fractional", trial_fractional}, {"lemma2", trial_lemma2}, {"lp", trial_lp},
          {"tardos", trial_tardos}, {"oracle", trial_oracle}};
      outcomes = run_trials(config, trials, dims, fns.at(s));
    }
    if (s == "lp") fixed["triple"] = check_triple(false);
    if (s == "tardos") fixed["triple"] = check_triple(true);
    if (s == "oracle") fixed["hollow_triangle"] = check_hollow_triangle();

    std::size_t failed = 0;
    std::map<std::string, long long> counts;
    json failures = json::array();
    for (auto& o : outcomes) {
      if (!o.ok) {
        ++failed;
        if (failures.size() < 10) failures.push_back({{"trial", o.row.front().second}, {"message", o.failure}});
      }
      for (const auto& [k, v] : o.counts) counts[k] += v;
      rep.rows.push_back(std::move(o.row));
    }
    rep.statistics = {{"instances", outcomes.size()}, {"passed", outcomes.size() - failed}, {"failed", failed}};
    for (const auto& [k, v] : counts) rep.statistics[k] = v;
    rep.verdicts["corpus"] = failed == 0;
    rep.pass = failed == 0;
    for (const auto& [name, result] : fixed.items()) {
      rep.verdicts[name] = result["matches"].is_boolean() ? result["matches"] : result["tight"];
      rep.pass = rep.pass && rep.verdicts[name].get<bool>();
    }
    rep.witnesses = {{"failures", std::move(failures)}};
    if (!fixed.empty()) rep.witnesses["fixed"] = std::move(fixed);
  }
  rep.command = "experiment";
  rep.parameters = {{"suite", config.suite}, {"trials", trials}, {"seed", config.seed}, {"dims", dims}};
  rep.provenance = {{"seed", config.seed}, {"rng", "counter-splitmix64"}, {"suite_tag", suite_tag(config.suite)}};
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  rep.timing = {{"seconds", elapsed.count()}, {"threads", omp_get_max_threads()}};
  return rep;
}

Instance example_triple() {
  Instance inst;
  std::vector<Point> pts;
  for (int c : {0, 1, 2, 4, 5}) pts.push_back({Rat(c), 1});
  for (int c : {0, 1, 2, 3}) pts.push_back({Rat(c), 2});
  inst.ground = share(PointSet::from_points(2, std::move(pts)));
  auto box = [](int a, int b, int c, int e) {
    return DInterval{{LevelInterval::closed(Rat(a), Rat(b)), LevelInterval::closed(Rat(c), Rat(e))}};
  };
  inst.sets = {trace_of(box(0, 1, 0, 1), inst.ground), trace_of(box(1, 2, 2, 3), inst.ground),
               trace_of(box(4, 5, 1, 2), inst.ground)};
  inst.names = {"A", "B", "C"};
  return inst;
}

SimplicialComplex hollow_triangle() { return SimplicialComplex::closure({1, 2, 3}, {0b011, 0b101, 0b110}); }

}  // namespace helly
