#include "helly/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace helly {

std::uint64_t CounterRng::mix(std::uint64_t x) {
  // splitmix64 finaliser
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(mix(seed) ^ stream)) {}

std::uint64_t CounterRng::next() { return mix(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

long long CounterRng::uniform(long long lo, long long hi) {
  if (hi < lo) throw InputError("empty uniform range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<long long>(next());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<long long>(v % span);
}

bool CounterRng::bernoulli(double probability) {
  const auto threshold = static_cast<std::uint64_t>(std::llround(probability * 4294967296.0));
  return (next() >> 32) < threshold;
}

int GenSpec::points_on(int level) const {
  if (points_per_level.size() == 1) return points_per_level.front();
  return points_per_level.at(static_cast<std::size_t>(level - 1));
}

void GenSpec::validate() const {
  if (d < 1) throw InputError("spec: d must be positive");
  if (points_per_level.empty() || (points_per_level.size() != 1 && points_per_level.size() != static_cast<std::size_t>(d))) {
    throw InputError("spec: points_per_level needs 1 or d entries");
  }
  if (coord_hi < coord_lo) throw InputError("spec: coordinate range is empty");
  for (int level = 1; level <= d; ++level) {
    const int c = points_on(level);
    if (c < 0) throw InputError("spec: negative point count");
    if (static_cast<unsigned long long>(c) > static_cast<unsigned long long>(coord_hi - coord_lo) + 1) {
      throw InputError("spec: level " + std::to_string(level) + " asks for more points than coordinates in range");
    }
  }
  if (!(presence >= 0.0 && presence <= 1.0)) throw InputError("spec: presence probability outside [0, 1]");
  if (max_width < 0) throw InputError("spec: negative max_width");
}

std::vector<Family> Instance::colour_families() const {
  std::vector<Family> out;
  for (const auto& cls : families) {
    Family f;
    for (auto j : cls) f.push_back(sets.at(j));
    out.push_back(std::move(f));
  }
  return out;
}

Instance gen_instance(const GenSpec& spec) {
  spec.validate();
  CounterRng rng(spec.seed, spec.stream);
  std::vector<Point> pts;
  for (int level = 1; level <= spec.d; ++level) {
    // Floyd's sampling of distinct offsets in [0, range).
    const long long range = spec.coord_hi - spec.coord_lo + 1;
    const long long want = spec.points_on(level);
    std::set<long long> chosen;
    for (long long j = range - want; j < range; ++j) {
      long long t = rng.uniform(0, j);
      if (!chosen.insert(t).second) chosen.insert(j);
    }
    for (long long off : chosen) pts.push_back({Rat(static_cast<long>(spec.coord_lo + off)), level});
  }
  Instance out;
  out.spec = spec;
  out.ground = share(PointSet::from_points(spec.d, std::move(pts)));
  for (std::size_t j = 0; j < spec.n; ++j) {
    DInterval iv;
    iv.levels.resize(static_cast<std::size_t>(spec.d));
    for (int level = 1; level <= spec.d; ++level) {
      if (!rng.bernoulli(spec.presence)) continue;
      const long long lo = rng.uniform(spec.coord_lo, spec.coord_hi);
      const long long width = rng.uniform(0, spec.max_width);
      iv.levels[level - 1] = LevelInterval::closed(Rat(static_cast<long>(lo)), Rat(static_cast<long>(lo + width)));
    }
    out.sets.push_back(trace_of(iv, out.ground));
    out.names.push_back("C" + std::to_string(j + 1));
  }
  if (spec.families > 0) {
    out.families.resize(spec.families);
    for (std::size_t j = 0; j < spec.n; ++j) out.families[j % spec.families].push_back(j);
  }
  return out;
}

Designated designated_points(const PointSetPtr& ground, const std::optional<Designated>& override) {
  Designated out;
  for (int level = 1; level <= ground->dims(); ++level) {
    if (ground->level_size(level) < 2) {
      throw InputError("level " + std::to_string(level) + " has fewer than two points");
    }
    if (override) {
      const auto& [a, b] = override->at(static_cast<std::size_t>(level - 1));
      if (!(a < b) || !ground->contains({a, level}) || !ground->contains({b, level})) {
        throw InputError("designated points on level " + std::to_string(level) + " must be two increasing points of P");
      }
      out.emplace_back(a, b);
    } else {
      const auto& coords = ground->level_coords(level);
      out.emplace_back(coords.front(), coords.back());
    }
  }
  return out;
}

Family gen_helly_lower_bound(const PointSetPtr& ground, const std::optional<Designated>& designated) {
  const auto pts = designated_points(ground, designated);
  const int d = ground->dims();
  Family out;
  for (int k = 1; k <= 2 * d; ++k) {
    const int special = (k + 1) / 2;
    DInterval iv;
    for (int level = 1; level <= d; ++level) {
      const auto& [a, b] = pts[level - 1];
      if (level != special) {
        iv.levels.push_back(LevelInterval::closed(a, b));
      } else {
        const Rat& x = (k % 2 == 1) ? a : b;
        iv.levels.push_back(LevelInterval::closed(x, x));
      }
    }
    out.push_back(trace_of(iv, ground));
  }
  return out;
}

std::vector<Point> gen_radon_lower_bound(const PointSetPtr& ground, const std::optional<Designated>& designated) {
  const auto pts = designated_points(ground, designated);
  std::vector<Point> out;
  for (int level = 1; level <= ground->dims(); ++level) {
    out.push_back({pts[level - 1].first, level});
    out.push_back({pts[level - 1].second, level});
  }
  return out;
}

std::string Predicate::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::none: os << "none"; break;
    case Kind::colorful_helly: os << "colorful-helly:" << k; break;
    case Kind::pq_property: os << "pq:" << p << ':' << q << ':' << to_string(pq_kind); break;
    case Kind::k_intersect_rich: os << "k-intersect-rich:" << helly::to_string(alpha_min) << ':' << k; break;
  }
  return os.str();
}

Predicate parse_predicate(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw InputError("empty predicate");
  Predicate p;
  auto as_int = [&](std::size_t i) {
    try {
      return std::stoi(parts.at(i));
    } catch (const std::exception&) {
      throw InputError("bad integer in predicate \"" + text + "\"");
    }
  };
  if (parts[0] == "none") {
    p.kind = Predicate::Kind::none;
  } else if (parts[0] == "colorful-helly") {
    p.kind = Predicate::Kind::colorful_helly;
    if (parts.size() > 1) p.k = as_int(1);
  } else if (parts[0] == "pq") {
    if (parts.size() < 3) throw InputError("pq predicate needs pq:p:q[:kind]");
    p.kind = Predicate::Kind::pq_property;
    p.p = as_int(1);
    p.q = as_int(2);
    if (parts.size() > 3) p.pq_kind = parse_pq_kind(parts[3]);
  } else if (parts[0] == "k-intersect-rich") {
    if (parts.size() < 2) throw InputError("k-intersect-rich predicate needs an alpha");
    p.kind = Predicate::Kind::k_intersect_rich;
    p.alpha_min = parse_rat(parts[1]);
    if (parts.size() > 2) p.k = as_int(2);
  } else {
    throw InputError("unknown predicate \"" + parts[0] + "\"");
  }
  return p;
}

bool predicate_holds(const Instance& instance, const Predicate& predicate) {
  switch (predicate.kind) {
    case Predicate::Kind::none:
      return true;
    case Predicate::Kind::colorful_helly: {
      auto fams = instance.colour_families();
      if (fams.empty()) return false;
      for (const auto& f : fams) {
        if (f.empty()) return false;
      }
      return colorful_property(fams, predicate.k);
    }
    case Predicate::Kind::pq_property: {
      std::vector<Family> fams =
          predicate.pq_kind == PqKind::plain ? std::vector<Family>{instance.sets} : instance.colour_families();
      try {
        return pq_check(fams, predicate.p, predicate.q, predicate.pq_kind).holds;
      } catch (const InputError&) {
        return false;
      }
    }
    case Predicate::Kind::k_intersect_rich: {
      if (instance.sets.empty()) return false;
      auto rep = frac_helly_stats(instance.sets, predicate.k);
      return rep.alpha && *rep.alpha >= predicate.alpha_min;
    }
  }
  return false;
}

ConditionedOutcome gen_conditioned(const GenSpec& spec, const Predicate& predicate, std::size_t cap_draws) {
  ConditionedOutcome out;
  for (std::size_t draw = 0; draw < cap_draws; ++draw) {
    GenSpec s = spec;
    s.stream = CounterRng::mix(spec.stream * 0x100000001b3ULL + draw);
    Instance inst = gen_instance(s);
    ++out.draws;
    if (predicate_holds(inst, predicate)) {
      out.stream = s.stream;
      out.instance = std::move(inst);
      return out;
    }
  }
  return out;
}

}  // namespace helly
