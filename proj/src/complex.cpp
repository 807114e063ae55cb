#include "helly/complex.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <sstream>

namespace helly {

namespace {

constexpr std::size_t kMaxVertices = 32;

std::vector<std::size_t> face_indices(Face f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; f != 0; ++i, f >>= 1) {
    if (f & 1u) out.push_back(i);
  }
  return out;
}

int highest_bit(Face f) { return f == 0 ? -1 : 31 - __builtin_clz(f); }

/// Lexicographic order on sorted index lists.
bool index_set_less(Face a, Face b) {
  auto x = face_indices(a);
  auto y = face_indices(b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

bool state_is_void(const std::vector<Face>& faces) {
  return faces.empty() || (faces.size() == 1 && faces[0] == 0);
}

std::vector<Face> maximal_of(const std::vector<Face>& faces) {
  std::vector<Face> out;
  for (Face f : faces) {
    bool maximal = std::none_of(faces.begin(), faces.end(), [f](Face g) { return g != f && is_subface(f, g); });
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Face> remove_cofaces(const std::vector<Face>& faces, Face sigma, std::vector<Face>* removed) {
  std::vector<Face> kept;
  kept.reserve(faces.size());
  for (Face f : faces) {
    if (is_subface(sigma, f)) {
      if (removed) removed->push_back(f);
    } else {
      kept.push_back(f);
    }
  }
  return kept;
}

std::string describe_family(const std::vector<TraceSet>& family) {
  std::ostringstream os;
  for (std::size_t j = 0; j < family.size(); ++j) {
    os << "  C" << (j + 1) << " =";
    const auto box = minimal_dinterval(family[j]);
    for (int level = 1; level <= box.dims(); ++level) {
      const auto& iv = box.levels[level - 1];
      os << ' ';
      if (iv.is_empty()) {
        os << "()";
      } else {
        os << '[' << to_string(*iv.lo) << ',' << to_string(*iv.hi) << ']';
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<int> labels, std::vector<Face> faces)
    : labels_(std::move(labels)), faces_(std::move(faces)) {
  if (labels_.size() > kMaxVertices) throw InputError("complexes are limited to 32 vertices");
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  const Face universe = labels_.size() == 32 ? ~Face{0} : ((Face{1} << labels_.size()) - 1);
  for (Face f : faces_) {
    if ((f & ~universe) != 0) throw InputError("face uses a vertex outside the label set");
    for (auto i : face_indices(f)) {
      if (!contains(f & ~(Face{1} << i))) {
        throw InputError("face set is not downward closed: missing a facet of {" +
                         [&] {
                           std::string s;
                           for (int l : face_labels(f)) s += (s.empty() ? "" : ",") + std::to_string(l);
                           return s;
                         }() +
                         "}");
      }
    }
  }
}

SimplicialComplex SimplicialComplex::closure(std::vector<int> labels, const std::vector<Face>& generators) {
  std::set<Face> all;
  for (Face g : generators) {
    // Enumerate all submasks of g.
    Face sub = g;
    while (true) {
      all.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & g;
    }
  }
  return SimplicialComplex(std::move(labels), std::vector<Face>(all.begin(), all.end()));
}

bool SimplicialComplex::contains(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

int SimplicialComplex::dim() const {
  int d = -1;
  for (Face f : faces_) d = std::max(d, face_dim(f));
  return d;
}

std::vector<Face> SimplicialComplex::maximal_faces() const { return maximal_of(faces_); }

std::vector<Face> SimplicialComplex::maximal_faces_containing(Face sigma) const {
  std::vector<Face> out;
  for (Face m : maximal_faces()) {
    if (is_subface(sigma, m)) out.push_back(m);
  }
  return out;
}

std::vector<int> SimplicialComplex::face_labels(Face f) const {
  std::vector<int> out;
  for (auto i : face_indices(f)) out.push_back(labels_.at(i));
  return out;
}

Face SimplicialComplex::face_of_labels(const std::vector<int>& labels) const {
  Face f = 0;
  for (int l : labels) {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw InputError("unknown vertex label " + std::to_string(l));
    f |= Face{1} << (it - labels_.begin());
  }
  return f;
}

std::string SimplicialComplex::describe() const {
  if (faces_.empty()) return "(empty complex)";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Face f : faces_) {
    os << (first ? "" : ", ") << '{';
    bool inner = true;
    for (int l : face_labels(f)) {
      os << (inner ? "" : ",") << l;
      inner = false;
    }
    os << '}';
    first = false;
  }
  os << '}';
  return os.str();
}

CollapseResult elementary_collapse(const SimplicialComplex& complex, Face sigma) {
  if (!complex.contains(sigma)) throw InputError("collapse target is not a face of the complex");
  auto maximal = complex.maximal_faces_containing(sigma);
  if (maximal.size() != 1) {
    std::ostringstream os;
    os << "face is not free: it lies in " << maximal.size() << " maximal faces";
    throw NotFreeError(os.str(), std::move(maximal));
  }
  CollapseStep step;
  step.free_face = sigma;
  step.unique_maximal = maximal.front();
  auto kept = remove_cofaces(complex.faces(), sigma, &step.removed);
  return {SimplicialComplex(complex.labels(), std::move(kept)), std::move(step)};
}

std::optional<std::string> verify_collapse_sequence(const SimplicialComplex& initial, const CollapseSequence& seq) {
  SimplicialComplex current = initial;
  for (std::size_t s = 0; s < seq.steps.size(); ++s) {
    const auto& step = seq.steps[s];
    const std::string where = "step " + std::to_string(s + 1) + ": ";
    if (face_dim(step.free_face) > seq.bound - 1) return where + "free face exceeds the dimension bound";
    if (!current.contains(step.free_face)) return where + "free face is not in the complex";
    auto maximal = current.maximal_faces_containing(step.free_face);
    if (maximal.size() != 1) return where + "face is not free";
    if (maximal.front() != step.unique_maximal) return where + "recorded maximal face differs";
    auto result = elementary_collapse(current, step.free_face);
    auto removed = result.step.removed;
    auto recorded = step.removed;
    std::sort(removed.begin(), removed.end());
    std::sort(recorded.begin(), recorded.end());
    if (removed != recorded) return where + "removed faces differ from the record";
    current = std::move(result.complex);
  }
  if (!current.is_void()) return "sequence ends at a complex with nonempty faces: " + current.describe();
  return std::nullopt;
}

std::vector<FaceIntersection> intersecting_faces(const std::vector<TraceSet>& family, bool parallel,
                                                 const Guards& guards) {
  if (family.size() > guards.nerve_sets || family.size() > kMaxVertices) {
    throw GuardError("nerve enumeration over " + std::to_string(family.size()) + " sets",
                     std::min(guards.nerve_sets, kMaxVertices));
  }
  for (std::size_t j = 1; j < family.size(); ++j) {
    if (family[j].ground() != family[0].ground()) throw InputError("family mixes ground sets");
  }
  const int n = static_cast<int>(family.size());
  std::vector<FaceIntersection> all;
  std::vector<FaceIntersection> layer;
  for (int j = 0; j < n; ++j) {
    if (!family[j].empty()) layer.push_back({Face{1} << j, family[j]});
  }
  while (!layer.empty()) {
    std::vector<Face> layer_masks;
    layer_masks.reserve(layer.size());
    for (const auto& fi : layer) layer_masks.push_back(fi.face);
    auto is_face = [&](Face f) { return std::binary_search(layer_masks.begin(), layer_masks.end(), f); };

    std::vector<std::vector<FaceIntersection>> buckets(layer.size());
    const auto extend = [&](std::size_t p) {
      const auto& parent = layer[p];
      for (int j = highest_bit(parent.face) + 1; j < n; ++j) {
        const Face candidate = parent.face | (Face{1} << j);
        bool facets_ok = true;
        for (auto v : face_indices(parent.face)) {
          if (!is_face(candidate & ~(Face{1} << v))) {
            facets_ok = false;
            break;
          }
        }
        if (!facets_ok) continue;
        TraceSet meet = intersect(parent.intersection, family[j]);
        if (!meet.empty()) buckets[p].push_back({candidate, std::move(meet)});
      }
    };
    const auto count = static_cast<std::ptrdiff_t>(layer.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t p = 0; p < count; ++p) extend(static_cast<std::size_t>(p));
    } else {
      for (std::ptrdiff_t p = 0; p < count; ++p) extend(static_cast<std::size_t>(p));
    }

    std::vector<FaceIntersection> next;
    for (auto& b : buckets) {
      for (auto& fi : b) next.push_back(std::move(fi));
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.face < b.face; });
    for (auto& fi : layer) all.push_back(std::move(fi));
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.face < b.face; });
  return all;
}

namespace {

SimplicialComplex nerve_impl(const std::vector<TraceSet>& family, bool parallel, const Guards& guards) {
  auto faces = intersecting_faces(family, parallel, guards);
  std::vector<int> labels(family.size());
  for (std::size_t j = 0; j < labels.size(); ++j) labels[j] = static_cast<int>(j + 1);
  std::vector<Face> masks{0};
  for (const auto& fi : faces) masks.push_back(fi.face);
  return SimplicialComplex(std::move(labels), std::move(masks));
}

}  // namespace

SimplicialComplex nerve(const std::vector<TraceSet>& family, const Guards& guards) {
  return nerve_impl(family, true, guards);
}

SimplicialComplex nerve_serial(const std::vector<TraceSet>& family, const Guards& guards) {
  return nerve_impl(family, false, guards);
}

std::vector<TraceSet> truncate_family(const std::vector<TraceSet>& family, const std::vector<std::size_t>& support,
                                      int level, const Rat& cutoff) {
  std::vector<TraceSet> out = family;
  for (std::size_t j : support) {
    const auto& src = family.at(j);
    if (level < 1 || level > src.dims()) throw InputError("truncation level out of range");
    auto runs = src.runs();
    auto& r = runs[level - 1];
    if (r) {
      const auto& coords = src.ground()->level_coords(level);
      auto keep_from = static_cast<std::size_t>(std::upper_bound(coords.begin(), coords.end(), cutoff) - coords.begin());
      if (keep_from > r->last) {
        r.reset();
      } else {
        r->first = std::max(r->first, keep_from);
      }
    }
    for (int higher = level + 1; higher <= src.dims(); ++higher) runs[higher - 1].reset();
    out[j] = TraceSet(src.ground(), std::move(runs));
  }
  return out;
}

std::string to_string(SweepRule rule) {
  switch (rule) {
    case SweepRule::lexmin: return "lexmin";
    case SweepRule::deletion: return "deletion";
    case SweepRule::cut: return "cut";
    case SweepRule::trim: return "trim";
  }
  return "?";
}

namespace {

/// A total order on P: levels swept in `levels` order, each level ascending
/// or descending. The lexmin rule sweeps d, d-1, ..., 1, all ascending.
struct SweepOrder {
  std::vector<int> levels;
  std::vector<bool> ascending;  // indexed by level - 1
};

std::vector<SweepOrder> all_orders(int d) {
  std::vector<int> perm(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) perm[i] = d - i;
  std::vector<SweepOrder> out;
  do {
    for (unsigned dirs = 0; dirs < (1u << d); ++dirs) {
      SweepOrder o{perm, std::vector<bool>(static_cast<std::size_t>(d))};
      for (int i = 0; i < d; ++i) o.ascending[i] = !(dirs >> i & 1u);
      out.push_back(std::move(o));
    }
  } while (std::prev_permutation(perm.begin(), perm.end()));
  return out;
}

/// Last point of a nonempty trace in the sweep order, as (level, index).
std::pair<int, std::size_t> order_max(const TraceSet& t, const SweepOrder& o) {
  for (auto it = o.levels.rbegin(); it != o.levels.rend(); ++it) {
    if (const auto& r = t.run(*it)) return {*it, o.ascending[*it - 1] ? r->last : r->first};
  }
  throw InputError("order_max of an empty trace");
}

/// Removes every point that comes no later than q in the sweep order.
TraceSet cut_trace(const TraceSet& t, const SweepOrder& o, std::pair<int, std::size_t> q) {
  auto runs = t.runs();
  for (int level : o.levels) {
    auto& r = runs[level - 1];
    if (level != q.first) {
      r.reset();
      continue;
    }
    if (r) {
      if (o.ascending[level - 1]) {
        if (q.second >= r->last) r.reset();
        else r->first = std::max(r->first, q.second + 1);
      } else {
        if (q.second <= r->first) r.reset();
        else r->last = std::min(r->last, q.second - 1);
      }
    }
    break;
  }
  return TraceSet(t.ground(), std::move(runs));
}

std::optional<Run> clip(const Run& r, std::size_t first, std::size_t last) {
  const std::size_t f = std::max(r.first, first);
  const std::size_t l = std::min(r.last, last);
  if (f > l) return std::nullopt;
  return Run{f, l};
}

TraceSet with_run(const TraceSet& t, int level, std::optional<Run> r) {
  auto runs = t.runs();
  runs[level - 1] = r;
  return TraceSet(t.ground(), std::move(runs));
}

using FamilyKey = std::vector<std::vector<std::optional<Run>>>;

FamilyKey key_of(const std::vector<TraceSet>& family) {
  FamilyKey key;
  key.reserve(family.size());
  for (const auto& t : family) key.push_back(t.runs());
  return key;
}

bool operator<(const std::optional<Run>& a, const std::optional<Run>& b) {
  if (!a || !b) return !a && b;
  return std::pair(a->first, a->last) < std::pair(b->first, b->last);
}

struct KeyLess {
  bool operator()(const FamilyKey& a, const FamilyKey& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                          [](const auto& p, const auto& q) { return p < q; });
    });
  }
};

/// Depth-first search over verified sweep steps. A move replaces the family
/// by one whose nerve is coll(K, σ) for a free σ of size <= 2d-1; moves are
/// tried as: lexmin rule, deletion of a free vertex, cuts in every sweep
/// order, minimal trims. Families from which no sequence finishes are
/// remembered.
class SweepSearch {
 public:
  SweepSearch(const Guards& guards, int bound, SweepMode mode)
      : guards_(guards), bound_(bound), mode_(mode), budget_(guards.collapse_faces * 16) {}

  struct Move {
    Face sigma = 0;
    std::vector<TraceSet> family;
    SweepStepInfo info;
  };

  std::vector<Move> path;
  std::size_t backtracks = 0;

  bool run(const std::vector<TraceSet>& work, const SimplicialComplex& current) {
    if (current.is_void()) return true;
    const auto key = key_of(work);
    if (dead_.contains(key)) return false;
    const auto faces = intersecting_faces(work, true, guards_);
    bool done = false;
    for_each_move(work, current, faces, [&](Move&& m, const SimplicialComplex& next) {
      path.push_back(std::move(m));
      if (run(path.back().family, next)) {
        done = true;
        return true;
      }
      path.pop_back();
      ++backtracks;
      return false;
    });
    if (!done) dead_.insert(key);
    return done;
  }

  /// The lexmin step for the current family, whether or not it verifies.
  Move lexmin_move(const std::vector<TraceSet>& work, const std::vector<FaceIntersection>& faces) const {
    const FaceIntersection* best = nullptr;
    FLexValue best_f;
    for (const auto& fi : faces) {
      FLexValue f = f_value(fi.intersection);
      if (!best || f < best_f ||
          (f == best_f && (face_size(fi.face) < face_size(best->face) ||
                           (face_size(fi.face) == face_size(best->face) && index_set_less(fi.face, best->face))))) {
        best = &fi;
        best_f = std::move(f);
      }
    }
    Move m;
    m.sigma = best->face;
    const auto support = face_indices(m.sigma);
    m.info = SweepStepInfo{best_f, support.size(), 0, SweepRule::lexmin, m.sigma};
    if (support.size() == 1) {
      m.family = work;
      m.family[support.front()] = TraceSet::empty(work[support.front()].ground());
    } else {
      // A nonempty intersection always has a finite component.
      const auto first = best_f.first_finite(1).front();
      m.info.truncation_level = first.level;
      m.family = truncate_family(work, support, first.level, first.coord);
    }
    return m;
  }

  std::string diagnostic_for(const std::vector<TraceSet>& work, const SimplicialComplex& current,
                             const std::string& what) const {
    const auto faces = intersecting_faces(work, true, guards_);
    const auto m = lexmin_move(work, faces);
    std::ostringstream os;
    os << "sweep collapse: " << what << "\nfamily:\n" << describe_family(work) << "sigma: {";
    bool first = true;
    for (int l : current.face_labels(m.sigma)) {
      os << (first ? "" : ",") << l;
      first = false;
    }
    os << "}\ncurrent nerve: " << current.describe();
    os << "\ntransformed family:\n" << describe_family(m.family);
    os << "nerve after transformation: " << nerve(m.family, guards_).describe();
    return os.str();
  }

 private:
  const Guards& guards_;
  int bound_;
  SweepMode mode_;
  std::size_t budget_;
  std::size_t evaluations_ = 0;
  std::set<FamilyKey, KeyLess> dead_;

  SimplicialComplex evaluate(const std::vector<TraceSet>& family) {
    if (++evaluations_ > budget_) throw GuardError("sweep collapse search exceeded its nerve evaluation budget", budget_);
    return nerve(family, guards_);
  }

  /// Calls visit(move, coll(K, σ)) for every verified move until it returns true.
  template <class Visit>
  bool for_each_move(const std::vector<TraceSet>& work, const SimplicialComplex& current,
                     const std::vector<FaceIntersection>& faces, Visit&& visit) {
    Move lex = lexmin_move(work, faces);
    const int lex_size = face_size(lex.sigma);
    if (lex_size > bound_) throw TheoremViolation(diagnostic_for(work, current, "minimal support exceeds 2d-1"));
    if (!current.is_free(lex.sigma)) throw TheoremViolation(diagnostic_for(work, current, "selected face is not free"));
    {
      auto target = elementary_collapse(current, lex.sigma).complex;
      if (evaluate(lex.family) == target && visit(std::move(lex), target)) return true;
    }
    if (mode_ == SweepMode::literal) return false;

    std::vector<const FaceIntersection*> order;
    for (const auto& fi : faces) {
      if (face_size(fi.face) <= bound_ && current.is_free(fi.face)) order.push_back(&fi);
    }
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
      if (face_size(a->face) != face_size(b->face)) return face_size(a->face) < face_size(b->face);
      return index_set_less(a->face, b->face);
    });
    const int d = work.front().dims();
    const auto orders = all_orders(d);
    std::set<FamilyKey, KeyLess> tried;
    auto offer = [&](Face sigma, std::vector<TraceSet>&& next, SweepStepInfo info,
                     const SimplicialComplex& target) {
      if (!tried.insert(key_of(next)).second) return false;
      if (!(evaluate(next) == target)) return false;
      return visit(Move{sigma, std::move(next), std::move(info)}, target);
    };

    for (const auto* fi : order) {
      const Face sigma = fi->face;
      const auto target = elementary_collapse(current, sigma).complex;
      const auto members = face_indices(sigma);
      const FLexValue f = f_value(fi->intersection);
      if (members.size() == 1) {
        auto next = work;
        next[members.front()] = TraceSet::empty(work[members.front()].ground());
        if (offer(sigma, std::move(next), {f, 1, 0, SweepRule::deletion, sigma}, target)) return true;
        continue;
      }
      std::vector<Face> subsets;
      for (Face s = sigma; s != 0; s = (s - 1) & sigma) subsets.push_back(s);
      std::stable_sort(subsets.begin(), subsets.end(), [](Face a, Face b) { return face_size(a) > face_size(b); });
      for (const auto& o : orders) {
        const auto q = order_max(fi->intersection, o);
        for (Face s : subsets) {
          auto next = work;
          for (auto j : face_indices(s)) next[j] = cut_trace(work[j], o, q);
          if (offer(sigma, std::move(next), {f, members.size(), q.first, SweepRule::cut, s}, target)) return true;
        }
      }
    }
    for (const auto* fi : order) {
      if (face_size(fi->face) < 2) continue;
      const auto target = elementary_collapse(current, fi->face).complex;
      const auto members = face_indices(fi->face);
      std::vector<int> levels;
      for (int level = 1; level <= d; ++level) {
        if (fi->intersection.run(level)) levels.push_back(level);
      }
      auto fam = work;
      const FLexValue f = f_value(fi->intersection);
      if (trim(fam, work, members, levels, 0, *fi, target, [&](std::vector<TraceSet>&& next) {
            Face touched = 0;
            for (auto j : members) {
              if (!(next[j] == work[j])) touched |= Face{1} << j;
            }
            return offer(fi->face, std::move(next), {f, members.size(), 0, SweepRule::trim, touched}, target);
          })) {
        return true;
      }
    }
    return false;
  }

  /// Minimal trims: on every level where the intersection of σ is nonempty,
  /// drop the overlap from one member's prefix or suffix, or split it between
  /// two members. Partial choices that already lose a face of the target are
  /// pruned.
  template <class Emit>
  bool trim(std::vector<TraceSet>& fam, const std::vector<TraceSet>& work, const std::vector<std::size_t>& members,
            const std::vector<int>& levels, std::size_t depth, const FaceIntersection& fi,
            const SimplicialComplex& target, Emit&& emit) {
    if (depth == levels.size()) return emit(std::vector<TraceSet>(fam));
    const int level = levels[depth];
    const std::size_t lo = fi.intersection.run(level)->first;
    const std::size_t hi = fi.intersection.run(level)->last;
    auto attempt = [&](std::initializer_list<std::pair<std::size_t, std::optional<Run>>> edits) {
      std::vector<std::pair<std::size_t, TraceSet>> saved;
      for (const auto& [j, r] : edits) {
        saved.emplace_back(j, fam[j]);
        fam[j] = with_run(fam[j], level, r);
      }
      const auto k = evaluate(fam);
      const bool keeps =
          std::all_of(target.faces().begin(), target.faces().end(), [&](Face g) { return k.contains(g); });
      const bool stop = keeps && trim(fam, work, members, levels, depth + 1, fi, target, emit);
      for (auto it = saved.rbegin(); it != saved.rend(); ++it) fam[it->first] = it->second;
      return stop;
    };
    for (auto j : members) {
      const Run r = *fam[j].run(level);
      if (attempt({{j, clip(r, hi + 1, SIZE_MAX)}})) return true;
      if (attempt({{j, lo == 0 ? std::nullopt : clip(r, 0, lo - 1)}})) return true;
    }
    for (auto a : members) {
      for (auto b : members) {
        if (a == b) continue;
        const Run ra = *fam[a].run(level);
        const Run rb = *fam[b].run(level);
        for (std::size_t y = lo; y < hi; ++y) {
          if (attempt({{a, clip(ra, 0, y)}, {b, clip(rb, y + 1, SIZE_MAX)}})) return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

SweepResult sweep_collapse(const std::vector<TraceSet>& family, const Guards& guards, SweepMode mode) {
  SweepResult result;
  SimplicialComplex current = nerve(family, guards);
  result.initial = current;
  if (family.empty()) return result;
  const int bound = 2 * family.front().dims() - 1;
  result.sequence.bound = bound;

  SweepSearch search(guards, bound, mode);
  if (!search.run(family, current)) {
    // Report the first family on which the search stalls along the lexmin path.
    std::vector<TraceSet> work = family;
    SimplicialComplex k = current;
    std::string what = mode == SweepMode::literal ? "nerve of transformed family != coll(K, sigma)"
                                                  : "no sequence of verified steps empties the nerve";
    for (const auto& m : search.path) {
      k = elementary_collapse(k, m.sigma).complex;
      work = m.family;
    }
    throw TheoremViolation(search.diagnostic_for(work, k, what));
  }
  // Replay the accepted moves, re-checking every nerve.
  for (auto& m : search.path) {
    auto collapsed = elementary_collapse(current, m.sigma);
    if (!(nerve(m.family, guards) == collapsed.complex)) {
      throw TheoremViolation("sweep collapse: accepted step does not reproduce coll(K, sigma)");
    }
    if (m.info.rule != SweepRule::lexmin) ++result.fallback_steps;
    result.sequence.steps.push_back(std::move(collapsed.step));
    result.info.push_back(std::move(m.info));
    current = std::move(collapsed.complex);
  }
  result.backtracks = search.backtracks;
  return result;
}

namespace {

struct OracleSearch {
  int bound;
  std::set<std::vector<Face>> dead;
  std::vector<CollapseStep> path;
  std::size_t explored = 0;

  bool run(const std::vector<Face>& state) {
    if (state_is_void(state)) return true;
    if (dead.contains(state)) return false;
    ++explored;
    const auto maximal = maximal_of(state);
    std::vector<std::pair<Face, Face>> candidates;
    for (Face sigma : state) {
      if (sigma == 0 || face_size(sigma) > bound) continue;
      Face owner = 0;
      int owners = 0;
      for (Face m : maximal) {
        if (is_subface(sigma, m)) {
          owner = m;
          ++owners;
        }
      }
      if (owners == 1) candidates.emplace_back(sigma, owner);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return face_size(a.first) > face_size(b.first); });
    for (const auto& [sigma, owner] : candidates) {
      CollapseStep step{sigma, owner, {}};
      auto next = remove_cofaces(state, sigma, &step.removed);
      path.push_back(std::move(step));
      if (run(next)) return true;
      path.pop_back();
    }
    dead.insert(state);
    return false;
  }
};

}  // namespace

OracleResult is_d_collapsible(const SimplicialComplex& complex, int bound, const Guards& guards) {
  if (complex.faces().size() > guards.collapse_faces) {
    throw GuardError("collapsibility search over " + std::to_string(complex.faces().size()) + " faces",
                     guards.collapse_faces);
  }
  OracleSearch search{bound, {}, {}, 0};
  OracleResult out;
  out.collapsible = search.run(complex.faces());
  out.states_explored = search.explored;
  if (out.collapsible) out.witness = CollapseSequence{bound, std::move(search.path)};
  return out;
}

ColorfulStats colorful_face_stats(const SimplicialComplex& complex, const std::vector<std::vector<int>>& classes) {
  std::vector<Face> masks;
  Face seen = 0;
  for (const auto& cls : classes) {
    Face m = complex.face_of_labels(cls);
    if ((m & seen) != 0) throw InputError("colour classes overlap");
    seen |= m;
    masks.push_back(m);
  }
  // Label slots of empty members are not vertices.
  Face vertices = 0;
  for (Face f : complex.faces()) {
    if (face_size(f) == 1) vertices |= f;
  }
  if (seen != vertices) throw InputError("colour classes do not partition the vertex set");

  ColorfulStats out;
  out.induced_dims.assign(masks.size(), -1);
  for (Face f : complex.faces()) {
    bool colorful = f != 0;
    for (std::size_t c = 0; c < masks.size(); ++c) {
      const Face part = f & masks[c];
      if (face_size(part) != 1) colorful = false;
      if (part == f && f != 0) out.induced_dims[c] = std::max(out.induced_dims[c], face_dim(f));
    }
    if (colorful) ++out.colorful_faces;
  }
  return out;
}

}  // namespace helly
