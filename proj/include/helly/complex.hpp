#pragma once

// Explicit simplicial complexes (every face stored), nerves of trace
// families, elementary collapses, the lexicographic sweep collapse and an
// exhaustive d-collapsibility oracle.

#include "helly/errors.hpp"
#include "helly/interval.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace helly {

/// Face of a complex as a bitmask over vertex positions (at most 32 vertices).
using Face = std::uint32_t;

inline int face_size(Face f) { return __builtin_popcount(f); }
inline int face_dim(Face f) { return face_size(f) - 1; }
inline bool is_subface(Face sub, Face sup) { return (sub & ~sup) == 0; }

class SimplicialComplex {
 public:
  /// The empty complex (no faces at all).
  SimplicialComplex() = default;

  /// `labels[i]` names vertex position i. Throws InputError unless `faces`
  /// is downward closed over those positions.
  SimplicialComplex(std::vector<int> labels, std::vector<Face> faces);

  /// Downward closure of the generating faces.
  static SimplicialComplex closure(std::vector<int> labels, const std::vector<Face>& generators);

  const std::vector<int>& labels() const { return labels_; }
  /// Sorted ascending; includes ∅ (mask 0) whenever the complex is nonempty.
  const std::vector<Face>& faces() const { return faces_; }

  bool contains(Face f) const;
  /// No faces at all.
  bool empty() const { return faces_.empty(); }
  /// No nonempty faces: either empty or {∅}.
  bool is_void() const { return faces_.empty() || (faces_.size() == 1 && faces_[0] == 0); }
  int dim() const;

  std::vector<Face> maximal_faces() const;
  std::vector<Face> maximal_faces_containing(Face sigma) const;
  bool is_free(Face sigma) const { return contains(sigma) && maximal_faces_containing(sigma).size() == 1; }

  std::vector<int> face_labels(Face f) const;
  /// Throws InputError for labels that are not vertices.
  Face face_of_labels(const std::vector<int>& labels) const;

  std::string describe() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<int> labels_;
  std::vector<Face> faces_;
};

struct CollapseStep {
  Face free_face = 0;
  Face unique_maximal = 0;
  std::vector<Face> removed;
};

struct CollapseSequence {
  int bound = 0;
  std::vector<CollapseStep> steps;
};

/// Raised when σ is a face but lies in several maximal faces.
class NotFreeError : public InputError {
 public:
  NotFreeError(const std::string& what, std::vector<Face> maximal)
      : InputError(what), maximal_(std::move(maximal)) {}
  const std::vector<Face>& maximal() const { return maximal_; }

 private:
  std::vector<Face> maximal_;
};

struct CollapseResult {
  SimplicialComplex complex;
  CollapseStep step;
};

/// coll(K, σ). Throws InputError if σ is not a face, NotFreeError if σ is not free.
CollapseResult elementary_collapse(const SimplicialComplex& complex, Face sigma);

/// Replays `seq` on `initial`: every step must collapse a free face of
/// dimension at most bound − 1 and remove exactly the recorded faces, and
/// the final complex must have no nonempty face. Returns an error message
/// or nullopt on success.
std::optional<std::string> verify_collapse_sequence(const SimplicialComplex& initial, const CollapseSequence& seq);

/// Nerve of a trace family; vertex labels are 1-based family indices. Empty
/// traces yield no vertex. Faces are generated level by level and a set J is
/// tested only when all of its facets are faces. The OpenMP kernel and the
/// serial reference produce identical complexes.
SimplicialComplex nerve(const std::vector<TraceSet>& family, const Guards& guards = {});
SimplicialComplex nerve_serial(const std::vector<TraceSet>& family, const Guards& guards = {});

/// Every nonempty face together with its intersection trace, sorted by mask.
struct FaceIntersection {
  Face face = 0;
  TraceSet intersection;
};
std::vector<FaceIntersection> intersecting_faces(const std::vector<TraceSet>& family, bool parallel,
                                                 const Guards& guards = {});

/// Removes, from each supported set, the points of `level` with coordinate
/// <= cutoff and every point on higher levels. Unsupported sets are copied.
std::vector<TraceSet> truncate_family(const std::vector<TraceSet>& family, const std::vector<std::size_t>& support,
                                      int level, const Rat& cutoff);

/// How a sweep step was realised.
///   lexmin:   the face with lexicographically minimal f (ties: smaller
///             support, then smaller index set); its members lose every point
///             up to the first finite coordinate of f and all higher levels.
///   deletion: a free vertex whose set is dropped.
///   cut:      a free face whose members (or some of them) lose every point
///             up to the maximum of the face's intersection in another sweep
///             order of the levels.
///   trim:     a free face whose intersection is removed level by level by
///             shortening one or two member runs at the overlap.
enum class SweepRule { lexmin, deletion, cut, trim };
std::string to_string(SweepRule rule);

struct SweepStepInfo {
  FLexValue f;
  std::size_t support_size = 0;
  /// First finite level of f (1-based); 0 when the support was deleted (n = 1).
  int truncation_level = 0;
  SweepRule rule = SweepRule::lexmin;
  /// Members whose traces were cut (family indices as a mask).
  Face cut_sets = 0;
};

struct SweepResult {
  SimplicialComplex initial;
  CollapseSequence sequence;
  std::vector<SweepStepInfo> info;
  /// Steps realised by a rule other than lexmin.
  std::size_t fallback_steps = 0;
  /// Verified steps that were undone because no sequence finished from them.
  std::size_t backtracks = 0;
};

enum class SweepMode {
  /// Only the lexmin rule; a failed nerve check throws TheoremViolation.
  literal,
  /// Depth-first search over verified steps, lexmin rule first, then
  /// deletions, cuts and trims of free faces of size <= 2d-1, backtracking
  /// out of families from which no sequence finishes.
  repaired
};

/// The lexicographic sweep: repeatedly collapse a free face of size <= 2d-1
/// and transform the family so that its nerve equals the collapsed complex.
/// Every step is checked: the face must be free and the transformed nerve
/// must equal coll(K, σ). Throws TheoremViolation with a full diagnostic when
/// no admissible sequence is found, GuardError when the search budget
/// (16 × the collapse face guard nerve evaluations) runs out.
SweepResult sweep_collapse(const std::vector<TraceSet>& family, const Guards& guards = {},
                           SweepMode mode = SweepMode::repaired);

struct OracleResult {
  bool collapsible = false;
  std::optional<CollapseSequence> witness;
  std::size_t states_explored = 0;
};

/// Exhaustive backtracking over free-face choices with memoised dead ends.
/// Throws GuardError when the complex exceeds the face guard.
OracleResult is_d_collapsible(const SimplicialComplex& complex, int bound, const Guards& guards = {});

struct ColorfulStats {
  std::size_t colorful_faces = 0;
  /// dim K[N_i] per class; −1 when no vertex of the class is a face.
  std::vector<int> induced_dims;
};

/// Classes are given as vertex labels and must partition the vertex set.
ColorfulStats colorful_face_stats(const SimplicialComplex& complex, const std::vector<std::vector<int>>& classes);

}  // namespace helly
