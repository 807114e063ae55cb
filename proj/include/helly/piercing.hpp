#pragma once

// Transversal and matching numbers of trace families, their LP relaxations,
// (p,q)-property checkers, blow-ups and the Tardos–Kaiser inequality.

#include "helly/errors.hpp"
#include "helly/helly.hpp"
#include "helly/lp.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace helly {

/// Points of P covered by at least one member, in P's level-major order.
std::vector<Point> piercing_candidates(const Family& family);

struct TauResult {
  std::size_t tau = 0;
  std::vector<Point> points;
  std::size_t nodes = 0;
};

struct NuResult {
  std::size_t nu = 0;
  std::vector<std::size_t> subfamily;
};

struct FractionalResult {
  /// Matching LP: primal = weight per set, dual = weight per candidate point.
  LPSolution lp;
  std::vector<Point> candidates;
  Rat nu_star;
  Rat tau_star;
};

struct PiercingResult {
  TauResult tau;
  NuResult nu;
  FractionalResult fractional;
  /// ν <= ν* = τ* <= τ with a certified LP.
  bool sandwich_holds = false;
};

/// All three functions require nonempty members (τ is undefined otherwise)
/// and throw GuardError past the set guard.
TauResult tau_exact(const Family& family, const Guards& guards = {});
NuResult nu_exact(const Family& family, const Guards& guards = {});
FractionalResult fractional_lp(const Family& family, const Guards& guards = {});
PiercingResult pierce(const Family& family, const Guards& guards = {});

bool is_transversal(const Family& family, const std::vector<Point>& points);
bool pairwise_disjoint(const Family& family, const std::vector<std::size_t>& subfamily);

enum class PqKind { plain, colorful_first, colorful_second };
std::string to_string(PqKind kind);
/// Accepts "plain", "colorful-first", "colorful-second".
PqKind parse_pq_kind(const std::string& text);

struct PqResult {
  bool holds = true;
  /// plain: one entry with the p indices; colorful-first: the p chosen
  /// indices per family; colorful-second: one index per family.
  std::vector<std::vector<std::size_t>> counterexample;
};

/// plain takes one family with |F| >= p; colorful-first takes q families of
/// size >= p; colorful-second takes p families. Throws InputError otherwise.
PqResult pq_check(const std::vector<Family>& families, int p, int q, PqKind kind);

struct BlowUp {
  Family sets;
  std::vector<std::size_t> origin;
};

BlowUp blow_up(const Family& family, const std::vector<std::size_t>& multiplicities);

struct TardosKaiserResult {
  bool holds = false;
  std::size_t tau = 0;
  std::size_t nu = 0;
  /// d² − d; for d = 1 the check uses τ = ν instead.
  long long factor = 0;
};

TardosKaiserResult tardos_kaiser_check(const Family& family, const Guards& guards = {});

}  // namespace helly
