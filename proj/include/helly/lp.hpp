#pragma once

#include "helly/rational.hpp"

#include <cstddef>
#include <vector>

namespace helly {

struct LPSolution {
  Rat objective;
  std::vector<Rat> primal;
  std::vector<Rat> dual;
  /// Both assignments re-verified feasible and the objectives coincide.
  bool certified = false;
  std::size_t pivots = 0;
};

/// Dense-tableau primal simplex in exact rationals with Bland's rule:
///   maximise c·x  subject to  A x <= b,  x >= 0,  with b >= 0.
/// The dual (minimise b·y, Aᵀy >= c, y >= 0) is read off the final tableau
/// and both sides are re-checked. Throws InputError on negative b or
/// ragged rows, std::domain_error if the program is unbounded.
LPSolution solve_packing_lp(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                            const std::vector<Rat>& c);

/// Re-checks primal/dual feasibility and objective equality.
bool check_certificate(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b, const std::vector<Rat>& c,
                       const LPSolution& sol);

}  // namespace helly
