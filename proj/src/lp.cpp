#include "helly/lp.hpp"

#include "helly/errors.hpp"

#include <stdexcept>

namespace helly {

LPSolution solve_packing_lp(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                            const std::vector<Rat>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw InputError("constraint count differs from right-hand side length");
  for (const auto& row : a) {
    if (row.size() != n) throw InputError("ragged constraint matrix");
  }
  for (const auto& v : b) {
    if (v < 0) throw InputError("packing LP needs a nonnegative right-hand side");
  }

  // Columns: n structural, m slack, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rat>> tab(m + 1, std::vector<Rat>(width, Rat(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
    tab[i][n + i] = 1;
    tab[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  auto& obj = tab[m];
  for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];

  LPSolution sol;
  while (true) {
    // Bland: lowest-index improving column, lowest-index basic variable on ratio ties.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rat ratio = tab[i][width - 1] / tab[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw std::domain_error("linear program is unbounded");

    const Rat pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rat factor = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= factor * tab[leave][j];
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.objective = obj[width - 1];
  sol.primal.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.primal[basis[i]] = tab[i][width - 1];
  }
  sol.dual.assign(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) sol.dual[i] = obj[n + i];
  sol.certified = check_certificate(a, b, c, sol);
  return sol;
}

bool check_certificate(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b, const std::vector<Rat>& c,
                       const LPSolution& sol) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (sol.primal.size() != n || sol.dual.size() != m) return false;
  Rat primal_obj = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.primal[j] < 0) return false;
    primal_obj += c[j] * sol.primal[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * sol.primal[j];
    if (lhs > b[i]) return false;
  }
  Rat dual_obj = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sol.dual[i] < 0) return false;
    dual_obj += b[i] * sol.dual[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rat lhs = 0;
    for (std::size_t i = 0; i < m; ++i) lhs += a[i][j] * sol.dual[i];
    if (lhs < c[j]) return false;
  }
  return primal_obj == dual_obj && primal_obj == sol.objective;
}

}  // namespace helly
