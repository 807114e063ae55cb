#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace helly {

/// Calls fn(combo) for every r-subset of {0..n-1} in lexicographic order.
/// Stops early when fn returns false. Returns false iff stopped early.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return true;
  std::vector<std::size_t> combo(r);
  for (std::size_t i = 0; i < r; ++i) combo[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(combo))) return false;
    if (r == 0) return true;
    std::size_t i = r;
    while (i > 0 && combo[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++combo[i - 1];
    for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
  }
}

/// Calls fn(tuple) for every element of the product {0..sizes[0]-1} × ...
/// in lexicographic order. Stops early when fn returns false.
template <class Fn>
bool for_each_product(const std::vector<std::size_t>& sizes, Fn&& fn) {
  for (auto s : sizes) {
    if (s == 0) return true;
  }
  std::vector<std::size_t> tuple(sizes.size(), 0);
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(tuple))) return false;
    std::size_t i = sizes.size();
    while (i > 0) {
      if (++tuple[i - 1] < sizes[i - 1]) break;
      tuple[i - 1] = 0;
      --i;
    }
    if (i == 0) return true;
  }
}

inline mpz_class binomial(unsigned long n, unsigned long r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

}  // namespace helly
