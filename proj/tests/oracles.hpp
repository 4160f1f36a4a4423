#pragma once

// Test-only brute-force oracles. Nothing here may call into the code paths it
// is used to check: membership is decided by Caratheodory-style enumeration,
// lattices by box enumeration.

#include <vector>

#include "core/lattice.hpp"
#include "core/matrix.hpp"

namespace tropexp::oracle {

// Is x a nonnegative rational combination of the columns of gens?
// Caratheodory: x lies in the cone iff it is a nonnegative combination of
// some linearly independent subset of the generators.
inline bool in_cone(const IntMat& gens, const RatVec& x) {
  int n = gens.rows(), k = gens.cols();
  bool x_zero = true;
  for (const auto& c : x)
    if (c != 0) { x_zero = false; break; }
  if (x_zero) return true;
  if (k == 0) return false;
  int d = std::min(n, k);
  std::vector<int> subset;
  // enumerate all subsets of size <= d
  for (int mask = 1; mask < (1 << k); ++mask) {
    if (__builtin_popcount(unsigned(mask)) > d) continue;
    subset.clear();
    for (int j = 0; j < k; ++j)
      if (mask & (1 << j)) subset.push_back(j);
    IntMat sub = gens.cols_subset(subset);
    if (rank_of(sub) != int(subset.size())) continue;
    auto sol = solve_rational(sub, x);
    if (!sol) continue;
    bool nonneg = true;
    for (const auto& c : *sol)
      if (c < 0) { nonneg = false; break; }
    if (nonneg) return true;
  }
  return false;
}

// All integer points of the box [-bound, bound]^n with m x = 0.
inline std::vector<IntVec> box_kernel_points(const IntMat& m, int bound) {
  int n = m.cols();
  std::vector<IntVec> out;
  IntVec x(n, Int(-bound));
  for (;;) {
    IntVec y = m.apply(x);
    bool zero = true;
    for (const auto& v : y)
      if (v != 0) { zero = false; break; }
    if (zero) out.push_back(x);
    int i = 0;
    while (i < n) {
      x[i] += 1;
      if (x[i] <= bound) break;
      x[i] = -bound;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

// Rational sample grid for membership cross-checks: coordinates i/den with
// |i| <= num_max.
inline std::vector<RatVec> rational_grid(int dim, int num_max, int den) {
  std::vector<RatVec> out;
  std::vector<int> idx(dim, -num_max);
  for (;;) {
    RatVec p(dim);
    for (int i = 0; i < dim; ++i) p[i] = Rat(idx[i], den);
    out.push_back(p);
    int i = 0;
    while (i < dim) {
      if (++idx[i] <= num_max) break;
      idx[i] = -num_max;
      ++i;
    }
    if (i == dim) break;
  }
  return out;
}

}  // namespace tropexp::oracle
