#include "lattice.hpp"

#include <algorithm>

namespace tropexp {

Hnf row_hermite_normal_form(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.rows());
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (h.at(i, j) != 0) { piv = i; break; }
    if (piv < 0) continue;
    h.swap_rows(r, piv);
    u.swap_rows(r, piv);
    for (int i = r + 1; i < rows; ++i) {
      if (h.at(i, j) == 0) continue;
      Int p, q;
      Int a = h.at(r, j), b = h.at(i, j);
      Int g = xgcd(a, b, p, q);
      Int ag = a / g, bg = b / g;
      // [[p, q], [-bg, ag]] has determinant 1.
      for (int k = 0; k < cols; ++k) {
        Int hr = h.at(r, k), hi = h.at(i, k);
        h.at(r, k) = p * hr + q * hi;
        h.at(i, k) = -bg * hr + ag * hi;
      }
      for (int k = 0; k < rows; ++k) {
        Int ur = u.at(r, k), ui = u.at(i, k);
        u.at(r, k) = p * ur + q * ui;
        u.at(i, k) = -bg * ur + ag * ui;
      }
    }
    if (h.at(r, j) < 0) { h.negate_row(r); u.negate_row(r); }
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(h.at(i, j), h.at(r, j));
      if (q != 0) { h.addmul_row(i, r, -q); u.addmul_row(i, r, -q); }
    }
    ++r;
  }
  return {h, u};
}

Hnf hermite_normal_form(const IntMat& m) {
  Hnf t = row_hermite_normal_form(m.transpose());
  return {t.h.transpose(), t.u.transpose()};
}

std::vector<Int> Snf::divisors() const {
  std::vector<Int> d;
  int k = std::min(s.rows(), s.cols());
  for (int i = 0; i < k; ++i)
    if (s.at(i, i) != 0) d.push_back(s.at(i, i));
  return d;
}

Snf smith_normal_form(const IntMat& m) {
  IntMat s = m;
  int rows = m.rows(), cols = m.cols();
  IntMat u = IntMat::identity(rows);
  IntMat u_inv = IntMat::identity(rows);
  IntMat v = IntMat::identity(cols);

  auto row_swap = [&](int i, int j) {
    s.swap_rows(i, j); u.swap_rows(i, j); u_inv.swap_cols(i, j);
  };
  auto row_addmul = [&](int i, int j, const Int& c) {
    s.addmul_row(i, j, c); u.addmul_row(i, j, c); u_inv.addmul_col(j, i, -c);
  };
  auto row_negate = [&](int i) { s.negate_row(i); u.negate_row(i); u_inv.negate_col(i); };
  auto col_swap = [&](int i, int j) { s.swap_cols(i, j); v.swap_cols(i, j); };
  auto col_addmul = [&](int i, int j, const Int& c) { s.addmul_col(i, j, c); v.addmul_col(i, j, c); };

  int k = std::min(rows, cols);
  for (int t = 0; t < k; ++t) {
    for (;;) {
      // Move the absolutely smallest nonzero entry of the trailing block to (t,t).
      int bi = -1, bj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          if (s.at(i, j) == 0) continue;
          if (bi < 0 || boost::multiprecision::abs(s.at(i, j)) < boost::multiprecision::abs(s.at(bi, bj))) {
            bi = i; bj = j;
          }
        }
      if (bi < 0) { bi = bj = -1; break; }
      row_swap(t, bi);
      col_swap(t, bj);
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = fdiv(s.at(i, t), s.at(t, t));
        row_addmul(i, t, -q);
        if (s.at(i, t) != 0) dirty = true;
      }
      if (dirty) continue;
      for (int j = t + 1; j < cols; ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = fdiv(s.at(t, j), s.at(t, t));
        col_addmul(j, t, -q);
        if (s.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Row and column are clear; enforce divisibility into the pivot.
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols && fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            row_addmul(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (t < k && s.at(t, t) < 0) row_negate(t);
    if (t < k && s.at(t, t) == 0) break;  // trailing block is zero
  }
  return {s, u, v, u_inv};
}

IntMat kernel_basis(const IntMat& m) {
  Snf f = smith_normal_form(m);
  int cols = m.cols();
  int k = std::min(m.rows(), cols);
  std::vector<int> idx;
  for (int j = 0; j < cols; ++j)
    if (j >= k || f.s.at(j, j) == 0) idx.push_back(j);
  IntMat ker = f.v.cols_subset(idx);
  return lattice_canonical(ker);
}

bool is_saturated_image(const IntMat& m) {
  Snf f = smith_normal_form(m);
  for (const Int& d : f.divisors())
    if (d != 1) return false;
  return true;
}

std::optional<IntVec> solve_integral(const IntMat& m, const IntVec& b) {
  if (int(b.size()) != m.rows()) throw Error(ErrorCode::Internal, "solve_integral shape mismatch");
  Snf f = smith_normal_form(m);
  IntVec c = f.u.apply(b);
  int rows = m.rows(), cols = m.cols();
  int k = std::min(rows, cols);
  IntVec y(cols, Int(0));
  for (int i = 0; i < rows; ++i) {
    Int d = (i < k) ? f.s.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  return f.v.apply(y);
}

IntMat right_inverse(const IntMat& m) {
  int rows = m.rows(), cols = m.cols();
  if (rows > cols) throw Error(ErrorCode::NotSurjective, "more rows than columns");
  Hnf f = hermite_normal_form(m);
  // Surjectivity of the lattice map means the column Hermite form is
  // [L | 0] with L lower triangular and unit diagonal.
  for (int i = 0; i < rows; ++i)
    if (f.h.at(i, i) != 1)
      throw Error(ErrorCode::NotSurjective, "image is a proper sublattice (nonunit Hermite pivot)");
  // Forward-substitute L^{-1}, integral since diag(L) = 1.
  IntMat linv = IntMat::identity(rows);
  for (int j = 0; j < rows; ++j)
    for (int i = j + 1; i < rows; ++i) {
      // Row i of L^{-1} = e_i - sum L(i,k) row_k for k < i, built incrementally.
      Int acc = 0;
      for (int k = j; k < i; ++k) acc += f.h.at(i, k) * linv.at(k, j);
      linv.at(i, j) = -acc;
    }
  std::vector<int> first_cols(rows);
  for (int i = 0; i < rows; ++i) first_cols[i] = i;
  IntMat vleft = f.u.cols_subset(first_cols);
  return vleft * linv;
}

QuotientPresentation quotient_by(const IntMat& kernel, int ambient_rank) {
  if (kernel.rows() != ambient_rank && kernel.cols() != 0)
    throw Error(ErrorCode::Internal, "kernel ambient mismatch");
  int k = kernel.cols();
  if (k > 0) {
    if (rank_of(kernel) != k)
      throw Error(ErrorCode::NotSaturated, "kernel columns are dependent");
    if (!is_saturated_image(kernel))
      throw Error(ErrorCode::NotSaturated, "kernel spans a non-saturated sublattice; quotient has torsion");
  }
  QuotientPresentation q;
  q.ambient_rank = ambient_rank;
  q.kernel_basis = kernel;
  q.quotient_rank = ambient_rank - k;
  if (k == 0) {
    q.projection = IntMat::identity(ambient_rank);
    return q;
  }
  Snf f = smith_normal_form(kernel);
  std::vector<int> rest;
  for (int i = k; i < ambient_rank; ++i) rest.push_back(i);
  IntMat p = f.u.rows_subset(rest);
  // Canonical: reduce by row Hermite form (changes p by a unimodular left
  // factor only, so kernel and surjectivity are untouched).
  q.projection = row_hermite_normal_form(p).h;
  return q;
}

IntMat lattice_canonical(const IntMat& m) {
  Hnf f = hermite_normal_form(m);
  std::vector<int> keep;
  for (int j = 0; j < f.h.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < f.h.rows(); ++i)
      if (f.h.at(i, j) != 0) { zero = false; break; }
    if (!zero) keep.push_back(j);
  }
  return f.h.cols_subset(keep);
}

IntMat saturation_basis(const IntMat& m) {
  Snf f = smith_normal_form(m);
  int r = int(f.divisors().size());
  std::vector<int> first(r);
  for (int i = 0; i < r; ++i) first[i] = i;
  return lattice_canonical(f.u_inv.cols_subset(first));
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
  return lattice_canonical(a) == lattice_canonical(b);
}

std::optional<IntVec> coords_in_basis(const IntMat& b, const IntVec& v) {
  return solve_integral(b, v);
}

}  // namespace tropexp
