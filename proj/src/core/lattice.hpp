#pragma once

#include "matrix.hpp"

namespace tropexp {

// Column Hermite form: h = m * u with u unimodular, so the integer column
// span of h equals that of m. Nonzero columns come first, each with positive
// pivot and entries right of the pivot reduced.
struct Hnf {
  IntMat h;
  IntMat u;
};
Hnf hermite_normal_form(const IntMat& m);

// Row Hermite form: h = u * m with u unimodular (row operations).
Hnf row_hermite_normal_form(const IntMat& m);

// u * m * v = s, s diagonal with nonnegative elementary divisors d1 | d2 | ...
struct Snf {
  IntMat s;
  IntMat u;
  IntMat v;
  IntMat u_inv;
  std::vector<Int> divisors() const;  // nonzero diagonal entries
};
Snf smith_normal_form(const IntMat& m);

// Basis of the saturated integer kernel of m (columns); deterministic
// (column-Hermite reduced). Every integer solution of m x = 0 is an integer
// combination of the columns.
IntMat kernel_basis(const IntMat& m);

// True iff the column lattice of m is saturated in Z^rows (all nonzero
// elementary divisors equal 1).
bool is_saturated_image(const IntMat& m);

std::optional<IntVec> solve_integral(const IntMat& m, const IntVec& b);

// Right inverse of a surjective lattice map: m * r = identity. Deterministic
// choice via column-Hermite pivoting. Throws NotSurjective if m is not a
// surjection of lattices (full row rank with saturated image).
IntMat right_inverse(const IntMat& m);

struct QuotientPresentation {
  int ambient_rank = 0;
  IntMat kernel_basis;  // the input kernel, columns
  int quotient_rank = 0;
  IntMat projection;  // quotient_rank x ambient_rank, surjective, kernel = span(kernel_basis)
};

// Presents Z^ambient / span(kernel). Throws NotSaturated when the kernel
// columns are dependent or span a non-saturated sublattice (the quotient
// would have torsion).
QuotientPresentation quotient_by(const IntMat& kernel, int ambient_rank);

// Canonical basis of the column span over Z: column Hermite form with zero
// columns dropped. Unique per lattice, so usable as a dictionary key.
IntMat lattice_canonical(const IntMat& m);

// Canonical basis of the saturation span_Q(columns) ∩ Z^rows.
IntMat saturation_basis(const IntMat& m);

bool lattice_equal(const IntMat& a, const IntMat& b);

// Integer coordinates of v in the basis given by the columns of b; nullopt
// when v is not in the column lattice.
std::optional<IntVec> coords_in_basis(const IntMat& b, const IntVec& v);

}  // namespace tropexp
