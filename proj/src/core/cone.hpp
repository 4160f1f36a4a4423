#pragma once

#include <string>
#include <vector>

#include "lattice.hpp"
#include "matrix.hpp"

namespace tropexp {

// Rational polyhedral cone with integral structure. Not necessarily strictly
// convex: lineality is split off explicitly and face enumeration works on the
// pointed quotient. Immutable after construction; all state is canonical so
// cones compare and hash by value.
//
// Stored data:
//   rays       extreme rays modulo lineality, primitive canonical lifts,
//              sorted; empty for linear subspaces
//   lineality  canonical (column Hermite) basis of the maximal linear
//              subspace contained in the cone
//   facets     one primitive canonical normal per facet
//   equations  canonical basis of the annihilator of the span; the full
//              inequality description is facets plus +/- each equation
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(int ambient_rank, const IntMat& generators);
  static Cone from_inequalities(int ambient_rank, const std::vector<IntVec>& normals);
  static Cone zero(int ambient_rank);
  static Cone full_space(int ambient_rank);
  // Generators plus a complete valid inequality description already in hand
  // (face construction, products); skips the Fourier-Motzkin step.
  static Cone from_data(int ambient_rank, const IntMat& generators,
                        const std::vector<IntVec>& valid_normals);

  int ambient_rank() const { return ambient_; }
  int dim() const { return dim_; }
  int lineality_rank() const { return lineality_.cols(); }
  bool is_strictly_convex() const { return lineality_.cols() == 0; }
  bool is_simplicial() const { return lineality_.cols() == 0 && rays_.cols() == dim_; }
  // Simplicial with rays forming a basis of the span lattice.
  bool is_smooth() const;

  const IntMat& rays() const { return rays_; }
  const IntMat& lineality_basis() const { return lineality_; }
  const IntMat& facets() const { return facets_; }
  const IntMat& equations() const { return equations_; }
  // facets together with +/- equations: x in |cone| iff <n,x> >= 0 for all.
  IntMat facet_normals() const;
  // All generators as one matrix: rays and +/- lineality basis.
  IntMat generator_matrix() const;

  // Canonical saturated basis of span(cone) ∩ Z^n.
  const IntMat& span_basis() const { return span_basis_; }

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const;
  bool in_relative_interior(const RatVec& x) const;
  // Lattice point in the relative interior (sum of rays; origin for subspaces).
  IntVec relative_interior_point() const;

  Cone intersect(const Cone& other) const;
  bool is_face_of(const Cone& other) const;
  // All faces, each once, ordered by (dim, canonical key). Includes the
  // minimal face (the lineality space) and the cone itself.
  std::vector<Cone> faces() const;

  // Image cone under a lattice map given by left multiplication.
  Cone image(const IntMat& map) const;

  const std::string& key() const { return key_; }
  bool operator==(const Cone& o) const { return ambient_ == o.ambient_ && key_ == o.key_; }
  bool operator!=(const Cone& o) const { return !(*this == o); }

 private:
  static Cone canonicalize(int ambient_rank, const IntMat& generators,
                           const std::vector<IntVec>& valid_normals);

  int ambient_ = 0;
  int dim_ = 0;
  IntMat rays_;
  IntMat lineality_;
  IntMat facets_;
  IntMat equations_;
  IntMat span_basis_;
  std::string key_;
};

// Complete valid inequality description of cone(generators) by
// Fourier-Motzkin elimination of the coefficient variables. The returned
// normals may be redundant but define the cone exactly.
std::vector<IntVec> fourier_motzkin_dual(int ambient_rank, const IntMat& generators);

}  // namespace tropexp
