#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cone.hpp"

namespace tropexp {

struct NamedCone {
  std::string name;
  Cone cone;
  bool user_supplied = false;
  IntMat raw_generators;  // generators exactly as supplied, for saturation checks
};

struct Violation {
  std::string axiom;                // machine-readable code
  std::vector<std::string> cones;   // involved cone names
  std::string detail;
  bool operator<(const Violation& o) const {
    return std::tie(axiom, cones, detail) < std::tie(o.axiom, o.cones, o.detail);
  }
};

struct SubdivisionReport {
  bool is_valid = true;
  std::optional<bool> is_complete;  // nullopt: not decided (ambient rank > 4)
  std::vector<Violation> violations;
};

// Finite collection of cones in a common lattice, closed under faces, any two
// meeting in a common face. Cones are stored sorted by (dim, canonical key);
// face closure is added automatically with generated names f0, f1, ...
class ConeComplex {
 public:
  ConeComplex() = default;

  // Throws Error(ImproperIntersection) when two cones meet improperly and
  // Error(ValidationError) for duplicate names or duplicate cones.
  static ConeComplex build(int ambient_rank, const std::vector<NamedCone>& input);
  static std::optional<ConeComplex> try_build(int ambient_rank, const std::vector<NamedCone>& input,
                                              Violation* issue);

  int ambient_rank() const { return ambient_; }
  const std::vector<NamedCone>& cones() const { return cones_; }
  const NamedCone* find(const std::string& name) const;
  const NamedCone* find_by_key(const std::string& key) const;

  // Minimal cone containing x; absent when x is outside the support.
  std::optional<std::string> locate(const RatVec& x) const;

  std::vector<std::string> maximal_names() const;
  // Names of the faces of a member cone (all present by closure).
  std::vector<std::string> face_names_of(const std::string& name) const;

  // Rename members (used to give fibre vertices their canonical names).
  void rename(const std::map<std::string, std::string>& mapping);

 private:
  friend ConeComplex product(const ConeComplex&, const Cone&);
  void index();

  int ambient_ = 0;
  std::vector<NamedCone> cones_;
  std::map<std::string, int> by_name_;
  std::map<std::string, int> by_key_;
};

// Product complex: cones sigma x phi for sigma in delta and phi a face of tau,
// on ambient rank rank(delta) + rank(tau). Valid by construction.
ConeComplex product(const ConeComplex& delta, const Cone& tau);

// Checks that `up` is a conical subdivision of `delta` (both embedded in the
// same lattice): every cone of `up` sits inside a cone of `delta`, the
// supplied generator lattices are saturated, and the complex axioms of `up`
// hold (established at build time). Completeness (equality of supports) is
// decided by exact region subtraction for ambient rank <= 4.
SubdivisionReport validate_subdivision(const ConeComplex& up, const ConeComplex& delta);

// |delta_cone| ⊆ union of covers? Exact, via half-space subtraction with
// strict/nonstrict Fourier-Motzkin feasibility.
bool cone_covered_by(const Cone& delta_cone, const std::vector<Cone>& covers);

}  // namespace tropexp
