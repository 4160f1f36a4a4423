#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"

namespace tropexp {

struct RawConeSpec {
  std::string name;
  IntMat gens;  // columns, exactly as supplied
};

struct ExpansionSpec {
  int sigma_rank = 0;
  std::vector<RawConeSpec> sigma_cones;
  int tau_rank = 0;
  IntMat tau_gens;
  std::vector<std::string> tau_labels;  // defaults to e1, e2, ...
  std::vector<RawConeSpec> upsilon_cones;
  std::optional<std::vector<std::string>> one_complex_vertices;
};

// Locally-closed stratum bookkeeping: a cone omega of Upsilon with
// p(omega) = tau, i.e. a polyhedron of the generic fibre.
struct StratumInfo {
  std::string name;
  int poly_dim = 0;  // dim omega - dim tau
  std::string sigma_name;
  IntMat omega_basis;  // saturated basis of N_omega, ambient coordinates
  IntMat p_part;       // tau coordinates of the basis columns
  IntMat r_part;       // sigma coordinates of the basis columns
  bool bounded = false;
  std::vector<std::string> endpoints;  // vertex strata that are faces (edges: 2 if bounded)
};

struct FibrePolyhedron {
  std::string name;
  int dim = 0;
  std::vector<std::pair<std::string, RatVec>> vertices;  // (vertex cone name, Sigma-coordinates)
  std::vector<IntVec> recession;                         // primitive generators
  std::string sigma_name;
  std::optional<IntVec> slope;  // dim-1 cells: primitive, canonical sign
  std::vector<std::string> faces;  // lower-dimensional cells of this cell
};

struct FibreComplex {
  RatVec base_point;
  int tau_face_dim = 0;
  std::vector<FibrePolyhedron> polyhedra;  // sorted by (dim, name)
};

struct CombTypeEntry {
  std::string name;
  std::string sigma_name;
  IntMat slope_lattice;  // primitive generators of K_P inside N_Sigma, canonical
};

struct ConeCheck {
  std::string name;
  int dim = 0;
  bool p_image_is_face = false;
  int p_image_dim = 0;
  bool lattice_surjective = false;
  bool is_stratum = false;  // p(omega) = tau
};

// A tropical expansion p: Upsilon -> tau of Sigma, validated against the
// subdivision and expansion axioms. Construction never throws on axiom
// failures; findings are collected in report(). Operations that need a valid
// expansion throw Error(ValidationError) when called on an invalid one.
class Expansion {
 public:
  static Expansion build(const ExpansionSpec& spec);

  int sigma_rank() const { return sigma_rank_; }
  int tau_rank() const { return tau_rank_; }
  const ConeComplex& sigma() const { return sigma_; }
  const Cone& tau() const { return tau_; }
  const std::vector<std::string>& tau_labels() const { return tau_labels_; }
  bool structurally_ok() const { return structurally_ok_; }
  const ConeComplex& upsilon() const;
  const SubdivisionReport& report() const { return report_; }
  const std::vector<ConeCheck>& cone_checks() const { return cone_checks_; }
  bool valid() const { return structurally_ok_ && report_.is_valid; }
  void require_valid() const;

  const std::optional<std::vector<std::string>>& one_complex_vertices() const { return one_complex_; }

  // Projections as matrices: p to the last tau_rank coordinates, r to the
  // first sigma_rank coordinates.
  const IntMat& p_matrix() const { return p_; }
  const IntMat& r_matrix() const { return r_; }

  const std::vector<StratumInfo>& strata() const;
  const StratumInfo* stratum(const std::string& name) const;
  const StratumInfo& stratum_or_throw(const std::string& name) const;
  std::vector<std::string> vertex_names() const;
  std::vector<std::string> edge_names() const;  // 1-dimensional strata

  // Deterministic interior points of tau: the generator sum and two
  // perturbations with denominators 2 and 3.
  IntVec interior_base_point() const;
  std::vector<RatVec> sample_interior_points() const;

  FibreComplex fibre(const RatVec& f) const;  // throws PointOutsideBase
  ConeComplex asymptotic_complex() const;
  std::vector<CombTypeEntry> combinatorial_type() const;

  // Fibre vertices not declared in the embedded 1-complex. Throws
  // MissingOneComplex without tube bookkeeping and InvalidTube when a tube
  // candidate is not bivalent with matching slopes.
  std::vector<std::string> tube_vertices() const;

  // Incident 1-dimensional strata of a vertex stratum.
  std::vector<std::string> incident_edges(const std::string& vertex) const;
  // Primitive slope (canonical sign) of a 1-dimensional stratum.
  IntVec edge_slope(const std::string& edge) const;

  // Does the point (x | f) lie in the named stratum cone / its relative
  // interior? x in Sigma-coordinates, f in tau-coordinates.
  bool stratum_contains(const std::string& name, const RatVec& x, const RatVec& f,
                        bool relative_interior) const;

 private:
  int sigma_rank_ = 0, tau_rank_ = 0;
  ConeComplex sigma_;
  Cone tau_;
  std::vector<std::string> tau_labels_;
  bool structurally_ok_ = false;
  ConeComplex upsilon_;
  SubdivisionReport report_;
  std::vector<ConeCheck> cone_checks_;
  std::vector<StratumInfo> strata_;
  std::optional<std::vector<std::string>> one_complex_;
  IntMat p_, r_;
};

}  // namespace tropexp
