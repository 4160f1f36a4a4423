#include "expansion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tropexp {

namespace {

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

bool starts_with_generated(const std::string& name) {
  if (name.size() < 2 || name[0] != 'f') return false;
  for (size_t i = 1; i < name.size(); ++i)
    if (!isdigit(name[i])) return false;
  return true;
}

}  // namespace

Expansion Expansion::build(const ExpansionSpec& spec) {
  Expansion e;
  e.sigma_rank_ = spec.sigma_rank;
  e.tau_rank_ = spec.tau_rank;
  e.one_complex_ = spec.one_complex_vertices;

  int n = spec.sigma_rank + spec.tau_rank;
  e.p_ = IntMat(spec.tau_rank, n);
  for (int i = 0; i < spec.tau_rank; ++i) e.p_.at(i, spec.sigma_rank + i) = 1;
  e.r_ = IntMat(spec.sigma_rank, n);
  for (int i = 0; i < spec.sigma_rank; ++i) e.r_.at(i, i) = 1;

  e.tau_labels_ = spec.tau_labels;
  while (int(e.tau_labels_.size()) < spec.tau_rank)
    e.tau_labels_.push_back("e" + std::to_string(e.tau_labels_.size() + 1));

  // Sigma and tau are the fixed environment; problems there are input errors.
  std::vector<NamedCone> sigma_input;
  for (const auto& rc : spec.sigma_cones)
    sigma_input.push_back({rc.name, Cone::from_generators(spec.sigma_rank, rc.gens), true, rc.gens});
  e.sigma_ = ConeComplex::build(spec.sigma_rank, sigma_input);
  e.tau_ = Cone::from_generators(spec.tau_rank, spec.tau_gens);
  if (e.tau_.dim() != spec.tau_rank)
    e.report_.violations.push_back(
        {"tau-not-full-dimensional", {}, "base cone does not span its coordinate lattice"});

  std::vector<NamedCone> up_input;
  for (const auto& rc : spec.upsilon_cones)
    up_input.push_back({rc.name, Cone::from_generators(n, rc.gens), true, rc.gens});
  Violation issue;
  auto built = ConeComplex::try_build(n, up_input, &issue);
  if (!built) {
    e.structurally_ok_ = false;
    e.report_.violations.push_back(issue);
    e.report_.is_valid = false;
    std::sort(e.report_.violations.begin(), e.report_.violations.end());
    return e;
  }
  e.structurally_ok_ = true;
  e.upsilon_ = std::move(*built);

  // Subdivision axioms against Sigma x tau.
  ConeComplex target = product(e.sigma_, e.tau_);
  SubdivisionReport sub = validate_subdivision(e.upsilon_, target);
  e.report_.is_complete = sub.is_complete;
  for (auto& v : sub.violations) e.report_.violations.push_back(std::move(v));

  // Expansion axioms: every cone projects onto a face of tau, with a
  // surjective lattice map.
  std::vector<Cone> tau_faces = e.tau_.faces();
  for (const auto& nc : e.upsilon_.cones()) {
    ConeCheck check;
    check.name = nc.name;
    check.dim = nc.cone.dim();
    Cone image = nc.cone.image(e.p_);
    check.p_image_dim = image.dim();
    for (const Cone& f : tau_faces)
      if (f == image) { check.p_image_is_face = true; break; }
    if (!check.p_image_is_face) {
      e.report_.violations.push_back(
          {"integrality", {nc.name}, "projection to the base is not surjective onto a face"});
    } else {
      check.is_stratum = (image == e.tau_);
      IntMat basis = nc.cone.span_basis();
      IntMat pb = e.p_ * basis;
      check.lattice_surjective = lattice_equal(pb, image.span_basis());
      if (!check.lattice_surjective)
        e.report_.violations.push_back(
            {"saturation",
             {nc.name},
             "lattice of the cone maps onto a finite-index sublattice of the image face lattice"});
    }
    e.cone_checks_.push_back(std::move(check));
  }
  std::sort(e.report_.violations.begin(), e.report_.violations.end());
  e.report_.is_valid = e.report_.violations.empty();
  if (!e.report_.is_valid) return e;

  // Strata and canonical vertex names.
  std::map<std::string, std::string> renames;
  int vcounter = 0;
  std::set<std::string> taken;
  for (const auto& nc : e.upsilon_.cones()) taken.insert(nc.name);
  for (const auto& nc : e.upsilon_.cones()) {
    Cone image = nc.cone.image(e.p_);
    if (!(image == e.tau_)) continue;
    if (nc.cone.dim() == e.tau_.dim() && !nc.user_supplied && starts_with_generated(nc.name)) {
      std::string candidate;
      do {
        candidate = "v" + std::to_string(vcounter++);
      } while (taken.count(candidate));
      renames[nc.name] = candidate;
      taken.insert(candidate);
    }
  }
  if (!renames.empty()) e.upsilon_.rename(renames);

  Cone sigma_times_zero = [&] {
    IntMat gens(n, 2 * spec.sigma_rank);
    for (int i = 0; i < spec.sigma_rank; ++i) {
      gens.at(i, 2 * i) = 1;
      gens.at(i, 2 * i + 1) = -1;
    }
    return Cone::from_generators(n, gens);
  }();

  for (const auto& nc : e.upsilon_.cones()) {
    Cone image = nc.cone.image(e.p_);
    if (!(image == e.tau_)) continue;
    StratumInfo st;
    st.name = nc.name;
    st.poly_dim = nc.cone.dim() - e.tau_.dim();
    st.omega_basis = nc.cone.span_basis();
    st.p_part = e.p_ * st.omega_basis;
    st.r_part = e.r_ * st.omega_basis;
    IntVec rel = nc.cone.relative_interior_point();
    RatVec rel_sigma(spec.sigma_rank);
    for (int i = 0; i < spec.sigma_rank; ++i) rel_sigma[i] = Rat(rel[i]);
    auto located = e.sigma_.locate(rel_sigma);
    if (!located) throw Error(ErrorCode::Internal, "stratum image escapes Sigma");
    st.sigma_name = *located;
    st.bounded = nc.cone.intersect(sigma_times_zero).dim() == 0;
    e.strata_.push_back(std::move(st));
  }
  std::sort(e.strata_.begin(), e.strata_.end(), [](const StratumInfo& a, const StratumInfo& b) {
    if (a.poly_dim != b.poly_dim) return a.poly_dim < b.poly_dim;
    return a.name < b.name;
  });
  std::set<std::string> vertex_set;
  for (const auto& st : e.strata_)
    if (st.poly_dim == 0) vertex_set.insert(st.name);
  for (auto& st : e.strata_) {
    if (st.poly_dim != 1) continue;
    for (const std::string& f : e.upsilon_.face_names_of(st.name))
      if (vertex_set.count(f)) st.endpoints.push_back(f);
    std::sort(st.endpoints.begin(), st.endpoints.end());
  }
  return e;
}

const ConeComplex& Expansion::upsilon() const {
  if (!structurally_ok_)
    throw Error(ErrorCode::ValidationError, "upsilon is not a cone complex");
  return upsilon_;
}

void Expansion::require_valid() const {
  if (!valid()) throw Error(ErrorCode::ValidationError, "expansion failed validation");
}

const std::vector<StratumInfo>& Expansion::strata() const {
  require_valid();
  return strata_;
}

const StratumInfo* Expansion::stratum(const std::string& name) const {
  require_valid();
  for (const auto& st : strata_)
    if (st.name == name) return &st;
  return nullptr;
}

const StratumInfo& Expansion::stratum_or_throw(const std::string& name) const {
  const StratumInfo* st = stratum(name);
  if (!st) throw Error(ErrorCode::NotAStratum, name + " does not project onto the base cone");
  return *st;
}

std::vector<std::string> Expansion::vertex_names() const {
  std::vector<std::string> out;
  for (const auto& st : strata())
    if (st.poly_dim == 0) out.push_back(st.name);
  return out;
}

std::vector<std::string> Expansion::edge_names() const {
  std::vector<std::string> out;
  for (const auto& st : strata())
    if (st.poly_dim == 1) out.push_back(st.name);
  return out;
}

IntVec Expansion::interior_base_point() const {
  IntVec f(tau_rank_, Int(0));
  const IntMat& rays = tau_.rays();
  for (int j = 0; j < rays.cols(); ++j)
    for (int i = 0; i < tau_rank_; ++i) f[i] += rays.at(i, j);
  return f;
}

std::vector<RatVec> Expansion::sample_interior_points() const {
  const IntMat& rays = tau_.rays();
  std::vector<RatVec> out;
  for (int variant = 0; variant < 3; ++variant) {
    RatVec f(tau_rank_, Rat(0));
    for (int j = 0; j < rays.cols(); ++j) {
      Rat c = variant == 0 ? Rat(1) : (variant == 1 ? Rat(3 + j, 2) : Rat(4 + j, 3));
      for (int i = 0; i < tau_rank_; ++i) f[i] += c * Rat(rays.at(i, j));
    }
    out.push_back(std::move(f));
  }
  return out;
}

FibreComplex Expansion::fibre(const RatVec& f) const {
  require_valid();
  if (int(f.size()) != tau_rank_) throw Error(ErrorCode::PointOutsideBase, "base point dimension mismatch");
  if (!tau_.contains(f)) throw Error(ErrorCode::PointOutsideBase, "point is outside the base cone");

  // Minimal face of tau whose relative interior contains f.
  Cone phi;
  bool found = false;
  for (const Cone& face : tau_.faces()) {
    if (!face.contains(f)) continue;
    if (!found || face.dim() < phi.dim()) { phi = face; found = true; }
  }
  if (!found) throw Error(ErrorCode::Internal, "containing face not found");

  FibreComplex out;
  out.base_point = f;
  out.tau_face_dim = phi.dim();

  // Strata over phi and their cells.
  std::vector<std::string> over_phi;
  for (const auto& nc : upsilon_.cones())
    if (nc.cone.image(p_) == phi) over_phi.push_back(nc.name);
  std::set<std::string> over_phi_set(over_phi.begin(), over_phi.end());

  Cone sigma_times_zero = [&] {
    int n = sigma_rank_ + tau_rank_;
    IntMat gens(n, 2 * sigma_rank_);
    for (int i = 0; i < sigma_rank_; ++i) {
      gens.at(i, 2 * i) = 1;
      gens.at(i, 2 * i + 1) = -1;
    }
    return Cone::from_generators(n, gens);
  }();

  for (const std::string& name : over_phi) {
    const NamedCone& nc = *upsilon_.find(name);
    FibrePolyhedron cell;
    cell.name = name;
    cell.dim = nc.cone.dim() - phi.dim();

    for (const std::string& fname : upsilon_.face_names_of(name)) {
      const NamedCone& rho = *upsilon_.find(fname);
      if (rho.cone.dim() != phi.dim() || !over_phi_set.count(fname)) continue;
      IntMat basis = rho.cone.span_basis();
      IntMat pb = p_ * basis;
      auto y = solve_rational(pb, f);
      if (!y) throw Error(ErrorCode::Internal, "vertex cone does not reach the base point");
      RatVec pos = (r_ * basis).apply(*y);
      cell.vertices.emplace_back(fname, std::move(pos));
      if (fname != name) cell.faces.push_back(fname);
    }
    std::sort(cell.vertices.begin(), cell.vertices.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const std::string& fname : upsilon_.face_names_of(name))
      if (fname != name && over_phi_set.count(fname) &&
          upsilon_.find(fname)->cone.dim() > phi.dim())
        cell.faces.push_back(fname);
    std::sort(cell.faces.begin(), cell.faces.end());

    Cone rec = nc.cone.intersect(sigma_times_zero);
    IntMat rec_gens = rec.generator_matrix();
    for (int j = 0; j < rec_gens.cols(); ++j)
      cell.recession.push_back(r_.apply(primitive(rec_gens.col(j))));
    std::sort(cell.recession.begin(), cell.recession.end());
    cell.recession.erase(std::unique(cell.recession.begin(), cell.recession.end()),
                         cell.recession.end());

    IntVec rel = nc.cone.relative_interior_point();
    RatVec rel_sigma(sigma_rank_);
    for (int i = 0; i < sigma_rank_; ++i) rel_sigma[i] = Rat(rel[i]);
    auto located = sigma_.locate(rel_sigma);
    if (!located) throw Error(ErrorCode::Internal, "cell image escapes Sigma");
    cell.sigma_name = *located;

    if (cell.dim == 1) {
      IntMat basis = nc.cone.span_basis();
      IntMat ker = kernel_basis(p_ * basis);
      if (ker.cols() != 1) throw Error(ErrorCode::Internal, "edge cell without a slope line");
      cell.slope = canonical_direction(r_.apply(basis.apply(ker.col(0))));
    }
    out.polyhedra.push_back(std::move(cell));
  }
  std::sort(out.polyhedra.begin(), out.polyhedra.end(), [](const auto& a, const auto& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.name < b.name;
  });
  return out;
}

ConeComplex Expansion::asymptotic_complex() const {
  require_valid();
  Cone zero_face = Cone::zero(tau_rank_);
  std::vector<NamedCone> cells;
  for (const auto& nc : upsilon_.cones()) {
    if (!(nc.cone.image(p_) == zero_face)) continue;
    IntMat gens = r_ * nc.cone.generator_matrix();
    cells.push_back({nc.name, Cone::from_generators(sigma_rank_, gens), false, IntMat()});
  }
  return ConeComplex::build(sigma_rank_, cells);
}

std::vector<CombTypeEntry> Expansion::combinatorial_type() const {
  std::vector<CombTypeEntry> out;
  for (const auto& st : strata()) {
    CombTypeEntry entry;
    entry.name = st.name;
    entry.sigma_name = st.sigma_name;
    IntMat ker = kernel_basis(st.p_part);
    entry.slope_lattice = lattice_canonical(r_ * (st.omega_basis * ker));
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<std::string> Expansion::incident_edges(const std::string& vertex) const {
  std::vector<std::string> out;
  for (const auto& st : strata()) {
    if (st.poly_dim != 1) continue;
    for (const std::string& f : upsilon_.face_names_of(st.name))
      if (f == vertex) { out.push_back(st.name); break; }
  }
  return out;
}

IntVec Expansion::edge_slope(const std::string& edge) const {
  const StratumInfo& st = stratum_or_throw(edge);
  if (st.poly_dim != 1) throw Error(ErrorCode::Internal, edge + " is not an edge stratum");
  IntMat ker = kernel_basis(st.p_part);
  if (ker.cols() != 1) throw Error(ErrorCode::Internal, "edge stratum without slope line");
  return canonical_direction(r_.apply(st.omega_basis.apply(ker.col(0))));
}

std::vector<std::string> Expansion::tube_vertices() const {
  require_valid();
  if (!one_complex_)
    throw Error(ErrorCode::MissingOneComplex, "no embedded 1-complex vertex set supplied");
  std::set<std::string> g(one_complex_->begin(), one_complex_->end());
  std::vector<std::string> tubes;
  for (const std::string& v : vertex_names()) {
    if (g.count(v)) continue;
    auto edges = incident_edges(v);
    if (edges.size() != 2)
      throw Error(ErrorCode::InvalidTube,
                  v + " has " + std::to_string(edges.size()) + " incident edges, tube vertices are bivalent");
    if (edge_slope(edges[0]) != edge_slope(edges[1]))
      throw Error(ErrorCode::InvalidTube, v + " incident edge slopes differ: " +
                                              vec_str(edge_slope(edges[0])) + " vs " +
                                              vec_str(edge_slope(edges[1])));
    tubes.push_back(v);
  }
  std::sort(tubes.begin(), tubes.end());
  return tubes;
}

bool Expansion::stratum_contains(const std::string& name, const RatVec& x, const RatVec& f,
                                 bool relative_interior) const {
  require_valid();
  const NamedCone* nc = upsilon_.find(name);
  if (!nc) throw Error(ErrorCode::UnknownName, "no stratum named " + name);
  RatVec lifted(sigma_rank_ + tau_rank_);
  for (int i = 0; i < sigma_rank_; ++i) lifted[i] = x[i];
  for (int i = 0; i < tau_rank_; ++i) lifted[sigma_rank_ + i] = f[i];
  return relative_interior ? nc->cone.in_relative_interior(lifted) : nc->cone.contains(lifted);
}

}  // namespace tropexp
