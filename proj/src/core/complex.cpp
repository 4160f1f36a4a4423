#include "complex.hpp"

#include <algorithm>
#include <set>
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

bool cone_subset(const Cone& a, const Cone& b) {
  IntMat gens = a.generator_matrix();
  for (int j = 0; j < gens.cols(); ++j)
    if (!b.contains(gens.col(j))) return false;
  return true;
}

}  // namespace

void ConeComplex::index() {
  std::sort(cones_.begin(), cones_.end(), [](const NamedCone& a, const NamedCone& b) {
    if (a.cone.dim() != b.cone.dim()) return a.cone.dim() < b.cone.dim();
    return a.cone.key() < b.cone.key();
  });
  by_name_.clear();
  by_key_.clear();
  for (int i = 0; i < int(cones_.size()); ++i) {
    by_name_[cones_[i].name] = i;
    by_key_[cones_[i].cone.key()] = i;
  }
}

std::optional<ConeComplex> ConeComplex::try_build(int ambient_rank,
                                                  const std::vector<NamedCone>& input,
                                                  Violation* issue) {
  auto fail = [&](const Violation& v) -> std::optional<ConeComplex> {
    if (issue) *issue = v;
    return std::nullopt;
  };

  std::set<std::string> names;
  std::map<std::string, std::string> key_to_name;
  for (const auto& nc : input) {
    if (nc.cone.ambient_rank() != ambient_rank)
      return fail({"ambient-mismatch", {nc.name}, "cone ambient rank differs from complex"});
    if (!names.insert(nc.name).second)
      return fail({"duplicate-name", {nc.name}, "cone name appears twice"});
    auto [it, fresh] = key_to_name.emplace(nc.cone.key(), nc.name);
    if (!fresh)
      return fail({"duplicate-cone", {it->second, nc.name}, "two supplied cones have equal support"});
  }

  // Maximal supplied cones; every other supplied cone is a face of one.
  std::vector<int> maximal;
  for (int i = 0; i < int(input.size()); ++i) {
    bool is_face = false;
    for (int j = 0; j < int(input.size()) && !is_face; ++j)
      if (i != j && input[i].cone.is_face_of(input[j].cone)) is_face = true;
    if (!is_face) maximal.push_back(i);
  }
  // A supplied cone that is neither maximal nor a face of a maximal one
  // cannot exist: face-of chains end in a maximal cone. Improper meetings are
  // caught across maximal pairs; faces then meet properly automatically.
  for (size_t a = 0; a < maximal.size(); ++a)
    for (size_t b = a + 1; b < maximal.size(); ++b) {
      const NamedCone& ca = input[maximal[a]];
      const NamedCone& cb = input[maximal[b]];
      Cone inter = ca.cone.intersect(cb.cone);
      if (!inter.is_face_of(ca.cone) || !inter.is_face_of(cb.cone)) {
        return fail({"improper-intersection",
                     {ca.name, cb.name},
                     "supports meet outside a common face; witness " +
                         vec_str(inter.relative_interior_point())});
      }
    }

  ConeComplex out;
  out.ambient_ = ambient_rank;
  std::map<std::string, NamedCone> by_key;
  for (const auto& nc : input) by_key[nc.cone.key()] = nc;
  for (int mi : maximal)
    for (const Cone& f : input[mi].cone.faces()) {
      auto it = by_key.find(f.key());
      if (it == by_key.end())
        by_key[f.key()] = NamedCone{"", f, false, IntMat()};
    }
  // Assign generated names in canonical order.
  std::vector<NamedCone> all;
  for (auto& [k, nc] : by_key) all.push_back(nc);
  std::sort(all.begin(), all.end(), [](const NamedCone& a, const NamedCone& b) {
    if (a.cone.dim() != b.cone.dim()) return a.cone.dim() < b.cone.dim();
    return a.cone.key() < b.cone.key();
  });
  int counter = 0;
  for (auto& nc : all) {
    if (!nc.name.empty()) continue;
    std::string candidate;
    do {
      candidate = "f" + std::to_string(counter++);
    } while (names.count(candidate));
    nc.name = candidate;
    names.insert(candidate);
  }
  out.cones_ = std::move(all);
  out.index();
  return out;
}

ConeComplex ConeComplex::build(int ambient_rank, const std::vector<NamedCone>& input) {
  Violation issue;
  auto c = try_build(ambient_rank, input, &issue);
  if (!c) {
    ErrorCode code = issue.axiom == "improper-intersection" ? ErrorCode::ImproperIntersection
                                                            : ErrorCode::ValidationError;
    std::string who;
    for (const auto& n : issue.cones) who += (who.empty() ? "" : ", ") + n;
    throw Error(code, issue.detail + " [" + who + "]");
  }
  return *c;
}

const NamedCone* ConeComplex::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &cones_[it->second];
}

const NamedCone* ConeComplex::find_by_key(const std::string& key) const {
  auto it = by_key_.find(key);
  return it == by_key_.end() ? nullptr : &cones_[it->second];
}

std::optional<std::string> ConeComplex::locate(const RatVec& x) const {
  const NamedCone* best = nullptr;
  for (const auto& nc : cones_) {
    if (!nc.cone.contains(x)) continue;
    if (!best || nc.cone.dim() < best->cone.dim()) best = &nc;
  }
  if (!best) return std::nullopt;
  return best->name;
}

std::vector<std::string> ConeComplex::maximal_names() const {
  std::set<std::string> face_keys;
  for (const auto& nc : cones_)
    for (const Cone& f : nc.cone.faces())
      if (f.key() != nc.cone.key()) face_keys.insert(f.key());
  std::vector<std::string> out;
  for (const auto& nc : cones_)
    if (!face_keys.count(nc.cone.key())) out.push_back(nc.name);
  return out;
}

std::vector<std::string> ConeComplex::face_names_of(const std::string& name) const {
  const NamedCone* nc = find(name);
  if (!nc) throw Error(ErrorCode::UnknownName, "no cone named " + name);
  std::vector<std::string> out;
  for (const Cone& f : nc->cone.faces()) {
    const NamedCone* m = find_by_key(f.key());
    if (!m) throw Error(ErrorCode::Internal, "complex not closed under faces");
    out.push_back(m->name);
  }
  return out;
}

void ConeComplex::rename(const std::map<std::string, std::string>& mapping) {
  std::set<std::string> target;
  for (auto& nc : cones_) {
    auto it = mapping.find(nc.name);
    if (it != mapping.end()) nc.name = it->second;
    if (!target.insert(nc.name).second)
      throw Error(ErrorCode::ValidationError, "rename produces duplicate name " + nc.name);
  }
  index();
}

ConeComplex product(const ConeComplex& delta, const Cone& tau) {
  int nd = delta.ambient_rank(), nt = tau.ambient_rank();
  int n = nd + nt;
  std::vector<Cone> tau_faces = tau.faces();

  auto pad_cols = [&](const IntMat& m, bool first) {
    IntMat out(n, m.cols());
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i) out.at(first ? i : nd + i, j) = m.at(i, j);
    return out;
  };

  ConeComplex out;
  out.ambient_ = n;
  for (const auto& nc : delta.cones()) {
    for (int t = 0; t < int(tau_faces.size()); ++t) {
      const Cone& phi = tau_faces[t];
      IntMat gens = IntMat::hstack(pad_cols(nc.cone.generator_matrix(), true),
                                   pad_cols(phi.generator_matrix(), false));
      IntMat rows = IntMat::hstack(pad_cols(nc.cone.facet_normals(), true),
                                   pad_cols(phi.facet_normals(), false));
      Cone prod = Cone::from_data(n, gens, rows.columns());
      std::string name = nc.name + "*t" + std::to_string(t);
      out.cones_.push_back(NamedCone{name, prod, false, IntMat()});
    }
  }
  out.index();
  return out;
}

namespace {

struct HalfRow {
  IntVec a;
  bool strict;
};

// Homogeneous feasibility of {a_i . x >= 0} ∪ {b_j . x > 0} over the
// rationals, by Fourier-Motzkin. Infeasible iff a strict zero row derives.
bool feasible(std::vector<HalfRow> rows, int n) {
  auto tidy = [&](std::vector<HalfRow>& rs) -> bool {
    std::map<IntVec, bool> best;  // normal -> strict
    for (auto& r : rs) {
      bool zero = true;
      for (const Int& x : r.a)
        if (x != 0) { zero = false; break; }
      if (zero) {
        if (r.strict) return false;
        continue;
      }
      IntVec p = primitive(r.a);
      auto [it, fresh] = best.emplace(p, r.strict);
      if (!fresh) it->second = it->second || r.strict;
    }
    rs.clear();
    for (auto& [a, s] : best) rs.push_back({a, s});
    return true;
  };
  if (!tidy(rows)) return false;
  for (int t = n - 1; t >= 0; --t) {
    std::vector<HalfRow> next;
    std::vector<int> pos, neg;
    for (int i = 0; i < int(rows.size()); ++i) {
      if (rows[i].a[t] > 0) pos.push_back(i);
      else if (rows[i].a[t] < 0) neg.push_back(i);
      else next.push_back(rows[i]);
    }
    for (int ip : pos)
      for (int in : neg) {
        HalfRow r;
        r.a.assign(n, Int(0));
        const Int& ap = rows[ip].a[t];
        const Int& an = rows[in].a[t];
        for (int j = 0; j < n; ++j) r.a[j] = (-an) * rows[ip].a[j] + ap * rows[in].a[j];
        r.strict = rows[ip].strict || rows[in].strict;
        next.push_back(std::move(r));
      }
    rows = std::move(next);
    if (!tidy(rows)) return false;
  }
  return true;
}

}  // namespace

bool cone_covered_by(const Cone& delta_cone, const std::vector<Cone>& covers) {
  int n = delta_cone.ambient_rank();
  std::vector<std::vector<HalfRow>> cells;
  {
    std::vector<HalfRow> base;
    IntMat rows = delta_cone.facet_normals();
    for (int j = 0; j < rows.cols(); ++j) base.push_back({rows.col(j), false});
    cells.push_back(std::move(base));
  }
  for (const Cone& omega : covers) {
    std::vector<std::vector<HalfRow>> next;
    for (const auto& cell : cells) {
      std::vector<HalfRow> prefix = cell;
      for (int f = 0; f < omega.facets().cols(); ++f) {
        IntVec nrm = omega.facets().col(f);
        IntVec neg(nrm.size());
        for (size_t i = 0; i < nrm.size(); ++i) neg[i] = -nrm[i];
        std::vector<HalfRow> piece = prefix;
        piece.push_back({neg, true});  // strictly outside this facet
        if (feasible(piece, n)) next.push_back(std::move(piece));
        prefix.push_back({nrm, false});
      }
    }
    cells = std::move(next);
    if (cells.empty()) return true;
  }
  return cells.empty();
}

SubdivisionReport validate_subdivision(const ConeComplex& up, const ConeComplex& delta) {
  SubdivisionReport rep;
  if (up.ambient_rank() != delta.ambient_rank()) {
    rep.is_valid = false;
    rep.violations.push_back({"ambient-mismatch", {}, "subdivision and target live in different lattices"});
    return rep;
  }

  for (const auto& nc : up.cones()) {
    // (a) containment in some cone of the target
    bool contained = false;
    for (const auto& dc : delta.cones())
      if (cone_subset(nc.cone, dc.cone)) { contained = true; break; }
    if (!contained)
      rep.violations.push_back({"not-contained", {nc.name}, "cone support is not inside any target cone"});

    // (b) saturated generator lattice: the lattice spanned by the supplied
    // generators must equal the span lattice, otherwise the integral points
    // do not generate a saturated submonoid.
    if (nc.user_supplied && nc.raw_generators.cols() > 0 && !is_saturated_image(nc.raw_generators))
      rep.violations.push_back({"lattice-not-saturated",
                                {nc.name},
                                "supplied generators span a finite-index sublattice of the span lattice"});
  }

  // Completeness: every maximal cone of the target covered by same-dimension
  // subdivision cones inside it.
  if (up.ambient_rank() <= 4) {
    bool complete = true;
    for (const std::string& dname : delta.maximal_names()) {
      const Cone& dc = delta.find(dname)->cone;
      std::vector<Cone> covers;
      for (const auto& nc : up.cones())
        if (nc.cone.dim() == dc.dim() && cone_subset(nc.cone, dc)) covers.push_back(nc.cone);
      if (!cone_covered_by(dc, covers)) { complete = false; break; }
    }
    rep.is_complete = complete;
  }

  std::sort(rep.violations.begin(), rep.violations.end());
  rep.is_valid = rep.violations.empty();
  return rep;
}

}  // namespace tropexp
