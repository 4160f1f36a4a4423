#include "cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tropexp {

namespace {

struct FmRow {
  IntVec a;
  bool eq;
  bool operator<(const FmRow& o) const { return std::tie(eq, a) < std::tie(o.eq, o.a); }
};

void normalize_row(FmRow& r) {
  r.a = r.eq ? canonical_direction(r.a) : primitive(r.a);
}

bool row_zero(const FmRow& r) {
  for (const Int& x : r.a)
    if (x != 0) return false;
  return true;
}

void dedupe(std::vector<FmRow>& rows) {
  std::set<FmRow> seen;
  std::vector<FmRow> out;
  for (auto& r : rows) {
    if (row_zero(r)) continue;
    normalize_row(r);
    if (seen.insert(r).second) out.push_back(r);
  }
  rows = std::move(out);
}

std::vector<int> sorted_column_order(const std::vector<IntVec>& cols) {
  std::vector<int> idx(cols.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return cols[a] < cols[b]; });
  return idx;
}

IntMat sorted_columns(const std::vector<IntVec>& cols, int ambient) {
  std::vector<IntVec> copy = cols;
  std::sort(copy.begin(), copy.end());
  copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
  return IntMat::from_columns(ambient, copy);
}

}  // namespace

std::vector<IntVec> fourier_motzkin_dual(int ambient_rank, const IntMat& generators) {
  int n = ambient_rank, k = generators.cols();
  std::vector<FmRow> rows;
  // variables: x_0..x_{n-1}, lambda_0..lambda_{k-1}
  for (int i = 0; i < n; ++i) {
    FmRow r{IntVec(n + k, Int(0)), true};
    r.a[i] = 1;
    for (int j = 0; j < k; ++j) r.a[n + j] = -generators.at(i, j);
    rows.push_back(std::move(r));
  }
  for (int j = 0; j < k; ++j) {
    FmRow r{IntVec(n + k, Int(0)), false};
    r.a[n + j] = 1;
    rows.push_back(std::move(r));
  }

  for (int t = n + k - 1; t >= n; --t) {
    // Prefer substitution through an equation.
    int pivot = -1;
    for (int i = 0; i < int(rows.size()); ++i) {
      if (!rows[i].eq || rows[i].a[t] == 0) continue;
      if (pivot < 0 ||
          boost::multiprecision::abs(rows[i].a[t]) < boost::multiprecision::abs(rows[pivot].a[t]))
        pivot = i;
    }
    std::vector<FmRow> next;
    if (pivot >= 0) {
      FmRow pv = rows[pivot];
      Int p = pv.a[t];
      Int pa = boost::multiprecision::abs(p);
      Int ps = p < 0 ? -1 : 1;
      for (int i = 0; i < int(rows.size()); ++i) {
        if (i == pivot) continue;
        FmRow r = rows[i];
        Int c = r.a[t];
        if (c != 0) {
          for (int j = 0; j < n + k; ++j) r.a[j] = pa * r.a[j] - ps * c * pv.a[j];
        }
        next.push_back(std::move(r));
      }
    } else {
      std::vector<int> pos, neg;
      for (int i = 0; i < int(rows.size()); ++i) {
        if (rows[i].a[t] > 0) pos.push_back(i);
        else if (rows[i].a[t] < 0) neg.push_back(i);
        else next.push_back(rows[i]);
      }
      for (int ip : pos)
        for (int in : neg) {
          FmRow r{IntVec(n + k, Int(0)), false};
          const Int& ap = rows[ip].a[t];
          const Int& an = rows[in].a[t];
          for (int j = 0; j < n + k; ++j) r.a[j] = (-an) * rows[ip].a[j] + ap * rows[in].a[j];
          next.push_back(std::move(r));
        }
    }
    rows = std::move(next);
    dedupe(rows);
  }

  std::vector<IntVec> out;
  for (const auto& r : rows) {
    IntVec v(r.a.begin(), r.a.begin() + n);
    out.push_back(v);
    if (r.eq) {
      IntVec neg(n);
      for (int i = 0; i < n; ++i) neg[i] = -v[i];
      out.push_back(neg);
    }
  }
  return out;
}

Cone Cone::canonicalize(int ambient_rank, const IntMat& generators,
                        const std::vector<IntVec>& valid_normals) {
  Cone c;
  c.ambient_ = ambient_rank;
  int n = ambient_rank;

  // Drop zero generator columns.
  std::vector<IntVec> gen_cols;
  for (int j = 0; j < generators.cols(); ++j) {
    IntVec g = generators.col(j);
    bool zero = true;
    for (const Int& x : g)
      if (x != 0) { zero = false; break; }
    if (!zero) gen_cols.push_back(std::move(g));
  }
  IntMat gens = IntMat::from_columns(n, gen_cols);

  c.dim_ = rank_of(gens);
  c.span_basis_ = saturation_basis(gens);
  c.equations_ = kernel_basis(gens.transpose());

  IntMat normal_rows(int(valid_normals.size()), n);
  for (int i = 0; i < int(valid_normals.size()); ++i)
    for (int j = 0; j < n; ++j) normal_rows.at(i, j) = valid_normals[i][j];
  c.lineality_ = kernel_basis(normal_rows);

  int lin = c.lineality_.cols();
  QuotientPresentation q = quotient_by(c.lineality_, n);
  IntMat lift = right_inverse(q.projection);

  // Extreme rays modulo lineality.
  std::map<IntVec, IntVec> ray_by_quotient;  // primitive quotient ray -> candidate gen
  for (const auto& g : gen_cols) {
    IntVec gq = q.projection.apply(g);
    bool zero = true;
    for (const Int& x : gq)
      if (x != 0) { zero = false; break; }
    if (zero) continue;
    ray_by_quotient.emplace(primitive(gq), g);
  }
  std::vector<IntVec> rays;
  for (const auto& [rq, g] : ray_by_quotient) {
    // g is extreme mod lineality iff the normals active at g cut out a
    // (lineality_rank+1)-dimensional face of the span.
    std::vector<IntVec> active;
    for (const auto& nrm : valid_normals)
      if (dot(nrm, g) == 0) active.push_back(c.span_basis_.transpose().apply(nrm));
    IntMat act = IntMat::from_columns(c.dim_, active);
    if (rank_of(act) == c.dim_ - lin - 1) rays.push_back(lift.apply(rq));
  }
  c.rays_ = sorted_columns(rays, n);

  // Facets: valid normals that are active on a (dim-1)-dimensional set of
  // generators, keyed by their restriction to the span.
  IntMat bt = c.span_basis_.transpose();
  std::set<IntVec> facet_restrictions;
  for (const auto& nrm : valid_normals) {
    IntVec w = bt.apply(nrm);
    bool zero = true;
    for (const Int& x : w)
      if (x != 0) { zero = false; break; }
    if (zero) continue;  // implicit equation, emitted separately
    std::vector<IntVec> active;
    for (const auto& g : gen_cols)
      if (dot(nrm, g) == 0) active.push_back(g);
    IntMat act = IntMat::from_columns(n, active);
    if (rank_of(act) == c.dim_ - 1) facet_restrictions.insert(primitive(w));
  }
  std::vector<IntVec> facet_lifts;
  if (!facet_restrictions.empty()) {
    IntMat blift = right_inverse(bt);
    for (const auto& w : facet_restrictions) facet_lifts.push_back(blift.apply(w));
  }
  c.facets_ = sorted_columns(facet_lifts, n);

  std::ostringstream key;
  key << n << "|" << c.lineality_.str() << "|" << c.rays_.str();
  c.key_ = key.str();
  return c;
}

Cone Cone::from_generators(int ambient_rank, const IntMat& generators) {
  if (generators.cols() > 0 && generators.rows() != ambient_rank)
    throw Error(ErrorCode::Internal, "generator ambient mismatch");
  std::vector<IntVec> normals = fourier_motzkin_dual(ambient_rank, generators);
  return canonicalize(ambient_rank, generators, normals);
}

Cone Cone::from_inequalities(int ambient_rank, const std::vector<IntVec>& normals) {
  IntMat nm = IntMat::from_columns(ambient_rank, normals);
  std::vector<IntVec> gens = fourier_motzkin_dual(ambient_rank, nm);
  return canonicalize(ambient_rank, IntMat::from_columns(ambient_rank, gens), normals);
}

Cone Cone::from_data(int ambient_rank, const IntMat& generators,
                     const std::vector<IntVec>& valid_normals) {
  return canonicalize(ambient_rank, generators, valid_normals);
}

Cone Cone::zero(int ambient_rank) { return from_generators(ambient_rank, IntMat(ambient_rank, 0)); }

Cone Cone::full_space(int ambient_rank) {
  IntMat gens(ambient_rank, 2 * ambient_rank);
  for (int i = 0; i < ambient_rank; ++i) {
    gens.at(i, 2 * i) = 1;
    gens.at(i, 2 * i + 1) = -1;
  }
  return from_generators(ambient_rank, gens);
}

bool Cone::is_smooth() const {
  if (!is_simplicial()) return false;
  return rays_.cols() == 0 || is_saturated_image(rays_);
}

IntMat Cone::facet_normals() const {
  IntMat out = facets_;
  for (int j = 0; j < equations_.cols(); ++j) {
    IntVec e = equations_.col(j);
    IntVec ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    out = IntMat::hstack(out, IntMat::column(e));
    out = IntMat::hstack(out, IntMat::column(ne));
  }
  return out;
}

IntMat Cone::generator_matrix() const {
  IntMat out = rays_;
  for (int j = 0; j < lineality_.cols(); ++j) {
    IntVec e = lineality_.col(j);
    IntVec ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    out = IntMat::hstack(out, IntMat::column(e));
    out = IntMat::hstack(out, IntMat::column(ne));
  }
  return out;
}

bool Cone::contains(const RatVec& x) const {
  if (int(x.size()) != ambient_) throw Error(ErrorCode::Internal, "point dimension mismatch");
  for (int j = 0; j < equations_.cols(); ++j)
    if (dot(equations_.col(j), x) != 0) return false;
  for (int j = 0; j < facets_.cols(); ++j)
    if (dot(facets_.col(j), x) < 0) return false;
  return true;
}

bool Cone::contains(const IntVec& x) const {
  RatVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = Rat(x[i]);
  return contains(r);
}

bool Cone::in_relative_interior(const RatVec& x) const {
  if (int(x.size()) != ambient_) throw Error(ErrorCode::Internal, "point dimension mismatch");
  for (int j = 0; j < equations_.cols(); ++j)
    if (dot(equations_.col(j), x) != 0) return false;
  for (int j = 0; j < facets_.cols(); ++j)
    if (dot(facets_.col(j), x) <= 0) return false;
  return true;
}

IntVec Cone::relative_interior_point() const {
  IntVec p(ambient_, Int(0));
  for (int j = 0; j < rays_.cols(); ++j)
    for (int i = 0; i < ambient_; ++i) p[i] += rays_.at(i, j);
  return p;
}

Cone Cone::intersect(const Cone& other) const {
  if (ambient_ != other.ambient_) throw Error(ErrorCode::Internal, "intersect ambient mismatch");
  IntMat mine = facet_normals();
  IntMat theirs = other.facet_normals();
  std::vector<IntVec> normals;
  for (int j = 0; j < mine.cols(); ++j) normals.push_back(mine.col(j));
  for (int j = 0; j < theirs.cols(); ++j) normals.push_back(theirs.col(j));
  return from_inequalities(ambient_, normals);
}

std::vector<Cone> Cone::faces() const {
  int r = rays_.cols();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<int> all(r);
  for (int i = 0; i < r; ++i) all[i] = i;
  seen.insert(all);
  work.push_back(all);
  while (!work.empty()) {
    std::vector<int> s = work.back();
    work.pop_back();
    for (int f = 0; f < facets_.cols(); ++f) {
      IntVec nrm = facets_.col(f);
      std::vector<int> sub;
      for (int i : s)
        if (dot(nrm, rays_.col(i)) == 0) sub.push_back(i);
      if (seen.insert(sub).second) work.push_back(sub);
    }
  }

  IntMat base_normals = facet_normals();
  std::vector<Cone> out;
  for (const auto& s : seen) {
    std::vector<int> idx(s);
    for (int j = r; j < r + 2 * lineality_.cols(); ++j) idx.push_back(j);
    IntMat gens = generator_matrix().cols_subset(idx);
    std::vector<IntVec> rows;
    for (int j = 0; j < base_normals.cols(); ++j) rows.push_back(base_normals.col(j));
    for (int f = 0; f < facets_.cols(); ++f) {
      IntVec nrm = facets_.col(f);
      bool active_on_face = true;
      for (int i : s)
        if (dot(nrm, rays_.col(i)) != 0) { active_on_face = false; break; }
      if (active_on_face) {
        IntVec neg(nrm.size());
        for (size_t i = 0; i < nrm.size(); ++i) neg[i] = -nrm[i];
        rows.push_back(neg);
      }
    }
    out.push_back(from_data(ambient_, gens, rows));
  }
  std::sort(out.begin(), out.end(),
            [](const Cone& a, const Cone& b) { return std::tie(a.dim_, a.key_) < std::tie(b.dim_, b.key_); });
  return out;
}

bool Cone::is_face_of(const Cone& other) const {
  if (ambient_ != other.ambient_) return false;
  for (const Cone& f : other.faces())
    if (f == *this) return true;
  return false;
}

Cone Cone::image(const IntMat& map) const {
  IntMat gens = map * generator_matrix();
  return from_generators(map.rows(), gens);
}

}  // namespace tropexp
