#include "matrix.hpp"

#include <sstream>

namespace tropexp {

Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int fmod(const Int& a, const Int& b) { return a - fdiv(a, b) * b; }

Int xgcd(const Int& a, const Int& b, Int& p, Int& q) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp = old_r - quot * r; old_r = r; r = tmp;
    tmp = old_s - quot * s; old_s = s; s = tmp;
    tmp = old_t - quot * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  p = old_s;
  q = old_t;
  return old_r;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec canonical_direction(const IntVec& v) {
  IntVec p = primitive(v);
  for (const Int& x : p) {
    if (x != 0) {
      if (x < 0)
        for (Int& y : p) y = -y;
      break;
    }
  }
  return p;
}

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  e_.reserve(size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw Error(ErrorCode::Internal, "ragged initializer");
    for (const Int& x : r) e_.push_back(x);
  }
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(int ambient, const std::vector<IntVec>& cols) {
  IntMat m(ambient, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j) {
    if (int(cols[j].size()) != ambient) throw Error(ErrorCode::Internal, "column length mismatch");
    for (int i = 0; i < ambient; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMat IntMat::column(const IntVec& v) { return from_columns(int(v.size()), {v}); }

IntVec IntMat::col(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntVec IntMat::row(int i) const {
  IntVec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void IntMat::set_col(int j, const IntVec& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<IntVec> IntMat::columns() const {
  std::vector<IntVec> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = col(j);
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::Internal, "matrix product shape mismatch");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::Internal, "matrix sum shape mismatch");
  IntMat r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const { return *this + (-o); }

IntVec IntMat::apply(const IntVec& x) const {
  if (int(x.size()) != cols_) throw Error(ErrorCode::Internal, "apply shape mismatch");
  IntVec y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

RatVec IntMat::apply(const RatVec& x) const {
  if (int(x.size()) != cols_) throw Error(ErrorCode::Internal, "apply shape mismatch");
  RatVec y(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += Rat(at(i, j)) * x[j];
  return y;
}

IntMat IntMat::cols_subset(const std::vector<int>& idx) const {
  IntMat r(rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

IntMat IntMat::rows_subset(const std::vector<int>& idx) const {
  IntMat r(int(idx.size()), cols_);
  for (int i = 0; i < int(idx.size()); ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
  return r;
}

IntMat IntMat::hstack(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::Internal, "hstack shape mismatch");
  IntMat r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

IntMat IntMat::vstack(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::Internal, "vstack shape mismatch");
  IntMat r(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
  }
  return r;
}

bool IntMat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(int i) {
  for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

void IntMat::addmul_row(int i, int j, const Int& c) {
  if (c == 0) return;
  for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMat::addmul_col(int i, int j, const Int& c) {
  if (c == 0) return;
  for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Rational row echelon; returns pivot columns. b, when present, is reduced
// alongside (augmented system).
int echelon(std::vector<RatVec>& rows, std::vector<int>* pivots) {
  int m = int(rows.size());
  int n = m ? int(rows[0].size()) : 0;
  int r = 0;
  for (int j = 0; j < n && r < m; ++j) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (rows[i][j] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    Rat d = rows[r][j];
    for (int k = j; k < n; ++k) rows[r][k] /= d;
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][j] == 0) continue;
      Rat f = rows[i][j];
      for (int k = j; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    if (pivots) pivots->push_back(j);
    ++r;
  }
  return r;
}

}  // namespace

int rank_of(const IntMat& m) {
  std::vector<RatVec> rows(m.rows(), RatVec(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = Rat(m.at(i, j));
  return echelon(rows, nullptr);
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Internal, "determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat a = m;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& b) {
  int rows = m.rows(), cols = m.cols();
  if (int(b.size()) != rows) throw Error(ErrorCode::Internal, "solve shape mismatch");
  std::vector<RatVec> aug(rows, RatVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = Rat(m.at(i, j));
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots;
  int r = echelon(aug, &pivots);
  for (int i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return std::nullopt;
  // Inconsistency can also show as a pivot in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (int i = 0; i < int(pivots.size()); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = aug[i][cols];
  }
  return x;
}

Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace tropexp
