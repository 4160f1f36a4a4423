#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace tropexp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Floor division and remainder with remainder in [0, |b|).
Int fdiv(const Int& a, const Int& b);
Int fmod(const Int& a, const Int& b);

// g = gcd(a,b) >= 0 with p*a + q*b = g.
Int xgcd(const Int& a, const Int& b, Int& p, Int& q);

IntVec primitive(const IntVec& v);  // divide by gcd; canonical: untouched sign
// Canonical sign: first nonzero entry positive. Zero vector unchanged.
IntVec canonical_direction(const IntVec& v);

// Dense arbitrary-precision integer matrix, row-major. Vectors are columns;
// a matrix acts on column vectors by left multiplication. Zero-sized
// dimensions are legal throughout.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
  IntMat(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMat identity(int n);
  static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
  static IntMat from_columns(int ambient, const std::vector<IntVec>& cols);
  static IntMat column(const IntVec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  IntVec col(int j) const;
  IntVec row(int i) const;
  void set_col(int j, const IntVec& v);
  std::vector<IntVec> columns() const;

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator-() const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  IntVec apply(const IntVec& x) const;
  RatVec apply(const RatVec& x) const;

  IntMat cols_subset(const std::vector<int>& idx) const;
  IntMat rows_subset(const std::vector<int>& idx) const;
  static IntMat hstack(const IntMat& a, const IntMat& b);
  static IntMat vstack(const IntMat& a, const IntMat& b);

  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int i);
  // row i += c * row j, col i += c * col j
  void addmul_row(int i, int j, const Int& c);
  void addmul_col(int i, int j, const Int& c);

  std::string str() const;  // compact [[..],[..]] rendering, for diagnostics

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

int rank_of(const IntMat& m);
Int determinant(const IntMat& m);  // square only

// Exact solve M x = b over the rationals; nullopt if inconsistent.
std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& b);

Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

}  // namespace tropexp
