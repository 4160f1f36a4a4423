#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/lattice.hpp"
#include "core/matrix.hpp"
#include "oracles.hpp"

using namespace tropexp;

namespace {

IntMat random_matrix(std::mt19937& rng, int maxdim, int maxabs) {
  std::uniform_int_distribution<int> dim(0, maxdim);
  std::uniform_int_distribution<int> val(-maxabs, maxabs);
  int r = dim(rng), c = dim(rng);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = val(rng);
  return m;
}

bool unimodular(const IntMat& m) {
  Int d = determinant(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("column hermite form: identity and zero") {
  IntMat id = IntMat::identity(2);
  Hnf f = hermite_normal_form(id);
  CHECK(f.h == id);
  CHECK(f.u == id);

  IntMat z(2, 2);
  Hnf fz = hermite_normal_form(z);
  CHECK(fz.h.is_zero());
  CHECK(unimodular(fz.u));
}

TEST_CASE("column hermite form preserves the column lattice") {
  IntMat m{{2, 4}, {0, 2}};
  Hnf f = hermite_normal_form(m);
  CHECK(f.h == m * f.u);
  CHECK(unimodular(f.u));
  // two-sided containment via integral solving
  for (int j = 0; j < m.cols(); ++j) {
    CHECK(solve_integral(f.h, m.col(j)).has_value());
    CHECK(solve_integral(m, f.h.col(j)).has_value());
  }
}

TEST_CASE("column hermite form preserves lattices of random matrices") {
  std::mt19937 rng(7001);
  for (int iter = 0; iter < 120; ++iter) {
    IntMat m = random_matrix(rng, 4, 3);
    Hnf f = hermite_normal_form(m);
    CHECK(f.h == m * f.u);
    if (m.rows() > 0 && m.cols() > 0) CHECK(unimodular(f.u));
    CHECK(lattice_equal(m, f.h));
  }
}

TEST_CASE("smith normal form: identity") {
  Snf f = smith_normal_form(IntMat::identity(3));
  CHECK(f.s == IntMat::identity(3));
  CHECK(f.u * IntMat::identity(3) * f.v == f.s);
}

TEST_CASE("smith normal form: diag(2,3) has divisors (1,6)") {
  // oracle: d1 = gcd of all entries, d1*d2 = |det|
  IntMat m{{2, 0}, {0, 3}};
  Int g = boost::multiprecision::gcd(Int(2), Int(3));
  Int det = boost::multiprecision::abs(determinant(m));
  Snf f = smith_normal_form(m);
  auto d = f.divisors();
  REQUIRE(d.size() == 2);
  CHECK(d[0] == g);
  CHECK(d[0] * d[1] == det);
  CHECK(d[0] == 1);
  CHECK(d[1] == 6);
}

TEST_CASE("smith normal form: rank-1 all-ones matrix") {
  IntMat m{{1, 1}, {1, 1}};
  Snf f = smith_normal_form(m);
  auto d = f.divisors();
  REQUIRE(d.size() == 1);  // rank 1, second divisor 0
  CHECK(d[0] == 1);
  CHECK(f.s.at(1, 1) == 0);
}

TEST_CASE("smith normal form re-multiplies exactly on random matrices") {
  std::mt19937 rng(7002);
  for (int iter = 0; iter < 150; ++iter) {
    IntMat m = random_matrix(rng, 4, 3);
    Snf f = smith_normal_form(m);
    CHECK(f.u * m * f.v == f.s);
    if (m.rows() > 0) {
      CHECK(unimodular(f.u));
      CHECK((f.u * f.u_inv).is_identity());
    }
    if (m.cols() > 0) CHECK(unimodular(f.v));
    auto d = f.divisors();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] > 0);
      CHECK(d[i + 1] % d[i] == 0);
    }
    // off-diagonal zero
    for (int i = 0; i < f.s.rows(); ++i)
      for (int j = 0; j < f.s.cols(); ++j)
        if (i != j) CHECK(f.s.at(i, j) == 0);
  }
}

TEST_CASE("kernel basis: one-row sum map on Z^3") {
  IntMat m{{1, 1, 1}};
  IntMat k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  CHECK(solve_integral(k, IntVec{1, -1, 0}).has_value());
  CHECK(solve_integral(k, IntVec{0, 1, -1}).has_value());
}

TEST_CASE("kernel basis: lattice map of an edge cone") {
  // projection-to-last-coordinate of the lattice spanned by (0,1,1),(1,1,1):
  // basis coords map to N_tau by (1, 1); kernel is the (1,0)-combination,
  // i.e. the sigma-direction (1,0) after pushing back into the ambient.
  IntMat basis{{0, 1}, {1, 1}, {1, 1}};
  IntMat to_tau{{1, 1}};  // last coordinate of each basis column
  IntMat k = kernel_basis(to_tau);
  REQUIRE(k.cols() == 1);
  IntMat ambient = basis * k;
  IntVec dir = canonical_direction(ambient.col(0));
  CHECK(dir == IntVec{1, 0, 0});
}

TEST_CASE("kernel basis: invertible matrix has empty kernel") {
  IntMat m{{1, 2}, {0, 1}};
  CHECK(kernel_basis(m).cols() == 0);
}

TEST_CASE("kernel basis is saturated and complete (box oracle)") {
  std::mt19937 rng(7003);
  for (int iter = 0; iter < 60; ++iter) {
    IntMat m = random_matrix(rng, 4, 3);
    if (m.cols() == 0) continue;
    IntMat k = kernel_basis(m);
    CHECK((k.cols() == 0 || (m.rows() == 0) || (m * k).is_zero()));
    // saturation: quotient never raises
    CHECK_NOTHROW(quotient_by(k, m.cols()));
    for (const auto& x : oracle::box_kernel_points(m, 5)) {
      bool zero = true;
      for (const auto& c : x)
        if (c != 0) { zero = false; break; }
      if (zero) continue;
      auto sol = solve_integral(k, x);
      CHECK(sol.has_value());
    }
  }
}

TEST_CASE("saturated image detection") {
  CHECK(is_saturated_image(IntMat::identity(3)));
  CHECK_FALSE(is_saturated_image(IntMat{{2}}));
  // columns (1,1),(1,-1): index 2 in Z^2; oracle: |det| = 2
  IntMat m{{1, 1}, {1, -1}};
  CHECK(boost::multiprecision::abs(determinant(m)) == 2);
  CHECK_FALSE(is_saturated_image(m));
}

TEST_CASE("solve_integral") {
  IntMat id = IntMat::identity(3);
  IntVec b{4, -1, 7};
  auto x = solve_integral(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK_FALSE(solve_integral(IntMat{{2}}, IntVec{1}).has_value());

  IntMat m{{1, 0}, {1, 1}};
  auto y = solve_integral(m, IntVec{1, 2});
  REQUIRE(y.has_value());
  CHECK(*y == IntVec{1, 1});
}

TEST_CASE("right inverse") {
  IntMat id = IntMat::identity(2);
  CHECK(right_inverse(id) == id);

  IntMat m{{1, 1}};
  IntMat r = right_inverse(m);
  CHECK(m * r == IntMat::identity(1));

  CHECK_THROWS_AS(right_inverse(IntMat{{2}}), Error);
  CHECK_THROWS_AS(right_inverse(IntMat{{1, 0}, {0, 1}, {0, 0}}), Error);
}

TEST_CASE("right inverse of the restricted projection, Introduction v3 shape") {
  // omega_{v3} is spanned by (1,1,1,0),(0,1,0,1); p takes the last two
  // coordinates, r the first two. The section composed with r must be the
  // position matrix [[1,0],[1,1]].
  IntMat basis{{1, 0}, {1, 1}, {1, 0}, {0, 1}};
  IntMat p_part = basis.rows_subset({2, 3});
  IntMat r_part = basis.rows_subset({0, 1});
  IntMat s = right_inverse(p_part);
  CHECK(p_part * s == IntMat::identity(2));
  IntMat phi = r_part * s;
  CHECK(phi == IntMat{{1, 0}, {1, 1}});
}

TEST_CASE("right inverse composed with the map is a projector") {
  std::mt19937 rng(7004);
  int found = 0;
  for (int iter = 0; iter < 400 && found < 40; ++iter) {
    IntMat m = random_matrix(rng, 4, 3);
    if (m.rows() == 0 || m.cols() == 0 || m.rows() > m.cols()) continue;
    IntMat r;
    try {
      r = right_inverse(m);
    } catch (const Error&) {
      continue;
    }
    ++found;
    CHECK(m * r == IntMat::identity(m.rows()));
    IntMat proj = r * m;
    CHECK(proj * proj == proj);
  }
  CHECK(found >= 10);
}

TEST_CASE("quotient presentations") {
  SUBCASE("kernel (1,0) in Z^2") {
    QuotientPresentation q = quotient_by(IntMat{{1}, {0}}, 2);
    CHECK(q.quotient_rank == 1);
    CHECK((q.projection * IntMat{{1}, {0}}).is_zero());
    CHECK(q.projection == IntMat{{0, 1}});
  }
  SUBCASE("kernel (1,1) in Z^2 presents (a,b) -> a-b up to sign") {
    QuotientPresentation q = quotient_by(IntMat{{1}, {1}}, 2);
    CHECK(q.quotient_rank == 1);
    CHECK((q.projection * IntMat{{1}, {1}}).is_zero());
    Int a = q.projection.at(0, 0), b = q.projection.at(0, 1);
    CHECK(((a == 1 && b == -1) || (a == -1 && b == 1)));
  }
  SUBCASE("empty kernel gives the identity") {
    QuotientPresentation q = quotient_by(IntMat(2, 0), 2);
    CHECK(q.projection == IntMat::identity(2));
    CHECK(q.quotient_rank == 2);
  }
  SUBCASE("non-saturated kernel is rejected") {
    CHECK_THROWS_AS(quotient_by(IntMat{{2}, {0}}, 2), Error);
    CHECK_THROWS_AS(quotient_by(IntMat{{1, 2}, {1, 2}}, 2), Error);
  }
  SUBCASE("projection is surjective with the right kernel") {
    std::mt19937 rng(7005);
    for (int iter = 0; iter < 80; ++iter) {
      IntMat m = random_matrix(rng, 4, 3);
      if (m.cols() == 0) continue;
      IntMat k = kernel_basis(m);
      QuotientPresentation q = quotient_by(k, m.cols());
      CHECK(q.projection.rows() == q.quotient_rank);
      if (k.cols() > 0) CHECK((q.projection * k).is_zero());
      CHECK(is_saturated_image(q.projection.transpose()));  // rows extend to a basis
      CHECK(rank_of(q.projection) == q.quotient_rank);
      CHECK(kernel_basis(q.projection) == lattice_canonical(k));
    }
  }
}

TEST_CASE("canonical lattice form is stable under column shuffles") {
  std::mt19937 rng(7006);
  for (int iter = 0; iter < 60; ++iter) {
    IntMat m = random_matrix(rng, 4, 3);
    if (m.cols() < 2) continue;
    std::vector<int> perm(m.cols());
    for (int i = 0; i < m.cols(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(lattice_canonical(m) == lattice_canonical(m.cols_subset(perm)));
  }
}

TEST_CASE("saturation basis spans the rational span saturatedly") {
  IntMat m{{2, 0}, {0, 3}};
  IntMat s = saturation_basis(m);
  CHECK(s == IntMat::identity(2));

  IntMat ray{{2}, {4}};
  IntMat sr = saturation_basis(ray);
  REQUIRE(sr.cols() == 1);
  CHECK(canonical_direction(sr.col(0)) == IntVec{1, 2});
}
