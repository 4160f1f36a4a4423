#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/cone.hpp"
#include "oracles.hpp"

using namespace tropexp;

namespace {

Cone cone_of(std::initializer_list<IntVec> gens, int ambient) {
  std::vector<IntVec> cols(gens);
  return Cone::from_generators(ambient, IntMat::from_columns(ambient, cols));
}

RatVec rat(std::initializer_list<int> v) {
  RatVec out;
  for (int x : v) out.push_back(Rat(x));
  return out;
}

}  // namespace

TEST_CASE("orthant in Z^2") {
  Cone c = cone_of({{1, 0}, {0, 1}}, 2);
  CHECK(c.dim() == 2);
  CHECK(c.lineality_rank() == 0);
  CHECK(c.rays().cols() == 2);
  CHECK(c.facets().cols() == 2);
  CHECK(c.equations().cols() == 0);
  CHECK(c.faces().size() == 4);
  CHECK(c.is_smooth());
  // normals are the coordinate functionals
  std::vector<IntVec> ns = c.facets().columns();
  CHECK(((ns[0] == IntVec{0, 1} && ns[1] == IntVec{1, 0}) ||
         (ns[0] == IntVec{1, 0} && ns[1] == IntVec{0, 1})));
}

TEST_CASE("non-strictly-convex cone: a full line") {
  Cone c = cone_of({{1, 0}, {-1, 0}}, 2);
  CHECK(c.dim() == 1);
  CHECK(c.lineality_rank() == 1);
  CHECK(c.rays().cols() == 0);
  CHECK_FALSE(c.is_strictly_convex());
  CHECK(c.contains(rat({-5, 0})));
  CHECK_FALSE(c.contains(rat({0, 1})));
  // minimal face is the cone itself
  CHECK(c.faces().size() == 1);
}

TEST_CASE("2-dim cone in Z^3 with membership oracle") {
  IntMat gens = IntMat::from_columns(3, {{1, 1, 1}, {0, 1, 1}});
  Cone c = Cone::from_generators(3, gens);
  CHECK(c.dim() == 2);
  CHECK(c.equations().cols() == 1);
  for (const auto& p : oracle::rational_grid(3, 4, 2)) {
    CAPTURE(p[0]); CAPTURE(p[1]); CAPTURE(p[2]);
    CHECK(c.contains(p) == oracle::in_cone(gens, p));
  }
}

TEST_CASE("dual description of a ray includes both strict sides") {
  Cone c = cone_of({{1, 1}}, 2);
  IntMat full = c.facet_normals();
  bool has_pos = false, has_neg = false;
  for (int j = 0; j < full.cols(); ++j) {
    if (full.col(j) == IntVec{1, -1}) has_pos = true;
    if (full.col(j) == IntVec{-1, 1}) has_neg = true;
  }
  CHECK(has_pos);
  CHECK(has_neg);
  IntMat gens = IntMat::from_columns(2, {{1, 1}});
  for (const auto& p : oracle::rational_grid(2, 4, 2))
    CHECK(c.contains(p) == oracle::in_cone(gens, p));
}

TEST_CASE("zero cone normals span the full dual space") {
  Cone c = Cone::zero(3);
  CHECK(c.dim() == 0);
  CHECK(c.equations().cols() == 3);
  CHECK(c.faces().size() == 1);
  CHECK(c.contains(rat({0, 0, 0})));
  CHECK_FALSE(c.contains(rat({0, 1, 0})));
}

TEST_CASE("intersections") {
  Cone orthant = cone_of({{1, 0}, {0, 1}}, 2);
  CHECK(orthant.intersect(orthant) == orthant);

  Cone a = cone_of({{1, 0}, {1, 1}}, 2);
  Cone b = cone_of({{1, 1}, {0, 1}}, 2);
  Cone i = a.intersect(b);
  CHECK(i.dim() == 1);
  REQUIRE(i.rays().cols() == 1);
  CHECK(i.rays().col(0) == IntVec{1, 1});

  CHECK(orthant.intersect(Cone::zero(2)) == Cone::zero(2));
}

TEST_CASE("intersect is commutative and associative on sample triples") {
  std::mt19937 rng(9001);
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<int> cnt(1, 4);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 3;
    auto rnd_cone = [&]() {
      int k = cnt(rng);
      IntMat g(n, k);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) g.at(i, j) = val(rng);
      return Cone::from_generators(n, g);
    };
    Cone a = rnd_cone(), b = rnd_cone(), c = rnd_cone();
    Cone ab = a.intersect(b);
    CHECK(ab == b.intersect(a));
    CHECK(ab.intersect(c) == a.intersect(b.intersect(c)));
    // |a ∩ b| ⊆ |a| on a grid
    for (const auto& p : oracle::rational_grid(n, 2, 1))
      if (ab.contains(p)) CHECK(a.contains(p));
  }
}

TEST_CASE("face predicates in the orthant") {
  Cone orthant = cone_of({{1, 0}, {0, 1}}, 2);
  CHECK(cone_of({{1, 0}}, 2).is_face_of(orthant));
  CHECK_FALSE(cone_of({{1, 1}}, 2).is_face_of(orthant));
  CHECK(Cone::zero(2).is_face_of(orthant));
  CHECK(orthant.is_face_of(orthant));
}

TEST_CASE("face counts") {
  CHECK(cone_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3).faces().size() == 8);
  CHECK(cone_of({{1, 2}}, 2).faces().size() == 2);
}

TEST_CASE("faces are closed under is_face and intersection") {
  Cone c = cone_of({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}, 3);  // cone over a square
  auto fs = c.faces();
  CHECK(fs.size() == 1 + 4 + 4 + 1);
  for (const auto& f : fs) {
    CHECK(f.is_face_of(c));
    for (const auto& g : fs) {
      Cone i = f.intersect(g);
      bool found = false;
      for (const auto& h : fs)
        if (h == i) { found = true; break; }
      CHECK(found);
    }
  }
}

TEST_CASE("membership basics") {
  Cone orthant = cone_of({{1, 0}, {0, 1}}, 2);
  CHECK(orthant.contains(rat({1, 2})));
  CHECK_FALSE(orthant.contains(rat({-1, 2})));
  Cone ray = cone_of({{1, 1}}, 2);
  CHECK(ray.contains(rat({1, 1})));
  CHECK(ray.in_relative_interior(rat({1, 1})));
  CHECK_FALSE(ray.in_relative_interior(rat({0, 0})));
  CHECK(orthant.in_relative_interior(rat({1, 1})));
  CHECK_FALSE(orthant.in_relative_interior(rat({0, 1})));
}

TEST_CASE("dual description soundness on random cones") {
  std::mt19937 rng(9002);
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> dimd(1, 4);
  std::uniform_int_distribution<int> cntd(1, 4);
  for (int iter = 0; iter < 40; ++iter) {
    int n = dimd(rng), k = cntd(rng);
    IntMat g(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) g.at(i, j) = val(rng);
    Cone c = Cone::from_generators(n, g);
    int grid_half = n <= 2 ? 4 : 2;
    for (const auto& p : oracle::rational_grid(n, grid_half, 2)) {
      CAPTURE(iter);
      CHECK(c.contains(p) == oracle::in_cone(g, p));
    }
    // double dual idempotence
    Cone redual = Cone::from_generators(n, c.generator_matrix());
    CHECK(redual == c);
    // generators satisfy all facet inequalities
    IntMat nf = c.facet_normals();
    for (int j = 0; j < c.rays().cols(); ++j)
      for (int t = 0; t < nf.cols(); ++t) CHECK(dot(nf.col(t), c.rays().col(j)) >= 0);
  }
}

TEST_CASE("image cones") {
  Cone orthant = cone_of({{1, 0}, {0, 1}}, 2);
  IntMat proj{{1, 1}};
  Cone im = orthant.image(proj);
  CHECK(im.dim() == 1);
  CHECK(im.rays().col(0) == IntVec{1});
  // quotient of the orthant by the antidiagonal direction is a full line
  IntMat diff{{1, -1}};
  Cone im2 = orthant.image(diff);
  CHECK(im2.dim() == 1);
  CHECK(im2.lineality_rank() == 1);
  CHECK_FALSE(im2.is_strictly_convex());
}

TEST_CASE("simplicial and smooth flags") {
  CHECK(cone_of({{1, 0}, {0, 1}}, 2).is_smooth());
  CHECK(cone_of({{1, 0}, {1, 2}}, 2).is_simplicial());
  CHECK_FALSE(cone_of({{1, 0}, {1, 2}}, 2).is_smooth());
  CHECK_FALSE(cone_of({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}, 3).is_simplicial());
}
