#include <doctest.h>

#include <random>

#include "ehrhart/construct.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/surface.hpp"

using namespace ehrhart;

TEST_CASE("SqrtSum canonicalization") {
  SqrtSum a = SqrtSum::term(Rat(1), 12);  // sqrt(12) = 2 sqrt(3)
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms()[0].first == 2);
  CHECK(a.terms()[0].second == 3);

  SqrtSum b = SqrtSum::term(Rat(1), 4);  // collapses to rational 2
  CHECK(b.terms()[0].second == 1);
  CHECK(b.terms()[0].first == 2);

  SqrtSum c = SqrtSum::term(Rat(1), 3) + SqrtSum::term(Rat(1), 27);
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].first == 4);  // sqrt(3) + 3 sqrt(3)

  SqrtSum d = SqrtSum::term(Rat(1), 2) + SqrtSum::term(Rat(-1), 8);
  REQUIRE(d.terms().size() == 1);
  CHECK(d.terms()[0].first == -1);
  CHECK((SqrtSum::term(Rat(1), 2) + SqrtSum::term(Rat(-1), 2)).is_zero());

  // canonicalization is idempotent: rebuilding from terms changes nothing
  SqrtSum e = SqrtSum::term(make_rat(3, 2), 18) + SqrtSum::term(Rat(5), 1);
  SqrtSum rebuilt;
  for (const auto& [q, n] : e.terms()) rebuilt += SqrtSum::term(q, n);
  CHECK(rebuilt == e);

  CHECK_THROWS_AS(SqrtSum::term(Rat(1), 0), std::invalid_argument);
}

TEST_CASE("SqrtSum numeric evaluation matches the symbolic value") {
  for (int d = 2; d <= 6; ++d) {
    SqrtSum s = simplex_surface_formula(d);
    BigFloat direct =
        (BigFloat(d) + sqrt(BigFloat(d))) /
        BigFloat(factorial(static_cast<unsigned>(d - 1)));
    BigFloat diff = s.value() - direct;
    if (diff < 0) diff = -diff;
    CHECK(diff <= direct * 1e-12);
  }
}

TEST_CASE("facet areas of the standard simplex") {
  for (int d = 2; d <= 5; ++d) {
    auto areas = facet_areas(std_simplex(d));
    REQUIRE(areas.size() == static_cast<std::size_t>(d) + 1);
    Rat unit = make_rat(1, factorial(static_cast<unsigned>(d - 1)));
    for (const FacetArea& fa : areas) {
      CHECK(fa.lattice_area == unit);
      CHECK(fa.k == 1);
    }
  }
}

TEST_CASE("facet areas of cross-polytopes and cubes") {
  for (int d = 2; d <= 4; ++d) {
    auto areas = facet_areas(cross_polytope(d));
    REQUIRE(areas.size() == (std::size_t(1) << d));
    for (const FacetArea& fa : areas)
      CHECK(fa.lattice_area ==
            make_rat(1, factorial(static_cast<unsigned>(d - 1))));
  }
  for (const FacetArea& fa : facet_areas(sym_cube(3))) {
    // each face is a square of Euclidean area 4 with unit normal
    REQUIRE(fa.euclid_area.terms().size() == 1);
    CHECK(fa.euclid_area.terms()[0].first == 4);
    CHECK(fa.euclid_area.terms()[0].second == 1);
  }
}

TEST_CASE("lattice surface closed forms") {
  CHECK(lattice_surface(cross_polytope(4)) == make_rat(8, 6));
  CHECK(lattice_surface(std_simplex(4)) == make_rat(5, 12));
  CHECK(lattice_surface(sym_cube(2)) == 4);
  for (int d = 2; d <= 5; ++d)
    CHECK(lattice_surface(cross_polytope(d)) ==
          make_rat(pow_int(2, static_cast<unsigned>(d - 1)),
                   factorial(static_cast<unsigned>(d - 1))));
}

TEST_CASE("euclidean surface closed forms") {
  // simplex: (d + sqrt(d))/(d-1)!
  for (int d = 2; d <= 5; ++d)
    CHECK(euclid_surface(std_simplex(d)) == simplex_surface_formula(d));
  // cross-polytope: (2^d/d!) d^(3/2); at d=3 this is 4 sqrt(3)
  SqrtSum c3 = euclid_surface(cross_polytope(3));
  REQUIRE(c3.terms().size() == 1);
  CHECK(c3.terms()[0].first == 4);
  CHECK(c3.terms()[0].second == 3);
  for (int d = 2; d <= 5; ++d)
    CHECK(euclid_surface(cross_polytope(d)) == cross_surface_formula(d));
  // cube: 2d faces of area 2^(d-1)
  for (int d = 2; d <= 4; ++d) {
    SqrtSum s = euclid_surface(sym_cube(d));
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].second == 1);
    CHECK(s.terms()[0].first == 2 * d * pow_int(2, static_cast<unsigned>(d - 1)));
  }
  // perfect-square dimension collapses the radical: F(T_4) = 1
  SqrtSum t4 = simplex_surface_formula(4);
  REQUIRE(t4.terms().size() == 1);
  CHECK(t4.terms()[0].first == 1);
  CHECK(t4.terms()[0].second == 1);
}

TEST_CASE("lattice surface equals the second-highest Ehrhart coefficient") {
  std::vector<VPolytope> polys{std_simplex(3), sym_cube(3), cross_odd(2, 3),
                               box_polytope(2, 3), family_t(3, 4),
                               family_s(2, 4)};
  for (int i = 0; i < 10; ++i)
    polys.push_back(random_lattice_polytope(3, 2, 7, 500 + i, i % 2 == 0));
  for (const VPolytope& p : polys) {
    HRep h = facets(p);
    CHECK(lattice_surface(p, h) == ehrhart_poly(p, h).coeffs[p.dim - 1]);
  }
}

TEST_CASE("non-vertex generators on facets do not change areas") {
  // same polytope as 3*simplex(3), with an extra point interior to the
  // slanted facet and another on one of its edges
  VPolytope plain = dilate(std_simplex(3), 3);
  VPolytope decorated = VPolytope::make(
      3, {{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}, {2, 1, 0}});
  CHECK(lattice_surface(decorated) == lattice_surface(plain));
  CHECK(euclid_surface(decorated) == euclid_surface(plain));
  CHECK(lattice_surface(decorated) ==
        ehrhart_poly(decorated).coeffs[2]);
}

TEST_CASE("facet multiples satisfy the closed-normal relation") {
  // sum over facets of k_i * a_i = 0 with outward normals
  std::vector<VPolytope> polys{std_simplex(3), family_t(2, 4),
                               cross_polytope(3), box_polytope(2, 2)};
  for (int i = 0; i < 8; ++i)
    polys.push_back(random_lattice_polytope(3, 2, 7, 600 + i, false));
  for (const VPolytope& p : polys) {
    IntVec sum(p.dim, Int(0));
    for (const FacetArea& fa : facet_areas(p))
      sum = vec_add(sum, vec_scale(fa.facet.normal, fa.k));
    CHECK(is_zero(sum));
  }
}

TEST_CASE("squared facet normals of a simplex sum to at least 2d") {
  std::mt19937_64 rng(42);
  for (int d = 2; d <= 4; ++d) {
    for (int iter = 0; iter < 10; ++iter) {
      VPolytope p = random_lattice_polytope(d, 2, d + 1, rng(), false);
      Int sum = 0;
      for (const HFacet& f : facets(p).facets) sum += dot(f.normal, f.normal);
      CHECK(sum >= 2 * d);
    }
    Int simplex_sum = 0;
    for (const HFacet& f : facets(std_simplex(d)).facets)
      simplex_sum += dot(f.normal, f.normal);
    CHECK(simplex_sum == 2 * d);  // d unit normals plus the all-ones normal
  }
}

TEST_CASE("isoperimetric ratio for cross-polytopes") {
  std::vector<IntVec> axes{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  IsoCrossReport r = iso_ratio_check(axes);
  CHECK(r.holds);
  CHECK(r.near_equality);

  // scale invariance: doubled axes still give equality
  std::vector<IntVec> doubled{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  IsoCrossReport r2 = iso_ratio_check(doubled);
  CHECK(r2.near_equality);

  std::mt19937_64 rng(9);
  int checked = 0;
  while (checked < 25) {
    std::vector<IntVec> gens(3, IntVec(3));
    for (auto& v : gens)
      for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7) - 3;
    if (det_exact(mat_from_rows(gens)) == 0) continue;
    ++checked;
    CHECK(iso_ratio_check(gens).holds);
  }

  std::vector<IntVec> dependent{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK_THROWS_AS(iso_ratio_check(dependent), std::invalid_argument);
}

TEST_CASE("minimal surface area certification") {
  for (int d = 2; d <= 4; ++d) {
    SurfaceMinReport cross = prop110_check(cross_polytope(d));
    CHECK(cross.symmetric);
    CHECK(cross.equality);

    SurfaceMinReport simplex = prop110_check(std_simplex(d));
    CHECK_FALSE(simplex.symmetric);
    CHECK(simplex.equality);
  }
  for (int i = 0; i < 8; ++i) {
    VPolytope p = random_lattice_polytope(3, 2, 7, 700 + i, i % 2 == 0);
    SurfaceMinReport r = prop110_check(p);
    CHECK(r.holds);
  }
}
