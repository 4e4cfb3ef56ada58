#include <doctest.h>

#include <algorithm>
#include <set>

#include "ehrhart/construct.hpp"
#include "ehrhart/polytope.hpp"

using namespace ehrhart;

namespace {

std::set<std::pair<IntVec, Int>> facet_set(const HRep& h) {
  std::set<std::pair<IntVec, Int>> s;
  for (const HFacet& f : h.facets) s.insert({f.normal, f.offset});
  return s;
}

}  // namespace

TEST_CASE("facets of the standard simplex") {
  HRep h = facets(std_simplex(3));
  REQUIRE(h.facets.size() == 4);
  std::set<std::pair<IntVec, Int>> expect{
      {{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}, {{1, 1, 1}, 1}};
  CHECK(facet_set(h) == expect);
}

TEST_CASE("facets of the symmetric square") {
  HRep h = facets(sym_cube(2));
  REQUIRE(h.facets.size() == 4);
  std::set<std::pair<IntVec, Int>> expect{
      {{-1, 0}, 1}, {{0, -1}, 1}, {{0, 1}, 1}, {{1, 0}, 1}};
  CHECK(facet_set(h) == expect);
}

TEST_CASE("facets of the regular cross-polytope") {
  HRep h = facets(cross_polytope(3));
  REQUIRE(h.facets.size() == 8);
  for (const HFacet& f : h.facets) {
    CHECK(f.offset == 1);
    for (const Int& c : f.normal) CHECK(abs(c) == 1);
  }
}

TEST_CASE("facet list is canonical and sorted") {
  HRep h = facets(cross_polytope(3));
  CHECK(std::is_sorted(h.facets.begin(), h.facets.end(),
                       [](const HFacet& a, const HFacet& b) {
                         return a.normal != b.normal ? a.normal < b.normal
                                                     : a.offset < b.offset;
                       }));
}

TEST_CASE("round trip: generators satisfy facets, facets are supported") {
  std::vector<VPolytope> polys{std_simplex(4), sym_cube(3), cross_odd(2, 3),
                               box_polytope(2, 3), family_t(3, 4)};
  for (int i = 0; i < 12; ++i)
    polys.push_back(random_lattice_polytope(3, 2, 7, 100 + i, i % 2 == 0));
  for (const VPolytope& p : polys) {
    HRep h = facets(p);
    for (const IntVec& g : p.generators)
      CHECK(contains(h, g));
    for (const HFacet& f : h.facets) {
      std::vector<IntVec> tight;
      for (const IntVec& g : p.generators)
        if (dot(f.normal, g) == f.offset) tight.push_back(g);
      REQUIRE(tight.size() >= static_cast<std::size_t>(p.dim));
      CHECK(affine_rank(tight) == static_cast<std::size_t>(p.dim) - 1);
      CHECK(content(f.normal) == 1);
    }
  }
}

TEST_CASE("dilation scales offsets and keeps normals") {
  for (const VPolytope& p :
       {std_simplex(3), cross_polytope(3),
        random_lattice_polytope(3, 2, 7, 17, false)}) {
    HRep h = facets(p);
    HRep h3 = facets(dilate(p, 3));
    REQUIRE(h.facets.size() == h3.facets.size());
    for (std::size_t i = 0; i < h.facets.size(); ++i) {
      CHECK(h.facets[i].normal == h3.facets[i].normal);
      CHECK(h3.facets[i].offset == 3 * h.facets[i].offset);
    }
  }
}

TEST_CASE("contains with strict and non-strict inequalities") {
  HRep h = facets(sym_cube(2));
  CHECK(contains(h, IntVec{1, 1}, false));
  CHECK_FALSE(contains(h, IntVec{1, 1}, true));
  CHECK(contains(h, IntVec{0, 0}, true));
  CHECK_FALSE(contains(h, IntVec{2, 0}, false));
  CHECK_THROWS_AS(contains(h, IntVec{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("family generator lists match their definitions") {
  VPolytope s = family_s(3, 2);
  CHECK(s.generators ==
        std::vector<IntVec>{{0, 0}, {0, 3}, {1, 0}});  // sorted

  VPolytope t = family_t(2, 3);
  CHECK(t.generators ==
        std::vector<IntVec>{{0, 0, 0}, {0, 1, 2}, {1, 0, 0}, {1, 1, 0}});

  VPolytope j = join(family_s(1, 1), family_s(1, 1));
  CHECK(j.dim == 3);
  CHECK(j.generators ==
        std::vector<IntVec>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 0}});
}

TEST_CASE("join dimension and generator count") {
  VPolytope p = family_t(2, 3);
  VPolytope q = family_s(3, 2);
  VPolytope pq = join(p, q);
  CHECK(pq.dim == p.dim + q.dim + 1);
  CHECK(pq.generators.size() == p.generators.size() + q.generators.size());
}

TEST_CASE("pyramid and prism placement") {
  VPolytope pyr1 = pyramid(std_simplex(2));
  CHECK(pyr1.dim == 3);
  bool has_apex = false;
  for (const IntVec& g : pyr1.generators)
    if (g == IntVec{0, 0, 1}) has_apex = true;
  CHECK(has_apex);

  VPolytope pr = prism(std_simplex(2), 2);
  CHECK(pr.dim == 3);
  CHECK(pr.generators.size() == 6);
  for (const IntVec& g : pr.generators)
    CHECK((g[2] == 0 || g[2] == 2));
}

TEST_CASE("central symmetry") {
  CHECK(is_centrally_symmetric(sym_cube(3)));
  CHECK_FALSE(is_centrally_symmetric(std_simplex(3)));
  CHECK(is_centrally_symmetric(box_polytope(2, 2)));
  for (long l = 1; l <= 3; ++l)
    for (int d = 2; d <= 4; ++d)
      CHECK(is_centrally_symmetric(cross_odd(l, d)));
  // non-vertex generators must not break the vertex-set comparison
  VPolytope p = VPolytope::make(
      2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {1, 0}, {0, 1}});
  CHECK(is_centrally_symmetric(p));
  CHECK(vertices_of(p).size() == 4);
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS(VPolytope::make(3, {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(VPolytope::make(2, {{0, 0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(VPolytope::make(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(VPolytope::make(2, {{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("random polytopes are reproducible and full-dimensional") {
  VPolytope a = random_lattice_polytope(3, 2, 6, 7, false);
  VPolytope b = random_lattice_polytope(3, 2, 6, 7, false);
  CHECK(a == b);
  CHECK(affine_rank(a.generators) == 3);

  VPolytope s = random_lattice_polytope(3, 2, 4, 1, true);
  CHECK(is_centrally_symmetric(s));

  VPolytope c = random_lattice_polytope(3, 2, 6, 8, false);
  CHECK_FALSE(a == c);

  CHECK_THROWS_AS(random_lattice_polytope(1, 2, 6, 7, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(random_lattice_polytope(3, 0, 6, 7, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(random_lattice_polytope(3, 2, 3, 7, false),
                  std::invalid_argument);
}

TEST_CASE("triangulation covers the hull with disjoint simplices") {
  // total volume of the triangulation equals the known volume
  auto total_volume_x_dfact = [](const VPolytope& p) {
    Int total = 0;
    auto tris = triangulate(p.generators);
    for (const auto& simplex : tris) {
      REQUIRE(simplex.size() == static_cast<std::size_t>(p.dim) + 1);
      IntMat m(p.dim, p.dim);
      for (int c = 0; c < p.dim; ++c) {
        IntVec e = vec_sub(p.generators[simplex[c + 1]],
                           p.generators[simplex[0]]);
        for (int r = 0; r < p.dim; ++r) m(r, c) = e[r];
      }
      total += abs(det_exact(m));
    }
    return total;
  };
  CHECK(total_volume_x_dfact(std_simplex(3)) == 1);       // vol 1/6
  CHECK(total_volume_x_dfact(sym_cube(3)) == 48);         // vol 8
  CHECK(total_volume_x_dfact(cross_polytope(3)) == 8);    // vol 4/3
  CHECK(total_volume_x_dfact(box_polytope(3, 2)) == 24);  // area 12
}
