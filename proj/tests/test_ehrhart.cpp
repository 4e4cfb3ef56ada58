#include <doctest.h>

#include <thread>

#include "ehrhart/construct.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/tables.hpp"
#include "oracles.hpp"

using namespace ehrhart;
using ehrhart::test::eulerian_by_permutations;
using ehrhart::test::simplex_count_oracle;

TEST_CASE("count on closed-form families") {
  CHECK(count(std_simplex(3), 2) == 10);  // binom(2+3,3)
  CHECK(count(sym_cube(3), 1) == 27);     // (2k+1)^3
  CHECK(count(sym_cube(3), 2) == 125);
  CHECK(count(std_simplex(2), 0) == 1);
  CHECK(count(std_simplex(2), 0, true) == 0);
  CHECK_THROWS_AS(count(std_simplex(2), facets(std_simplex(2)), -1),
                  std::invalid_argument);
}

TEST_CASE("count of S(3,4) against the barycentric oracle") {
  VPolytope s = family_s(3, 4);
  // frozen oracle value: simplex_count_oracle(S(3,4) vertices, 1) = 7
  CHECK(simplex_count_oracle(s.generators, 1) == 7);
  CHECK(count(s, 1) == 7);
  // a_1 = G(P) - (d+1) = 7 - 5 = 2 = m - 1
  CHECK(hstar_from_counts(s).coeffs[1] == 2);
  for (long k = 1; k <= 3; ++k)
    CHECK(count(s, k) == simplex_count_oracle(s.generators, k));
}

TEST_CASE("count agrees with the oracle on simplices, strict included") {
  for (const VPolytope& p : {family_t(2, 3), family_s(2, 3), std_simplex(4)}) {
    HRep h = facets(p);
    for (long k = 0; k <= 3; ++k) {
      CHECK(count(p, h, k) == simplex_count_oracle(p.generators, k));
      CHECK(count(p, h, k, true) ==
            simplex_count_oracle(p.generators, k, true));
    }
  }
}

TEST_CASE("count survives coordinates beyond the int64 fast path") {
  // one axis enormous: the exact fallback and the analytic line count
  Int big = Int(1) << 40;
  VPolytope p = VPolytope::make(
      2, {{0, 0}, {Int(1) << 40, 0}, {0, 1}, {Int(1) << 40, 1}});
  HRep h = facets(p);
  CHECK(count(p, h, 1) == 2 * (big + 1));
  CHECK(count(p, h, 2) == 3 * (2 * big + 1));
}

TEST_CASE("ehrhart polynomial interpolation") {
  EhrhartPoly sq = ehrhart_poly(sym_cube(2));
  CHECK(sq.coeffs == RatVec{Rat(1), Rat(4), Rat(4)});  // (2k+1)^2

  EhrhartPoly tri = ehrhart_poly(std_simplex(2));
  CHECK(tri.coeffs == RatVec{Rat(1), make_rat(3, 2), make_rat(1, 2)});

  EhrhartPoly s23 = ehrhart_poly(family_s(2, 3));
  CHECK(s23.coeffs[3] == make_rat(1, 3));  // vol = m/d! = 2/6

  CHECK(sq.eval(Rat(5)) == 121);
}

TEST_CASE("hstar vectors of named polytopes") {
  CHECK(hstar_from_counts(family_t(3, 4)).coeffs ==
        std::vector<Int>{1, 0, 2, 0, 0});
  CHECK(hstar_from_counts(unit_cube(3)).coeffs ==
        std::vector<Int>{1, 4, 1, 0});  // Eulerian numbers A(3, i+1)
  CHECK(hstar_from_counts(std_simplex(5)).coeffs ==
        std::vector<Int>{1, 0, 0, 0, 0, 0});
  CHECK(hstar_from_counts(sym_cube(3)).coeffs ==
        std::vector<Int>{1, 23, 23, 1});
}

TEST_CASE("hstar degree and volume") {
  HStar h1{4, {1, 2, 0, 0, 0}};
  CHECK(volume(h1) == make_rat(1, 8));  // matches vol(S(3,4)) = 3/24
  CHECK(h1.degree() == 1);

  HStar unimodular{5, {1, 0, 0, 0, 0, 0}};
  CHECK(volume(unimodular) == make_rat(1, 120));

  for (int d = 1; d <= 4; ++d)
    CHECK(volume(hstar_from_counts(sym_cube(d))) ==
          Rat(pow_int(2, static_cast<unsigned>(d))));
}

TEST_CASE("volume triangle: h* sum, leading coefficient, determinant") {
  for (int d = 2; d <= 5; ++d)
    for (long m = 1; m <= 4; ++m) {
      VPolytope t = family_t(m, d);
      HStar h = hstar_from_counts(t);
      EhrhartPoly g = ehrhart_poly(t);
      Rat vol = make_rat(m, factorial(static_cast<unsigned>(d)));
      CHECK(volume(h) == vol);
      CHECK(g.coeffs[d] == vol);
      // |det| of the vertex differences gives the same volume for simplices
      std::vector<IntVec> diffs(t.generators.begin() + 1, t.generators.end());
      CHECK(Rat(abs(det_exact(mat_from_rows(diffs)))) /
                Rat(factorial(static_cast<unsigned>(d))) ==
            vol);
    }
}

TEST_CASE("hstar reconstruction beyond the interpolation nodes") {
  for (const VPolytope& p :
       {family_t(2, 3), family_s(3, 2), unit_cube(3), cross_polytope(3)}) {
    HRep hr = facets(p);
    HStar h = hstar_from_counts(p, hr);
    for (long k = 0; k <= 2 * p.dim; ++k)
      CHECK(hstar_eval(h, Int(k)) == count(p, hr, k));
  }
}

TEST_CASE("reciprocity: (-1)^d G(-k) counts interior points") {
  for (const VPolytope& p :
       {std_simplex(3), sym_cube(2), family_t(3, 3), box_polytope(2, 2)}) {
    HRep hr = facets(p);
    EhrhartPoly g = ehrhart_poly(p, hr);
    for (long k = 1; k <= p.dim; ++k) {
      Rat v = g.eval(Rat(-k));
      if (p.dim % 2 == 1) v = -v;
      CHECK(v == Rat(count(p, hr, k, true)));
    }
  }
}

TEST_CASE("stirling numbers of the first kind") {
  // z(z-1)(z-2) = 2z - 3z^2 + z^3
  CHECK(stirling1(3, 1) == 2);
  CHECK(stirling1(3, 2) == -3);
  CHECK(stirling1(3, 3) == 1);
  CHECK(stirling1(0, 0) == 1);
  CHECK_THROWS_AS(stirling1(3, 4), std::invalid_argument);

  // stirl(d+1,2) = (-1)^(d+1) d! H_d at d = 4
  CHECK(stirling1(5, 2) == -50);
  // stirl(d+1,d-1) = ((3d+2)/4) binom(d+1,3) at d = 5
  CHECK(stirling1(6, 4) == 85);
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian_by_permutations(3, 2) == 4);  // frozen oracle value
  CHECK(eulerian(3, 2) == 4);
  for (unsigned d = 1; d <= 6; ++d) CHECK(eulerian(d, 1) == 1);
  CHECK(eulerian(2, 5) == 0);
  CHECK(eulerian(2, -1) == 0);
  for (unsigned n = 1; n <= 6; ++n)
    for (long j = 0; j <= static_cast<long>(n); ++j)
      CHECK(eulerian(n, j) == eulerian_by_permutations(n, j));
  for (unsigned d = 1; d <= 8; ++d) {
    Int sum = 0;
    for (long j = 0; j <= static_cast<long>(d); ++j) sum += eulerian(d, j);
    CHECK(sum == factorial(d));
  }
}

TEST_CASE("coefficients of the shifted falling factorial") {
  for (int d = 2; d <= 6; ++d) {
    for (long i = 0; i <= d; ++i)
      CHECK(c_coeff(d, d, i) == 1);
    for (long i = 0; i <= d - 1; ++i)
      CHECK(c_coeff(d, 0, i) == 0);
  }
  // C^d_{1,i} = (-1)^(d-i-1) i! (d-i-1)!
  CHECK(c_coeff(5, 1, 3) == -6);
  CHECK_THROWS_AS(c_coeff(4, 5, 0), std::invalid_argument);
}

TEST_CASE("minimum coefficients") {
  CHECK(m_coeff(5, 1) == -6);  // -(d-2)!
  CHECK(m_coeff(5, 4) == -5);  // -d(d-3)/2
  CHECK(m_coeff(5, 3) == -5);  // -(1/4) binom(d+1,3)
  CHECK_THROWS_AS(m_coeff(2, 1), std::invalid_argument);
}

TEST_CASE("coefficient symmetry and recursion") {
  auto c_safe = [](int d, int r, long i) -> Int {
    if (r < 0 || r > d) return 0;
    return c_coeff(d, r, i);
  };
  for (int d = 3; d <= 8; ++d)
    for (int r = 0; r <= d; ++r) {
      for (long i = 0; i <= d - 1; ++i) {
        Int lhs = c_coeff(d, r, i);
        Int rhs = c_coeff(d, r, d - 1 - i);
        CHECK(lhs == ((d - r) % 2 == 0 ? rhs : Int(-rhs)));
      }
      for (long i = 0; i <= d; ++i)
        CHECK(c_coeff(d, r, i) ==
              (i - d + 1) * c_safe(d - 1, r, i) + c_safe(d - 1, r - 1, i));
    }
}

TEST_CASE("minimum coefficients are nonpositive except (d,r) = (3,2)") {
  for (int d = 3; d <= 8; ++d)
    for (int r = 1; r <= d - 1; ++r) {
      Int m = m_coeff(d, r);
      if (d == 3 && r == 2)
        CHECK(m == 0);
      else
        CHECK(m < 0);
    }
}

TEST_CASE("coefficient table is safe to share across threads") {
  CoeffTable table;
  std::vector<std::thread> pool;
  std::vector<Int> results(8);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([&table, &results, t]() {
      Int acc = 0;
      for (int d = 3; d <= 7; ++d)
        for (int r = 0; r <= d; ++r)
          acc += table.m_coeff(d, r) + table.stirling1(d, r) +
                 table.eulerian(d, r);
      results[t] = acc;
    });
  for (auto& th : pool) th.join();
  for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}
