#pragma once

#include <vector>

#include "ehrhart/polytope.hpp"
#include "ehrhart/ratpoly.hpp"

namespace ehrhart {

// Ehrhart polynomial: G(kP) = sum_i coeffs[i] * k^i, exact rationals.
struct EhrhartPoly {
  int dim = 0;
  RatVec coeffs;  // g_0 .. g_d

  Rat eval(const Rat& k) const;
  RatPoly poly() const { return RatPoly(coeffs); }
  bool operator==(const EhrhartPoly&) const = default;
};

// Numerator coefficients of the Ehrhart series over (1-z)^(d+1).
struct HStar {
  int dim = 0;
  std::vector<Int> coeffs;  // a_0 .. a_d

  int degree() const;  // largest i with a_i != 0
  bool operator==(const HStar&) const = default;
};

// Exact number of lattice points in kP (strict: in the interior of kP).
// Enumerates the bounding box of kP with the facet inequalities deciding
// membership; the widest axis is resolved analytically per line.
Int count(const VPolytope& p, const HRep& h, long k, bool strict = false);
Int count(const VPolytope& p, long k, bool strict = false);

// Counts for k = 0..kmax in one sweep.
std::vector<Int> dilate_counts(const VPolytope& p, const HRep& h, long kmax,
                               bool strict = false);

// Unique degree-d interpolation through the exact counts at k = 0..d.
EhrhartPoly ehrhart_poly(const VPolytope& p);
EhrhartPoly ehrhart_poly(const VPolytope& p, const HRep& h);
EhrhartPoly ehrhart_poly_from_counts(const std::vector<Int>& counts);

// h* vector; computed independently by the alternating-sum basis change
// and by an exact triangular solve, which must agree.
HStar hstar_from_counts(const VPolytope& p);
HStar hstar_from_counts(const VPolytope& p, const HRep& h);
HStar hstar_from_count_vector(const std::vector<Int>& counts);

// G_P(t) recovered from the h* expansion in the binomial basis.
Int hstar_eval(const HStar& h, const Int& t);

// (sum of a_i) / d!
Rat volume(const HStar& h);

}  // namespace ehrhart
