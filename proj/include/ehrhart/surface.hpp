#pragma once

#include <vector>

#include "ehrhart/polytope.hpp"
#include "ehrhart/sqrtsum.hpp"

namespace ehrhart {

// Per-facet area data. With primitive normal a, the sublattice of the
// facet hyperplane has determinant ||a||, so the lattice-normalized area
// vol_{d-1}(F)/||a|| is rational and equals k/(d-1)! for an integer k >= 1.
struct FacetArea {
  HFacet facet;
  Rat lattice_area;
  Int k;                // lattice_area * (d-1)!
  SqrtSum euclid_area;  // lattice_area * sqrt(||a||^2)
};

// Each facet is fan-triangulated from its lexicographically smallest
// vertex; a (d-1)-simplex with edge matrix U contributes
// |det[U | a]| / ((d-1)! * ||a||^2) to the lattice area.
std::vector<FacetArea> facet_areas(const VPolytope& p, const HRep& h);
std::vector<FacetArea> facet_areas(const VPolytope& p);

// Half the total lattice-normalized facet area; equals the second-highest
// Ehrhart coefficient g_{d-1}.
Rat lattice_surface(const VPolytope& p, const HRep& h);
Rat lattice_surface(const VPolytope& p);

// Total Euclidean surface area, exact.
SqrtSum euclid_surface(const VPolytope& p, const HRep& h);
SqrtSum euclid_surface(const VPolytope& p);

inline constexpr double kSurfaceRelTol = 1e-9;

// Isoperimetric check for the cross-polytope conv{+-v_i}:
// F(C)^d / vol(C)^(d-1) >= (2^d/d!) * d^(3d/2), equality exactly for
// orthogonal generators of equal length.
struct IsoCrossReport {
  double ratio = 0;
  double bound = 0;
  bool holds = false;
  bool near_equality = false;
};
IsoCrossReport iso_ratio_check(const std::vector<IntVec>& generators);

// Minimal-surface-area check: the bound is F of the regular cross-polytope
// for centrally symmetric input and F of the standard simplex otherwise.
// The verdict is Equality only on exact term-by-term match of the
// SqrtSums; otherwise the comparison is numeric at kSurfaceRelTol.
struct SurfaceMinReport {
  bool symmetric = false;
  SqrtSum area;
  SqrtSum bound;
  bool holds = false;
  bool equality = false;       // exact symbolic match
  bool near_equality = false;  // within tolerance but not certified exact
};
SurfaceMinReport prop110_check(const VPolytope& p);

// Closed forms used as bounds: F(T_d) = (d + sqrt(d))/(d-1)! and
// F(C_d^*) = (2^d/d!) * d^(3/2).
SqrtSum simplex_surface_formula(int d);
SqrtSum cross_surface_formula(int d);

}  // namespace ehrhart
