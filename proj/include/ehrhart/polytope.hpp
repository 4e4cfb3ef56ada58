#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ehrhart/linalg.hpp"

namespace ehrhart {

// Lattice polytope given by integer generator points (their convex hull).
// Generators are deduplicated and sorted; they need not all be vertices,
// but must affinely span the ambient space.
struct VPolytope {
  int dim = 0;
  std::vector<IntVec> generators;

  static VPolytope make(int dim, std::vector<IntVec> points);
  bool operator==(const VPolytope&) const = default;
};

// Facet inequality normal.x <= offset with primitive outward normal.
struct HFacet {
  IntVec normal;
  Int offset;
  bool operator==(const HFacet&) const = default;
};

// Complete irredundant facet list, sorted lexicographically by
// (normal, offset).
struct HRep {
  int dim = 0;
  std::vector<HFacet> facets;
};

// Exact facet enumeration via the double description method on the
// homogenization cone: extreme rays of { y : (1,v).y >= 0 for all
// generators v } are exactly the facets of the polytope.
HRep facets(const VPolytope& p);

bool contains(const HRep& h, const IntVec& x, bool strict = false);

// Generators that are vertices of the hull: x is a vertex iff its tight
// facet normals span the ambient space.
std::vector<IntVec> vertices_of(const VPolytope& p, const HRep& h);
std::vector<IntVec> vertices_of(const VPolytope& p);

// True iff the vertex set equals its negation.
bool is_centrally_symmetric(const VPolytope& p);

// Deterministic for fixed seed: samples `count` points uniformly from
// [-box,box]^dim (plus negations when symmetric) and retries until the
// hull is full-dimensional.
VPolytope random_lattice_polytope(int dim, int box, int count,
                                  std::uint64_t seed, bool symmetric);

// Triangulation of conv(points) within its affine hull, as index tuples
// into `points`: each simplex has (affine dim + 1) entries, interiors are
// disjoint and the union is the hull. Fan-based from the lexicographically
// smallest point at every level, so the result is deterministic.
std::vector<std::vector<std::size_t>> triangulate(
    const std::vector<IntVec>& points);

std::string polytope_to_string(const VPolytope& p);

}  // namespace ehrhart
