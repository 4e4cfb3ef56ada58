#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// facet-enumeration and counting paths so the values they produce are
// independent checks.

#include <vector>

#include "ehrhart/linalg.hpp"

namespace ehrhart::test {

// Membership in conv(verts) for a simplex (d+1 affinely independent
// vertices) via exact barycentric coordinates.
inline bool in_simplex(const std::vector<IntVec>& verts, const IntVec& x,
                       bool strict) {
  const std::size_t d = x.size();
  IntMat m(d, d);
  for (std::size_t c = 0; c < d; ++c) {
    IntVec e = vec_sub(verts[c + 1], verts[0]);
    for (std::size_t r = 0; r < d; ++r) m(r, c) = e[r];
  }
  RatVec rhs(d);
  IntVec diff = vec_sub(x, verts[0]);
  for (std::size_t r = 0; r < d; ++r) rhs[r] = Rat(diff[r]);
  auto lam = solve_exact(m, rhs);
  Rat sum = 0;
  for (const Rat& l : *lam) {
    if (strict ? l <= 0 : l < 0) return false;
    sum += l;
  }
  return strict ? sum < 1 : sum <= 1;
}

// Lattice points of k * conv(verts) by scanning the bounding box.
inline Int simplex_count_oracle(const std::vector<IntVec>& verts, long k,
                                bool strict = false) {
  if (k == 0) return strict ? 0 : 1;
  const std::size_t d = verts[0].size();
  std::vector<IntVec> scaled;
  for (const IntVec& v : verts) scaled.push_back(vec_scale(v, Int(k)));
  IntVec lo = scaled[0], hi = scaled[0];
  for (const IntVec& v : scaled)
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  Int total = 0;
  IntVec x = lo;
  for (;;) {
    if (in_simplex(scaled, x, strict)) ++total;
    std::size_t j = 0;
    while (j < d && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == d) break;
    ++x[j];
  }
  return total;
}

// Eulerian numbers by descent counting over all permutations: the number
// of permutations of {1..n} with j-1 descents.
inline Int eulerian_by_permutations(unsigned n, long j) {
  std::vector<int> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  Int total = 0;
  do {
    long descents = 0;
    for (unsigned i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) ++descents;
    if (descents == j - 1) ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace ehrhart::test
