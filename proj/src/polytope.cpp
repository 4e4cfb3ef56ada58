#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ehrhart {

namespace {

using TightMask = std::vector<std::uint64_t>;

bool mask_subset(const TightMask& a, const TightMask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

TightMask mask_and(const TightMask& a, const TightMask& b) {
  TightMask r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

struct Ray {
  IntVec coords;  // length d+1, content 1
  TightMask tight;
};

// Extreme rays of { y in R^(d+1) : hs[i].y >= 0 } for a pointed cone,
// i.e. the hs must span R^(d+1). Classic double description: start from a
// simplicial subcone and insert the remaining halfspaces one at a time.
std::vector<Ray> extreme_rays(const std::vector<IntVec>& hs, std::size_t dim1) {
  const std::size_t n = hs.size();
  const std::size_t words = (n + 63) / 64;

  std::vector<std::size_t> chosen;
  std::vector<IntVec> chosen_rows;
  for (std::size_t i = 0; i < n && chosen.size() < dim1; ++i) {
    chosen_rows.push_back(hs[i]);
    if (rank_exact(mat_from_rows(chosen_rows)) == chosen_rows.size()) {
      chosen.push_back(i);
    } else {
      chosen_rows.pop_back();
    }
  }
  if (chosen.size() != dim1)
    throw std::invalid_argument("facets: generators not full-dimensional");

  IntMat g = mat_from_rows(chosen_rows);
  Int det = det_exact(g);
  std::vector<bool> is_chosen(n, false);
  for (std::size_t c : chosen) is_chosen[c] = true;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim1; ++j) {
    RatVec e(dim1, Rat(0));
    e[j] = 1;
    auto x = solve_exact(g, e);
    IntVec r(dim1);
    for (std::size_t t = 0; t < dim1; ++t) {
      Rat scaled = x->at(t) * Rat(det);
      if (denominator(scaled) != 1)
        throw std::logic_error("facets: adjugate column not integral");
      r[t] = numerator(scaled);
    }
    if (det < 0) r = vec_neg(r);
    Ray ray{divide_by_content(r), TightMask(words, 0)};
    for (std::size_t t = 0; t < dim1; ++t)
      if (t != j) ray.tight[chosen[t] / 64] |= std::uint64_t(1) << (chosen[t] % 64);
    rays.push_back(std::move(ray));
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (is_chosen[k]) continue;
    std::vector<Int> vals(rays.size());
    bool any_neg = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      vals[r] = dot(hs[k], rays[r].coords);
      if (vals[r] < 0) any_neg = true;
    }
    const std::uint64_t kbit = std::uint64_t(1) << (k % 64);
    if (!any_neg) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (vals[r] == 0) rays[r].tight[k / 64] |= kbit;
      continue;
    }

    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] > 0) plus.push_back(r);
      else if (vals[r] < 0) minus.push_back(r);
    }

    // Adjacency test: p and m span an edge iff no third extreme ray is
    // tight on everything both of them are tight on.
    auto adjacent = [&](std::size_t p, std::size_t m) {
      TightMask common = mask_and(rays[p].tight, rays[m].tight);
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (r == p || r == m) continue;
        if (mask_subset(common, rays[r].tight)) return false;
      }
      return true;
    };

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] > 0) next.push_back(rays[r]);
      else if (vals[r] == 0) {
        next.push_back(rays[r]);
        next.back().tight[k / 64] |= kbit;
      }
    }
    for (std::size_t p : plus) {
      for (std::size_t m : minus) {
        if (!adjacent(p, m)) continue;
        IntVec w(dim1);
        for (std::size_t t = 0; t < dim1; ++t)
          w[t] = vals[p] * rays[m].coords[t] - vals[m] * rays[p].coords[t];
        Ray nr{divide_by_content(w), mask_and(rays[p].tight, rays[m].tight)};
        nr.tight[k / 64] |= kbit;
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

HRep facets_of_points(int dim, const std::vector<IntVec>& points) {
  const std::size_t dim1 = static_cast<std::size_t>(dim) + 1;
  std::vector<IntVec> hs(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    IntVec h(dim1);
    h[0] = 1;
    for (int j = 0; j < dim; ++j) h[j + 1] = points[i][j];
    hs[i] = std::move(h);
  }

  HRep rep;
  rep.dim = dim;
  for (const Ray& ray : extreme_rays(hs, dim1)) {
    HFacet f;
    f.offset = ray.coords[0];
    f.normal.resize(dim);
    for (int j = 0; j < dim; ++j) f.normal[j] = -ray.coords[j + 1];
    if (is_zero(f.normal) || content(f.normal) != 1)
      throw std::logic_error("facets: non-primitive facet normal");
    rep.facets.push_back(std::move(f));
  }
  std::sort(rep.facets.begin(), rep.facets.end(),
            [](const HFacet& a, const HFacet& b) {
              if (a.normal != b.normal) return a.normal < b.normal;
              return a.offset < b.offset;
            });
  for (const HFacet& f : rep.facets)
    for (const IntVec& pt : points)
      if (dot(f.normal, pt) > f.offset)
        throw std::logic_error("facets: generator outside computed facet");
  return rep;
}

}  // namespace

VPolytope VPolytope::make(int dim, std::vector<IntVec> points) {
  if (dim < 1) throw std::invalid_argument("VPolytope: dimension must be >= 1");
  if (points.empty()) throw std::invalid_argument("VPolytope: no generators");
  for (const IntVec& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("VPolytope: generator length mismatch");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (affine_rank(points) != static_cast<std::size_t>(dim))
    throw std::invalid_argument("VPolytope: generators not full-dimensional");
  VPolytope p;
  p.dim = dim;
  p.generators = std::move(points);
  return p;
}

HRep facets(const VPolytope& p) { return facets_of_points(p.dim, p.generators); }

bool contains(const HRep& h, const IntVec& x, bool strict) {
  if (static_cast<int>(x.size()) != h.dim)
    throw std::invalid_argument("contains: dimension mismatch");
  for (const HFacet& f : h.facets) {
    Int v = dot(f.normal, x);
    if (strict ? v >= f.offset : v > f.offset) return false;
  }
  return true;
}

std::vector<IntVec> vertices_of(const VPolytope& p, const HRep& h) {
  std::vector<IntVec> verts;
  for (const IntVec& g : p.generators) {
    std::vector<IntVec> tight_normals;
    for (const HFacet& f : h.facets)
      if (dot(f.normal, g) == f.offset) tight_normals.push_back(f.normal);
    if (tight_normals.size() >= static_cast<std::size_t>(p.dim) &&
        rank_exact(mat_from_rows(tight_normals)) ==
            static_cast<std::size_t>(p.dim))
      verts.push_back(g);
  }
  return verts;
}

std::vector<IntVec> vertices_of(const VPolytope& p) {
  return vertices_of(p, facets(p));
}

bool is_centrally_symmetric(const VPolytope& p) {
  std::vector<IntVec> verts = vertices_of(p);
  std::vector<IntVec> neg(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) neg[i] = vec_neg(verts[i]);
  std::sort(verts.begin(), verts.end());
  std::sort(neg.begin(), neg.end());
  return verts == neg;
}

VPolytope random_lattice_polytope(int dim, int box, int count,
                                  std::uint64_t seed, bool symmetric) {
  if (dim < 2) throw std::invalid_argument("random_lattice_polytope: dim >= 2");
  if (box < 1) throw std::invalid_argument("random_lattice_polytope: box >= 1");
  if (count < dim + 1)
    throw std::invalid_argument("random_lattice_polytope: count >= dim+1");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(box) + 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<IntVec> pts;
    for (int i = 0; i < count; ++i) {
      IntVec p(dim);
      for (int j = 0; j < dim; ++j)
        p[j] = static_cast<std::int64_t>(rng() % span) - box;
      pts.push_back(std::move(p));
    }
    if (symmetric) {
      std::size_t m = pts.size();
      for (std::size_t i = 0; i < m; ++i) pts.push_back(vec_neg(pts[i]));
    }
    if (affine_rank(pts) == static_cast<std::size_t>(dim))
      return VPolytope::make(dim, std::move(pts));
  }
  throw std::runtime_error(
      "random_lattice_polytope: could not reach full dimension");
}

namespace {

// Integer coordinates of `pts` within their affine hull (dimension q > 0),
// index-preserving. Any common scaling is fine: only convexity structure
// is consumed downstream.
std::vector<IntVec> to_affine_coords(const std::vector<IntVec>& pts,
                                     std::size_t q) {
  const std::size_t d = pts[0].size();
  std::vector<IntVec> basis;  // columns p_i - p_0 spanning the hull
  {
    std::vector<IntVec> acc;
    for (std::size_t i = 1; i < pts.size() && basis.size() < q; ++i) {
      IntVec diff = vec_sub(pts[i], pts[0]);
      acc.push_back(diff);
      if (rank_exact(mat_from_rows(acc)) == acc.size())
        basis.push_back(diff);
      else
        acc.pop_back();
    }
  }
  // q independent coordinate rows of the d x q basis matrix
  std::vector<std::size_t> rows;
  {
    std::vector<IntVec> acc;
    for (std::size_t r = 0; r < d && rows.size() < q; ++r) {
      IntVec row(q);
      for (std::size_t c = 0; c < q; ++c) row[c] = basis[c][r];
      acc.push_back(row);
      if (rank_exact(mat_from_rows(acc)) == acc.size())
        rows.push_back(r);
      else
        acc.pop_back();
    }
  }
  IntMat sys(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t c = 0; c < q; ++c) sys(i, c) = basis[c][rows[i]];

  std::vector<RatVec> lambdas(pts.size());
  Int denom_lcm = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntVec diff = vec_sub(pts[i], pts[0]);
    RatVec rhs(q);
    for (std::size_t r = 0; r < q; ++r) rhs[r] = Rat(diff[rows[r]]);
    auto lam = solve_exact(sys, rhs);
    // consistency across all coordinates, not just the solved rows
    for (std::size_t r = 0; r < d; ++r) {
      Rat acc = 0;
      for (std::size_t c = 0; c < q; ++c) acc += Rat(basis[c][r]) * lam->at(c);
      if (acc != Rat(diff[r]))
        throw std::logic_error("triangulate: point outside affine hull");
    }
    for (const Rat& l : *lam) denom_lcm = lcm(denom_lcm, denominator(l));
    lambdas[i] = std::move(*lam);
  }
  std::vector<IntVec> out(pts.size(), IntVec(q));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t c = 0; c < q; ++c) {
      Rat scaled = lambdas[i][c] * Rat(denom_lcm);
      out[i][c] = numerator(scaled);
    }
  return out;
}

std::vector<std::vector<std::size_t>> triangulate_embedded(
    const std::vector<IntVec>& pts);

// pts are full-dimensional in R^q.
std::vector<std::vector<std::size_t>> triangulate_full(
    const std::vector<IntVec>& pts, std::size_t q) {
  if (q == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    return {{lo, hi}};
  }
  HRep rep = facets_of_points(static_cast<int>(q), pts);
  std::size_t apex = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] < pts[apex]) apex = i;

  std::vector<std::vector<std::size_t>> out;
  for (const HFacet& f : rep.facets) {
    if (dot(f.normal, pts[apex]) == f.offset) continue;
    std::vector<std::size_t> on_facet;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(f.normal, pts[i]) == f.offset) on_facet.push_back(i);
    std::vector<IntVec> sub;
    sub.reserve(on_facet.size());
    for (std::size_t i : on_facet) sub.push_back(pts[i]);
    for (const auto& simplex : triangulate_embedded(sub)) {
      std::vector<std::size_t> mapped;
      mapped.reserve(simplex.size() + 1);
      mapped.push_back(apex);
      for (std::size_t s : simplex) mapped.push_back(on_facet[s]);
      out.push_back(std::move(mapped));
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> triangulate_embedded(
    const std::vector<IntVec>& pts) {
  std::size_t q = affine_rank(pts);
  if (q == 0) return {{0}};
  std::vector<IntVec> reduced =
      q == pts[0].size() ? pts : to_affine_coords(pts, q);
  return triangulate_full(reduced, q);
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(
    const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("triangulate: no points");
  return triangulate_embedded(points);
}

std::string polytope_to_string(const VPolytope& p) {
  return "V(dim=" + std::to_string(p.dim) +
         ",gens=" + std::to_string(p.generators.size()) + ")";
}

}  // namespace ehrhart
