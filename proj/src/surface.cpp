#include "ehrhart/surface.hpp"

#include <stdexcept>

namespace ehrhart {

std::vector<FacetArea> facet_areas(const VPolytope& p, const HRep& h) {
  const int d = p.dim;
  const Int dm1_fact = factorial(static_cast<unsigned>(d - 1));
  std::vector<FacetArea> out;
  out.reserve(h.facets.size());
  for (const HFacet& f : h.facets) {
    std::vector<IntVec> on_facet;
    for (const IntVec& g : p.generators)
      if (dot(f.normal, g) == f.offset) on_facet.push_back(g);

    Int norm_sq = dot(f.normal, f.normal);
    Int det_sum = 0;
    for (const auto& simplex : triangulate(on_facet)) {
      IntMat m(d, d);
      const IntVec& base = on_facet[simplex[0]];
      for (int c = 0; c + 1 < d; ++c) {
        IntVec edge = vec_sub(on_facet[simplex[c + 1]], base);
        for (int r = 0; r < d; ++r) m(r, c) = edge[r];
      }
      for (int r = 0; r < d; ++r) m(r, d - 1) = f.normal[r];
      det_sum += abs(det_exact(m));
    }

    FacetArea fa;
    fa.facet = f;
    fa.lattice_area = make_rat(det_sum, dm1_fact * norm_sq);
    if (det_sum % norm_sq != 0)
      throw std::logic_error("facet_areas: non-integral lattice multiple");
    fa.k = det_sum / norm_sq;
    if (fa.k < 1) throw std::logic_error("facet_areas: empty facet area");
    fa.euclid_area = SqrtSum::term(fa.lattice_area, norm_sq);
    out.push_back(std::move(fa));
  }
  return out;
}

std::vector<FacetArea> facet_areas(const VPolytope& p) {
  return facet_areas(p, facets(p));
}

Rat lattice_surface(const VPolytope& p, const HRep& h) {
  Rat s = 0;
  for (const FacetArea& fa : facet_areas(p, h)) s += fa.lattice_area;
  return s / 2;
}

Rat lattice_surface(const VPolytope& p) { return lattice_surface(p, facets(p)); }

SqrtSum euclid_surface(const VPolytope& p, const HRep& h) {
  SqrtSum s;
  for (const FacetArea& fa : facet_areas(p, h)) s += fa.euclid_area;
  return s;
}

SqrtSum euclid_surface(const VPolytope& p) {
  return euclid_surface(p, facets(p));
}

SqrtSum simplex_surface_formula(int d) {
  Rat f = make_rat(1, factorial(static_cast<unsigned>(d - 1)));
  return SqrtSum::rational(f * d) + SqrtSum::term(f, d);
}

SqrtSum cross_surface_formula(int d) {
  Rat f = make_rat(pow_int(2, static_cast<unsigned>(d)) * d,
                   factorial(static_cast<unsigned>(d)));
  return SqrtSum::term(f, d);
}

IsoCrossReport iso_ratio_check(const std::vector<IntVec>& generators) {
  if (generators.empty())
    throw std::invalid_argument("iso_ratio_check: no generators");
  const int d = static_cast<int>(generators[0].size());
  if (generators.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("iso_ratio_check: need exactly d generators");
  Int det = det_exact(mat_from_rows(generators));
  if (det == 0)
    throw std::invalid_argument("iso_ratio_check: generators dependent");

  std::vector<IntVec> pts;
  for (const IntVec& v : generators) {
    pts.push_back(v);
    pts.push_back(vec_neg(v));
  }
  VPolytope c = VPolytope::make(d, std::move(pts));
  BigFloat area = euclid_surface(c).value();
  Rat vol = make_rat(pow_int(2, static_cast<unsigned>(d)) * abs(det),
                     factorial(static_cast<unsigned>(d)));

  BigFloat ratio = pow(area, d) / pow(to_big_float(vol), d - 1);
  BigFloat exponent = BigFloat(3 * d) / 2;
  BigFloat bound = to_big_float(make_rat(pow_int(2, static_cast<unsigned>(d)),
                                         factorial(static_cast<unsigned>(d)))) *
                   pow(BigFloat(d), exponent);

  IsoCrossReport r;
  r.ratio = ratio.convert_to<double>();
  r.bound = bound.convert_to<double>();
  BigFloat tol = bound * kSurfaceRelTol;
  r.holds = ratio >= bound - tol;
  BigFloat diff = ratio - bound;
  if (diff < 0) diff = -diff;
  r.near_equality = diff <= tol;
  return r;
}

SurfaceMinReport prop110_check(const VPolytope& p) {
  SurfaceMinReport r;
  r.symmetric = is_centrally_symmetric(p);
  r.area = euclid_surface(p);
  r.bound = r.symmetric ? cross_surface_formula(p.dim)
                        : simplex_surface_formula(p.dim);
  if (r.area == r.bound) {
    r.equality = true;
    r.holds = true;
    r.near_equality = true;
    return r;
  }
  BigFloat a = r.area.value();
  BigFloat b = r.bound.value();
  BigFloat tol = b * kSurfaceRelTol;
  r.holds = a >= b - tol;
  BigFloat diff = a - b;
  if (diff < 0) diff = -diff;
  r.near_equality = diff <= tol;
  return r;
}

}  // namespace ehrhart
