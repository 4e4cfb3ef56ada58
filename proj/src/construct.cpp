#include "ehrhart/construct.hpp"

#include <stdexcept>

namespace ehrhart {

namespace {

IntVec unit(int d, int i) {
  IntVec v(d, Int(0));
  v[i] = 1;
  return v;
}

void check_positive(long v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// all sign patterns of the given magnitudes
std::vector<IntVec> sign_patterns(const IntVec& mags) {
  const std::size_t d = mags.size();
  std::vector<IntVec> out;
  out.reserve(std::size_t(1) << d);
  for (std::size_t bits = 0; bits < (std::size_t(1) << d); ++bits) {
    IntVec v(d);
    for (std::size_t j = 0; j < d; ++j)
      v[j] = (bits >> j & 1) ? Int(-mags[j]) : mags[j];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

VPolytope std_simplex(int d) { return family_s(1, d); }

VPolytope unit_cube(int d) {
  check_positive(d, "dimension");
  std::vector<IntVec> pts;
  for (std::size_t bits = 0; bits < (std::size_t(1) << d); ++bits) {
    IntVec v(d);
    for (int j = 0; j < d; ++j) v[j] = (bits >> j) & 1;
    pts.push_back(std::move(v));
  }
  return VPolytope::make(d, std::move(pts));
}

VPolytope sym_cube(int d) {
  check_positive(d, "dimension");
  return VPolytope::make(d, sign_patterns(IntVec(d, Int(1))));
}

VPolytope cross_polytope(int d) { return cross_odd(1, d); }

VPolytope cross_odd(long l, int d) {
  check_positive(l, "l");
  check_positive(d, "dimension");
  std::vector<IntVec> pts;
  for (int i = 0; i < d; ++i) {
    IntVec v = unit(d, i);
    if (i == 0) v[0] = l;
    pts.push_back(vec_neg(v));
    pts.push_back(std::move(v));
  }
  return VPolytope::make(d, std::move(pts));
}

VPolytope box_polytope(long l, int d) {
  check_positive(l, "l");
  if (d < 2) throw std::invalid_argument("box: dimension must be >= 2");
  IntVec mags(d, Int(1));
  mags[0] = l;
  return VPolytope::make(d, sign_patterns(mags));
}

VPolytope family_s(long m, int d) {
  check_positive(m, "m");
  check_positive(d, "dimension");
  std::vector<IntVec> pts{IntVec(d, Int(0))};
  for (int i = 0; i + 1 < d; ++i) pts.push_back(unit(d, i));
  IntVec last = unit(d, d - 1);
  last[d - 1] = m;
  pts.push_back(std::move(last));
  return VPolytope::make(d, std::move(pts));
}

VPolytope family_t(long m, int d) {
  check_positive(m, "m");
  check_positive(d, "dimension");
  if (d == 1) return family_s(m, 1);
  std::vector<IntVec> pts{IntVec(d, Int(0)), unit(d, 0)};
  for (int i = 0; i + 2 < d; ++i) pts.push_back(vec_add(unit(d, i), unit(d, i + 1)));
  IntVec last = unit(d, d - 2);
  last[d - 1] = m;
  pts.push_back(std::move(last));
  return VPolytope::make(d, std::move(pts));
}

VPolytope join(const VPolytope& p, const VPolytope& q) {
  const int dp = p.dim, dq = q.dim;
  const int d = dp + dq + 1;
  std::vector<IntVec> pts;
  for (const IntVec& x : p.generators) {
    IntVec v(d, Int(0));
    for (int j = 0; j < dp; ++j) v[j] = x[j];
    pts.push_back(std::move(v));
  }
  for (const IntVec& y : q.generators) {
    IntVec v(d, Int(0));
    for (int j = 0; j < dq; ++j) v[dp + j] = y[j];
    v[d - 1] = 1;
    pts.push_back(std::move(v));
  }
  return VPolytope::make(d, std::move(pts));
}

VPolytope prism(const VPolytope& p, long m) {
  check_positive(m, "height");
  const int d = p.dim + 1;
  std::vector<IntVec> pts;
  for (const IntVec& x : p.generators) {
    IntVec lo(d, Int(0)), hi(d, Int(0));
    for (int j = 0; j < p.dim; ++j) lo[j] = hi[j] = x[j];
    hi[d - 1] = m;
    pts.push_back(std::move(lo));
    pts.push_back(std::move(hi));
  }
  return VPolytope::make(d, std::move(pts));
}

VPolytope pyramid(const VPolytope& p) {
  const int d = p.dim + 1;
  std::vector<IntVec> pts;
  for (const IntVec& x : p.generators) {
    IntVec v(d, Int(0));
    for (int j = 0; j < p.dim; ++j) v[j] = x[j];
    pts.push_back(std::move(v));
  }
  pts.push_back(unit(d, d - 1));
  return VPolytope::make(d, std::move(pts));
}

VPolytope dilate(const VPolytope& p, long k) {
  check_positive(k, "dilation factor");
  std::vector<IntVec> pts;
  pts.reserve(p.generators.size());
  for (const IntVec& x : p.generators) pts.push_back(vec_scale(x, Int(k)));
  return VPolytope::make(p.dim, std::move(pts));
}

namespace {

ExprPtr leaf(ConstructionExpr::Kind kind, long a, long b) {
  auto e = std::make_shared<ConstructionExpr>();
  e->kind = kind;
  e->a = a;
  e->b = b;
  return e;
}

}  // namespace

ExprPtr expr_t(long m, long d) { return leaf(ConstructionExpr::Kind::TFamily, m, d); }
ExprPtr expr_s(long m, long d) { return leaf(ConstructionExpr::Kind::SFamily, m, d); }
ExprPtr expr_simplex(long d) { return leaf(ConstructionExpr::Kind::StdSimplex, d, 0); }
ExprPtr expr_unit_cube(long d) { return leaf(ConstructionExpr::Kind::UnitCube, d, 0); }
ExprPtr expr_sym_cube(long d) { return leaf(ConstructionExpr::Kind::SymCube, d, 0); }
ExprPtr expr_cross(long d) { return leaf(ConstructionExpr::Kind::Cross, d, 0); }
ExprPtr expr_cross_odd(long l, long d) { return leaf(ConstructionExpr::Kind::CrossOdd, l, d); }
ExprPtr expr_box(long l, long d) { return leaf(ConstructionExpr::Kind::Box, l, d); }

ExprPtr expr_explicit(VPolytope p) {
  auto e = std::make_shared<ConstructionExpr>();
  e->kind = ConstructionExpr::Kind::Explicit;
  e->payload = std::move(p);
  return e;
}

ExprPtr expr_join(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<ConstructionExpr>();
  e->kind = ConstructionExpr::Kind::Join;
  e->left = std::move(l);
  e->right = std::move(r);
  return e;
}

ExprPtr expr_prism(ExprPtr inner, long m) {
  auto e = std::make_shared<ConstructionExpr>();
  e->kind = ConstructionExpr::Kind::Prism;
  e->left = std::move(inner);
  e->a = m;
  return e;
}

ExprPtr expr_pyramid(ExprPtr inner) {
  auto e = std::make_shared<ConstructionExpr>();
  e->kind = ConstructionExpr::Kind::Pyramid;
  e->left = std::move(inner);
  return e;
}

ExprPtr expr_dilate(ExprPtr inner, long k) {
  auto e = std::make_shared<ConstructionExpr>();
  e->kind = ConstructionExpr::Kind::Dilate;
  e->left = std::move(inner);
  e->a = k;
  return e;
}

int expr_dim(const ConstructionExpr& e) {
  using Kind = ConstructionExpr::Kind;
  switch (e.kind) {
    case Kind::TFamily:
    case Kind::SFamily:
    case Kind::CrossOdd:
    case Kind::Box:
      return static_cast<int>(e.b);
    case Kind::StdSimplex:
    case Kind::UnitCube:
    case Kind::SymCube:
    case Kind::Cross:
      return static_cast<int>(e.a);
    case Kind::Explicit:
      return e.payload.dim;
    case Kind::Join:
      return expr_dim(*e.left) + expr_dim(*e.right) + 1;
    case Kind::Prism:
    case Kind::Pyramid:
      return expr_dim(*e.left) + 1;
    case Kind::Dilate:
      return expr_dim(*e.left);
  }
  throw std::logic_error("expr_dim: unknown kind");
}

VPolytope build(const ConstructionExpr& e) {
  using Kind = ConstructionExpr::Kind;
  switch (e.kind) {
    case Kind::TFamily: return family_t(e.a, static_cast<int>(e.b));
    case Kind::SFamily: return family_s(e.a, static_cast<int>(e.b));
    case Kind::StdSimplex: return std_simplex(static_cast<int>(e.a));
    case Kind::UnitCube: return unit_cube(static_cast<int>(e.a));
    case Kind::SymCube: return sym_cube(static_cast<int>(e.a));
    case Kind::Cross: return cross_polytope(static_cast<int>(e.a));
    case Kind::CrossOdd: return cross_odd(e.a, static_cast<int>(e.b));
    case Kind::Box: return box_polytope(e.a, static_cast<int>(e.b));
    case Kind::Explicit: return e.payload;
    case Kind::Join: return join(build(*e.left), build(*e.right));
    case Kind::Prism: return prism(build(*e.left), e.a);
    case Kind::Pyramid: return pyramid(build(*e.left));
    case Kind::Dilate: return dilate(build(*e.left), e.a);
  }
  throw std::logic_error("build: unknown kind");
}

VPolytope build(const ExprPtr& e) {
  if (!e) throw std::invalid_argument("build: null expression");
  return build(*e);
}

std::string expr_to_string(const ConstructionExpr& e) {
  using Kind = ConstructionExpr::Kind;
  auto num = [](long v) { return std::to_string(v); };
  switch (e.kind) {
    case Kind::TFamily: return "T(" + num(e.a) + "," + num(e.b) + ")";
    case Kind::SFamily: return "S(" + num(e.a) + "," + num(e.b) + ")";
    case Kind::StdSimplex: return "simplex(" + num(e.a) + ")";
    case Kind::UnitCube: return "unitcube(" + num(e.a) + ")";
    case Kind::SymCube: return "symcube(" + num(e.a) + ")";
    case Kind::Cross: return "cross(" + num(e.a) + ")";
    case Kind::CrossOdd: return "crossodd(" + num(e.a) + "," + num(e.b) + ")";
    case Kind::Box: return "box(" + num(e.a) + "," + num(e.b) + ")";
    case Kind::Explicit: return polytope_to_string(e.payload);
    case Kind::Join:
      return "join(" + expr_to_string(*e.left) + "," + expr_to_string(*e.right) + ")";
    case Kind::Prism:
      return "prism(" + expr_to_string(*e.left) + "," + num(e.a) + ")";
    case Kind::Pyramid: return "pyr(" + expr_to_string(*e.left) + ")";
    case Kind::Dilate:
      return "dilate(" + expr_to_string(*e.left) + "," + num(e.a) + ")";
  }
  throw std::logic_error("expr_to_string: unknown kind");
}

}  // namespace ehrhart
