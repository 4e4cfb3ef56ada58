#pragma once

#include <memory>
#include <string>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

// Named families, all with explicit integer generator lists.
VPolytope std_simplex(int d);                 // conv{0, e_1, ..., e_d}
VPolytope unit_cube(int d);                   // [0,1]^d
VPolytope sym_cube(int d);                    // [-1,1]^d
VPolytope cross_polytope(int d);              // conv{+-e_i}
VPolytope cross_odd(long l, int d);           // conv{+-l e_1, +-e_i : i >= 2}
VPolytope box_polytope(long l, int d);        // [-l,l] x [-1,1]^(d-1)
VPolytope family_s(long m, int d);            // conv{0, e_1, ..., e_{d-1}, m e_d}
VPolytope family_t(long m, int d);  // conv{0, e_1, e_1+e_2, ..., e_{d-1}+m e_d}

// P at last coordinate 0, Q at last coordinate 1, complementary blocks.
VPolytope join(const VPolytope& p, const VPolytope& q);
VPolytope prism(const VPolytope& p, long m);  // P x [0,m]
VPolytope pyramid(const VPolytope& p);        // conv{P x {0}, e_{d+1}}
VPolytope dilate(const VPolytope& p, long k);

struct ConstructionExpr;
using ExprPtr = std::shared_ptr<const ConstructionExpr>;

struct ConstructionExpr {
  enum class Kind {
    TFamily,    // T(m,d)
    SFamily,    // S(m,d)
    StdSimplex,
    UnitCube,
    SymCube,
    Cross,
    CrossOdd,   // crossodd(l,d)
    Box,        // box(l,d)
    Explicit,
    Join,
    Prism,      // prism(E,m)
    Pyramid,
    Dilate      // dilate(E,k)
  };
  Kind kind;
  long a = 0, b = 0;  // leaf / scalar parameters
  ExprPtr left, right;
  VPolytope payload;  // Explicit only
};

ExprPtr expr_t(long m, long d);
ExprPtr expr_s(long m, long d);
ExprPtr expr_simplex(long d);
ExprPtr expr_unit_cube(long d);
ExprPtr expr_sym_cube(long d);
ExprPtr expr_cross(long d);
ExprPtr expr_cross_odd(long l, long d);
ExprPtr expr_box(long l, long d);
ExprPtr expr_explicit(VPolytope p);
ExprPtr expr_join(ExprPtr l, ExprPtr r);
ExprPtr expr_prism(ExprPtr e, long m);
ExprPtr expr_pyramid(ExprPtr e);
ExprPtr expr_dilate(ExprPtr e, long k);

int expr_dim(const ConstructionExpr& e);
VPolytope build(const ConstructionExpr& e);
VPolytope build(const ExprPtr& e);
std::string expr_to_string(const ConstructionExpr& e);

}  // namespace ehrhart
