#pragma once

#include <string>
#include <vector>

#include "ehrhart/counting.hpp"
#include "ehrhart/polytope.hpp"

namespace ehrhart {

enum class Verdict { Holds, Equality, Violated, Probe };
std::string to_string(Verdict v);

struct BoundEntry {
  int index = 0;
  Rat bound;
  Rat actual;
  Rat slack;  // oriented so that negative means violated
  Verdict verdict = Verdict::Holds;
};

struct BoundReport {
  std::string bound_id;
  std::string polytope;
  int dim = 0;
  bool hypothesis_met = true;
  std::string note;
  std::vector<BoundEntry> entries;

  bool any_violation() const;
};

// Volume-based lower bound on g_i for d >= 3, 1 <= i <= d-1:
// (1/d!) * { (-1)^(d-i) stirl(d+1, i+1) + (d! vol - 1) M_{i,d} }.
Rat thm11_lower(int d, int i, const Rat& vol);

// Sharpened variant using the lattice point count G(P); undefined at
// (i,d) = (2,3) where the minimum coefficient vanishes.
Rat thm11_improved_lower(int d, int i, const Rat& vol, const Int& count1);

// The specialized closed forms at i = 1, 2 and d-2; each must equal
// thm11_lower with the corresponding closed-form minimum substituted.
struct Corollary12Bounds {
  Rat g1;
  Rat g2;
  Rat gd2;
};
Corollary12Bounds corollary12_bounds(int d, const Rat& vol);

// Volume-based upper bound on g_i for 1 <= i <= d-1:
// (-1)^(d-i) stirl(d,i) vol + (-1)^(d-i-1) stirl(d,i+1)/(d-1)!.
Rat bm_upper(int d, int i, const Rat& vol);

// Trivial lower bound on the lattice surface area g_{d-1}:
// every facet contributes at least 1/(d-1)!, and there are at least d+1.
Rat lattice_surface_lower(int d);

// a_i >= a_1 for 1 <= i <= deg-1; a theorem when the interior is nonempty
// (deg = d), and checkable-but-refutable otherwise. hypothesis_met records
// whether deg = d held.
BoundReport hibi_check(const HStar& h);

// Degree-2 coefficient inequalities: a_1 <= 7 when a_2 = 1, and
// a_1 <= 3 a_2 + 3 when a_2 >= 2.
bool treutlein_check(const Int& a1, const Int& a2);

// A lattice polytope whose h* vector is exactly (1, a1, a2, 0, ...);
// requires an admissible pair with a1, a2 >= 1.
VPolytope degree2_witness(long a1, long a2);

// g_{d-1}(P) >= 2^(d-1)/(d-1)! for centrally symmetric P.
BoundReport stanley_symmetric_check(const VPolytope& p);

// Report-only probe of the conjectured symmetric lower bound
// a_i + a_{d-i} >= binom(d,i) (a_d + 1); never a failure.
BoundReport conjecture_probe_bhw(const HStar& h);

// Report builders over a full Ehrhart polynomial (vol = leading coeff).
BoundReport thm11_report(const std::string& label, const EhrhartPoly& g);
BoundReport thm11_improved_report(const std::string& label,
                                  const EhrhartPoly& g, const Int& count1);
BoundReport corollary12_report(const std::string& label, const EhrhartPoly& g);
BoundReport bm_upper_report(const std::string& label, const EhrhartPoly& g);
BoundReport eq15_report(const std::string& label, int d, const Rat& gdm1);

}  // namespace ehrhart
