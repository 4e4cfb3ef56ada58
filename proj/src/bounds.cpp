#include "ehrhart/bounds.hpp"

#include <stdexcept>

#include "ehrhart/surface.hpp"
#include "ehrhart/tables.hpp"

namespace ehrhart {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Violated: return "violated";
    case Verdict::Probe: return "probe";
  }
  return "?";
}

bool BoundReport::any_violation() const {
  for (const BoundEntry& e : entries)
    if (e.verdict == Verdict::Violated) return true;
  return false;
}

namespace {

Int sign_pow(int e) { return e % 2 == 0 ? Int(1) : Int(-1); }

BoundEntry lower_entry(int index, Rat bound, Rat actual) {
  BoundEntry e;
  e.index = index;
  e.slack = actual - bound;
  e.bound = std::move(bound);
  e.actual = std::move(actual);
  e.verdict = e.slack == 0 ? Verdict::Equality
                           : (e.slack > 0 ? Verdict::Holds : Verdict::Violated);
  return e;
}

BoundEntry upper_entry(int index, Rat bound, Rat actual) {
  BoundEntry e;
  e.index = index;
  e.slack = bound - actual;
  e.bound = std::move(bound);
  e.actual = std::move(actual);
  e.verdict = e.slack == 0 ? Verdict::Equality
                           : (e.slack > 0 ? Verdict::Holds : Verdict::Violated);
  return e;
}

void check_thm11_range(int d, int i) {
  if (d < 3) throw std::invalid_argument("bound requires d >= 3");
  if (i < 1 || i > d - 1)
    throw std::invalid_argument("bound requires 1 <= i <= d-1");
}

}  // namespace

Rat thm11_lower(int d, int i, const Rat& vol) {
  check_thm11_range(d, i);
  const Int dfact = factorial(static_cast<unsigned>(d));
  Rat brace = Rat(sign_pow(d - i) * stirling1(d + 1, i + 1)) +
              (Rat(dfact) * vol - 1) * Rat(m_coeff(d, i));
  return brace / Rat(dfact);
}

Rat thm11_improved_lower(int d, int i, const Rat& vol, const Int& count1) {
  check_thm11_range(d, i);
  if (i == 2 && d == 3)
    throw std::invalid_argument("improved bound undefined at (i,d) = (2,3)");
  const Int dfact = factorial(static_cast<unsigned>(d));
  Rat brace = Rat(sign_pow(d - i) * stirling1(d + 1, i + 1)) -
              Rat(2 * (d + 1)) + Rat(2 * count1) +
              (Rat(dfact) * vol - 1) * Rat(m_coeff(d, i));
  return brace / Rat(dfact);
}

Corollary12Bounds corollary12_bounds(int d, const Rat& vol) {
  if (d < 3) throw std::invalid_argument("corollary12_bounds requires d >= 3");
  const Int dfact = factorial(static_cast<unsigned>(d));
  Corollary12Bounds b;

  b.g1 = harmonic(static_cast<unsigned>(d - 2)) + make_rat(2, d - 1) -
         Rat(factorial(static_cast<unsigned>(d - 2))) * vol;

  Rat inner = Rat(stirling1(d + 1, 3)) +
              Rat(sign_pow(d) * factorial(static_cast<unsigned>(d - 2)) +
                  stirling1(d - 1, 2)) *
                  (Rat(dfact) * vol - 1);
  b.g2 = Rat(sign_pow(d)) * inner / Rat(dfact);

  if (d % 2 == 1) {
    Rat pref = make_rat(Int(d - 1) * d * (d + 1), 24 * dfact);
    b.gd2 = pref * (Rat(3 * (d + 1)) - Rat(dfact) * vol);
  } else {
    Rat pref = make_rat(Int(d - 1) * d, 24 * dfact);
    b.gd2 = pref * (Rat(3 * d * (d + 2)) - Rat(d - 2) * Rat(dfact) * vol);
  }
  return b;
}

Rat bm_upper(int d, int i, const Rat& vol) {
  if (i < 1 || i > d - 1)
    throw std::invalid_argument("bm_upper requires 1 <= i <= d-1");
  return Rat(sign_pow(d - i) * stirling1(d, i)) * vol +
         make_rat(sign_pow(d - i - 1) * stirling1(d, i + 1),
                  factorial(static_cast<unsigned>(d - 1)));
}

Rat lattice_surface_lower(int d) {
  return make_rat(d + 1, 2 * factorial(static_cast<unsigned>(d - 1)));
}

BoundReport hibi_check(const HStar& h) {
  BoundReport r;
  r.bound_id = "hibi";
  r.dim = h.dim;
  const int deg = h.degree();
  r.hypothesis_met = deg == h.dim;  // interior point exists
  r.note = r.hypothesis_met ? "deg = d" : "deg < d: inequality not guaranteed";
  const Rat a1 = Rat(h.coeffs[1]);
  for (int i = 1; i <= deg - 1; ++i)
    r.entries.push_back(lower_entry(i, a1, Rat(h.coeffs[i])));
  return r;
}

bool treutlein_check(const Int& a1, const Int& a2) {
  if (a1 < 0 || a2 < 0)
    throw std::invalid_argument("treutlein_check: coefficients must be >= 0");
  if (a2 < 1) return false;  // not a degree-2 vector
  if (a2 == 1) return a1 <= 7;
  return a1 <= 3 * a2 + 3;
}

VPolytope degree2_witness(long a1, long a2) {
  if (a1 < 1 || a2 < 1)
    throw std::invalid_argument("degree2_witness: a1, a2 must be >= 1");
  if (!treutlein_check(Int(a1), Int(a2))) {
    std::string ineq = a2 == 1 ? "a_1 <= 7" : "a_1 <= 3 a_2 + 3";
    throw std::invalid_argument("degree2_witness: inadmissible pair, " + ineq +
                                " violated");
  }
  auto pt2 = [](long x, long y) { return IntVec{Int(x), Int(y)}; };
  if (a1 == 7 && a2 == 1)
    return VPolytope::make(2, {pt2(0, 0), pt2(3, 0), pt2(0, 3)});
  if (a2 < a1) {
    // pentagon with a_2 = m and a_1 = k + l + m + 1
    long m = a2;
    long s = a1 - a2 - 1;                  // k + l
    long l = std::min(s, m + 1);           // deterministic split: maximize l
    long k = s - l;
    return VPolytope::make(
        2, {pt2(0, 0), pt2(l, 0), pt2(m + 1, 1), pt2(0, 2), pt2(k, 2)});
  }
  // a1 <= a2: 3-dimensional construction with empty interior
  long l = a1, m = a2;
  auto pt3 = [](long x, long y, long z) {
    return IntVec{Int(x), Int(y), Int(z)};
  };
  return VPolytope::make(3, {pt3(0, 0, 0), pt3(1, 0, 0), pt3(0, 1, 0),
                             pt3(0, 0, -l), pt3(1, 1, m + 1)});
}

BoundReport stanley_symmetric_check(const VPolytope& p) {
  if (!is_centrally_symmetric(p))
    throw std::invalid_argument(
        "stanley_symmetric_check: polytope not centrally symmetric");
  BoundReport r;
  r.bound_id = "stanley-sym";
  r.polytope = polytope_to_string(p);
  r.dim = p.dim;
  Rat bound = make_rat(pow_int(2, static_cast<unsigned>(p.dim - 1)),
                       factorial(static_cast<unsigned>(p.dim - 1)));
  r.entries.push_back(lower_entry(p.dim - 1, bound, lattice_surface(p)));
  return r;
}

BoundReport conjecture_probe_bhw(const HStar& h) {
  BoundReport r;
  r.bound_id = "bhw-conjecture";
  r.dim = h.dim;
  r.note = "hypothesis: centrally symmetric input; report-only probe";
  const int d = h.dim;
  const Int ad1 = h.coeffs[d] + 1;
  for (int i = 0; i <= d / 2; ++i) {
    BoundEntry e;
    e.index = i;
    e.bound = Rat(binom(static_cast<unsigned>(d), static_cast<unsigned>(i)) * ad1);
    e.actual = Rat(h.coeffs[i] + h.coeffs[d - i]);
    e.slack = e.actual - e.bound;
    e.verdict = Verdict::Probe;
    r.entries.push_back(std::move(e));
  }
  return r;
}

BoundReport thm11_report(const std::string& label, const EhrhartPoly& g) {
  const int d = g.dim;
  BoundReport r;
  r.bound_id = "thm11";
  r.polytope = label;
  r.dim = d;
  const Rat& vol = g.coeffs[d];
  for (int i = 1; i <= d - 1; ++i)
    r.entries.push_back(lower_entry(i, thm11_lower(d, i, vol), g.coeffs[i]));
  return r;
}

BoundReport thm11_improved_report(const std::string& label,
                                  const EhrhartPoly& g, const Int& count1) {
  const int d = g.dim;
  BoundReport r;
  r.bound_id = "thm11-improved";
  r.polytope = label;
  r.dim = d;
  const Rat& vol = g.coeffs[d];
  for (int i = 1; i <= d - 1; ++i) {
    if (i == 2 && d == 3) continue;  // undefined case
    r.entries.push_back(
        lower_entry(i, thm11_improved_lower(d, i, vol, count1), g.coeffs[i]));
  }
  return r;
}

BoundReport corollary12_report(const std::string& label, const EhrhartPoly& g) {
  const int d = g.dim;
  BoundReport r;
  r.bound_id = "corollary12";
  r.polytope = label;
  r.dim = d;
  Corollary12Bounds b = corollary12_bounds(d, g.coeffs[d]);
  r.entries.push_back(lower_entry(1, b.g1, g.coeffs[1]));
  if (2 <= d - 1) r.entries.push_back(lower_entry(2, b.g2, g.coeffs[2]));
  if (d - 2 >= 1) r.entries.push_back(lower_entry(d - 2, b.gd2, g.coeffs[d - 2]));
  return r;
}

BoundReport bm_upper_report(const std::string& label, const EhrhartPoly& g) {
  const int d = g.dim;
  BoundReport r;
  r.bound_id = "bm-upper";
  r.polytope = label;
  r.dim = d;
  const Rat& vol = g.coeffs[d];
  for (int i = 1; i <= d - 1; ++i)
    r.entries.push_back(upper_entry(i, bm_upper(d, i, vol), g.coeffs[i]));
  return r;
}

BoundReport eq15_report(const std::string& label, int d, const Rat& gdm1) {
  BoundReport r;
  r.bound_id = "eq15";
  r.polytope = label;
  r.dim = d;
  r.entries.push_back(lower_entry(d - 1, lattice_surface_lower(d), gdm1));
  return r;
}

}  // namespace ehrhart
