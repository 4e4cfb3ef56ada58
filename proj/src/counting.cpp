#include "ehrhart/counting.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace ehrhart {

namespace {

std::int64_t floordiv(std::int64_t a, std::int64_t b) { return floor_div64(a, b); }
Int floordiv(const Int& a, const Int& b) { return floor_div(a, b); }

// One inequality row: coeff . x <= rhs (or < rhs when strict).
template <typename I>
struct Row {
  std::vector<I> coeff;
  I rhs;
};

template <typename I>
Int count_box(const std::vector<Row<I>>& rows, const std::vector<I>& lo,
              const std::vector<I>& hi, bool strict) {
  const std::size_t d = lo.size();
  const std::size_t nf = rows.size();
  std::size_t axis = 0;
  for (std::size_t j = 1; j < d; ++j)
    if (hi[j] - lo[j] >= hi[axis] - lo[axis]) axis = j;

  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < d; ++j)
    if (j != axis) order.push_back(j);

  // smallest possible contribution of the still-unassigned axes per facet
  // and level; lets whole subtrees be skipped when already infeasible
  std::vector<std::vector<I>> minrem(nf, std::vector<I>(order.size() + 1));
  for (std::size_t f = 0; f < nf; ++f) {
    const I& ca = rows[f].coeff[axis];
    minrem[f][order.size()] = ca >= 0 ? ca * lo[axis] : ca * hi[axis];
    for (std::size_t level = order.size(); level-- > 0;) {
      const std::size_t j = order[level];
      const I& c = rows[f].coeff[j];
      minrem[f][level] =
          minrem[f][level + 1] + (c >= 0 ? c * lo[j] : c * hi[j]);
    }
  }
  const I slack_off = strict ? I(1) : I(0);

  std::vector<I> partial(nf, I(0));
  Int total = 0;

  auto feasible = [&](std::size_t level) {
    for (std::size_t f = 0; f < nf; ++f)
      if (partial[f] + minrem[f][level] > rows[f].rhs - slack_off) return false;
    return true;
  };

  auto leaf = [&]() {
    I left = lo[axis], right = hi[axis];
    for (std::size_t f = 0; f < nf; ++f) {
      const I& c = rows[f].coeff[axis];
      I rem = rows[f].rhs - partial[f];
      if (strict) rem -= 1;  // integer points: c*x < r  <=>  c*x <= r-1
      if (c == 0) {
        if (rem < 0) return;
      } else if (c > 0) {
        I bound = floordiv(rem, c);
        if (bound < right) right = bound;
      } else {
        I bound = -floordiv(rem, I(-c));
        if (bound > left) left = bound;
      }
      if (left > right) return;
    }
    total += Int(right - left) + 1;
  };

  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (!feasible(level)) return;
    if (level == order.size()) {
      leaf();
      return;
    }
    const std::size_t j = order[level];
    for (std::size_t f = 0; f < nf; ++f)
      partial[f] += rows[f].coeff[j] * lo[j];
    for (I v = lo[j];; ++v) {
      self(self, level + 1);
      if (v == hi[j]) break;
      for (std::size_t f = 0; f < nf; ++f) partial[f] += rows[f].coeff[j];
    }
    for (std::size_t f = 0; f < nf; ++f)
      partial[f] -= rows[f].coeff[j] * hi[j];
  };
  rec(rec, 0);
  return total;
}

constexpr std::int64_t kInt64Cap = std::int64_t(1) << 62;

bool fits64(const Int& v) {
  return v >= std::numeric_limits<std::int64_t>::min() / 4 &&
         v <= std::numeric_limits<std::int64_t>::max() / 4;
}

}  // namespace

Int count(const VPolytope& p, const HRep& h, long k, bool strict) {
  if (k < 0) throw std::invalid_argument("count: k must be >= 0");
  if (p.dim != h.dim) throw std::invalid_argument("count: dimension mismatch");
  if (k == 0) return strict ? 0 : 1;

  const int d = p.dim;
  std::vector<Int> lo(d), hi(d);
  for (int j = 0; j < d; ++j) lo[j] = hi[j] = p.generators[0][j];
  for (const IntVec& g : p.generators)
    for (int j = 0; j < d; ++j) {
      if (g[j] < lo[j]) lo[j] = g[j];
      if (g[j] > hi[j]) hi[j] = g[j];
    }
  for (int j = 0; j < d; ++j) {
    lo[j] *= k;
    hi[j] *= k;
  }

  // int64 fast path when every partial sum provably fits
  bool small = true;
  for (int j = 0; j < d && small; ++j)
    small = fits64(lo[j]) && fits64(hi[j]);
  if (small) {
    for (const HFacet& f : h.facets) {
      Int reach = abs(Int(f.offset * k));
      for (int j = 0; j < d; ++j) {
        Int alo = abs(lo[j]), ahi = abs(hi[j]);
        reach += abs(f.normal[j]) * (alo > ahi ? alo : ahi);
      }
      if (reach >= kInt64Cap) {
        small = false;
        break;
      }
    }
  }

  if (small) {
    std::vector<Row<std::int64_t>> rows(h.facets.size());
    for (std::size_t f = 0; f < h.facets.size(); ++f) {
      Int rhs = h.facets[f].offset * k;
      rows[f].rhs = rhs.convert_to<std::int64_t>();
      rows[f].coeff.resize(d);
      for (int j = 0; j < d; ++j)
        rows[f].coeff[j] = h.facets[f].normal[j].convert_to<std::int64_t>();
    }
    std::vector<std::int64_t> lo64(d), hi64(d);
    for (int j = 0; j < d; ++j) {
      lo64[j] = lo[j].convert_to<std::int64_t>();
      hi64[j] = hi[j].convert_to<std::int64_t>();
    }
    return count_box(rows, lo64, hi64, strict);
  }

  std::vector<Row<Int>> rows(h.facets.size());
  for (std::size_t f = 0; f < h.facets.size(); ++f) {
    rows[f].rhs = h.facets[f].offset * k;
    rows[f].coeff = h.facets[f].normal;
  }
  return count_box(rows, lo, hi, strict);
}

Int count(const VPolytope& p, long k, bool strict) {
  if (k == 0) return strict ? 0 : 1;
  return count(p, facets(p), k, strict);
}

std::vector<Int> dilate_counts(const VPolytope& p, const HRep& h, long kmax,
                               bool strict) {
  std::vector<Int> c;
  c.reserve(kmax + 1);
  for (long k = 0; k <= kmax; ++k) c.push_back(count(p, h, k, strict));
  return c;
}

Rat EhrhartPoly::eval(const Rat& k) const {
  Rat v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * k + coeffs[i];
  return v;
}

int HStar::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) return static_cast<int>(i);
  return 0;
}

EhrhartPoly ehrhart_poly_from_counts(const std::vector<Int>& counts) {
  if (counts.empty()) throw std::invalid_argument("ehrhart: empty counts");
  const int d = static_cast<int>(counts.size()) - 1;
  RatMat v(d + 1, d + 1);
  RatVec rhs(d + 1);
  for (int k = 0; k <= d; ++k) {
    Rat pw = 1;
    for (int i = 0; i <= d; ++i) {
      v(k, i) = pw;
      pw *= k;
    }
    rhs[k] = Rat(counts[k]);
  }
  auto g = solve_exact(v, rhs);
  if (!g) throw std::logic_error("ehrhart: Vandermonde system singular");
  if ((*g)[0] != 1)
    throw std::logic_error("ehrhart: constant coefficient is not 1");
  if (d >= 1 && (*g)[d] <= 0)
    throw std::logic_error("ehrhart: leading coefficient not positive");
  EhrhartPoly e;
  e.dim = d;
  e.coeffs = std::move(*g);
  return e;
}

EhrhartPoly ehrhart_poly(const VPolytope& p, const HRep& h) {
  return ehrhart_poly_from_counts(dilate_counts(p, h, p.dim));
}

EhrhartPoly ehrhart_poly(const VPolytope& p) { return ehrhart_poly(p, facets(p)); }

HStar hstar_from_count_vector(const std::vector<Int>& counts) {
  if (counts.empty()) throw std::invalid_argument("hstar: empty counts");
  const int d = static_cast<int>(counts.size()) - 1;

  // Alternating-sum basis change.
  std::vector<Int> a(d + 1);
  for (int j = 0; j <= d; ++j) {
    Int s = 0;
    for (int i = 0; i <= j; ++i) {
      Int term = binom(static_cast<unsigned>(d + 1), static_cast<unsigned>(i)) *
                 counts[j - i];
      s += (i % 2 == 0) ? term : -term;
    }
    a[j] = s;
  }

  // Independent route: triangular solve against the binomial basis,
  // counts[k] = sum_i b[i] * binom(k + d - i, d).
  std::vector<Int> b(d + 1);
  for (int k = 0; k <= d; ++k) {
    Int s = counts[k];
    for (int i = 0; i < k; ++i)
      s -= b[i] * binom(static_cast<unsigned>(k + d - i), static_cast<unsigned>(d));
    b[k] = s;  // diagonal entry binom(d, d) = 1
  }
  if (a != b) throw std::logic_error("hstar: basis-change routes disagree");

  if (a[0] != 1) throw std::logic_error("hstar: a_0 is not 1");
  for (const Int& ai : a)
    if (ai < 0) throw std::logic_error("hstar: negative coefficient");
  HStar h;
  h.dim = d;
  h.coeffs = std::move(a);
  return h;
}

HStar hstar_from_counts(const VPolytope& p, const HRep& h) {
  return hstar_from_count_vector(dilate_counts(p, h, p.dim));
}

HStar hstar_from_counts(const VPolytope& p) {
  return hstar_from_counts(p, facets(p));
}

Int hstar_eval(const HStar& h, const Int& t) {
  Int s = 0;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    s += h.coeffs[i] * binom(Int(t + h.dim - static_cast<long>(i)),
                             static_cast<unsigned>(h.dim));
  return s;
}

Rat volume(const HStar& h) {
  Int s = 0;
  for (const Int& a : h.coeffs) s += a;
  return make_rat(s, factorial(static_cast<unsigned>(h.dim)));
}

}  // namespace ehrhart
