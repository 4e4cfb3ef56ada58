#include "ehrhart/linalg.hpp"

#include <stdexcept>

namespace ehrhart {

IntMat mat_from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMat();
  IntMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("mat_from_rows: ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_neg(const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

IntVec vec_scale(const IntVec& v, const Int& c) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g < 0 ? Int(-g) : g;
}

IntVec divide_by_content(const IntVec& v) {
  Int g = content(v);
  if (g == 0 || g == 1) return v;
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec primitive(const IntVec& v) {
  if (is_zero(v)) throw std::invalid_argument("primitive: zero vector");
  IntVec r = divide_by_content(v);
  for (const Int& x : r) {
    if (x == 0) continue;
    if (x < 0) r = vec_neg(r);
    break;
  }
  return r;
}

Int det_exact(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det_exact: non-square");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

std::size_t rank_exact(const IntMat& a) {
  IntMat m = a;
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) m.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / prev;
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

std::optional<RatVec> solve_exact(const RatMat& a, const RatVec& b) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("solve_exact: non-square");
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_exact: rhs length mismatch");
  std::size_t n = a.rows();
  RatMat m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) m.swap_rows(k, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) / m(k, k);
      for (std::size_t j = k; j <= n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  RatVec x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat s = m(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) s -= m(ii, j) * x[j];
    x[ii] = s / m(ii, ii);
  }
  return x;
}

std::optional<RatVec> solve_exact(const IntMat& a, const RatVec& b) {
  RatMat m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
  return solve_exact(m, b);
}

std::size_t affine_rank(const std::vector<IntVec>& points) {
  if (points.size() <= 1) return 0;
  std::vector<IntVec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(vec_sub(points[i], points[0]));
  return rank_exact(mat_from_rows(diffs));
}

}  // namespace ehrhart
