#include "ehrhart/tables.hpp"

#include <stdexcept>

namespace ehrhart {

namespace {

// coefficients of prod_{t=0}^{n-1} (z + a - t), lowest degree first
std::vector<Int> expand_shifted_factorial(unsigned n, const Int& a) {
  std::vector<Int> c{Int(1)};
  for (unsigned t = 0; t < n; ++t) {
    Int shift = a - t;
    std::vector<Int> next(c.size() + 1, Int(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] += c[j] * shift;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

const std::vector<Int>& CoeffTable::stirling_row(unsigned n) {
  auto it = stirling_rows_.find(n);
  if (it == stirling_rows_.end())
    it = stirling_rows_.emplace(n, expand_shifted_factorial(n, Int(0))).first;
  return it->second;
}

Int CoeffTable::stirling1(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("stirling1: index out of range");
  std::lock_guard<std::mutex> lock(mu_);
  return stirling_row(n)[k];
}

Int CoeffTable::eulerian(unsigned n, long j) {
  if (j < 0 || j > static_cast<long>(n)) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(n, j);
  auto it = euler_.find(key);
  if (it != euler_.end()) return it->second;
  Int a = 0;
  for (long k = 0; k <= j; ++k) {
    Int term = binom(n + 1, static_cast<unsigned>(k)) *
               pow_int(Int(j - k), n);  // 0^0 = 1 covers n = 0
    a += (k % 2 == 0) ? term : -term;
  }
  euler_.emplace(key, a);
  return a;
}

const std::vector<Int>& CoeffTable::c_row(unsigned d, long i) {
  auto key = std::make_pair(d, i);
  auto it = c_rows_.find(key);
  if (it == c_rows_.end())
    it = c_rows_.emplace(key, expand_shifted_factorial(d, Int(i))).first;
  return it->second;
}

Int CoeffTable::c_coeff(unsigned d, unsigned r, long i) {
  if (r > d) throw std::invalid_argument("c_coeff: r out of range");
  std::lock_guard<std::mutex> lock(mu_);
  return c_row(d, i)[r];
}

Int CoeffTable::m_coeff(unsigned d, unsigned r) {
  if (d < 3) throw std::invalid_argument("m_coeff: requires d >= 3");
  if (r > d) throw std::invalid_argument("m_coeff: r out of range");
  std::lock_guard<std::mutex> lock(mu_);
  Int m;
  bool first = true;
  for (long i = 1; i + 2 <= static_cast<long>(d); ++i) {
    const Int& c = c_row(d, i)[r];
    if (first || c < m) {
      m = c;
      first = false;
    }
  }
  return m;
}

CoeffTable& CoeffTable::global() {
  static CoeffTable table;
  return table;
}

Int stirling1(unsigned n, unsigned k) {
  return CoeffTable::global().stirling1(n, k);
}
Int eulerian(unsigned n, long j) { return CoeffTable::global().eulerian(n, j); }
Int c_coeff(unsigned d, unsigned r, long i) {
  return CoeffTable::global().c_coeff(d, r, i);
}
Int m_coeff(unsigned d, unsigned r) {
  return CoeffTable::global().m_coeff(d, r);
}

}  // namespace ehrhart
