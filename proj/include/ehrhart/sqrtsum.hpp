#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <utility>
#include <vector>

#include "ehrhart/numeric.hpp"

namespace ehrhart {

// High-precision float for the surface module's numeric comparisons:
// 50 decimal digits, comfortably more than 50 bits beyond double.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigFloat to_big_float(const Rat& r);

// Exact sum q_1*sqrt(N_1) + ... + q_t*sqrt(N_t) with rational q_i and
// positive integer N_i. Canonical form: radicands square-free, distinct,
// ascending, coefficients nonzero (square factors are pulled into the
// coefficients, so equal values have equal term lists). Purely rational
// values live on the radicand N = 1. Numeric evaluation goes through
// BigFloat, far beyond double precision.
class SqrtSum {
 public:
  SqrtSum() = default;  // zero

  // q * sqrt(n); n >= 1
  static SqrtSum term(const Rat& q, const Int& n);
  static SqrtSum rational(const Rat& q) { return term(q, 1); }

  SqrtSum& operator+=(const SqrtSum& other);
  friend SqrtSum operator+(SqrtSum a, const SqrtSum& b) { return a += b; }
  SqrtSum scaled(const Rat& f) const;

  const std::vector<std::pair<Rat, Int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const SqrtSum&) const = default;

  BigFloat value() const;
  double value_double() const { return value().convert_to<double>(); }

 private:
  std::vector<std::pair<Rat, Int>> terms_;  // (coefficient, radicand)
};

// (square-free part, extracted square root): n = part * root^2.
std::pair<Int, Int> square_free_part(const Int& n);

}  // namespace ehrhart
