#pragma once

#include <vector>

#include "ehrhart/numeric.hpp"

namespace ehrhart {

// Dense polynomial with exact rational coefficients, index i = coefficient
// of z^i. Trailing zeros are trimmed; the zero polynomial has degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rat eval(const Rat& x) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  bool operator==(const RatPoly&) const = default;

 private:
  std::vector<Rat> coeffs_;
};

}  // namespace ehrhart
