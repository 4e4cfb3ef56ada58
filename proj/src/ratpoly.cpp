#include "ehrhart/ratpoly.hpp"

namespace ehrhart {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
  return v;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(c));
}

}  // namespace ehrhart
