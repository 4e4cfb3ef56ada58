#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ehrhart {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
// Floating point appears only in the surface module's final numeric
// comparisons (see sqrtsum.hpp).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// num/den in lowest terms, denominator > 0; den may be negative on input.
Rat make_rat(Int num, Int den);

Int factorial(unsigned n);
Int binom(unsigned n, unsigned k);
// Falling-factorial binomial: n*(n-1)*...*(n-k+1)/k!, exact for any integer n.
Int binom(const Int& n, unsigned k);
Rat harmonic(unsigned n);  // 1 + 1/2 + ... + 1/n; harmonic(0) = 0
Int pow_int(const Int& base, unsigned exp);

// Floor/ceil division for any signs, b != 0. cpp_int and int64 both
// truncate toward zero, which is the wrong rounding for range arithmetic.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
std::int64_t floor_div64(std::int64_t a, std::int64_t b);
std::int64_t ceil_div64(std::int64_t a, std::int64_t b);

// Rationals serialize as "p/q", or "p" when q == 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);
// Fixed-point decimal with `places` digits, rounding half away from zero.
std::string rat_to_decimal(const Rat& r, int places = 12);

}  // namespace ehrhart
