#include "ehrhart/numeric.hpp"

#include <stdexcept>

namespace ehrhart {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return r;
}

Int binom(const Int& n, unsigned k) {
  Int num = 1;
  for (unsigned j = 0; j < k; ++j) num *= n - j;
  return num / factorial(k);
}

Rat harmonic(unsigned n) {
  Rat h = 0;
  for (unsigned i = 1; i <= n; ++i) h += make_rat(1, i);
  return h;
}

Int pow_int(const Int& base, unsigned exp) {
  Int r = 1;
  Int b = base;
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  }
}

std::string rat_to_decimal(const Rat& r, int places) {
  Int num = numerator(r);
  Int den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Int scaled = num * pow_int(10, static_cast<unsigned>(places));
  Int q = scaled / den;
  if (2 * (scaled % den) >= den) ++q;  // round half away from zero
  std::string digits = q.str();
  std::string pad(places + 1 > static_cast<int>(digits.size())
                      ? places + 1 - digits.size()
                      : 0,
                  '0');
  digits = pad + digits;
  std::string out = digits.substr(0, digits.size() - places) + "." +
                    digits.substr(digits.size() - places);
  return neg && q != 0 ? "-" + out : out;
}

}  // namespace ehrhart
