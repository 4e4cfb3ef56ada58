#include "ehrhart/sqrtsum.hpp"

#include <algorithm>
#include <stdexcept>

namespace ehrhart {

BigFloat to_big_float(const Rat& r) {
  return BigFloat(numerator(r)) / BigFloat(denominator(r));
}

std::pair<Int, Int> square_free_part(const Int& n) {
  if (n < 1) throw std::invalid_argument("square_free_part: n must be >= 1");
  Int part = n;
  Int root = 1;
  for (Int f = 2; f * f <= part; ++f) {
    Int sq = f * f;
    while (part % sq == 0) {
      part /= sq;
      root *= f;
    }
  }
  return {part, root};
}

SqrtSum SqrtSum::term(const Rat& q, const Int& n) {
  SqrtSum s;
  if (q == 0) return s;
  auto [part, root] = square_free_part(n);
  s.terms_.emplace_back(q * Rat(root), part);
  return s;
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& other) {
  for (const auto& [q, n] : other.terms_) {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), n,
        [](const std::pair<Rat, Int>& t, const Int& key) { return t.second < key; });
    if (it != terms_.end() && it->second == n) {
      it->first += q;
      if (it->first == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {q, n});
    }
  }
  return *this;
}

SqrtSum SqrtSum::scaled(const Rat& f) const {
  SqrtSum s;
  if (f == 0) return s;
  s.terms_ = terms_;
  for (auto& t : s.terms_) t.first *= f;
  return s;
}

BigFloat SqrtSum::value() const {
  BigFloat v = 0;
  for (const auto& [q, n] : terms_) v += to_big_float(q) * sqrt(BigFloat(n));
  return v;
}

}  // namespace ehrhart
