#include "ehrhart/transforms.hpp"

#include <stdexcept>

#include "ehrhart/tables.hpp"

namespace ehrhart {

HStar join_hstar(const HStar& hp, const HStar& hq) {
  const int d = hp.dim + hq.dim + 1;
  std::vector<Int> c(d + 1, Int(0));
  for (std::size_t i = 0; i < hp.coeffs.size(); ++i)
    for (std::size_t j = 0; j < hq.coeffs.size(); ++j)
      c[i + j] += hp.coeffs[i] * hq.coeffs[j];
  return HStar{d, std::move(c)};
}

HStar dilate_hstar(const HStar& h, long k) {
  if (k < 1) throw std::invalid_argument("dilate_hstar: k must be >= 1");
  if (k == 1) return h;
  const int d = h.dim;
  std::vector<Int> counts(d + 1);
  for (int m = 0; m <= d; ++m) counts[m] = hstar_eval(h, Int(k) * m);
  return hstar_from_count_vector(counts);
}

HStar prism_hstar(const HStar& hq, long m) {
  if (m < 1) throw std::invalid_argument("prism_hstar: height must be >= 1");
  const int d = hq.dim + 1;
  auto aq = [&](int i) -> Int {
    return (i < 0 || i > hq.dim) ? Int(0) : hq.coeffs[i];
  };
  std::vector<Int> c(d + 1);
  for (int i = 0; i <= d; ++i)
    c[i] = (Int(m) * i + 1) * aq(i) + (Int(m) * (d - i + 1) - 1) * aq(i - 1);
  return HStar{d, std::move(c)};
}

HStar cube_hstar(int d) {
  if (d < 1) throw std::invalid_argument("cube_hstar: dimension must be >= 1");
  std::vector<Int> c(d + 1, Int(0));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d + 1; ++j)
      c[i] += binom(static_cast<unsigned>(d + 1), static_cast<unsigned>(j)) *
              eulerian(static_cast<unsigned>(d), 2L * i + 1 - j);
  return HStar{d, std::move(c)};
}

HStar box_hstar(long l, int d) {
  if (l < 1) throw std::invalid_argument("box_hstar: l must be >= 1");
  if (d < 2) throw std::invalid_argument("box_hstar: dimension must be >= 2");
  HStar base = cube_hstar(d - 1);
  auto ab = [&](int i) -> Int {
    return (i < 0 || i > base.dim) ? Int(0) : base.coeffs[i];
  };
  std::vector<Int> c(d + 1);
  for (int i = 0; i <= d; ++i)
    c[i] = (Int(2 * l) * i + 1) * ab(i) + (Int(2 * l) * (d - i + 1) - 1) * ab(i - 1);
  return HStar{d, std::move(c)};
}

SeriesTransformReport compare_with_oracle(std::string transform,
                                          const HStar& input,
                                          const HStar& output,
                                          const HStar& oracle) {
  SeriesTransformReport r;
  r.input = input;
  r.transform = std::move(transform);
  r.output = output;
  r.oracle = oracle;
  r.agree = output == oracle;
  return r;
}

}  // namespace ehrhart
