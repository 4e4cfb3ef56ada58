#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ehrhart/numeric.hpp"

namespace ehrhart {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, T init = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
  }
  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

IntMat mat_from_rows(const std::vector<IntVec>& rows);
IntMat mat_mul(const IntMat& a, const IntMat& b);

Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& v);
IntVec vec_scale(const IntVec& v, const Int& c);

// gcd of the entries; 0 for the zero vector
Int content(const IntVec& v);
// v / content(v), keeping the original orientation
IntVec divide_by_content(const IntVec& v);
// v / content(v) with the first nonzero entry made positive; v must be nonzero
IntVec primitive(const IntVec& v);

// Exact determinant via Bareiss fraction-free elimination.
Int det_exact(const IntMat& a);
// Exact rank over the rationals.
std::size_t rank_exact(const IntMat& a);
// Exact solve of a square system; nullopt when singular.
std::optional<RatVec> solve_exact(const RatMat& a, const RatVec& b);
std::optional<RatVec> solve_exact(const IntMat& a, const RatVec& b);

// Affine rank of a point set (rank of differences from the first point).
std::size_t affine_rank(const std::vector<IntVec>& points);

}  // namespace ehrhart
