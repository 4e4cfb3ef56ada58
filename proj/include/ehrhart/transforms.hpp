#pragma once

#include <string>

#include "ehrhart/counting.hpp"

namespace ehrhart {

// h* of the join of two polytopes: the series numerators multiply, and the
// ambient dimension becomes dim(P) + dim(Q) + 1.
HStar join_hstar(const HStar& hp, const HStar& hq);

// h* of kP. Extracting every k-th coefficient of the Ehrhart series is the
// same as averaging the series over the k-th roots of unity; over the
// binomial basis that multisection reduces to evaluating G_P at multiples
// of k, so no complex arithmetic is needed.
HStar dilate_hstar(const HStar& h, long k);

// h* of the prism of height m over Q:
// a_i(P) = (m*i + 1) a_i(Q) + (m*(d-i+1) - 1) a_{i-1}(Q), d = dim(Q) + 1.
HStar prism_hstar(const HStar& hq, long m);

// h* of [-1,1]^d via the Eulerian-number closed form.
HStar cube_hstar(int d);

// h* of [-l,l] x [-1,1]^(d-1):
// a_i = (2l*i + 1) a_i(C_{d-1}) + (2l*(d-i+1) - 1) a_{i-1}(C_{d-1}).
HStar box_hstar(long l, int d);

struct SeriesTransformReport {
  HStar input;
  std::string transform;
  HStar output;
  HStar oracle;
  bool agree = false;
};

SeriesTransformReport compare_with_oracle(std::string transform,
                                          const HStar& input,
                                          const HStar& output,
                                          const HStar& oracle);

}  // namespace ehrhart
