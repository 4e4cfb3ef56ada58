#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "ehrhart/numeric.hpp"

namespace ehrhart {

// Memoized exact combinatorial tables. Internally synchronized: safe to
// share one instance across threads (lookups take a lock; tables are tiny).
class CoeffTable {
 public:
  // Signed Stirling numbers of the first kind: coefficient of z^k in
  // z*(z-1)*...*(z-(n-1)). Requires 0 <= k <= n.
  Int stirling1(unsigned n, unsigned k);

  // Eulerian numbers A(n,j); 0 for j outside {0,...,n}.
  Int eulerian(unsigned n, long j);

  // Coefficient of z^r in (z+i)*(z+i-1)*...*(z+i-(d-1)). Requires 0 <= r <= d.
  Int c_coeff(unsigned d, unsigned r, long i);

  // min{ c_coeff(d,r,i) : 1 <= i <= d-2 }. Requires d >= 3 and 0 <= r <= d.
  Int m_coeff(unsigned d, unsigned r);

  static CoeffTable& global();

 private:
  const std::vector<Int>& stirling_row(unsigned n);
  const std::vector<Int>& c_row(unsigned d, long i);

  std::mutex mu_;
  std::map<unsigned, std::vector<Int>> stirling_rows_;
  std::map<std::pair<unsigned, long>, std::vector<Int>> c_rows_;
  std::map<std::pair<unsigned, long>, Int> euler_;
};

Int stirling1(unsigned n, unsigned k);
Int eulerian(unsigned n, long j);
Int c_coeff(unsigned d, unsigned r, long i);
Int m_coeff(unsigned d, unsigned r);

}  // namespace ehrhart
