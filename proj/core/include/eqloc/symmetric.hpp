#pragma once

#include <vector>

#include "eqloc/rational.hpp"

namespace eqloc {

// Unsigned Stirling number of the first kind: coefficient of x^k in the
// rising factorial x(x+1)...(x+n-1).  Zero for k > n or (k == 0, n > 0).
Integer stirling_first_unsigned(unsigned long n, unsigned long k);

// j-th elementary symmetric polynomial of xs.
Integer elementary_symmetric(unsigned long j, const std::vector<Integer>& xs);

// All of sigma_0..sigma_{|xs|} in one pass.
std::vector<Integer> elementary_symmetric_all(const std::vector<Integer>& xs);

// Decreasing partitions of n (used to enumerate Chern numbers).
std::vector<std::vector<int>> partitions_of(int n);

} // namespace eqloc
