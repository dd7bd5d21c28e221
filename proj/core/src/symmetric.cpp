#include "eqloc/symmetric.hpp"

#include "eqloc/error.hpp"

namespace eqloc {

Integer stirling_first_unsigned(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    if (n == 0) return Integer(1); // empty rising factorial = 1
    // c[j] tracks the coefficients of x(x+1)...(x+m-1), m = 1..n.
    std::vector<Integer> c(n + 1, Integer(0));
    c[1] = 1;
    for (unsigned long m = 1; m < n; ++m)
        for (unsigned long j = std::min(m + 1, n); j >= 1; --j)
            c[j] = c[j] * Integer(m) + c[j - 1];
    return c[k];
}

Integer elementary_symmetric(unsigned long j, const std::vector<Integer>& xs) {
    if (j > xs.size()) throw input_error("elementary symmetric index out of range");
    return elementary_symmetric_all(xs)[j];
}

std::vector<Integer> elementary_symmetric_all(const std::vector<Integer>& xs) {
    std::vector<Integer> e(xs.size() + 1, Integer(0));
    e[0] = 1;
    size_t used = 0;
    for (const auto& x : xs) {
        ++used;
        for (size_t j = used; j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}
} // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

} // namespace eqloc
