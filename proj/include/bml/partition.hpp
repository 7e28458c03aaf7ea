#ifndef BML_PARTITION_HPP
#define BML_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "bml/errors.hpp"

namespace bml {

// Number of integer partitions of n, by the Euler pentagonal-number
// recurrence in exact integer arithmetic. Supported for n <= 200
// (P(200) ~ 4e12, comfortably inside 64 bits).
inline std::int64_t partition_count(int n) {
    if (n < 0 || n > 200)
        throw RangeError("partition_count supports 0 <= n <= 200");
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

}  // namespace bml

#endif  // BML_PARTITION_HPP
