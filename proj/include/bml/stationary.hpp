#ifndef BML_STATIONARY_HPP
#define BML_STATIONARY_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "bml/errors.hpp"
#include "bml/matrix.hpp"

namespace bml {

// Entries of a solved stationary vector below this level are
// indistinguishable from elimination round-off (the solve carries
// absolute error ~1e-16); integrands must treat them as exact zeros or
// the noise masquerades as structure.
inline constexpr double kStationaryNoiseFloor = 1e-14;

// Log of a stationary entry for use inside integrands, with the noise
// floor applied.
inline double log_stationary_entry(double pi_l) {
    return pi_l > kStationaryNoiseFloor ? std::log(pi_l)
                                        : -std::numeric_limits<double>::infinity();
}

// Stationary distribution pi with pi A = pi, sum(pi) = 1, by direct
// linear solve: one balance equation is replaced by the normalization
// constraint, then partial-pivot elimination. Exact to machine
// precision for the chain sizes a BMS produces.
inline std::vector<double> solve_stationary(const StochasticMatrix& A) {
    const std::size_t n = A.size();
    if (n == 0) throw DomainError("empty matrix");

    // M = A^T - I with the last row overwritten by ones. Eliminated in
    // extended precision: integrands downstream need small stationary
    // entries (1e-6 and below) to several correct digits, which a plain
    // double elimination cannot give them.
    std::vector<std::vector<long double>> M(n, std::vector<long double>(n + 1, 0.0L));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            M[i][j] = static_cast<long double>(A(j, i)) - (i == j ? 1.0L : 0.0L);
        M[i][n] = 0.0L;
    }
    for (std::size_t j = 0; j < n; ++j) M[n - 1][j] = 1.0L;
    M[n - 1][n] = 1.0L;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(static_cast<double>(M[r][col])) >
                std::fabs(static_cast<double>(M[piv][col])))
                piv = r;
        if (std::fabs(static_cast<double>(M[piv][col])) < 1e-13)
            throw SingularChainError("chain has no unique stationary distribution");
        std::swap(M[piv], M[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const long double f = M[r][col] / M[col][col];
            if (f == 0.0L) continue;
            for (std::size_t c = col; c <= n; ++c) M[r][c] -= f * M[col][c];
        }
    }
    std::vector<long double> pi_ext(n, 0.0L);
    for (std::size_t i = n; i-- > 0;) {
        long double s = M[i][n];
        for (std::size_t j = i + 1; j < n; ++j) s -= M[i][j] * pi_ext[j];
        pi_ext[i] = s / M[i][i];
    }
    std::vector<double> pi(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) pi[i] = static_cast<double>(pi_ext[i]);

    // Residual check against the defining property.
    double resid = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i) v += pi[i] * A(i, j);
        resid = std::max(resid, std::fabs(v - pi[j]));
    }
    if (resid > 1e-12)
        throw SingularChainError("stationary solve residual exceeds 1e-12");

    for (double& p : pi) {
        if (p < -1e-12) throw SingularChainError("stationary distribution has a negative entry");
        if (p < 0.0) p = 0.0;
    }
    return pi;
}

}  // namespace bml

#endif  // BML_STATIONARY_HPP
