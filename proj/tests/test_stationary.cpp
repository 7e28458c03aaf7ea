#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "bml/matrix.hpp"
#include "bml/stationary.hpp"

using bml::solve_stationary;
using bml::SquareMatrix;
using bml::StochasticMatrix;

namespace {

StochasticMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    return StochasticMatrix(m);
}

double residual(const StochasticMatrix& A, const std::vector<double>& pi) {
    double r = 0.0;
    for (std::size_t j = 0; j < A.size(); ++j) {
        double v = 0.0;
        for (std::size_t i = 0; i < A.size(); ++i) v += pi[i] * A(i, j);
        r = std::max(r, std::fabs(v - pi[j]));
    }
    return r;
}

// Long power iteration, the independent route to the same fixed point.
std::vector<double> power_iteration(const StochasticMatrix& A, int iters) {
    std::vector<double> v(A.size(), 1.0 / A.size());
    std::vector<double> next(A.size(), 0.0);
    for (int it = 0; it < iters; ++it) {
        for (std::size_t j = 0; j < A.size(); ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < A.size(); ++i) s += v[i] * A(i, j);
            next[j] = s;
        }
        v.swap(next);
    }
    return v;
}

}  // namespace

TEST_CASE("symmetric two-state chains sit at one half") {
    const auto pi = solve_stationary(from_rows({{0.5, 0.5}, {0.5, 0.5}}));
    CHECK(pi[0] == Catch::Approx(0.5).margin(1e-15));
    CHECK(pi[1] == Catch::Approx(0.5).margin(1e-15));

    const auto pi2 = solve_stationary(from_rows({{0.9, 0.1}, {0.1, 0.9}}));
    CHECK(pi2[0] == Catch::Approx(0.5).margin(1e-14));
}

TEST_CASE("matches a long power iteration on a three-state chain") {
    const auto A = from_rows(
        {{0.6, 0.3, 0.1}, {0.0, 0.7, 0.3}, {0.2, 0.0, 0.8}});
    const auto direct = solve_stationary(A);
    const auto powered = power_iteration(A, 2000);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(direct[i] == Catch::Approx(powered[i]).margin(1e-10));
}

TEST_CASE("reducible chains are rejected") {
    // Two absorbing blocks: no unique stationary distribution.
    CHECK_THROWS_AS(solve_stationary(from_rows({{1.0, 0.0}, {0.0, 1.0}})),
                    bml::SingularChainError);
}

TEST_CASE("1000 random chains: nonnegative, normalized, residual under 1e-12") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> size_dist(2, 10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = static_cast<std::size_t>(size_dist(rng));
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = u(rng) + 1e-3;  // bounded away from zero: irreducible
                sum += m(i, j);
            }
            for (std::size_t j = 0; j < n; ++j) m(i, j) /= sum;
        }
        const StochasticMatrix A(m);
        const auto pi = solve_stationary(A);
        double total = 0.0;
        for (double p : pi) {
            REQUIRE(p >= 0.0);
            total += p;
        }
        REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(residual(A, pi) < 1e-12);
    }
}

TEST_CASE("stochastic matrix validation") {
    SquareMatrix bad(2);
    bad(0, 0) = 0.5;
    bad(0, 1) = 0.4;  // row sums to 0.9
    bad(1, 0) = 0.5;
    bad(1, 1) = 0.5;
    CHECK_THROWS_AS(StochasticMatrix(bad), bml::NumericError);
}
