#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "bml/derivative.hpp"

using bml::log_derivative;

TEST_CASE("power laws have constant elasticity") {
    for (double k : {0.0, 1.0, 3.0}) {
        const double d =
            log_derivative([k](double x) { return std::pow(x, k) * 2.5; }, 0.7);
        CHECK(d == Catch::Approx(k).margin(1e-10));
    }
}

TEST_CASE("constants have elasticity zero") {
    CHECK(log_derivative([](double) { return 4.2; }, 1.3) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("exponential elasticity equals the point itself") {
    // d ln e^x / d ln x = x
    const double d = log_derivative([](double x) { return std::exp(x); }, 0.5);
    CHECK(d == Catch::Approx(0.5).margin(1e-8));
}

TEST_CASE("halving the step shrinks the error about fourfold") {
    auto f = [](double x) { return std::exp(std::sin(x)); };
    // d ln f / d ln x = x cos(x)
    const double x0 = 0.8;
    const double exact = x0 * std::cos(x0);
    const double e1 = std::fabs(log_derivative(f, x0, 2e-3) - exact);
    const double e2 = std::fabs(log_derivative(f, x0, 1e-3) - exact);
    const double ratio = e1 / e2;
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(log_derivative([](double x) { return x; }, -1.0), bml::DomainError);
    CHECK_THROWS_AS(log_derivative([](double x) { return x - 10.0; }, 1.0),
                    bml::DomainError);
}
