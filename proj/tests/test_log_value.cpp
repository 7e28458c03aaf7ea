#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "bml/log_value.hpp"

using bml::LogValue;

TEST_CASE("log value round-trips ordinary numbers") {
    CHECK(LogValue::from_value(3.5).to_double() == Catch::Approx(3.5));
    CHECK(LogValue::from_value(-2.25).to_double() == Catch::Approx(-2.25));
    CHECK(LogValue::from_value(0.0).is_zero());
    CHECK(LogValue::zero().to_double() == 0.0);
}

TEST_CASE("log value survives magnitudes doubles cannot hold") {
    const LogValue tiny = LogValue::from_log(-2000.0);
    const LogValue ratio = tiny / LogValue::from_log(-2000.5);
    CHECK(ratio.to_double() == Catch::Approx(std::exp(0.5)).epsilon(1e-12));

    const LogValue sum = tiny + tiny;
    CHECK(sum.log_magnitude() == Catch::Approx(-2000.0 + std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("signed addition and cancellation") {
    const LogValue a = LogValue::from_value(5.0);
    const LogValue b = LogValue::from_value(-3.0);
    CHECK((a + b).to_double() == Catch::Approx(2.0).epsilon(1e-14));
    CHECK((b + a).to_double() == Catch::Approx(2.0).epsilon(1e-14));
    CHECK((a - a).is_zero());
    CHECK((a * b).to_double() == Catch::Approx(-15.0).epsilon(1e-14));
    CHECK((-a).to_double() == Catch::Approx(-5.0).epsilon(1e-14));
}

TEST_CASE("sign zero iff log magnitude -inf") {
    CHECK(LogValue::zero().sign() == 0);
    CHECK(std::isinf(LogValue::zero().log_magnitude()));
    CHECK(LogValue::from_log(-std::numeric_limits<double>::infinity()).is_zero());
}

TEST_CASE("random product-sum identities against plain doubles") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 500; ++i) {
        const double x = u(rng), y = u(rng);
        const LogValue lx = LogValue::from_value(x), ly = LogValue::from_value(y);
        CHECK((lx + ly).to_double() == Catch::Approx(x + y).margin(1e-12));
        CHECK((lx * ly).to_double() == Catch::Approx(x * y).margin(1e-12));
        CHECK((lx - ly).to_double() == Catch::Approx(x - y).margin(1e-12));
    }
}
