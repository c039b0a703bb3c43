#include <doctest.h>

#include <cmath>

#include "slipdrop/quadrature.hpp"

using namespace slipdrop;

TEST_CASE("polynomials integrate to machine accuracy") {
    const auto r = integrate([](double x) { return x * x * x * x * x * x * x; }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(0.125).epsilon(1e-14));

    const auto s = integrate([](double x) { return 3.0 * x * x - 2.0 * x + 1.0; }, -1.0, 2.0);
    CHECK(s.value == doctest::Approx(9.0 - 3.0 + 3.0).epsilon(1e-14));
}

TEST_CASE("sin over a period") {
    const auto r = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(std::fabs(r.value - 2.0) < 1e-13);
}

TEST_CASE("knot splitting handles a jump integrand") {
    auto f = [](double x) { return x < 1.0 ? 1.0 : 0.0; };
    const auto r = integrate_with_knots(f, 0.0, 2.0, {1.0}, 1e-12, 1e-12);
    CHECK(std::fabs(r.value - 1.0) < 1e-12);
}

TEST_CASE("integrable endpoint singularity: log") {
    const auto r = integrate([](double x) { return std::log(x); }, 0.0, 1.0, 1e-10, 1e-10);
    CHECK(std::fabs(r.value + 1.0) < 1e-9);
}

TEST_CASE("semi-infinite transforms") {
    const auto exp_tail = integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0);
    CHECK(std::fabs(exp_tail.value - 1.0) < 1e-12);

    const auto half_gauss = integrate_to_infinity(
        [](double x) { return 2.0 / std::sqrt(M_PI) * std::exp(-x * x); }, 0.0);
    CHECK(std::fabs(half_gauss.value - 1.0) < 1e-12);

    const auto shifted = integrate_to_infinity([](double x) { return std::exp(1.0 - x); }, 1.0);
    CHECK(std::fabs(shifted.value - 1.0) < 1e-12);
}

TEST_CASE("divergent integrand exhausts the interval budget") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-12, 1e-12, 200),
                    NumericalError);
}
