#include "cusp/quadrature.hpp"
#include "cusp/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace cusp::quadsum;

TEST_CASE("exponential integral over the half line") {
    auto f = [](double u) -> Complex { return std::exp(-u); };
    QuadResult q = integrate(f, 0.0, kInfinity, 1e-13);
    CHECK(std::abs(q.value.real() - 1.0) < 1e-12);
}

TEST_CASE("power-law tail through the rational map") {
    auto f = [](double u) -> Complex { return 1.0 / (u * u); };
    QuadResult q = integrate(f, 1.0, kInfinity, 1e-13);
    CHECK(std::abs(q.value.real() - 1.0) < 1e-11);
}

TEST_CASE("endpoint singularity t^{-1/2}") {
    auto f = [](double t) -> Complex {
        return t > 0.0 ? 1.0 / std::sqrt(t) : 0.0;
    };
    QuadResult gk = integrate(f, 0.0, 1.0, 1e-11, 4000);
    CHECK(std::abs(gk.value.real() - 2.0) < 1e-9);
    QuadResult ts = integrate_tanh_sinh(f, 0.0, 1.0, 1e-12);
    CHECK(std::abs(ts.value.real() - 2.0) < 2e-8);
}

TEST_CASE("dual-scheme agreement on the Binet-type integral") {
    // int_0^inf 2 arctan(t)/(e^{2 pi t}-1) dt = 1 - log(2 pi)/2
    auto f = [](double t) -> Complex {
        if (t <= 0.0) return Complex(0.0, 0.0);
        return 2.0 * std::atan(t) / std::expm1(2.0 * M_PI * t);
    };
    QuadResult a = integrate(f, 0.0, 9.0, 1e-13);
    QuadResult b = integrate_tanh_sinh(f, 0.0, 9.0, 1e-13);
    CHECK(std::abs(a.value - b.value) < 1e-10);
    const double ref = 1.0 - 0.5 * std::log(2.0 * M_PI);
    CHECK(std::abs(a.value.real() - ref) < 1e-12);
}

TEST_CASE("error estimate shrinks with node budget on smooth integrands") {
    auto f = [](double t) -> Complex { return std::cos(5.0 * t); };
    QuadResult coarse = integrate_tanh_sinh(f, 0.0, 2.0, 1e-6, 5);
    QuadResult fine = integrate_tanh_sinh(f, 0.0, 2.0, 1e-14, 12);
    CHECK(fine.error_estimate <= coarse.error_estimate + 1e-15);
    CHECK(std::abs(fine.value.real() - std::sin(10.0) / 5.0) < 1e-13);
}

TEST_CASE("invalid tolerance is rejected") {
    auto f = [](double) -> Complex { return 1.0; };
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, -1.0), cusp::domain_error);
}

TEST_CASE("exp-sinh variant integrates a decaying tail") {
    auto f = [](double u) -> Complex { return std::exp(-2.0 * u); };
    QuadResult q = integrate_exp_sinh(f, 0.0, 1e-12);
    CHECK(std::abs(q.value.real() - 0.5) < 1e-10);
}
