#include "cusp/bessel.hpp"
#include "cusp/errors.hpp"
#include "cusp/olver.hpp"

#include <doctest.h>

#include <cmath>

using namespace cusp::specfun;

TEST_CASE("base cases and the first recursion step") {
    auto polys = olver_polys(2);
    REQUIRE(polys.size() == 3);
    // U_0 = V_0 = 1
    CHECK(polys[0].first.degree == 0);
    CHECK(polys[0].first.coefficients[0] == Rational(1));
    CHECK(polys[0].second.coefficients[0] == Rational(1));
    // U_1(t) = (3t - 5t^3)/24, executed by hand from the recursion:
    //   U_1 = t^2(1-t^2)/2 * 0 + (1/8) int_0^t (1-5x^2) dx = (t - 5t^3/3)/8
    CHECK(polys[1].first.degree == 3);
    CHECK(polys[1].first.coefficients[1] == Rational(3, 24));
    CHECK(polys[1].first.coefficients[3] == Rational(-5, 24));
    // V_1 = U_1 - t(1-t^2)/2 (expanded to exact rationals)
    //     = (3t - 5t^3)/24 - t/2 + t^3/2 = -9t/24 + 7t^3/24
    CHECK(polys[1].second.coefficients[1] == Rational(-9, 24));
    CHECK(polys[1].second.coefficients[3] == Rational(7, 24));
    // degree growth deg U_k = 3k
    CHECK(polys[2].first.degree == 6);
}

TEST_CASE("known evaluation U_1(1) = -1/12") {
    auto polys = olver_polys(1);
    CHECK(polys[1].first.coefficients[1] + polys[1].first.coefficients[3] ==
          Rational(-1, 12));
    CHECK(polys[1].first.eval(1.0) == doctest::Approx(-1.0 / 12.0));
}

TEST_CASE("uniform expansion error decreases with added terms") {
    const double nu = 10.0, z = 1.0;
    const double ref = bessel_k(Complex(nu, 0.0), nu * z).real();
    const double e1 = std::abs(bessel_k_uniform(nu, z, 1).value - ref);
    const double e2 = std::abs(bessel_k_uniform(nu, z, 2).value - ref);
    const double e3 = std::abs(bessel_k_uniform(nu, z, 3).value - ref);
    CHECK(e2 < e1);
    CHECK(e3 < e2);
    // remainder envelope holds
    for (int n : {1, 2, 3}) {
        auto e = bessel_k_uniform(nu, z, n);
        CHECK(std::abs(e.value - ref) <= e.remainder_bound);
    }
}

TEST_CASE("remainder envelope holds at nu = 20, z = 0.5") {
    const double nu = 20.0, z = 0.5;
    const double ref = bessel_k(Complex(nu, 0.0), nu * z).real();
    for (int n : {1, 2, 3, 4}) {
        auto e = bessel_k_uniform(nu, z, n);
        CHECK(std::abs(e.value - ref) <= e.remainder_bound);
    }
}

TEST_CASE("primed uniform expansion") {
    const double nu = 12.0, z = 0.8;
    const double ref = bessel_k_dx(Complex(nu, 0.0), nu * z).real();
    auto e = bessel_kprime_uniform(nu, z, 6);
    CHECK(std::abs(e.value - ref) <= 1e-8 * std::abs(ref));
}

TEST_CASE("log-derivative leading term and envelope") {
    const double nu = 40.0, x = 10.0;
    auto e = logderiv_uniform(nu, x);
    // leading term -nu sqrt(1 + x^2/nu^2), sign matching x K'/K < 0
    CHECK(e.value < 0.0);
    CHECK(std::abs(e.value + std::sqrt(nu * nu + x * x)) <
          0.1 * std::sqrt(nu * nu + x * x));
    const ScaledRealOrderK fam = bessel_k_scaled_family(nu, x);
    const double truth = x * fam.kp / fam.k;
    CHECK(std::abs(e.value - truth) <= e.remainder_bound);
    CHECK_THROWS_AS(logderiv_uniform(2.0, 1.0), cusp::validity_error);
}

TEST_CASE("log K and its order derivative from the uniform expansion") {
    for (double nu : {25.0, 45.0}) {
        for (double x : {2.0, 20.0, 200.0}) {
            const ScaledRealOrderK fam = bessel_k_scaled_family(nu, x);
            const double exact = fam.log_scale + std::log(fam.k);
            CHECK(std::abs(log_bessel_k_uniform(nu, x) - exact) < 1e-10);
            const double exact_d = fam.kdo / fam.k;
            CHECK(std::abs(dlog_bessel_k_uniform_dnu(nu, x) - exact_d) <
                  1e-9 * std::max(1.0, std::abs(exact_d)));
            const double exact_r = x * fam.kp / fam.k;
            CHECK(std::abs(xkprime_over_k_uniform(nu, x) - exact_r) <
                  1e-9 * std::abs(exact_r));
        }
    }
}

TEST_CASE("large-argument expansion") {
    // nu = 1/2 collapses to the exact K_{1/2} formula
    {
        const double z = 20.0;
        auto e = bessel_k_large_argument(Complex(0.5, 0.0), z);
        const double exact = std::sqrt(M_PI / (2.0 * z)) * std::exp(-z);
        CHECK(std::abs(e.value - exact) <= 1e-14 * exact);
    }
    // nu = 1, z = 20 within the gamma_3 bound
    {
        auto e = bessel_k_large_argument(Complex(1.0, 0.0), 20.0);
        const double ref = bessel_k(Complex(1.0, 0.0), 20.0).real();
        CHECK(std::abs(e.value - ref) <= e.remainder_bound);
    }
    // nu = 2, z = 50: the next (omitted) term is
    // (4nu^2-1)(4nu^2-9)(4nu^2-25)/(3072 z^3) ~ 2.4e-6 relative, which sets
    // the true accuracy of the three-term bracket
    {
        auto e = bessel_k_large_argument(Complex(2.0, 0.0), 50.0);
        const double ref = bessel_k(Complex(2.0, 0.0), 50.0).real();
        const double next_term =
            std::abs(15.0 * 7.0 * (-9.0)) / 3072.0 / (50.0 * 50.0 * 50.0);
        CHECK(std::abs(e.value - ref) <= 1.5 * next_term * ref);
        CHECK(std::abs(e.value - ref) <= e.remainder_bound);
    }
    // primed variant against the representation derivative
    {
        auto e = bessel_kprime_large_argument(Complex(1.0, 0.0), 30.0);
        const double ref = bessel_k_dx(Complex(1.0, 0.0), 30.0).real();
        CHECK(std::abs(e.value - ref) <= e.remainder_bound);
    }
    CHECK_THROWS_AS(bessel_k_large_argument(Complex(2.0, 0.0), 5.0),
                    cusp::validity_error);
}
