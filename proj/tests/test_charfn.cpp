#include "cusp/charfn.hpp"
#include "cusp/bessel.hpp"
#include "cusp/errors.hpp"
#include "cusp/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace cusp;
using charfn::Complex;
using charfn::CuspBundle;

TEST_CASE("bundle validation and derived flags") {
    CHECK_THROWS_AS(CuspBundle(1.0, 1.0), cusp::domain_error);
    CHECK_THROWS_AS(CuspBundle(0.3, 0.0), cusp::domain_error);
    CuspBundle loc(0.3, 1.0);
    CHECK(loc.localization_guaranteed()); // 1 > 1/(4 pi 0.7) ~ 0.114
    CuspBundle tight(0.3, 0.1);
    CHECK_FALSE(tight.localization_guaranteed());
    CHECK_FALSE(CuspBundle(0.0, 1.0).has_mode0());
    CHECK_THROWS_AS(charfn::ModeChar(0, CuspBundle(0.0, 1.0)),
                    cusp::domain_error);
    charfn::ModeChar m(1, loc);
    CHECK(m.x_plus == doctest::Approx(2.0 * M_PI * 1.3));
    CHECK(m.x_minus == doctest::Approx(2.0 * M_PI * 0.7));
}

TEST_CASE("delta validation") {
    CHECK_THROWS_AS(charfn::validate_delta(0.2), cusp::domain_error);
    CHECK_THROWS_AS(charfn::validate_delta(0.125), cusp::domain_error); // 1/(2d)=4
    CHECK_NOTHROW(charfn::validate_delta(0.15));
    CHECK(charfn::split_point(0, 3.0, 0.15) ==
          doctest::Approx(2.0 * std::sqrt(3.25)));
    CHECK(charfn::split_point(4, 0.0, 0.15) ==
          doctest::Approx(2.0 * std::pow(4.0, 0.15) * 0.5));
}

TEST_CASE("g is symmetric in its two arguments") {
    CuspBundle b(0.3, 1.0);
    const Complex nu(1.2, 0.4);
    const Complex gxy = charfn::char_g(nu, 3.0, 7.0, b);
    const Complex gyx = charfn::char_g(nu, 7.0, 3.0, b);
    CHECK(std::abs(gxy - gyx) <= 1e-13 * std::abs(gxy));
}

TEST_CASE("factorization consistency away from Bessel zeros") {
    CuspBundle b(0.3, 1.0);
    const Complex nu(3.0, 0.0);
    const double x = 5.0, y = 7.0;
    const Complex f = charfn::char_f(nu, x, y, b);
    const Complex kkg = specfun::bessel_k(nu, x) * specfun::bessel_k(nu, y) *
                        charfn::char_g(nu, x, y, b);
    CHECK(std::abs(f - kkg) <= 1e-10 * std::abs(f));
}

TEST_CASE("det_direct is real on the critical line and symmetric in k") {
    CuspBundle b(0.3, 1.0);
    for (double r : {0.7, 2.5, 6.0}) {
        const Complex v = charfn::char_det_direct(1, Complex(r, 0.0), b);
        CHECK(std::abs(v.imag()) <= 1e-12 * std::abs(v));
        const Complex v2 = charfn::char_det_direct(-1, Complex(r, 0.0), b);
        CHECK(std::abs(v - v2) <= 1e-13 * std::abs(v));
    }
}

TEST_CASE("det_direct equals the expanded f at a spectral point") {
    CuspBundle b(0.3, 1.0);
    const double nu = 2.5;
    charfn::ModeChar m(1, b);
    const Complex via_f =
        charfn::char_f(Complex(0.0, nu), m.x_plus, m.x_minus, b);
    const Complex det = charfn::char_det_direct(1, Complex(nu, 0.0), b);
    CHECK(std::abs(det - via_f) <= 1e-10 * std::abs(det));
    // and the scaled variant rescales by e^{pi nu}
    const charfn::ScaledDet sd = charfn::char_det_scaled(1, Complex(nu, 0.0), b);
    CHECK(std::abs(sd.value * std::exp(-M_PI * nu) - det) <=
          1e-10 * std::abs(det));
}

TEST_CASE("constant-mode kernel zero at i/2") {
    for (auto [alpha, a] : {std::pair{0.3, 1.0}, std::pair{0.9, 3.0}}) {
        CuspBundle b(alpha, a);
        const charfn::ScaledDet d = charfn::char_f0_scaled(Complex(0.0, 0.5), b);
        CHECK(std::abs(d.value) <= 1e-8 * d.local_scale);
    }
    CHECK_THROWS_AS(charfn::char_f0(Complex(0.0, 0.5), CuspBundle(0.0, 1.0)),
                    cusp::domain_error);
}

TEST_CASE("f0 has no purely imaginary zeros besides +-i/2") {
    CuspBundle b(0.3, 1.0);
    // dense scan of f0(-it) on t in (0.2, 0.45): no sign change, no dip
    double prev = charfn::char_f0(Complex(0.0, -0.2), b).real();
    for (double t = 0.205; t <= 0.45; t += 0.005) {
        const double cur = charfn::char_f0(Complex(0.0, -t), b).real();
        CHECK((cur > 0) == (prev > 0));
        prev = cur;
    }
}

TEST_CASE("h is odd and H anchors at sqrt(1/4+mu)") {
    CuspBundle b(0.3, 1.0);
    const double mu = 1.0;
    for (double t : {0.3, 0.9, 1.7, 3.0}) {
        const Complex hp = charfn::h_reg(1, t, mu, b);
        const Complex hm = charfn::h_reg(1, -t, mu, b);
        CHECK(std::abs(hp + hm) <= 1e-12 * (std::abs(hp) + 1e-30));
    }
    const double c = std::sqrt(0.25 + mu);
    CHECK(std::abs(charfn::H_reg(1, c, mu, b)) < 1e-12);
    CHECK(std::abs(charfn::h_reg(1, c, mu, b)) < 1e-12);
}

TEST_CASE("H is the primitive of h (fundamental theorem oracle)") {
    CuspBundle b(0.3, 1.0);
    const double mu = 1.0;
    const double c = std::sqrt(0.25 + mu);
    const double T = 2.0 * c;
    auto integrand = [&](double t) -> quadsum::Complex {
        return charfn::h_reg(1, t, mu, b);
    };
    const double via_quad =
        quadsum::integrate(integrand, c, T, 1e-11).value.real();
    const double via_H = charfn::H_reg(1, T, mu, b).real();
    CHECK(std::abs(via_quad - via_H) <= 1e-9 * std::max(1.0, std::abs(via_H)));
}

TEST_CASE("scaled H-tilde bound decays in k") {
    // |H|/(1/4+mu-t^2)^2 bounded on the split interval with decay ~ k^{-3+6d}
    CuspBundle b(0.3, 1.0);
    const double mu = 1.0, delta = 0.15;
    const double c = std::sqrt(0.25 + mu);
    auto htilde_max = [&](int k) {
        double worst = 0.0;
        const double hi = charfn::split_point(k, mu, delta);
        for (int i = 1; i <= 40; ++i) {
            const double t = c + (hi - c) * i / 41.0;
            const double H = charfn::H_reg(k, t, mu, b).real();
            const double w = (0.25 + mu - t * t);
            worst = std::max(worst, std::abs(H) / (w * w));
        }
        return worst;
    };
    const double h2 = htilde_max(2), h4 = htilde_max(4), h8 = htilde_max(8);
    // expected decay exponent 3 - 6 delta = 2.1
    const double slope24 = std::log(h2 / h4) / std::log(2.0);
    const double slope48 = std::log(h4 / h8) / std::log(2.0);
    CHECK(h4 < h2);
    CHECK(h8 < h4);
    CHECK(slope24 > 1.5);
    CHECK(slope48 > 1.5);
}

TEST_CASE("order-derivative formula at the first zero of g_1") {
    CuspBundle b(0.3, 1.0);
    const double r0 = 6.209684665794661; // golden dense-scan value
    CHECK(std::abs(charfn::gk_spectral(1, r0, b)) < 1e-8);
    const double form = charfn::gk_prime_formula(1, r0, b);
    const double h = 1e-5;
    const double fd = (charfn::gk_spectral(1, r0 + h, b) -
                       charfn::gk_spectral(1, r0 - h, b)) /
                      (2.0 * h);
    CHECK(std::abs(form - fd) <= 1e-6 * std::abs(fd));
}

TEST_CASE("large-order expansion of log|g_k| with envelope") {
    CuspBundle b(0.3, 1.0);
    // k = 0 at t = 50
    {
        auto e = charfn::log_abs_g_asymptotic(0, 50.0, b);
        const double truth = charfn::log_abs_gk(0, 50.0, b);
        CHECK(std::abs(e.value - truth) <= e.remainder_bound);
    }
    // k = 3: remainder decays like t^-2; least-squares log-log slope over
    // the t in {50,100,200,400} grid within -2 +- 0.1
    {
        const double ts[4] = {50.0, 100.0, 200.0, 400.0};
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < 4; ++i) {
            auto e = charfn::log_abs_g_asymptotic(3, ts[i], b);
            const double err =
                std::abs(e.value - charfn::log_abs_gk(3, ts[i], b));
            const double X = std::log(ts[i]), Y = std::log(err);
            sx += X; sy += Y; sxx += X * X; sxy += X * Y;
        }
        const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
        CHECK(slope == doctest::Approx(-2.0).epsilon(0.05));
    }
    // leading term log(2t) dominance at t = 1e4
    {
        auto e = charfn::log_abs_g_asymptotic(1, 1e4, b);
        CHECK(std::abs(e.value - std::log(2.0e4)) < 0.01);
    }
    CHECK_THROWS_AS(charfn::log_abs_g_asymptotic(1, 2.0, b),
                    cusp::validity_error);
}

TEST_CASE("large-argument expansion of g_k") {
    // alpha = 0, a = 50: leading term -4 pi |k| a
    {
        CuspBundle b(0.0, 50.0);
        auto e = charfn::g_large_argument(1, Complex(0.5, 0.0), b);
        const double truth = charfn::gk_spectral(1, 0.5, b);
        CHECK(std::abs(e.value.real() - truth) <= e.remainder_bound);
        CHECK(std::abs(e.value.real() + 4.0 * M_PI * 50.0) <
              0.02 * 4.0 * M_PI * 50.0);
    }
    // symmetry k <-> -k
    {
        CuspBundle b(0.3, 100.0);
        auto ep = charfn::g_large_argument(2, Complex(1.0, 0.0), b);
        auto em = charfn::g_large_argument(-2, Complex(1.0, 0.0), b);
        CHECK(std::abs(ep.value - em.value) < 1e-12 * std::abs(ep.value));
    }
    // alpha = 0.3, k = 2, a = 100: relative error of the truncation <= 1e-3
    {
        CuspBundle b(0.3, 100.0);
        auto e = charfn::g_large_argument(2, Complex(1.0, 0.0), b);
        const double truth = charfn::gk_spectral(2, 1.0, b);
        CHECK(std::abs(e.value.real() - truth) <= 1e-3 * std::abs(truth));
    }
    CHECK_THROWS_AS(
        charfn::g_large_argument(1, Complex(0.5, 0.0), CuspBundle(0.3, 0.5)),
        cusp::validity_error);
}

TEST_CASE("sign change of the determinant between consecutive Dirichlet "
          "zeros") {
    // between two consecutive zeros of K_{i nu}(x_plus) the determinant
    // changes sign at least once when localization holds
    CuspBundle b(0.3, 1.0);
    charfn::ModeChar m(1, b);
    // find two consecutive zeros of khat(nu, x_plus) by scan
    double z1 = 0, z2 = 0;
    double prev = specfun::bessel_k_spectral(Complex(8.0, 0.0), m.x_plus)
                      .khat.real();
    for (double r = 8.01; r < 20.0; r += 0.01) {
        const double cur =
            specfun::bessel_k_spectral(Complex(r, 0.0), m.x_plus).khat.real();
        if ((cur > 0) != (prev > 0)) {
            if (z1 == 0) {
                z1 = r;
            } else {
                z2 = r;
                break;
            }
        }
        prev = cur;
    }
    REQUIRE(z2 > z1);
    // determinant changes sign inside (z1, z2)
    int sign_changes = 0;
    double fprev =
        charfn::char_det_scaled(1, Complex(z1 + 1e-3, 0.0), b).value.real();
    for (double r = z1 + 2e-3; r < z2; r += 1e-3) {
        const double f =
            charfn::char_det_scaled(1, Complex(r, 0.0), b).value.real();
        if ((f > 0) != (fprev > 0)) ++sign_changes;
        fprev = f;
    }
    CHECK(sign_changes >= 1);
}
