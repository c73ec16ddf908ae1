#include "cusp/hyp2f1.hpp"
#include "cusp/errors.hpp"
#include "cusp/quadrature.hpp"

#include <cmath>

namespace cusp::specfun {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 1e-12 && std::abs(x - std::round(x)) < 1e-12;
}

double series_2f1(double a, double b, double c, double t) {
    // sum_k (a)_k (b)_k / (c)_k t^k / k!
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 4000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * t;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    }
    throw accuracy_error("hyp2f1: series did not converge");
}

double euler_integral_2f1(double a, double b, double c, double t) {
    // F = Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 x^{b-1}(1-x)^{c-b-1}(1-tx)^{-a} dx
    using quadsum::Complex;
    auto f = [&](double x) -> Complex {
        return Complex(std::pow(x, b - 1.0) * std::pow(1.0 - x, c - b - 1.0) *
                           std::pow(1.0 - t * x, -a),
                       0.0);
    };
    quadsum::QuadResult q = quadsum::integrate_tanh_sinh(f, 0.0, 1.0, 1e-14);
    const double lg =
        std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b);
    return std::exp(lg) * q.value.real();
}

// log |Gamma(x)| with sign, valid for any non-pole real x.
double lgamma_signed(double x, int& sign) {
    if (x > 0.0) {
        sign = 1;
        return std::lgamma(x);
    }
    if (x == std::floor(x)) throw domain_error("gamma pole");
    // reflection: Gamma(x)Gamma(1-x) = pi / sin(pi x)
    const double s = std::sin(M_PI * x);
    sign = s > 0.0 ? 1 : -1;
    return std::log(M_PI / std::abs(s)) - std::lgamma(1.0 - x);
}

} // namespace

double hyp2f1(double a, double b, double c, double t) {
    if (t < 0.0 || t >= 1.0)
        throw domain_error("hyp2f1: t must lie in [0,1)");
    if (is_nonpositive_integer(c) && std::abs(c) < 1e-12)
        throw domain_error("hyp2f1: c is a nonpositive integer");
    if (c <= 0.0 && c == std::floor(c))
        throw domain_error("hyp2f1: c is a nonpositive integer");
    if (t == 0.0) return 1.0;
    if (t <= 0.5) return series_2f1(a, b, c, t);
    if (c > b && b > 0.0) return euler_integral_2f1(a, b, c, t);
    if (c > a && a > 0.0) return euler_integral_2f1(b, a, c, t);
    // fall back to the reflection identity; needs an integer first parameter
    const double ar = std::round(a);
    if (std::abs(a - ar) < 1e-12 && ar >= 1.0 && std::abs(b - 1.0) < 1e-12)
        return hyp2f1_reflect(static_cast<int>(ar), c, t);
    if (std::abs(b - std::round(b)) < 1e-12 && std::round(b) >= 1.0 &&
        std::abs(a - 1.0) < 1e-12)
        return hyp2f1_reflect(static_cast<int>(std::round(b)), c, t);
    throw domain_error("hyp2f1: no applicable route for these parameters");
}

double hyp2f1_reflect(int n, double c, double t) {
    if (n < 1) throw domain_error("hyp2f1_reflect: n must be a positive integer");
    if (t <= 0.0 || t >= 1.0)
        throw domain_error("hyp2f1_reflect: t must lie in (0,1)");
    const double cn1 = c - n - 1.0;
    if (cn1 <= 0.0 && std::abs(cn1 - std::round(cn1)) < 1e-10 &&
        std::round(cn1) <= 0.0)
        throw domain_error("hyp2f1_reflect: c-n-1 is a nonpositive integer");
    const double a = n;
    int s1 = 1, s2 = 1;
    const double lg = lgamma_signed(c, s1) + lgamma_signed(a + 1.0 - c, s2) -
                      std::lgamma(a);
    const double lead = s1 * s2 * std::exp(lg) *
                        std::pow(1.0 - t, c - a - 1.0) * std::pow(t, 1.0 - c);
    const double rest =
        (c - 1.0) / (c - a - 1.0) * hyp2f1(a, 1.0, 2.0 + a - c, 1.0 - t);
    return lead + rest;
}

} // namespace cusp::specfun
