#include "cusp/gamma_zeta.hpp"
#include "cusp/errors.hpp"

#include <cmath>

namespace cusp::specfun {

namespace {

// B_2, B_4, ..., B_30
const double kBernoulli[15] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw domain_error("log_gamma: x must be positive");
    return std::lgamma(x);
}

double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw domain_error("digamma: x is a nonpositive integer");
    double result = 0.0;
    // Reflection for negative arguments.
    if (x < 0.0) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        return digamma(1.0 - x) - M_PI / std::tan(M_PI * x);
    }
    // Shift to x >= 8 and use the asymptotic series.
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = std::log(x) - 0.5 * inv;
    double p = inv2;
    for (int j = 0; j < 7; ++j) {
        series -= kBernoulli[j] / (2.0 * (j + 1)) * p;
        p *= inv2;
    }
    return result + series;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw domain_error("trigamma: x must be positive");
    double result = 0.0;
    while (x < 8.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = inv + 0.5 * inv2;
    double p = inv2 * inv;
    for (int j = 0; j < 7; ++j) {
        series += kBernoulli[j] * p;
        p *= inv2;
    }
    return result + series;
}

double zeta_hurwitz(double q, double s) {
    if (!(q > 0.0)) throw domain_error("zeta_hurwitz: q must be positive");
    if (s == 1.0) throw domain_error("zeta_hurwitz: pole at s = 1");
    // Euler-Maclaurin: sum_{n<N}(n+q)^{-s} + (N+q)^{1-s}/(s-1)
    //   + (N+q)^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} (N+q)^{-s-2j+1}.
    const int N = 24;
    double sum = 0.0;
    for (int n = 0; n < N; ++n) sum += std::pow(n + q, -s);
    const double Nq = N + q;
    sum += std::pow(Nq, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Nq, -s);
    double poch = s;            // (s)_1
    double fact = 2.0;          // (2j)!
    double power = std::pow(Nq, -s - 1.0);
    for (int j = 1; j <= 12; ++j) {
        sum += kBernoulli[j - 1] / fact * poch * power;
        // advance (s)_{2j-1} -> (s)_{2j+1}, (2j)! -> (2j+2)!, power
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        power /= (Nq * Nq);
    }
    return sum;
}

double zeta_riemann(double s) {
    if (s == 1.0) throw domain_error("zeta_riemann: pole at s = 1");
    return zeta_hurwitz(1.0, s);
}

double exp_integral_e1(double x) {
    if (!(x > 0.0)) throw domain_error("exp_integral_e1: x must be positive");
    // E_1(x) = -Ei(-x) for x > 0.
    return -std::expint(-x);
}

} // namespace cusp::specfun
