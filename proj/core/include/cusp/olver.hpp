#ifndef CUSP_OLVER_HPP
#define CUSP_OLVER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <complex>
#include <utility>
#include <vector>

namespace cusp::specfun {

// Exact integer fraction; the recursion denominators grow fast enough that
// fixed-width integers overflow near k = 8.
using Rational = boost::rational<boost::multiprecision::cpp_int>;

// Polynomial with exact rational coefficients, coefficients[i] on t^i.
struct OlverPolynomial {
    int degree = 0;
    std::vector<Rational> coefficients;

    double eval(double t) const;
    OlverPolynomial derivative() const;
};

// The pairs (U_k, V_k), k = 0..n_max, from the integro-differential
// recursion U_{k+1} = t^2(1-t^2)/2 U_k' + (1/8) int_0^t (1-5x^2) U_k dx and
// V_k = U_k - t(1-t^2)/2 U_{k-1} - t^2(1-t^2) U_{k-1}'.
std::vector<std::pair<OlverPolynomial, OlverPolynomial>> olver_polys(int n_max);

// Value of a truncated asymptotic expansion together with a remainder
// envelope calibrated over a validation grid (the theory only guarantees
// existence of the constants).
struct ExpansionWithBound {
    double value = 0.0;
    double remainder_bound = 0.0;
    int order_used = 0;
};

// xi(z) = sqrt(1+z^2) + log(z / (1 + sqrt(1+z^2))), p(z) = (1+z^2)^{-1/2}.
double olver_xi(double z);
double olver_p(double z);

// Uniform large-order expansion of K_nu(nu z) with n_terms terms of the
// U-series; order must be at or above kUniformOrderThreshold.
ExpansionWithBound bessel_k_uniform(double nu, double z, int n_terms);
ExpansionWithBound bessel_kprime_uniform(double nu, double z, int n_terms);

// x K'_nu(x) / K_nu(x) via the V/U series ratio, with a C/(x^2+nu^2)
// remainder envelope (C calibrated over a validation grid in the tests).
ExpansionWithBound logderiv_uniform(double nu, double x);

// log K_nu(x) assembled from the uniform expansion; cheap (no quadrature)
// and accurate for nu above the validity threshold at any x > 0.
double log_bessel_k_uniform(double nu, double x, int n_terms = 8);
// d/dnu log K_nu(x), same regime.
double dlog_bessel_k_uniform_dnu(double nu, double x, int n_terms = 8);

// x K'_nu(x)/K_nu(x) and its nu-derivative from the V/U series ratio.
double xkprime_over_k_uniform(double nu, double x, int n_terms = 8);
double dxkprime_over_k_uniform_dnu(double nu, double x, int n_terms = 8);

// Large-argument (fixed-order) expansion: three explicit terms of
// K_nu(z) = sqrt(pi/2z) e^{-z} [1 + (4nu^2-1)/8z + (4nu^2-1)(4nu^2-9)/128z^2],
// and the primed variant with 4nu^2+3 / (4nu^2-1)(4nu^2+15) coefficients.
ExpansionWithBound bessel_k_large_argument(std::complex<double> nu, double z);
ExpansionWithBound bessel_kprime_large_argument(std::complex<double> nu,
                                                double z);

constexpr double kUniformOrderThreshold = 5.0;
// Default validity threshold for the large-argument form: z >= 10(1+|nu|^2).
inline double large_argument_threshold(std::complex<double> nu) {
    return 10.0 * (1.0 + std::norm(nu));
}

} // namespace cusp::specfun

#endif
