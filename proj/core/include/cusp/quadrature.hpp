#ifndef CUSP_QUADRATURE_HPP
#define CUSP_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <limits>

namespace cusp::quadsum {

using Complex = std::complex<double>;

struct QuadResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Adaptive Gauss-Kronrod (G7/K15) on [a,b]; b may be +infinity, in which
// case the tail is mapped by the exponential substitution x = b0 - log(1-t).
QuadResult integrate(const std::function<Complex(double)>& f,
                     double a, double b, double tol = 1e-12,
                     int max_subdivisions = 2000);

// Tanh-sinh (double exponential) rule on the finite interval [a,b].
// Second, independent scheme; tolerant of integrable endpoint singularities.
QuadResult integrate_tanh_sinh(const std::function<Complex(double)>& f,
                               double a, double b, double tol = 1e-12,
                               int max_level = 12);

// Semi-infinite tanh-sinh variant: integrates f over [a, +infinity) with the
// exp-sinh substitution x = a + exp(pi/2 sinh u).
QuadResult integrate_exp_sinh(const std::function<Complex(double)>& f,
                              double a, double tol = 1e-12,
                              int max_level = 12);

} // namespace cusp::quadsum

#endif
