#ifndef CUSP_GAMMA_ZETA_HPP
#define CUSP_GAMMA_ZETA_HPP

namespace cusp::specfun {

// log Gamma(x), x > 0.
double log_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x); x must not be a nonpositive integer.
double digamma(double x);

// psi'(x), x > 0.
double trigamma(double x);

// Riemann zeta on the real line, s != 1, by Euler-Maclaurin with the
// continuation built in.
double zeta_riemann(double s);

// Hurwitz zeta sum_{n>=0} (n+q)^{-s}, q > 0, s != 1, analytically continued.
double zeta_hurwitz(double q, double s);

// E_1(x) = int_x^inf e^{-u}/u du, x > 0.
double exp_integral_e1(double x);

} // namespace cusp::specfun

#endif
