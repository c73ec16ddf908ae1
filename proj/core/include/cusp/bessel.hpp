#ifndef CUSP_BESSEL_HPP
#define CUSP_BESSEL_HPP

#include <complex>

namespace cusp::specfun {

using Complex = std::complex<double>;

// Refusal boundaries: beyond these the integral representation silently
// loses digits, so the library throws instead.
constexpr double kOrderRealCap = 50.0;
constexpr double kArgFloor = 1e-6;

// K_nu(x) = int_0^inf e^{-x cosh u} cosh(nu u) du, evaluated by the
// trapezoid rule on the even extension (double-exponential decay makes the
// rule spectrally accurate).  Order may be complex; K is even in nu.
Complex bessel_k(Complex nu, double x, double tol = 1e-12);

// d/dx of the representation: -int e^{-x cosh u} cosh u cosh(nu u) du.
Complex bessel_k_dx(Complex nu, double x, double tol = 1e-12);

// second argument derivative (used by the ODE residual check)
Complex bessel_k_dxx(Complex nu, double x, double tol = 1e-12);

// order derivative: int e^{-x cosh u} u sinh(nu u) du.
Complex bessel_k_dorder(Complex nu, double x, double tol = 1e-12);

// mixed derivative d^2 K / (d order d x).
Complex bessel_k_dorder_dx(Complex nu, double x, double tol = 1e-12);

// Real-order family scaled against overflow/underflow:
//   K_tau(x)              = exp(log_scale) * k
//   dK/dx                 = exp(log_scale) * kp
//   dK/dorder             = exp(log_scale) * kdo
//   d2K/(dorder dx)       = exp(log_scale) * kdop
// Valid for tau >= 0 (K is even in the order) and any x >= kArgFloor; the
// integrands are positive so there is no cancellation at any size of x.
struct ScaledRealOrderK {
    double log_scale = 0.0;
    double k = 0.0, kp = 0.0, kdo = 0.0, kdop = 0.0;
};
ScaledRealOrderK bessel_k_scaled_family(double tau, double x,
                                        double tol = 1e-13);

// Oscillatory-region evaluator at spectral parameter nu (order i*nu, so the
// real axis in nu is the critical line of the spectral problem):
//   khat      = e^{pi nu / 2} K_{i nu}(x)      (holomorphic in nu)
//   dkhat_dx  = e^{pi nu / 2} d/dx K_{i nu}(x)
//   dkhat_dnu = d/dnu khat
// The contour of integration follows the steepest-descent level set of the
// phase -x cosh u + i Re(nu) u, which removes the e^{pi nu/2} cancellation
// that kills the real-axis rule once Re(nu) exceeds ~15.  Requires
// |Im nu| <= 0.75 (the argument-principle rectangles have height <= 1).
struct SpectralK {
    Complex khat{0.0, 0.0};
    Complex dkhat_dx{0.0, 0.0};
    Complex dkhat_dnu{0.0, 0.0};
    Complex dkhat_dnudx{0.0, 0.0}; // d^2/(dnu dx)
};
// scale_ex folds a further factor e^{x} into every component, which keeps
// the values representable when x is large enough that K itself underflows;
// ratios are unaffected.
SpectralK bessel_k_spectral(Complex nu, double x, bool scale_ex = false);

} // namespace cusp::specfun

#endif
