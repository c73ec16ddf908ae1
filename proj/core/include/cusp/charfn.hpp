#ifndef CUSP_CHARFN_HPP
#define CUSP_CHARFN_HPP

#include "cusp/bessel.hpp"
#include "cusp/olver.hpp"

#include <complex>

namespace cusp::charfn {

using Complex = std::complex<double>;

// Geometry / bundle parameters.  alpha in [0,1) is the holonomy parameter,
// a > 0 the cusp height.
struct CuspBundle {
    double alpha;
    double a;

    CuspBundle(double alpha_, double a_);

    // Prop.-level guarantee that every non-constant mode has only real,
    // simple zeros.
    bool localization_guaranteed() const {
        return a > 1.0 / (4.0 * M_PI * (1.0 - alpha));
    }
    // The constant Fourier mode exists only for a non-trivial character.
    bool has_mode0() const { return alpha > 0.0; }
};

// Per-mode Bessel arguments 2 pi |k +- alpha| a.
struct ModeChar {
    int k = 0;
    double x_plus = 0.0;
    double x_minus = 0.0;

    ModeChar(int k_, const CuspBundle& b);
};

// Default splitting exponent; must satisfy delta < 1/6 with 1/(2 delta)
// not an integer.
constexpr double kDefaultDelta = 0.15;
void validate_delta(double delta);

// Interval split point 2 |k|^delta sqrt(1/4+mu) (k != 0), or
// 2 sqrt(1/4+mu) for the constant mode.
double split_point(int k, double mu, double delta = kDefaultDelta);

// ---------------------------------------------------------------------------
// Order-parameter auxiliary functions.
// g(nu,x,y) = 1 + 4 pi alpha a + x K'_nu(x)/K_nu(x) + y K'_nu(y)/K_nu(y)
// f(nu,x,y) = K_nu(x) K_nu(y) g(nu,x,y), computed in expanded form.
// ---------------------------------------------------------------------------
Complex char_g(Complex nu, double x, double y, const CuspBundle& b);
Complex char_f(Complex nu, double x, double y, const CuspBundle& b);

// ---------------------------------------------------------------------------
// Spectral-parameter characteristic functions (order = i nu; zeros on the
// real nu axis are the eigenvalue parameters r with lambda = 1/4 + r^2).
// ---------------------------------------------------------------------------

// Three-term determinant expression for mode k, never factored through the
// Bessel product, so common Bessel zeros cannot produce 0 * inf.
Complex char_det_direct(int k, Complex nu, const CuspBundle& b);

// e^{pi nu} char_det_direct: holomorphic rescaling with the same zeros,
// O(1)-conditioned on the real axis.  Also exposes the nu-derivative and a
// positive local scale for residual normalization.
struct ScaledDet {
    Complex value{0.0, 0.0};
    Complex dvalue{0.0, 0.0};
    double local_scale = 0.0;
};
ScaledDet char_det_scaled(int k, Complex nu, const CuspBundle& b);

// Constant-mode characteristic function (alpha != 0):
// f0(nu) = (1+4 pi alpha a) K_{i nu}(2 pi alpha a)^2
//        + 4 pi alpha a K'_{i nu}(2 pi alpha a) K_{i nu}(2 pi alpha a).
Complex char_f0(Complex nu, const CuspBundle& b);
ScaledDet char_f0_scaled(Complex nu, const CuspBundle& b);

// d/dnu g_k at real spectral nu through the bracket form of the
// order-derivative identity (the integral form diverges at its lower
// endpoint for real nu; the bracket is its finite evaluation).
double gk_prime_formula(int k, double nu, const CuspBundle& b);

// g_k at real spectral nu (real-valued away from Bessel zeros).
double gk_spectral(int k, double nu, const CuspBundle& b);

// ---------------------------------------------------------------------------
// Real-order diagnostics used by the regularizers: for tau > 0,
// g_k(i tau) involves only real-order Bessel functions and is smooth.
// ---------------------------------------------------------------------------

// g_k(i tau); vanishes only at tau = 1/2 when k = 0.
double gk_imag_axis(int k, double tau, const CuspBundle& b);
// log |g_k(i tau)|
double log_abs_gk(int k, double tau, const CuspBundle& b);
// d/dtau log |g_k(i tau)|
double dlog_abs_gk(int k, double tau, const CuspBundle& b);
// log |f_k(i tau)| = log K_tau(x+) + log K_tau(x-) + log |g_k(i tau)|
double log_abs_fk(int k, double tau, const CuspBundle& b);
double dlog_abs_fk(int k, double tau, const CuspBundle& b);

// Cheap expansion-based variants for large tau (no quadrature); threshold
// kAsymptoticOrder below.
constexpr double kAsymptoticOrder = 40.0;
double log_abs_fk_asym(int k, double tau, const CuspBundle& b);

// ---------------------------------------------------------------------------
// Regularizer h_{mu,k} and its anchored primitive H_{mu,k} on the real line:
//   h(t) = d/dt log|g_k(it)| - (t/c) * [d/dt log|g_k(it)|]_{t=c}
//   H(t) = log|g_k(it)| - log|g_k(ic)| - (t^2-c^2)/(2c) * [...]_{t=c}
// with c = sqrt(1/4+mu).  H' = h and H(c) = h(c) = 0.
// ---------------------------------------------------------------------------
Complex h_reg(int k, double t, double mu, const CuspBundle& b);
Complex H_reg(int k, double t, double mu, const CuspBundle& b);

// Same construction on log|f_k| instead of log|g_k| (Dirichlet + AW
// combined); this is the integrand the zeta-function route uses.
double h_reg_f(int k, double t, double mu, const CuspBundle& b);
double dlog_anchor_f(int k, double mu, const CuspBundle& b);

// ---------------------------------------------------------------------------
// Asymptotic expansions of the characteristic data.
// ---------------------------------------------------------------------------

// Two-correction expansion of log |g_k(it)| for large real t, with the
// envelope C/(4 pi^2 k^2 (1-alpha)^2 a^2 + t^2) (or alpha^2 in place of
// k^2 (1-alpha)^2 when k = 0).
specfun::ExpansionWithBound log_abs_g_asymptotic(int k, double t,
                                                 const CuspBundle& b);

struct ComplexExpansion {
    Complex value{0.0, 0.0};
    double remainder_bound = 0.0;
    int order_used = 0;
};

// Large-argument expansion of g_k at order parameter nu:
// 4 pi alpha a - 2 pi (|k+a|+|k-a|) a + (4 nu^2+1)/(16 pi a) (1/|k+a|+1/|k-a|).
ComplexExpansion g_large_argument(int k, Complex nu, const CuspBundle& b);

} // namespace cusp::charfn

#endif
