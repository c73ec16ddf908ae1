#ifndef CUSP_ZETADET_HPP
#define CUSP_ZETADET_HPP

#include "cusp/charfn.hpp"
#include "cusp/spectrum.hpp"

#include <map>
#include <string>
#include <vector>

namespace cusp::zetadet {

using charfn::Complex;
using charfn::CuspBundle;
using spectrum::SpectrumSlice;

enum class ZetaRoute { direct, integral };

struct ZetaEval {
    Complex s{0.0, 0.0};
    double mu = 0.0;
    Complex value{0.0, 0.0};
    double truncation_estimate = 0.0;
    ZetaRoute route = ZetaRoute::direct;
};

// Direct eigenvalue sum over an assembled slice, plus a Weyl-type tail
// correction fitted from the top of the slice.  The kernel eigenvalue is
// excluded at mu = 0 and contributes mu^{-s} otherwise.  Requires Re s > 1.
ZetaEval zeta_direct(Complex s, double mu, const SpectrumSlice& slice);

struct ZetaIntegralOptions {
    int k_max = 48;        // number of exact nonconstant modes
    double tol = 1e-10;    // quadrature tolerance of the t-integrals
    double delta = charfn::kDefaultDelta;
    bool parallel = true;
};

// Integral-representation route on the strip 1 < Re s < 2: per-mode
// regularized integrals of the full characteristic function, the constant
// mode handled with the contour representation (mu > 0) or its mu -> 0
// continuation.
ZetaEval zeta_integral(Complex s, double mu, const CuspBundle& b,
                       const ZetaIntegralOptions& opts = {});

// ---------------------------------------------------------------------------
// Constant-mode determinant contribution, exact at finite mu.
// ---------------------------------------------------------------------------
struct Mode0DetPieces {
    double mu = 0.0;
    double a_prime = 0.0;      // A'_{mu,0}(0) = H_{mu,0}(2 sqrt(1/4+mu))
    double r_prime = 0.0;      // R'_{mu,0}(0)
    double mtilde_prime = 0.0; // four-term closed-form continuation
    double b_prime = 0.0;      // exactly 0
    double total = 0.0;        // log mu + a' + b' + m~' + r'
};
Mode0DetPieces mode0_aw_logdet_derivative(double mu, const CuspBundle& b);

// Finite part of A'_{mu,0}(0) as mu -> 0+ against its large-a expansion;
// one residual per entry of a_list (alpha is taken from the bundle).
struct FpCheckEntry {
    double a = 0.0;
    double fp_extrapolated = 0.0; // Richardson limit of log mu + A'(0)
    double reference = 0.0;       // the printed large-a expansion
    double residual = 0.0;
};
std::vector<FpCheckEntry> mode0_fp_a_asymptotic_check(
    const CuspBundle& bundle_template, const std::vector<double>& a_list);

// ---------------------------------------------------------------------------
// Theorem-level asymptotic evaluators (formula evaluation, no solving).
// ---------------------------------------------------------------------------
enum class TheoremId { mu_alpha, mu_alpha0, a_alpha, a_alpha0 };

struct AsympReport {
    TheoremId theorem_id = TheoremId::mu_alpha;
    double alpha = 0.0, a = 0.0, mu = 0.0;
    std::vector<std::pair<std::string, double>> term_values;
    double constant = 0.0;
    double residual = 0.0; // 0 when no independent reference exists

    double total() const {
        double t = constant;
        for (const auto& [name, v] : term_values) t += v;
        return t;
    }
};

AsympReport asymptotic_logdet_mu(const CuspBundle& b, double mu);
AsympReport asymptotic_logdet_mu_alpha0(double a, double mu);
AsympReport asymptotic_logdet_a(const CuspBundle& b);
AsympReport asymptotic_logdet_a_alpha0(double a);

// int_0^inf (arctan(t/(1+alpha)) + arctan(t/(1-alpha)))/(e^{2 pi t}-1) dt
// by two independent quadrature schemes (0 = Gauss-Kronrod, 1 = tanh-sinh).
double arctan_integral(double alpha, int scheme);

// ---------------------------------------------------------------------------
// a -> infinity limit identity of the eta-type double sum.
// ---------------------------------------------------------------------------
struct EtaSumEntry {
    double a = 0.0;
    double sum_value = 0.0;  // the evaluated double sum
    double reference = 0.0;  // 2 gamma alpha - 2 log Gamma(1-alpha)
    double residual = 0.0;
};
std::vector<EtaSumEntry> eta_sum_limit_check(const CuspBundle& bundle_template,
                                             const std::vector<double>& a_list,
                                             int k_max = 2000000,
                                             double delta = charfn::kDefaultDelta);

} // namespace cusp::zetadet

#endif
