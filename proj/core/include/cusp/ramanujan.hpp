#ifndef CUSP_RAMANUJAN_HPP
#define CUSP_RAMANUJAN_HPP

#include "cusp/quadrature.hpp"

#include <complex>
#include <functional>

namespace cusp::quadsum {

// f must be analytic of moderate growth on Re z >= 1.
using AnalyticFn = std::function<Complex(Complex)>;

struct RamanujanSum {
    Complex value{0.0, 0.0};       // the regularized sum over k >= 1
    Complex tail_integral{0.0, 0.0}; // int_1^inf f(x) dx
    bool hypotheses_satisfied = false;
};

struct HypothesesReport {
    bool ok = false;
    double last_term_magnitude = 0.0;     // |f(k)| at the final probe
    double last_integral_magnitude = 0.0; // |vertical-line integral| there
    double worst_abscissa = 0.0;          // where a failure was detected
    std::string note;
};

// Checks the two admissibility conditions: f(k) -> 0 and the damped
// vertical-line integral at abscissa k -> 0 along k = 1..probe_k_max.
HypothesesReport ramanujan_hypotheses_check(const AnalyticFn& f,
                                            int probe_k_max = 16,
                                            double decay_threshold = 1e-3);

// Regularized sum with the convention pinned so that, whenever the ordinary
// sum converges, sum_{k>=1} f(k) = value + int_1^inf f.  Built from f(1)/2
// plus the Abel-Plana integral of (f(1+it)-f(1-it))/(e^{2 pi t}-1).
RamanujanSum ramanujan_sum(const AnalyticFn& f, double tol = 1e-10,
                           bool check_hypotheses = true);

} // namespace cusp::quadsum

#endif
