#include "cusp/ramanujan.hpp"
#include "cusp/errors.hpp"

#include <cmath>

namespace cusp::quadsum {

namespace {

// int_0^inf (f(k+it) - f(k-it)) / (e^{2 pi t} - 1) dt.
// The integrand is exponentially damped; truncated where e^{2 pi t}
// exceeds 1e18 relative to the local numerator scale.
Complex vertical_line_integral(const AnalyticFn& f, double k, double tol,
                               long* evals = nullptr) {
    const double tmax = 8.0; // e^{2 pi 8} ~ 7e21
    auto integrand = [&](double t) -> Complex {
        if (t <= 0.0) return Complex(0.0, 0.0);
        const double denom = std::expm1(2.0 * M_PI * t);
        Complex num = f(Complex(k, t)) - f(Complex(k, -t));
        return num / denom;
    };
    QuadResult q = integrate(integrand, 0.0, tmax, tol);
    if (evals) *evals += q.evaluations;
    return q.value;
}

} // namespace

HypothesesReport ramanujan_hypotheses_check(const AnalyticFn& f,
                                            int probe_k_max,
                                            double decay_threshold) {
    HypothesesReport rep;
    if (probe_k_max < 4) probe_k_max = 4;
    double prev_term = 0.0;
    // Probe a geometric-ish ladder of abscissae to observe decay.
    const int probes[4] = {1, probe_k_max / 4 > 1 ? probe_k_max / 4 : 2,
                           probe_k_max / 2 > 2 ? probe_k_max / 2 : 3,
                           probe_k_max};
    double term_first = 0.0, term_last = 0.0;
    double int_first = 0.0, int_last = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double k = probes[i];
        double term;
        try {
            term = std::abs(f(Complex(k, 0.0)));
        } catch (const std::exception&) {
            rep.worst_abscissa = k;
            rep.note = "evaluation failure at probe abscissa";
            return rep;
        }
        const double vli = std::abs(vertical_line_integral(f, k, 1e-8));
        if (i == 0) { term_first = term; int_first = vli; }
        term_last = term;
        int_last = vli;
        prev_term = term;
        (void)prev_term;
    }
    rep.last_term_magnitude = term_last;
    rep.last_integral_magnitude = int_last;
    // decay means either smallness at the final probe or a strict downward
    // trend across the probe ladder (slow logarithmic decay is admissible)
    const double term_scale = std::max(term_first, 1e-300);
    const double int_scale = std::max(int_first, 1e-300);
    const bool term_decays =
        term_last <= decay_threshold || term_last <= 0.95 * term_scale;
    const bool integral_decays =
        int_last <= decay_threshold || int_last <= 0.95 * int_scale;
    rep.ok = term_decays && integral_decays;
    if (!rep.ok) {
        rep.worst_abscissa = probes[3];
        rep.note = term_decays ? "vertical-line integral does not decay"
                               : "f(k) does not decay";
    }
    return rep;
}

RamanujanSum ramanujan_sum(const AnalyticFn& f, double tol,
                           bool check_hypotheses) {
    RamanujanSum out;
    if (check_hypotheses) {
        HypothesesReport rep = ramanujan_hypotheses_check(f);
        out.hypotheses_satisfied = rep.ok;
        if (!rep.ok)
            throw domain_error("ramanujan_sum: admissibility hypotheses fail (" +
                               rep.note + ")");
    } else {
        out.hypotheses_satisfied = true;
    }
    // Abel-Plana anchored at 1.  Sign pinned by the x^-2 -> pi^2/6 - 1 test.
    Complex f1 = f(Complex(1.0, 0.0));
    Complex vli = vertical_line_integral(f, 1.0, tol);
    out.value = 0.5 * f1 + Complex(0.0, 1.0) * vli;
    auto freal = [&f](double x) -> Complex { return f(Complex(x, 0.0)); };
    out.tail_integral = integrate(freal, 1.0, kInfinity, tol).value;
    return out;
}

} // namespace cusp::quadsum
