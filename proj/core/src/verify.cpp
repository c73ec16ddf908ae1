#include "cusp/verify.hpp"

#include "cusp/bessel.hpp"
#include "cusp/charfn.hpp"
#include "cusp/errors.hpp"
#include "cusp/gamma_zeta.hpp"
#include "cusp/hyp2f1.hpp"
#include "cusp/olver.hpp"
#include "cusp/quadrature.hpp"
#include "cusp/ramanujan.hpp"
#include "cusp/spectrum.hpp"
#include "cusp/zetadet.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>

namespace cusp::verify {

using io::VerifyReport;
using specfun::Complex;

namespace {

VerifyReport make(const std::string& id, double measured, double threshold,
                  const std::string& notes = "") {
    VerifyReport r;
    r.check_id = id;
    r.measured = measured;
    r.threshold = threshold;
    r.status = measured <= threshold ? VerifyReport::Status::pass
                                     : VerifyReport::Status::fail;
    r.notes = notes;
    return r;
}

VerifyReport skip(const std::string& id, const std::string& reason) {
    VerifyReport r;
    r.check_id = id;
    r.status = VerifyReport::Status::skip;
    r.notes = reason;
    return r;
}

const std::vector<double>& half_order_grid() {
    static const std::vector<double> g = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
    return g;
}

// ------------------------------------------------------------------ AC1
void ac1(std::vector<VerifyReport>& out) {
    double worst_k = 0.0, worst_d = 0.0;
    for (double x : half_order_grid()) {
        const double ref = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
        const double v = specfun::bessel_k(Complex(0.5, 0.0), x).real();
        worst_k = std::max(worst_k, std::abs(v - ref) / ref);
        const double dref = std::sqrt(M_PI / (2.0 * x)) *
                            specfun::exp_integral_e1(2.0 * x) * std::exp(x);
        const double dv =
            specfun::bessel_k_dorder(Complex(0.5, 0.0), x).real();
        worst_d = std::max(worst_d, std::abs(dv - dref) / dref);
    }
    out.push_back(make("AC01a-k-half-special-value", worst_k, 1e-10));
    out.push_back(make("AC01b-dorder-half-special-value", worst_d, 1e-8));
}

// ------------------------------------------------------------------ AC2
void ac2(std::vector<VerifyReport>& out) {
    double worst = 0.0;
    for (double x : half_order_grid()) {
        const double k = specfun::bessel_k(Complex(0.5, 0.0), x).real();
        const double kp = specfun::bessel_k_dx(Complex(0.5, 0.0), x).real();
        const double h = (1.0 + 2.0 * x) * k + 2.0 * x * kp;
        worst = std::max(worst, std::abs(h) / ((1.0 + 2.0 * x) * k));
    }
    out.push_back(make("AC02a-kernel-identity-t-half", worst, 1e-10));
    // zero-free h(x) = (1+2x)K_t + 2x K_t' on [0.1, 50] for t in {0.2, 0.8}
    int sign_changes = 0;
    for (double t : {0.2, 0.8}) {
        double prev = 0.0;
        bool first = true;
        for (int i = 0; i <= 240; ++i) {
            const double x =
                0.1 * std::pow(500.0, i / 240.0); // log grid 0.1..50
            const auto fam = specfun::bessel_k_scaled_family(t, x);
            const double h = (1.0 + 2.0 * x) * fam.k + 2.0 * x * fam.kp;
            if (!first && (h > 0) != (prev > 0)) ++sign_changes;
            prev = h;
            first = false;
        }
    }
    out.push_back(make("AC02b-h-zero-free", sign_changes, 0.0,
                       "sign changes over the scan grid"));
}

// ------------------------------------------------------------------ AC3
void ac3(std::vector<VerifyReport>& out) {
    // complex-order identity on [eps, u]: the v -> 0 endpoint diverges for
    // Im nu != 0 (|K| ~ v^{-2 Im nu}), so both identities are verified in
    // the two-endpoint bracket form the derivation yields.
    {
        const Complex nu(0.7, 0.3);
        const Complex nub = std::conj(nu);
        const double eps = 0.5, u = 2.0;
        auto B = [&](double w) -> Complex {
            const Complex br =
                specfun::bessel_k(Complex(0.0, 1.0) * nu, w) *
                    specfun::bessel_k_dx(Complex(0.0, 1.0) * nub, w) -
                specfun::bessel_k(Complex(0.0, 1.0) * nub, w) *
                    specfun::bessel_k_dx(Complex(0.0, 1.0) * nu, w);
            return -w / (nub * nub - nu * nu) * br;
        };
        auto f = [&](double v) -> quadsum::Complex {
            return std::norm(specfun::bessel_k(Complex(0.0, 1.0) * nu, v)) / v;
        };
        const double lhs = quadsum::integrate(f, eps, u, 1e-12).value.real();
        const Complex rhs = B(u) - B(eps);
        out.push_back(make("AC03a-int-bessel-zero-identity",
                           std::abs(lhs - rhs.real()) / std::abs(lhs), 1e-8));
    }
    {
        const double nu = 1.3, eps = 0.5, u = 3.0;
        auto B = [&](double w) {
            const Complex order(0.0, nu);
            const Complex k = specfun::bessel_k(order, w);
            const Complex kp = specfun::bessel_k_dx(order, w);
            const Complex dk = specfun::bessel_k_dorder(order, w);
            const Complex dkp = specfun::bessel_k_dorder_dx(order, w);
            return (-Complex(0.0, 1.0) * (w / (2.0 * nu)) *
                    (k * dkp - kp * dk))
                .real();
        };
        auto f = [&](double v) -> quadsum::Complex {
            return std::norm(specfun::bessel_k(Complex(0.0, nu), v)) / v;
        };
        const double lhs = quadsum::integrate(f, eps, u, 1e-12).value.real();
        const double rhs = B(u) - B(eps);
        out.push_back(make("AC03b-real-order-identity",
                           std::abs(lhs - rhs) / std::abs(lhs), 1e-8));
    }
}

// ------------------------------------------------------------------ AC4
void ac4(std::vector<VerifyReport>& out, const Golden& golden) {
    charfn::CuspBundle b(0.3, 1.0);
    // locate the first zero of g_1 from the golden seed
    double r0 = golden.first_g1_zero_alpha03_a1;
    {
        double lo = r0 - 1e-3, hi = r0 + 1e-3;
        double flo = charfn::gk_spectral(1, lo, b);
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double fm = charfn::gk_spectral(1, mid, b);
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        r0 = 0.5 * (lo + hi);
    }
    const double form = charfn::gk_prime_formula(1, r0, b);
    const double h = 1e-5;
    const double fd = (charfn::gk_spectral(1, r0 + h, b) -
                       charfn::gk_spectral(1, r0 - h, b)) /
                      (2.0 * h);
    out.push_back(make("AC04-gk-prime-formula",
                       std::abs(form - fd) / std::abs(fd), 1e-6));
}

// ------------------------------------------------------------------ AC5
void ac5(std::vector<VerifyReport>& out, bool quick) {
    const std::pair<double, double> bundles[] = {
        {0.0, 0.2}, {0.3, 0.5}, {0.7, 2.0}};
    int mismatches = 0, missing_sign_changes = 0;
    const double r_hi = quick ? 12.0 : 20.0;
    for (auto [alpha, a] : bundles) {
        charfn::CuspBundle b(alpha, a);
        for (int k : {1, 2, 5}) {
            auto zeros = spectrum::find_mode_zeros(k, r_hi, b, 1e-10);
            spectrum::Rect rect{0.0, r_hi, -0.5, 0.5};
            const int n = spectrum::argument_principle_count(k, rect, b);
            if ((int)zeros.size() != n) ++mismatches;
            for (double r : zeros) {
                const double d = 4e-10;
                const double fl =
                    charfn::char_det_scaled(k, Complex(r - d, 0.0), b)
                        .value.real();
                const double fr =
                    charfn::char_det_scaled(k, Complex(r + d, 0.0), b)
                        .value.real();
                if ((fl > 0) == (fr > 0)) ++missing_sign_changes;
            }
        }
    }
    out.push_back(make("AC05a-count-vs-argument-principle", mismatches, 0.0,
                       "mismatched mode counts"));
    out.push_back(make("AC05b-strict-sign-changes", missing_sign_changes, 0.0,
                       "zeros without a strict sign change"));
}

// ------------------------------------------------------------------ AC6
void ac6(std::vector<VerifyReport>& out) {
    double worst = 0.0;
    for (auto [alpha, a] : {std::pair{0.3, 1.0}, std::pair{0.9, 3.0}}) {
        charfn::CuspBundle b(alpha, a);
        const auto d = charfn::char_f0_scaled(Complex(0.0, 0.5), b);
        worst = std::max(worst, std::abs(d.value) / d.local_scale);
    }
    out.push_back(make("AC06-kernel-detection", worst, 1e-8));
}

// ------------------------------------------------------------------ AC7
void ac7(std::vector<VerifyReport>& out, bool quick) {
    charfn::CuspBundle b(0.3, 1.0);
    const double lmax = quick ? 300.0 : 1000.0;
    auto fitted_bound = [&](double tol) {
        spectrum::SolverOptions opts;
        opts.tol = tol;
        auto slice = spectrum::enumerate_eigenvalues(b, lmax, opts);
        double c = 0.0;
        for (double l = 10.0; l <= lmax; l *= 1.3)
            c = std::max(c, spectrum::weyl_ratio(slice, l));
        c = std::max(c, spectrum::weyl_ratio(slice, lmax));
        return c;
    };
    const double c1 = fitted_bound(1e-8);
    const double c2 = fitted_bound(1e-9);
    out.push_back(make("AC07a-weyl-ratio-bounded", c1, 10.0,
                       "fitted sup of N(lambda)/lambda"));
    out.push_back(make("AC07b-weyl-bound-stability",
                       std::abs(c1 - c2) / c1, 0.2));
}

// ------------------------------------------------------------------ AC8
void ac8(std::vector<VerifyReport>& out, bool quick) {
    const double lmax = quick ? 400.0 : 900.0;
    double worst_rel = 0.0, worst_vs_est = 0.0;
    for (auto [alpha, a] : {std::pair{0.0, 1.0}, std::pair{0.3, 1.0}}) {
        charfn::CuspBundle b(alpha, a);
        auto slice = spectrum::enumerate_eigenvalues(b, lmax, {});
        zetadet::ZetaIntegralOptions opts;
        opts.k_max = quick ? 24 : 40;
        for (double mu : {0.0, 1.0}) {
            for (double sre : {1.2, 1.5, 1.8}) {
                const Complex s(sre, 0.0);
                auto d = zetadet::zeta_direct(s, mu, slice);
                auto i = zetadet::zeta_integral(s, mu, b, opts);
                const double diff = std::abs(d.value - i.value);
                worst_rel = std::max(worst_rel, diff / std::abs(d.value));
                const double est =
                    d.truncation_estimate + i.truncation_estimate;
                worst_vs_est = std::max(worst_vs_est, diff / est);
            }
        }
    }
    out.push_back(make("AC08a-cross-route-relative", worst_rel, 1e-3));
    out.push_back(make("AC08b-cross-route-within-estimates", worst_vs_est, 1.0,
                       "|diff| / combined truncation estimates"));
}

// ------------------------------------------------------------------ AC9
void ac9(std::vector<VerifyReport>& out) {
    double worst8 = 0.0;
    {
        auto f = [](Complex z) { return 1.0 / (z * z); };
        auto s = quadsum::ramanujan_sum(f, 1e-12);
        worst8 = std::max(worst8,
                          std::abs(s.value.real() - (M_PI * M_PI / 6.0 - 1.0)));
    }
    {
        auto f = [](Complex z) { return std::exp(-z); };
        auto s = quadsum::ramanujan_sum(f, 1e-12);
        const double ref = 1.0 / (std::exp(1.0) - 1.0) - std::exp(-1.0);
        worst8 = std::max(worst8, std::abs(s.value.real() - ref));
    }
    out.push_back(make("AC09a-ramanujan-closed-forms", worst8, 1e-8));
    double worst10 = 0.0;
    const double gamma = -specfun::digamma(1.0);
    for (double x : {0.1, 0.3, 0.5}) {
        double sum = 0.0, xp = 1.0;
        for (int n = 2; n < 500; ++n) {
            xp *= x;
            const double term = specfun::zeta_riemann((double)n) * xp;
            sum += term;
            if (term < 1e-18 && n > 10) break;
        }
        const double ref = -specfun::digamma(1.0 - x) - gamma;
        worst10 = std::max(worst10, std::abs(sum - ref));
    }
    out.push_back(make("AC09b-generating-function", worst10, 1e-10));
}

// ------------------------------------------------------------------ AC10
void ac10(std::vector<VerifyReport>& out) {
    auto resid = [](double a, double bb, double c, double t) {
        return std::abs(c * (1.0 - t) * specfun::hyp2f1(a, bb, c, t) -
                        c * specfun::hyp2f1(a, bb - 1.0, c, t) +
                        (c - a) * t * specfun::hyp2f1(a, bb, c + 1.0, t));
    };
    const double worst_cont =
        std::max({resid(2.0, 1.0, 3.5, 0.3), resid(1.5, 2.0, 4.0, 0.45),
                  resid(3.0, 1.0, 5.5, 0.2)});
    out.push_back(make("AC10a-contiguous-relation", worst_cont, 1e-10));
    const double direct = specfun::hyp2f1(2.0, 1.0, 3.2, 0.9);
    const double refl = specfun::hyp2f1_reflect(2, 3.2, 0.9);
    out.push_back(make("AC10b-reflection-cross-route",
                       std::abs(direct - refl) / std::abs(direct), 1e-10));
}

// ------------------------------------------------------------------ AC11
void ac11(std::vector<VerifyReport>& out) {
    charfn::CuspBundle b(0.3, 1.0);
    double worst = 0.0;
    for (double mu : {1.0, 10.0, 100.0}) {
        auto p = zetadet::mode0_aw_logdet_derivative(mu, b);
        const double c = std::sqrt(0.25 + mu);
        const double canc = std::abs(
            p.a_prime + p.r_prime -
            (charfn::log_abs_gk(0, 2.0 * c, b) - charfn::log_abs_gk(0, c, b)));
        const double chain = std::abs(
            p.total -
            (std::log(mu) - charfn::log_abs_gk(0, c, b) + std::log(2.0)));
        worst = std::max({worst, canc, chain, std::abs(p.b_prime)});
    }
    out.push_back(make("AC11a-mode0-exact-chain", worst, 1e-9));

    // mu -> 0+ finite part against the printed large-a expansion.  The
    // anchored slope diverges like 1/mu because g0(i/2) = 0, so the
    // sequence log mu + A'(0) has no limit; the check is implemented as
    // stated and fails (see the notes and the acceptance report).
    auto entries =
        zetadet::mode0_fp_a_asymptotic_check(b, {5.0, 20.0, 80.0});
    const bool decreasing =
        std::abs(entries[1].residual) < std::abs(entries[0].residual) &&
        std::abs(entries[2].residual) < std::abs(entries[1].residual);
    const double final_resid = std::abs(entries[2].residual);
    VerifyReport r = make("AC11b-mode0-fp-asymptotics",
                          decreasing ? final_resid : 1e9, 1e-2);
    r.measured = final_resid;
    r.notes =
        "paper defect: lim_{mu->0}[log mu + A'(0)] diverges like -3/(4 mu) "
        "(g0(i/2) = 0 makes the anchored slope blow up); residuals grow ~ "
        "2 log a against the printed reference. See decisions ledger.";
    out.push_back(r);
}

// ------------------------------------------------------------------ AC12
void ac12(std::vector<VerifyReport>& out, bool quick) {
    charfn::CuspBundle b(0.3, 1.0);
    auto entries = zetadet::eta_sum_limit_check(
        b, {10.0, 100.0, 1000.0}, quick ? 200000 : 1500000);
    const bool decreasing =
        std::abs(entries[1].residual) < std::abs(entries[0].residual) &&
        std::abs(entries[2].residual) < std::abs(entries[1].residual);
    VerifyReport r =
        make("AC12-eta-sum-limit",
             decreasing ? std::abs(entries[2].residual) : 1e9, 1e-2,
             "reference 2 gamma alpha - 2 log Gamma(1-alpha); see ledger on "
             "the printed sign");
    r.measured = std::abs(entries[2].residual);
    if (!decreasing) r.status = VerifyReport::Status::fail;
    out.push_back(r);
}

// ------------------------------------------------------------------ AC13
void ac13(std::vector<VerifyReport>& out) {
    charfn::CuspBundle b(0.3, 1.0);
    double worst_slope_dev = 0.0;
    for (int k : {0, 3}) {
        const double ts[4] = {50.0, 100.0, 200.0, 400.0};
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < 4; ++i) {
            auto e = charfn::log_abs_g_asymptotic(k, ts[i], b);
            const double err =
                std::abs(e.value - charfn::log_abs_gk(k, ts[i], b));
            const double X = std::log(ts[i]), Y = std::log(err);
            sx += X;
            sy += Y;
            sxx += X * X;
            sxy += X * Y;
        }
        const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
        worst_slope_dev = std::max(worst_slope_dev, std::abs(slope + 2.0));
    }
    out.push_back(make("AC13a-log-g-remainder-slope", worst_slope_dev, 0.1));
    double worst_env = 0.0;
    const std::pair<double, double> pts[] = {{0.0, 10.0}, {0.5, 20.0},
                                             {1.0, 50.0}};
    for (auto [nu, z] : pts) {
        auto e = specfun::bessel_k_large_argument(Complex(nu, 0.0), z);
        const double ref = specfun::bessel_k(Complex(nu, 0.0), z).real();
        worst_env = std::max(worst_env,
                             std::abs(e.value - ref) / e.remainder_bound);
    }
    out.push_back(make("AC13b-large-argument-envelope", worst_env, 1.0,
                       "|measured error| / fitted gamma_3 envelope"));
}

// ------------------------------------------------------------------ AC14
void ac14(std::vector<VerifyReport>& out) {
    charfn::CuspBundle b(0.3, 1.0);
    auto r1 = zetadet::asymptotic_logdet_mu(b, 50.0);
    auto r2 = zetadet::asymptotic_logdet_mu(b, 50.0);
    double det_dev = std::abs(r1.total() - r2.total());
    for (size_t i = 0; i < r1.term_values.size(); ++i)
        det_dev = std::max(det_dev, std::abs(r1.term_values[i].second -
                                             r2.term_values[i].second));
    out.push_back(make("AC14a-evaluator-determinism", det_dev, 0.0));
    double collapse = 0.0;
    for (double alpha : {1e-6, 1e-8}) {
        collapse = std::max(
            collapse, std::abs(std::log(std::sin(M_PI * alpha) /
                                        (M_PI * alpha))));
        collapse =
            std::max(collapse, std::abs(2.0 * specfun::log_gamma(1.0 - alpha)));
    }
    out.push_back(make("AC14b-alpha-to-zero-collapse", collapse, 1e-5));
    double dual = 0.0;
    for (double alpha : {0.0, 0.3, 0.7}) {
        dual = std::max(dual, std::abs(zetadet::arctan_integral(alpha, 0) -
                                       zetadet::arctan_integral(alpha, 1)));
    }
    out.push_back(make("AC14c-arctan-dual-scheme", dual, 1e-10));
    auto rep = zetadet::asymptotic_logdet_a_alpha0(10.0);
    out.push_back(make("AC14d-a-alpha0-value",
                       std::abs(rep.total() - 20.0 * M_PI / 3.0), 1e-12));
}

// ------------------------------------------------------ extra invariants
void invariants(std::vector<VerifyReport>& out, const Golden& golden) {
    // Bessel evenness and ODE residual
    {
        const Complex nu(0.4, 2.0);
        const Complex a = specfun::bessel_k(nu, 5.0);
        const Complex bb = specfun::bessel_k(-nu, 5.0);
        out.push_back(make("INV-bessel-evenness", std::abs(a - bb) / std::abs(a),
                           1e-12));
        const double x = 2.5;
        const Complex k = specfun::bessel_k(nu, x);
        const Complex kp = specfun::bessel_k_dx(nu, x);
        const Complex kpp = specfun::bessel_k_dxx(nu, x);
        const Complex res = x * x * kpp + x * kp - (x * x + nu * nu) * k;
        out.push_back(make("INV-bessel-ode",
                           std::abs(res) /
                               ((x * x + std::abs(nu * nu)) * std::abs(k)),
                           1e-10));
    }
    // K_0 series oracle
    out.push_back(make(
        "INV-k0-series-oracle",
        std::abs(specfun::bessel_k(Complex(0.0, 0.0), 1.0).real() -
                 golden.k0_at_1),
        1e-13));
    // regularizer oddness and anchor
    {
        charfn::CuspBundle b(0.3, 1.0);
        const double mu = 1.0;
        double worst = 0.0;
        for (double t : {0.4, 1.1, 2.5}) {
            worst = std::max(worst,
                             std::abs((charfn::h_reg(1, t, mu, b) +
                                       charfn::h_reg(1, -t, mu, b))
                                          .real()));
        }
        out.push_back(make("INV-h-oddness", worst, 1e-10));
        const double c = std::sqrt(0.25 + mu);
        out.push_back(make("INV-H-anchor",
                           std::abs(charfn::H_reg(1, c, mu, b)), 1e-12));
    }
    // determinant reality on the critical line
    {
        charfn::CuspBundle b(0.3, 1.0);
        double worst = 0.0;
        for (double r : {0.8, 3.0, 9.0}) {
            const Complex v = charfn::char_det_scaled(1, Complex(r, 0.0), b).value;
            worst = std::max(worst, std::abs(v.imag()) / std::abs(v));
        }
        out.push_back(make("INV-det-reality", worst, 1e-12));
    }
    // golden regression: first zero of mode 1 at (0, 1)
    {
        charfn::CuspBundle b(0.0, 1.0);
        auto zeros = spectrum::find_mode_zeros(1, 8.0, b, 1e-11);
        const double measured =
            zeros.empty() ? 1e9 : std::abs(zeros[0] - golden.r_1_1_alpha0_a1);
        out.push_back(make("INV-golden-first-zero", measured, 1e-8));
    }
}

} // namespace

Golden load_golden(const std::string& dir) {
    Golden g;
    if (dir.empty()) return g;
    std::ifstream in(dir + "/golden.json");
    if (!in) return g;
    nlohmann::json j;
    in >> j;
    if (j.contains("r_1_1_alpha0_a1")) g.r_1_1_alpha0_a1 = j["r_1_1_alpha0_a1"];
    if (j.contains("first_g1_zero_alpha03_a1"))
        g.first_g1_zero_alpha03_a1 = j["first_g1_zero_alpha03_a1"];
    if (j.contains("k0_at_1_series_oracle"))
        g.k0_at_1 = j["k0_at_1_series_oracle"];
    if (j.contains("abel_plana_sign")) g.abel_plana_sign = j["abel_plana_sign"];
    return g;
}

std::vector<VerifyReport> run_suite(const Options& opts) {
    const auto start = std::chrono::steady_clock::now();
    Golden golden = load_golden(opts.golden_dir);
    std::vector<VerifyReport> out;
    auto stamp = [&](const char* name) {
        std::fprintf(stderr, "verify: %-6s done at %.1f s\n", name,
                     std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count());
        std::fflush(stderr);
    };
    ac1(out); stamp("AC1");
    ac2(out); stamp("AC2");
    ac3(out); stamp("AC3");
    ac4(out, golden); stamp("AC4");
    ac5(out, opts.quick); stamp("AC5");
    ac6(out); stamp("AC6");
    ac7(out, opts.quick); stamp("AC7");
    ac8(out, opts.quick); stamp("AC8");
    ac9(out); stamp("AC9");
    ac10(out); stamp("AC10");
    ac11(out); stamp("AC11");
    ac12(out, opts.quick); stamp("AC12");
    ac13(out); stamp("AC13");
    ac14(out); stamp("AC14");
    invariants(out, golden); stamp("INV");

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool others_pass = true;
    for (const auto& r : out)
        if (r.status == VerifyReport::Status::fail) others_pass = false;
    VerifyReport r15 = make("AC15-suite-runtime", seconds, 1200.0,
                            others_pass
                                ? "all other checks passed"
                                : "failures above (AC11b is the documented "
                                  "spec defect)");
    if (!others_pass) r15.status = VerifyReport::Status::fail;
    out.push_back(r15);
    return out;
}

bool all_passed(const std::vector<VerifyReport>& reports) {
    for (const auto& r : reports)
        if (r.status == VerifyReport::Status::fail) return false;
    return true;
}

} // namespace cusp::verify
