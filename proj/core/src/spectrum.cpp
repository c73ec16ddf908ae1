#include "cusp/spectrum.hpp"
#include "cusp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <vector>

namespace cusp::spectrum {

namespace {

using charfn::ScaledDet;

struct RealFn {
    std::function<ScaledDet(double)> eval;
};

double value_at(const RealFn& f, double r) {
    return f.eval(r).value.real();
}

// Bisection on a bracketing interval; the functions are smooth, so plain
// bisection to width tol is deterministic and adequate.
double bisect(const RealFn& f, double lo, double hi, double flo, double tol) {
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = value_at(f, mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> scan_zeros(const RealFn& f, double r_max, double step,
                               double tol) {
    std::vector<double> zeros;
    if (r_max <= tol) return zeros;
    // start just above 0 to stay clear of the even-symmetry stationary point
    double r_prev = std::min(0.5 * step, 1e-4);
    double f_prev = value_at(f, r_prev);
    double prev_abs = std::abs(f_prev);
    double r = r_prev;
    while (r < r_max) {
        const double r_next = std::min(r + step, r_max);
        const double f_next = value_at(f, r_next);
        if ((f_next > 0.0) != (f_prev > 0.0)) {
            zeros.push_back(bisect(f, r, r_next, f_prev, tol));
        } else {
            // suspected double crossing: local dip without sign change
            const double mid = 0.5 * (r + r_next);
            const double fm = value_at(f, mid);
            if (std::abs(fm) < 0.05 * std::min(std::abs(f_prev),
                                               std::abs(f_next))) {
                const int refine = 16;
                double rr = r, fr = f_prev;
                for (int i = 1; i <= refine; ++i) {
                    const double rn = r + (r_next - r) * i / refine;
                    const double fn = value_at(f, rn);
                    if ((fn > 0.0) != (fr > 0.0))
                        zeros.push_back(bisect(f, rr, rn, fr, tol));
                    rr = rn;
                    fr = fn;
                }
            }
        }
        prev_abs = std::abs(f_next);
        (void)prev_abs;
        r = r_next;
        f_prev = f_next;
    }
    // dedupe anything closer than 2 tol
    std::sort(zeros.begin(), zeros.end());
    std::vector<double> out;
    for (double z : zeros)
        if (out.empty() || z - out.back() > 2.0 * tol) out.push_back(z);
    return out;
}

double scan_step(const charfn::ModeChar& m) {
    const double xmax = std::max(m.x_plus, m.x_minus);
    return std::min(0.05, M_PI / (4.0 * xmax));
}

int contour_count(const std::function<ScaledDet(charfn::Complex)>& F,
                  const Rect& rect) {
    if (rect.im_hi - rect.im_lo > 1.0 + 1e-12)
        throw domain_error("argument_principle_count: rectangle height > 1");
    using charfn::Complex;
    const Complex corners[4] = {Complex(rect.re_lo, rect.im_lo),
                                Complex(rect.re_hi, rect.im_lo),
                                Complex(rect.re_hi, rect.im_hi),
                                Complex(rect.re_lo, rect.im_hi)};
    auto integral = [&](int n_per_side, double* min_scaled) {
        Complex total(0.0, 0.0);
        double min_ratio = 1e300;
        for (int side = 0; side < 4; ++side) {
            const Complex z0 = corners[side];
            const Complex z1 = corners[(side + 1) % 4];
            const Complex dz = (z1 - z0) / static_cast<double>(n_per_side);
            Complex prev_ratio;
            for (int i = 0; i <= n_per_side; ++i) {
                const Complex z = z0 + dz * static_cast<double>(i);
                ScaledDet d = F(z);
                if (d.local_scale > 0.0)
                    min_ratio = std::min(min_ratio,
                                         std::abs(d.value) / d.local_scale);
                const Complex ratio = d.dvalue / d.value;
                if (i > 0) total += 0.5 * (ratio + prev_ratio) * dz;
                prev_ratio = ratio;
            }
        }
        if (min_scaled) *min_scaled = min_ratio;
        return total / Complex(0.0, 2.0 * M_PI);
    };

    int n = 64;
    double min_scaled = 0.0;
    Complex prev = integral(n, &min_scaled);
    if (min_scaled < 1e-9)
        throw pole_error("argument_principle_count: zero too close to boundary");
    for (int pass = 0; pass < 8; ++pass) {
        n *= 2;
        const Complex curr = integral(n, nullptr);
        const long r_prev = std::lround(prev.real());
        const long r_curr = std::lround(curr.real());
        if (r_prev == r_curr && std::abs(curr.real() - r_curr) < 0.1 &&
            std::abs(curr.imag()) < 0.1) {
            return static_cast<int>(r_curr);
        }
        prev = curr;
    }
    if (std::abs(prev.real() - std::lround(prev.real())) > 0.1)
        throw accuracy_error(
            "argument_principle_count: integral did not stabilize near an integer");
    return static_cast<int>(std::lround(prev.real()));
}

} // namespace

std::vector<double> find_mode_zeros(int k, double r_max, const CuspBundle& b,
                                    double tol) {
    if (k == 0 && !b.has_mode0())
        throw domain_error("find_mode_zeros: (k, alpha) = (0, 0) is excluded");
    charfn::ModeChar m(k, b);
    RealFn f{[k, &b](double r) {
        return charfn::char_det_scaled(k, charfn::Complex(r, 0.0), b);
    }};
    return scan_zeros(f, r_max, scan_step(m), tol);
}

Mode0Zeros mode0_zero_structure(const CuspBundle& b, double r_max, double tol) {
    if (!b.has_mode0())
        throw domain_error("mode0_zero_structure: requires alpha != 0");
    Mode0Zeros out;
    const ScaledDet at_kernel =
        charfn::char_f0_scaled(charfn::Complex(0.0, 0.5), b);
    out.kernel_residual = std::abs(at_kernel.value) / at_kernel.local_scale;
    out.kernel = out.kernel_residual <= 1e-8;
    charfn::ModeChar m(0, b);
    RealFn f{[&b](double r) {
        return charfn::char_f0_scaled(charfn::Complex(r, 0.0), b);
    }};
    out.zeros = scan_zeros(f, r_max, scan_step(m), tol);
    return out;
}

SpectrumSlice enumerate_eigenvalues(const CuspBundle& b, double lambda_max,
                                    const SolverOptions& opts) {
    SpectrumSlice slice{b, lambda_max, {}, false, 0};
    const double r_max =
        lambda_max > 0.25 ? std::sqrt(lambda_max - 0.25) : 0.0;

    // cutoff heuristic: K_{i r}(x) is zero-free for r well below x
    int k_excluded = 1;
    while (2.0 * M_PI * (k_excluded - b.alpha) * b.a <=
           std::sqrt(std::max(lambda_max, 0.0)) + 2.0)
        ++k_excluded;
    const int hard_limit = k_excluded + 8;

    // probe-verify the first excluded mode; extend if the probe finds zeros
    if (r_max > 0.0) {
        while (k_excluded <= hard_limit) {
            Rect probe{0.0, r_max + 1e-3, -0.5, 0.5};
            const int n = argument_principle_count(k_excluded, probe, b);
            if (n == 0) break;
            ++k_excluded;
        }
        if (k_excluded > hard_limit)
            throw accuracy_error(
                "enumerate_eigenvalues: cutoff verification failed");
    }
    slice.k_cutoff_used = k_excluded - 1;

    // mode scans (k >= 1) run independently
    std::vector<std::vector<double>> per_mode(slice.k_cutoff_used + 1);
    if (r_max > 0.0) {
        if (opts.parallel) {
            std::vector<std::future<std::vector<double>>> futs;
            for (int k = 1; k <= slice.k_cutoff_used; ++k)
                futs.push_back(std::async(std::launch::async, [&, k] {
                    return find_mode_zeros(k, r_max, b, opts.tol);
                }));
            for (int k = 1; k <= slice.k_cutoff_used; ++k)
                per_mode[k] = futs[k - 1].get();
        } else {
            for (int k = 1; k <= slice.k_cutoff_used; ++k)
                per_mode[k] = find_mode_zeros(k, r_max, b, opts.tol);
        }
    }

    auto residual_of = [&](int k, double r) {
        ScaledDet d = k == 0
                          ? charfn::char_f0_scaled(charfn::Complex(r, 0.0), b)
                          : charfn::char_det_scaled(k, charfn::Complex(r, 0.0), b);
        return std::abs(d.value) / std::max(d.local_scale, 1e-300);
    };

    for (int k = 1; k <= slice.k_cutoff_used; ++k) {
        int j = 0;
        for (double r : per_mode[k]) {
            const double lambda = 0.25 + r * r;
            if (lambda > lambda_max) break;
            ++j;
            const double res = residual_of(k, r);
            slice.records.push_back({k, j, r, lambda, res});
            slice.records.push_back({-k, j, r, lambda, res});
        }
    }

    if (b.has_mode0()) {
        // the kernel eigenvalue is analytic, not root-found
        Mode0Zeros m0 = mode0_zero_structure(b, r_max, opts.tol);
        slice.kernel_present = true;
        if (lambda_max >= 0.0)
            slice.records.push_back({0, 0, 0.0, 0.0, m0.kernel_residual});
        int j = 0;
        for (double r : m0.zeros) {
            const double lambda = 0.25 + r * r;
            if (lambda > lambda_max) break;
            ++j;
            slice.records.push_back({0, j, r, lambda, residual_of(0, r)});
        }
    }

    std::stable_sort(slice.records.begin(), slice.records.end(),
                     [](const EigenRecord& x, const EigenRecord& y) {
                         if (x.lambda != y.lambda) return x.lambda < y.lambda;
                         if (x.k != y.k) return x.k < y.k;
                         return x.j < y.j;
                     });
    return slice;
}

int counting_function(const SpectrumSlice& slice, double lambda) {
    if (lambda > slice.lambda_max + 1e-12)
        throw domain_error("counting_function: lambda beyond the slice");
    int n = 0;
    for (const auto& rec : slice.records)
        if (rec.lambda <= lambda) ++n;
    return n;
}

double weyl_ratio(const SpectrumSlice& slice, double lambda) {
    if (!(lambda > 0.0)) throw domain_error("weyl_ratio: lambda must be positive");
    return counting_function(slice, lambda) / lambda;
}

int argument_principle_count(int k, const Rect& rect, const CuspBundle& b) {
    return contour_count(
        [k, &b](charfn::Complex nu) { return charfn::char_det_scaled(k, nu, b); },
        rect);
}

int argument_principle_count_f0(const Rect& rect, const CuspBundle& b) {
    return contour_count(
        [&b](charfn::Complex nu) { return charfn::char_f0_scaled(nu, b); },
        rect);
}

} // namespace cusp::spectrum
