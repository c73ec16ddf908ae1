#ifndef CUSP_SPECTRUM_HPP
#define CUSP_SPECTRUM_HPP

#include "cusp/charfn.hpp"

#include <vector>

namespace cusp::spectrum {

using charfn::CuspBundle;

struct EigenRecord {
    int k = 0;
    int j = 0;          // index within the mode; 0 is reserved for the kernel
    double r = 0.0;     // zero of the characteristic function, lambda = 1/4+r^2
    double lambda = 0.0;
    double residual = 0.0; // |det| / local term scale at r
};

struct SpectrumSlice {
    CuspBundle bundle;
    double lambda_max = 0.0;
    std::vector<EigenRecord> records; // sorted by (lambda, k, j)
    bool kernel_present = false;
    int k_cutoff_used = 0;
};

struct SolverOptions {
    double tol = 1e-10;          // bisection interval width target
    double residual_tol = 1e-6;  // accepted scaled residual at a zero
    bool parallel = true;
};

// All zeros of r -> char_det_direct(k, r) in (0, r_max], bracketed by sign
// changes on the scan grid and refined by bisection.
std::vector<double> find_mode_zeros(int k, double r_max, const CuspBundle& b,
                                    double tol = 1e-10);

struct Mode0Zeros {
    bool kernel = false;
    std::vector<double> zeros;
    double kernel_residual = 0.0;
};

// Kernel detection (|f0(i/2)| against the local scale) plus the real zeros
// of f0 on (0, r_max].
Mode0Zeros mode0_zero_structure(const CuspBundle& b, double r_max,
                                double tol = 1e-10);

// Assembles all eigenvalues lambda <= lambda_max across modes, with a
// probe-verified mode cutoff and a deterministic merge.
SpectrumSlice enumerate_eigenvalues(const CuspBundle& b, double lambda_max,
                                    const SolverOptions& opts = {});

// N(lambda) and N(lambda)/lambda over an assembled slice.
int counting_function(const SpectrumSlice& slice, double lambda);
double weyl_ratio(const SpectrumSlice& slice, double lambda);

// Rectangle in the spectral nu-plane.
struct Rect {
    double re_lo = 0.0, re_hi = 0.0;
    double im_lo = -0.5, im_hi = 0.5;
};

// (1/2 pi i) contour integral of f'/f over the rectangle boundary,
// trapezoid nodes doubled until the rounded count stabilizes.
int argument_principle_count(int k, const Rect& rect, const CuspBundle& b);

// Same for the constant-mode function f0 (alpha != 0).
int argument_principle_count_f0(const Rect& rect, const CuspBundle& b);

} // namespace cusp::spectrum

#endif
