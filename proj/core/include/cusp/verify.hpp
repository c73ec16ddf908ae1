#ifndef CUSP_VERIFY_HPP
#define CUSP_VERIFY_HPP

#include "cusp/serialize.hpp"

#include <string>
#include <vector>

namespace cusp::verify {

struct Options {
    // trims the heaviest grids (for CI smoke runs); the acceptance gate runs
    // with quick = false
    bool quick = false;
    // directory holding golden.json; empty means the embedded defaults
    std::string golden_dir;
};

// Golden-file values (frozen oracles and calibrated constants).
struct Golden {
    double r_1_1_alpha0_a1 = 7.684571120027229;
    double first_g1_zero_alpha03_a1 = 6.209684665794661;
    double k0_at_1 = 0.42102443824070834;
    int abel_plana_sign = 1;
};
Golden load_golden(const std::string& dir);

// Runs the acceptance criteria (AC1..AC15) plus a set of cross-module
// invariant checks (INV-*), one report per check.
std::vector<io::VerifyReport> run_suite(const Options& opts);

// True iff no report failed.
bool all_passed(const std::vector<io::VerifyReport>& reports);

} // namespace cusp::verify

#endif
