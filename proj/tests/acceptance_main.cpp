// Acceptance gate: runs every criterion at its stated tolerance and prints
// one pass/fail line per check.  Exit code 0 iff everything passed.

#include "cusp/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    cusp::verify::Options opts;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) opts.quick = true;
    if (const char* dir = std::getenv("CUSP_SPECTRA_GOLDEN")) {
        opts.golden_dir = dir;
    }
    auto reports = cusp::verify::run_suite(opts);
    int failures = 0;
    for (const auto& r : reports) {
        const char* status =
            r.status == cusp::io::VerifyReport::Status::pass   ? "PASS"
            : r.status == cusp::io::VerifyReport::Status::fail ? "FAIL"
                                                                : "SKIP";
        if (r.status == cusp::io::VerifyReport::Status::fail) ++failures;
        std::printf("[%s] %-36s measured=%#12.5g threshold=%#12.5g %s\n",
                    status, r.check_id.c_str(), r.measured, r.threshold,
                    r.notes.c_str());
    }
    std::printf("%d checks, %d failures\n", (int)reports.size(), failures);
    return failures == 0 ? 0 : 1;
}
