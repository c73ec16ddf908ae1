// Command-line front end: spectra, zeta evaluations, constant-mode
// determinant pieces, asymptotic reports, and the verification suite.
//
// Exit codes: 0 success, 2 configuration error, 3 solver failure,
// 4 verification failure.  stdout carries data, stderr diagnostics.

#include "cusp/errors.hpp"
#include "cusp/serialize.hpp"
#include "cusp/spectrum.hpp"
#include "cusp/verify.hpp"
#include "cusp/zetadet.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

struct RunConfig {
    double alpha = 0.3;
    double a = 1.0;
    double mu = 1.0;
    double lambda_max = 100.0;
    int k_max = 40;
    double s_re = 1.5;
    double s_im = 0.0;
    double tol = 1e-10;
    double delta = cusp::charfn::kDefaultDelta;
    std::string format = "json";
    std::string out_path;
    std::string theorem = "mu-alpha";
    bool quick = false;
};

int emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::fputs(payload.c_str(), stdout);
        return 0;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "cannot open output path %s\n",
                     cfg.out_path.c_str());
        return 3;
    }
    out << payload;
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    cusp::charfn::CuspBundle bundle(cfg.alpha, cfg.a);
    cusp::spectrum::SolverOptions opts;
    opts.tol = cfg.tol;
    auto slice =
        cusp::spectrum::enumerate_eigenvalues(bundle, cfg.lambda_max, opts);
    const std::string payload = cfg.format == "csv"
                                    ? cusp::io::spectrum_to_csv(slice)
                                    : cusp::io::spectrum_to_json(slice);
    return emit(cfg, payload);
}

int cmd_zeta(const RunConfig& cfg) {
    if (!(cfg.s_re > 1.0 && cfg.s_re < 2.0)) {
        std::fprintf(stderr,
                     "zeta: the integral route requires 1 < Re s < 2 "
                     "(got %g)\n",
                     cfg.s_re);
        return 2;
    }
    cusp::charfn::CuspBundle bundle(cfg.alpha, cfg.a);
    const std::complex<double> s(cfg.s_re, cfg.s_im);
    auto slice =
        cusp::spectrum::enumerate_eigenvalues(bundle, cfg.lambda_max, {});
    auto direct = cusp::zetadet::zeta_direct(s, cfg.mu, slice);
    cusp::zetadet::ZetaIntegralOptions opts;
    opts.k_max = cfg.k_max;
    opts.tol = std::min(cfg.tol, 1e-9);
    opts.delta = cfg.delta;
    auto integral = cusp::zetadet::zeta_integral(s, cfg.mu, bundle, opts);
    return emit(cfg, cusp::io::zeta_pair_to_json(direct, integral));
}

int cmd_mode0_det(const RunConfig& cfg) {
    if (cfg.alpha == 0.0) {
        std::fprintf(stderr,
                     "mode0-det: the constant mode exists only for a "
                     "non-trivial character (alpha != 0)\n");
        return 2;
    }
    cusp::charfn::CuspBundle bundle(cfg.alpha, cfg.a);
    auto pieces = cusp::zetadet::mode0_aw_logdet_derivative(cfg.mu, bundle);
    return emit(cfg, cusp::io::mode0_to_json(pieces));
}

int cmd_asymptotics(const RunConfig& cfg) {
    cusp::zetadet::AsympReport rep;
    if (cfg.theorem == "mu-alpha") {
        cusp::charfn::CuspBundle bundle(cfg.alpha, cfg.a);
        rep = cusp::zetadet::asymptotic_logdet_mu(bundle, cfg.mu);
    } else if (cfg.theorem == "mu-alpha0") {
        rep = cusp::zetadet::asymptotic_logdet_mu_alpha0(cfg.a, cfg.mu);
    } else if (cfg.theorem == "a-alpha") {
        cusp::charfn::CuspBundle bundle(cfg.alpha, cfg.a);
        rep = cusp::zetadet::asymptotic_logdet_a(bundle);
    } else if (cfg.theorem == "a-alpha0") {
        rep = cusp::zetadet::asymptotic_logdet_a_alpha0(cfg.a);
    } else {
        std::fprintf(stderr, "unknown theorem selector %s\n",
                     cfg.theorem.c_str());
        return 2;
    }
    return emit(cfg, cusp::io::asymp_report_to_json(rep));
}

int cmd_verify(const RunConfig& cfg) {
    cusp::verify::Options opts;
    opts.quick = cfg.quick;
    if (const char* dir = std::getenv("CUSP_SPECTRA_GOLDEN"))
        opts.golden_dir = dir;
    auto reports = cusp::verify::run_suite(opts);
    const int rc = emit(cfg, cusp::io::verify_reports_to_json(reports));
    if (rc != 0) return rc;
    for (const auto& r : reports) {
        const char* status =
            r.status == cusp::io::VerifyReport::Status::pass   ? "PASS"
            : r.status == cusp::io::VerifyReport::Status::fail ? "FAIL"
                                                               : "SKIP";
        std::fprintf(stderr, "[%s] %s (measured %.5g, threshold %.5g) %s\n",
                     status, r.check_id.c_str(), r.measured, r.threshold,
                     r.notes.c_str());
    }
    return cusp::verify::all_passed(reports) ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral toolkit for the cusp pseudo-Laplacian with "
                 "Alvarez-Wentworth boundary conditions"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha,
                        "bundle holonomy parameter in [0,1)");
        sub->add_option("--a", cfg.a, "cusp height a > 0");
        sub->add_option("--mu", cfg.mu, "spectral shift mu >= 0");
        sub->add_option("--lambda-max", cfg.lambda_max,
                        "eigenvalue range of the slice");
        sub->add_option("--k-max", cfg.k_max, "modes used by the zeta route");
        sub->add_option("--s-re", cfg.s_re, "Re s");
        sub->add_option("--s-im", cfg.s_im, "Im s");
        sub->add_option("--tol", cfg.tol, "solver tolerance");
        sub->add_option("--delta", cfg.delta,
                        "interval-splitting exponent (< 1/6)");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--theorem", cfg.theorem,
                        "asymptotics selector: mu-alpha, mu-alpha0, a-alpha, "
                        "a-alpha0")
            ->check(CLI::IsMember(
                {"mu-alpha", "mu-alpha0", "a-alpha", "a-alpha0"}));
        sub->add_flag("--quick", cfg.quick, "trimmed verification grids");
    };

    auto* sp = app.add_subcommand("spectrum", "enumerate eigenvalues");
    auto* ze = app.add_subcommand("zeta", "zeta function by both routes");
    auto* m0 = app.add_subcommand(
        "mode0-det", "constant-mode determinant derivative pieces");
    auto* as = app.add_subcommand("asymptotics", "theorem-level evaluators");
    auto* ve = app.add_subcommand("verify", "run the verification suite");
    for (auto* sub : {sp, ze, m0, as, ve}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!(cfg.alpha >= 0.0 && cfg.alpha < 1.0) || !(cfg.a > 0.0) ||
            !(cfg.mu >= 0.0) || !(cfg.tol > 0.0)) {
            std::fprintf(stderr, "invalid configuration\n");
            return 2;
        }
        cusp::charfn::validate_delta(cfg.delta);
        if (sp->parsed()) return cmd_spectrum(cfg);
        if (ze->parsed()) return cmd_zeta(cfg);
        if (m0->parsed()) return cmd_mode0_det(cfg);
        if (as->parsed()) return cmd_asymptotics(cfg);
        if (ve->parsed()) return cmd_verify(cfg);
    } catch (const cusp::domain_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 3;
    }
    return 2;
}
