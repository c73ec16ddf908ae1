#include "cusp/serialize.hpp"

#include <doctest.h>

#include <cmath>

using namespace cusp;

TEST_CASE("spectrum JSON round-trip") {
    charfn::CuspBundle b(0.3, 1.0);
    spectrum::SpectrumSlice slice{b, 50.0, {}, true, 2};
    slice.records.push_back({0, 0, 0.0, 0.0, 1e-16});
    slice.records.push_back({1, 1, 1.2345678901234567, 1.774201, 3e-12});
    slice.records.push_back({-1, 1, 1.2345678901234567, 1.774201, 3e-12});
    const std::string text = io::spectrum_to_json(slice);
    auto back = io::spectrum_from_json(text);
    REQUIRE(back.records.size() == slice.records.size());
    for (size_t i = 0; i < slice.records.size(); ++i) {
        CHECK(back.records[i].k == slice.records[i].k);
        CHECK(back.records[i].j == slice.records[i].j);
        CHECK(back.records[i].r == slice.records[i].r);
        CHECK(back.records[i].lambda == slice.records[i].lambda);
        CHECK(back.records[i].residual == slice.records[i].residual);
    }
    CHECK(back.kernel_present == slice.kernel_present);
    CHECK(back.lambda_max == slice.lambda_max);
}

TEST_CASE("CSV schema") {
    charfn::CuspBundle b(0.3, 1.0);
    spectrum::SpectrumSlice slice{b, 50.0, {}, true, 1};
    slice.records.push_back({0, 0, 0.0, 0.0, 0.0});
    const std::string csv = io::spectrum_to_csv(slice);
    CHECK(csv.substr(0, 22) == "k,j,r,lambda,residual\n");
    CHECK(csv.back() == '\n');
    // header-only when empty
    spectrum::SpectrumSlice empty{b, 0.1, {}, false, 0};
    CHECK(io::spectrum_to_csv(empty) == "k,j,r,lambda,residual\n");
}

TEST_CASE("17 significant digits round-trip") {
    const double v = M_PI * 1e-7;
    const std::string s = io::format_double(v);
    CHECK(std::stod(s) == v);
    const double w = 0.1 + 0.2;
    CHECK(std::stod(io::format_double(w)) == w);
}

TEST_CASE("mode0 and asymp report round-trips") {
    zetadet::Mode0DetPieces p;
    p.mu = 10.0;
    p.a_prime = -1.234567890123456789;
    p.r_prime = 2.5;
    p.mtilde_prime = -0.75;
    p.b_prime = 0.0;
    p.total = p.a_prime + p.r_prime + p.mtilde_prime + std::log(10.0);
    auto back = io::mode0_from_json(io::mode0_to_json(p));
    CHECK(back.a_prime == p.a_prime);
    CHECK(back.total == p.total);

    zetadet::AsympReport rep;
    rep.theorem_id = zetadet::TheoremId::a_alpha0;
    rep.a = 10.0;
    rep.term_values = {{"a", 20.0 * M_PI / 3.0}};
    rep.constant = 0.0;
    auto rep2 = io::asymp_report_from_json(io::asymp_report_to_json(rep));
    CHECK(rep2.theorem_id == rep.theorem_id);
    CHECK(rep2.term_values[0].second == rep.term_values[0].second);
}
