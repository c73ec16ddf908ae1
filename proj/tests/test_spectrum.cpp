#include "cusp/spectrum.hpp"
#include "cusp/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace cusp;
using charfn::Complex;
using charfn::CuspBundle;

TEST_CASE("no zeros below the first one") {
    CuspBundle b(0.0, 1.0);
    auto zeros = spectrum::find_mode_zeros(1, 5.0, b, 1e-10);
    CHECK(zeros.empty());
}

TEST_CASE("first zero pinned by the dense-scan golden value") {
    CuspBundle b(0.0, 1.0);
    auto zeros = spectrum::find_mode_zeros(1, 9.0, b, 1e-11);
    REQUIRE(!zeros.empty());
    CHECK(std::abs(zeros[0] - 7.684571120027229) < 1e-8);
}

TEST_CASE("zero counts agree with the argument principle") {
    CuspBundle b(0.3, 1.0);
    for (int k : {1, 2}) {
        auto zeros = spectrum::find_mode_zeros(k, 12.0, b, 1e-10);
        spectrum::Rect rect{0.0, 12.0, -0.5, 0.5};
        const int n = spectrum::argument_principle_count(k, rect, b);
        CHECK((int)zeros.size() == n);
    }
}

TEST_CASE("empty rectangle counts zero") {
    CuspBundle b(0.3, 1.0);
    spectrum::Rect rect{0.1, 3.0, -0.4, 0.4}; // below the first zero
    CHECK(spectrum::argument_principle_count(1, rect, b) == 0);
}

TEST_CASE("kernel zero of f0 counts once on a small square") {
    CuspBundle b(0.3, 1.0);
    spectrum::Rect rect{-0.2, 0.2, 0.3, 0.7}; // surrounds nu = i/2
    CHECK(spectrum::argument_principle_count_f0(rect, b) == 1);
}

TEST_CASE("mode 0 structure") {
    CuspBundle b(0.3, 1.0);
    auto m0 = spectrum::mode0_zero_structure(b, 8.0, 1e-10);
    CHECK(m0.kernel);
    CHECK(m0.kernel_residual < 1e-8);
    REQUIRE(m0.zeros.size() >= 2);
    // zeros interlace with sign changes of K_{i nu}(2 pi alpha a): between
    // consecutive f0 zeros the Dirichlet factor changes sign at most ... at
    // least sanity: zeros ascending and simple
    for (size_t i = 1; i < m0.zeros.size(); ++i)
        CHECK(m0.zeros[i] > m0.zeros[i - 1]);
    CHECK_THROWS_AS(spectrum::mode0_zero_structure(CuspBundle(0.0, 1.0), 5.0),
                    cusp::domain_error);
}

TEST_CASE("enumerate: ordering, kernel, stability under cutoff doubling") {
    CuspBundle b(0.3, 1.0);
    spectrum::SolverOptions opts;
    auto slice = spectrum::enumerate_eigenvalues(b, 100.0, opts);
    REQUIRE(!slice.records.empty());
    CHECK(slice.kernel_present);
    CHECK(slice.records[0].lambda == 0.0);
    CHECK(slice.records[0].k == 0);
    for (size_t i = 1; i < slice.records.size(); ++i) {
        CHECK(slice.records[i].lambda >= slice.records[i - 1].lambda);
        CHECK(slice.records[i].lambda >= 0.0);
        CHECK(slice.records[i].residual <= opts.residual_tol);
    }
    // spectra of k and -k coincide
    for (const auto& rec : slice.records) {
        if (rec.k > 0) {
            bool found = false;
            for (const auto& other : slice.records)
                if (other.k == -rec.k && other.j == rec.j &&
                    other.r == rec.r)
                    found = true;
            CHECK(found);
        }
    }
    // no duplicate zeros within 2 tol inside a mode
    for (const auto& rec : slice.records)
        for (const auto& other : slice.records)
            if (rec.k == other.k && rec.j != other.j)
                CHECK(std::abs(rec.r - other.r) > 2.0 * opts.tol);
}

TEST_CASE("counting function and Weyl ratio") {
    CuspBundle b(0.3, 1.0);
    auto slice = spectrum::enumerate_eigenvalues(b, 60.0, {});
    CHECK(spectrum::counting_function(slice, 0.0) == 1); // just the kernel
    const int n30 = spectrum::counting_function(slice, 30.0);
    const int n60 = spectrum::counting_function(slice, 60.0);
    CHECK(n60 >= n30);
    CHECK(spectrum::weyl_ratio(slice, 60.0) ==
          doctest::Approx(n60 / 60.0));
    CHECK_THROWS_AS(spectrum::counting_function(slice, 61.0),
                    cusp::domain_error);
    // N(0) = 0 for the trivial character
    auto slice0 = spectrum::enumerate_eigenvalues(CuspBundle(0.0, 1.0), 60.0, {});
    CHECK(spectrum::counting_function(slice0, 0.0) == 0);
    CHECK_FALSE(slice0.kernel_present);
}

TEST_CASE("deterministic reproducibility bit-for-bit") {
    CuspBundle b(0.3, 1.0);
    auto s1 = spectrum::enumerate_eigenvalues(b, 80.0, {});
    auto s2 = spectrum::enumerate_eigenvalues(b, 80.0, {});
    REQUIRE(s1.records.size() == s2.records.size());
    for (size_t i = 0; i < s1.records.size(); ++i) {
        CHECK(s1.records[i].r == s2.records[i].r);
        CHECK(s1.records[i].lambda == s2.records[i].lambda);
        CHECK(s1.records[i].residual == s2.records[i].residual);
    }
}

TEST_CASE("rectangle height guard") {
    CuspBundle b(0.3, 1.0);
    spectrum::Rect tall{0.0, 5.0, -1.0, 1.0};
    CHECK_THROWS_AS(spectrum::argument_principle_count(1, tall, b),
                    cusp::domain_error);
}
