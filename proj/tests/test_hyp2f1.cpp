#include "cusp/hyp2f1.hpp"
#include "cusp/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace cusp::specfun;

TEST_CASE("value at t = 0 and domain errors") {
    CHECK(hyp2f1(1.7, 0.4, 2.2, 0.0) == 1.0);
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, 1.0), cusp::domain_error);
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, -0.1), cusp::domain_error);
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, -2.0, 0.3), cusp::domain_error);
}

TEST_CASE("closed form F(1,1;2;t) = -log(1-t)/t") {
    for (double t : {0.2, 0.5, 0.75, 0.9}) {
        const double ref = -std::log1p(-t) / t;
        CHECK(std::abs(hyp2f1(1.0, 1.0, 2.0, t) - ref) < 1e-12 * ref);
    }
}

TEST_CASE("contiguous relation") {
    // c(1-t)F(a,b;c;t) - c F(a,b-1;c;t) + (c-a) t F(a,b;c+1;t) = 0
    auto residual = [](double a, double b, double c, double t) {
        const double f1 = hyp2f1(a, b, c, t);
        const double f2 = hyp2f1(a, b - 1.0, c, t);
        const double f3 = hyp2f1(a, b, c + 1.0, t);
        return c * (1.0 - t) * f1 - c * f2 + (c - a) * t * f3;
    };
    CHECK(std::abs(residual(2.0, 1.0, 3.5, 0.3)) < 1e-10);
    CHECK(std::abs(residual(1.5, 2.0, 4.0, 0.45)) < 1e-10);
    CHECK(std::abs(residual(3.0, 1.0, 5.5, 0.2)) < 1e-10);
}

TEST_CASE("reflection identity against the direct routes") {
    // overlap agreement at (n,c,t) = (2, 3.2, 0.9)
    {
        const double direct = hyp2f1(2.0, 1.0, 3.2, 0.9);
        const double refl = hyp2f1_reflect(2, 3.2, 0.9);
        CHECK(std::abs(direct - refl) < 1e-10 * std::abs(direct));
    }
    // parameter reduction to the F(1,1;2;.) closed form: F(1,1;2.5;t) has no
    // elementary form, but n=1, c=2 reduces exactly
    {
        const double t = 0.5;
        const double closed = -std::log1p(-t) / t;
        // c = 2 makes c-n-1 = 0, excluded; approach via c = 2.5 against the
        // series route instead
        const double refl = hyp2f1_reflect(1, 2.5, t);
        const double series = hyp2f1(1.0, 1.0, 2.5, t);
        CHECK(std::abs(refl - series) < 1e-10 * std::abs(series));
        CHECK(std::abs(hyp2f1(1.0, 1.0, 2.0, t) - closed) <
              1e-12 * std::abs(closed));
    }
    // t -> 0+: the two parts of the identity separately carry the singular
    // structure t^{1-c} with a positive Gamma prefactor, cancelling to the
    // regular limit F -> 1; check the lead-term sign and the cancellation.
    {
        const double t = 1e-3, c = 2.5;
        const int n = 3;
        const double lead = std::exp(std::lgamma(c) + std::lgamma(n + 1.0 - c) -
                                     std::lgamma((double)n)) *
                            std::pow(1.0 - t, c - n - 1.0) *
                            std::pow(t, 1.0 - c);
        CHECK(lead > 0.0);                 // sign of the singular structure
        CHECK(lead > 1e3);                 // t^{-1.5} blow-up at t = 1e-3
        const double total = hyp2f1_reflect(n, c, t);
        CHECK(std::abs(total - hyp2f1(n, 1.0, c, t)) < 1e-9);
        CHECK(std::abs(total - 1.0) < 0.02); // regular limit survives
    }
    CHECK_THROWS_AS(hyp2f1_reflect(2, 3.0, 0.5), cusp::domain_error);
}

TEST_CASE("route agreement across the t = 0.5 switch") {
    for (double t : {0.49, 0.51}) {
        const double a = 1.2, bb = 0.8, c = 2.6;
        // Euler route needs c > b > 0; compare both entry points
        const double v = hyp2f1(a, bb, c, t);
        double series = 1.0, term = 1.0;
        for (int k = 0; k < 200; ++k) {
            term *= (a + k) * (bb + k) / ((c + k) * (k + 1.0)) * t;
            series += term;
        }
        CHECK(std::abs(v - series) < 1e-11 * std::abs(series));
    }
}
