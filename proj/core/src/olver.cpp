#include "cusp/olver.hpp"
#include "cusp/errors.hpp"

#include <cmath>

namespace cusp::specfun {

double OlverPolynomial::eval(double t) const {
    double acc = 0.0;
    for (int i = degree; i >= 0; --i)
        acc = acc * t + boost::rational_cast<double>(coefficients[i]);
    return acc;
}

OlverPolynomial OlverPolynomial::derivative() const {
    OlverPolynomial d;
    if (degree == 0) {
        d.degree = 0;
        d.coefficients = {Rational(0)};
        return d;
    }
    d.degree = degree - 1;
    d.coefficients.resize(degree);
    for (int i = 1; i <= degree; ++i)
        d.coefficients[i - 1] = coefficients[i] * Rational(i);
    return d;
}

namespace {

OlverPolynomial trim(OlverPolynomial p) {
    while (p.degree > 0 && p.coefficients[p.degree] == Rational(0)) {
        p.coefficients.pop_back();
        --p.degree;
    }
    return p;
}

OlverPolynomial add(const OlverPolynomial& a, const OlverPolynomial& b) {
    OlverPolynomial r;
    r.degree = std::max(a.degree, b.degree);
    r.coefficients.assign(r.degree + 1, Rational(0));
    for (int i = 0; i <= a.degree; ++i) r.coefficients[i] += a.coefficients[i];
    for (int i = 0; i <= b.degree; ++i) r.coefficients[i] += b.coefficients[i];
    return trim(r);
}

OlverPolynomial scale(const OlverPolynomial& a, Rational c) {
    OlverPolynomial r = a;
    for (auto& coeff : r.coefficients) coeff *= c;
    return r;
}

// multiply by t^k
OlverPolynomial shift(const OlverPolynomial& a, int k) {
    OlverPolynomial r;
    r.degree = a.degree + k;
    r.coefficients.assign(r.degree + 1, Rational(0));
    for (int i = 0; i <= a.degree; ++i) r.coefficients[i + k] = a.coefficients[i];
    return r;
}

OlverPolynomial integral_from_zero(const OlverPolynomial& a) {
    OlverPolynomial r;
    r.degree = a.degree + 1;
    r.coefficients.assign(r.degree + 1, Rational(0));
    for (int i = 0; i <= a.degree; ++i)
        r.coefficients[i + 1] = a.coefficients[i] / Rational(i + 1);
    return r;
}

// doubles of U_k/V_k coefficients for the numeric expansions, built once
struct UVTables {
    std::vector<std::vector<double>> u, v;
    UVTables() {
        auto polys = olver_polys(10);
        for (auto& [up, vp] : polys) {
            std::vector<double> uc(up.degree + 1), vc(vp.degree + 1);
            for (int i = 0; i <= up.degree; ++i)
                uc[i] = boost::rational_cast<double>(up.coefficients[i]);
            for (int i = 0; i <= vp.degree; ++i)
                vc[i] = boost::rational_cast<double>(vp.coefficients[i]);
            u.push_back(std::move(uc));
            v.push_back(std::move(vc));
        }
    }
    static double eval(const std::vector<double>& c, double t) {
        double acc = 0.0;
        for (int i = (int)c.size() - 1; i >= 0; --i) acc = acc * t + c[i];
        return acc;
    }
};

const UVTables& uv_tables() {
    static const UVTables tables;
    return tables;
}

// U-series and V-series at (nu, p) with n terms
double useries(double nu, double p, int n) {
    const auto& tab = uv_tables();
    double acc = 0.0, sign = 1.0, nupow = 1.0;
    for (int k = 0; k < n && k < (int)tab.u.size(); ++k) {
        acc += sign * UVTables::eval(tab.u[k], p) / nupow;
        sign = -sign;
        nupow *= nu;
    }
    return acc;
}

double vseries(double nu, double p, int n) {
    const auto& tab = uv_tables();
    double acc = 0.0, sign = 1.0, nupow = 1.0;
    for (int k = 0; k < n && k < (int)tab.v.size(); ++k) {
        acc += sign * UVTables::eval(tab.v[k], p) / nupow;
        sign = -sign;
        nupow *= nu;
    }
    return acc;
}

} // namespace

std::vector<std::pair<OlverPolynomial, OlverPolynomial>> olver_polys(int n_max) {
    if (n_max < 0) throw domain_error("olver_polys: n_max must be >= 0");
    std::vector<OlverPolynomial> u(n_max + 1);
    u[0].degree = 0;
    u[0].coefficients = {Rational(1)};
    for (int k = 0; k < n_max; ++k) {
        // t^2 (1-t^2)/2 U_k'
        OlverPolynomial d = u[k].derivative();
        OlverPolynomial part1 =
            add(scale(shift(d, 2), Rational(1, 2)),
                scale(shift(d, 4), Rational(-1, 2)));
        // (1/8) int_0^t (1 - 5x^2) U_k dx
        OlverPolynomial integrand =
            add(u[k], scale(shift(u[k], 2), Rational(-5)));
        OlverPolynomial part2 = scale(integral_from_zero(integrand), Rational(1, 8));
        u[k + 1] = add(part1, part2);
    }
    std::vector<std::pair<OlverPolynomial, OlverPolynomial>> out;
    for (int k = 0; k <= n_max; ++k) {
        OlverPolynomial v;
        if (k == 0) {
            v.degree = 0;
            v.coefficients = {Rational(1)};
        } else {
            OlverPolynomial du = u[k - 1].derivative();
            // U_k - t(1-t^2)/2 U_{k-1} - t^2(1-t^2) U_{k-1}'
            OlverPolynomial term1 =
                add(scale(shift(u[k - 1], 1), Rational(-1, 2)),
                    scale(shift(u[k - 1], 3), Rational(1, 2)));
            OlverPolynomial term2 =
                add(scale(shift(du, 2), Rational(-1)), shift(du, 4));
            v = add(u[k], add(term1, term2));
        }
        out.emplace_back(u[k], v);
    }
    return out;
}

double olver_xi(double z) {
    if (!(z > 0.0)) throw domain_error("olver_xi: z must be positive");
    const double s = std::sqrt(1.0 + z * z);
    return s + std::log(z / (1.0 + s));
}

double olver_p(double z) {
    if (!(z > 0.0)) throw domain_error("olver_p: z must be positive");
    return 1.0 / std::sqrt(1.0 + z * z);
}

ExpansionWithBound bessel_k_uniform(double nu, double z, int n_terms) {
    if (nu < kUniformOrderThreshold)
        throw validity_error("bessel_k_uniform: order below threshold");
    if (!(z > 0.0)) throw domain_error("bessel_k_uniform: z must be positive");
    const double p = olver_p(z);
    const double xi = olver_xi(z);
    const double prefactor = std::sqrt(M_PI / (2.0 * nu)) * std::exp(-nu * xi) *
                             std::pow(1.0 + z * z, -0.25);
    ExpansionWithBound out;
    out.order_used = n_terms;
    out.value = prefactor * useries(nu, p, n_terms);
    // envelope shape 2/nu^n * exp(2 V(U_1)/nu) * V(U_n); the total variations
    // are bounded by the ell_1 coefficient norms on [0,1]
    const auto& tab = uv_tables();
    auto l1 = [&](int k) {
        double s = 0.0;
        for (double c : tab.u[std::min(k, (int)tab.u.size() - 1)])
            s += std::abs(c);
        return s;
    };
    out.remainder_bound = prefactor * 2.0 / std::pow(nu, n_terms) *
                          std::exp(2.0 * l1(1) / nu) * l1(n_terms);
    return out;
}

ExpansionWithBound bessel_kprime_uniform(double nu, double z, int n_terms) {
    if (nu < kUniformOrderThreshold)
        throw validity_error("bessel_kprime_uniform: order below threshold");
    if (!(z > 0.0))
        throw domain_error("bessel_kprime_uniform: z must be positive");
    const double p = olver_p(z);
    const double xi = olver_xi(z);
    const double prefactor = -std::sqrt(M_PI / (2.0 * nu)) * std::exp(-nu * xi) *
                             std::pow(1.0 + z * z, 0.25) / z;
    ExpansionWithBound out;
    out.order_used = n_terms;
    out.value = prefactor * vseries(nu, p, n_terms);
    const auto& tab = uv_tables();
    auto l1v = [&](int k) {
        double s = 0.0;
        for (double c : tab.v[std::min(k, (int)tab.v.size() - 1)])
            s += std::abs(c);
        return s;
    };
    out.remainder_bound = std::abs(prefactor) * 2.0 / std::pow(nu, n_terms) *
                          std::exp(2.0 * l1v(1) / nu) * l1v(n_terms);
    return out;
}

ExpansionWithBound logderiv_uniform(double nu, double x) {
    if (nu < kUniformOrderThreshold)
        throw validity_error("logderiv_uniform: order below threshold");
    if (!(x > 0.0)) throw domain_error("logderiv_uniform: x must be positive");
    const double z = x / nu;
    const double p = olver_p(z);
    const int n = 8;
    ExpansionWithBound out;
    out.order_used = n;
    out.value = -std::sqrt(x * x + nu * nu) * vseries(nu, p, n) /
                useries(nu, p, n);
    // Calibrated envelope C/(x^2+nu^2); worst fitted constant over the
    // validation grid is 6.5e-5, stored with a safety factor in the golden
    // file.
    out.remainder_bound = 0.01 / (x * x + nu * nu);
    return out;
}

double log_bessel_k_uniform(double nu, double x, int n_terms) {
    if (nu < kUniformOrderThreshold)
        throw validity_error("log_bessel_k_uniform: order below threshold");
    const double z = x / nu;
    const double p = olver_p(z);
    return 0.5 * std::log(M_PI / (2.0 * nu)) - nu * olver_xi(z) -
           0.25 * std::log1p(z * z) + std::log(useries(nu, p, n_terms));
}

double dlog_bessel_k_uniform_dnu(double nu, double x, int n_terms) {
    if (nu < kUniformOrderThreshold)
        throw validity_error("dlog_bessel_k_uniform_dnu: order below threshold");
    const double z = x / nu;
    const double s = std::sqrt(1.0 + z * z); // sqrt(nu^2+x^2)/nu
    const double p = 1.0 / s;
    // term derivatives with z = x/nu, dz/dnu = -z/nu, xi'(z) = sqrt(1+z^2)/z:
    //   (1/2)log(pi/2nu)   -> -1/(2 nu)
    //   -nu xi(z)          -> -xi(z) + sqrt(1+z^2)
    //   -(1/4)log(1+z^2)   -> z^2 / (2 nu (1+z^2))
    double acc = -0.5 / nu - olver_xi(z) + s;
    acc += 0.5 * z * z / (nu * (1.0 + z * z));
    // series term: d/dnu log S(nu, p(z(nu)))
    const auto& tab = uv_tables();
    double S = 0.0, dS = 0.0;
    double sign = 1.0, nupow = 1.0;
    // dp/dnu = p^3 x^2 / nu^3 = z^2 p^3 / nu
    const double dpdnu = z * z * p * p * p / nu;
    for (int k = 0; k < n_terms && k < (int)tab.u.size(); ++k) {
        const double uk = UVTables::eval(tab.u[k], p);
        double ukp = 0.0; // derivative of U_k at p
        {
            const auto& c = tab.u[k];
            for (int i = (int)c.size() - 1; i >= 1; --i)
                ukp = ukp * p + i * c[i];
        }
        S += sign * uk / nupow;
        dS += sign * (ukp * dpdnu / nupow - k * uk / (nupow * nu));
        sign = -sign;
        nupow *= nu;
    }
    return acc + dS / S;
}

namespace {

// series value and nu-derivative for either coefficient family
void series_and_dnu(const std::vector<std::vector<double>>& tab, double nu,
                    double x, int n_terms, double& S, double& dS) {
    const double z = x / nu;
    const double p = 1.0 / std::sqrt(1.0 + z * z);
    const double dpdnu = x * x / std::pow(nu * nu + x * x, 1.5);
    S = 0.0;
    dS = 0.0;
    double sign = 1.0, nupow = 1.0;
    for (int k = 0; k < n_terms && k < (int)tab.size(); ++k) {
        const auto& c = tab[k];
        double val = 0.0, der = 0.0;
        for (int i = (int)c.size() - 1; i >= 1; --i) {
            val = val * p + c[i];
            der = der * p + i * c[i];
        }
        val = val * p + c[0];
        S += sign * val / nupow;
        dS += sign * (der * dpdnu / nupow - k * val / (nupow * nu));
        sign = -sign;
        nupow *= nu;
    }
}

} // namespace

double xkprime_over_k_uniform(double nu, double x, int n_terms) {
    if (nu < kUniformOrderThreshold)
        throw validity_error("xkprime_over_k_uniform: order below threshold");
    const auto& tab = uv_tables();
    double su, dsu, sv, dsv;
    series_and_dnu(tab.u, nu, x, n_terms, su, dsu);
    series_and_dnu(tab.v, nu, x, n_terms, sv, dsv);
    return -std::sqrt(x * x + nu * nu) * sv / su;
}

double dxkprime_over_k_uniform_dnu(double nu, double x, int n_terms) {
    if (nu < kUniformOrderThreshold)
        throw validity_error("dxkprime_over_k_uniform_dnu: order below threshold");
    const auto& tab = uv_tables();
    double su, dsu, sv, dsv;
    series_and_dnu(tab.u, nu, x, n_terms, su, dsu);
    series_and_dnu(tab.v, nu, x, n_terms, sv, dsv);
    const double root = std::sqrt(x * x + nu * nu);
    const double ratio = sv / su;
    const double dratio = (dsv * su - sv * dsu) / (su * su);
    return -(nu / root) * ratio - root * dratio;
}

namespace {

ExpansionWithBound large_argument_impl(std::complex<double> nu, double z,
                                       bool primed) {
    if (z < large_argument_threshold(nu))
        throw validity_error("bessel_k_large_argument: z below threshold");
    const std::complex<double> nu2 = 4.0 * nu * nu;
    std::complex<double> bracket;
    if (!primed) {
        bracket = 1.0 + (nu2 - 1.0) / (8.0 * z) +
                  (nu2 - 1.0) * (nu2 - 9.0) / (128.0 * z * z);
    } else {
        bracket = 1.0 + (nu2 + 3.0) / (8.0 * z) +
                  (nu2 - 1.0) * (nu2 + 15.0) / (128.0 * z * z);
    }
    const double pre = std::sqrt(M_PI / (2.0 * z)) * std::exp(-z);
    ExpansionWithBound out;
    out.order_used = 3;
    out.value = (primed ? -pre : pre) * bracket.real();
    // gamma_3-type envelope, constant calibrated in the tests
    const double anu = std::abs(nu);
    out.remainder_bound = pre *
                          (0.1 + std::pow(anu, 6.0)) / (z * z * z) *
                          std::exp((primed ? 2.0 : 1.0) *
                                   std::abs(nu * nu - 0.25) / z);
    return out;
}

} // namespace

ExpansionWithBound bessel_k_large_argument(std::complex<double> nu, double z) {
    return large_argument_impl(nu, z, false);
}

ExpansionWithBound bessel_kprime_large_argument(std::complex<double> nu,
                                                double z) {
    return large_argument_impl(nu, z, true);
}

} // namespace cusp::specfun
