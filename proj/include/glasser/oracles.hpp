#ifndef GLASSER_ORACLES_HPP
#define GLASSER_ORACLES_HPP

// Quadrature-free reference values: Dirichlet-series sums and closed-form
// finite sums that the integral identities can be checked against.

#include <glasser/errors.hpp>
#include <glasser/quadrature.hpp>
#include <glasser/specfun.hpp>

#include <cmath>
#include <utility>
#include <vector>

namespace glasser {

/// Integral over the real line of zeta(c - iv) y^(iv) / (c - iv) for c > 1,
/// y > 0, summed term by term from the Dirichlet series. Each n^(-c) (n y)^(iv)
/// contributes 2 pi y^c when n y < 1, pi y^c when n y = 1 and nothing beyond.
inline double perron_integral(double c, double y)
{
    if (!(c > 1.0))
        throw domain_error("perron_integral: c must exceed 1");
    if (!(y > 0.0))
        throw domain_error("perron_integral: y must be positive");
    double sum = 0.0;
    for (long n = 1;; ++n) {
        const double ny = static_cast<double>(n) * y;
        if (std::abs(ny - 1.0) < 1e-14) {
            sum += pi * std::pow(y, c);
            break;
        }
        if (ny > 1.0)
            break;
        sum += 2.0 * pi * std::pow(y, c);
    }
    return sum;
}


struct series_value {
    double value;
    std::vector<double> partial_sums;
};

/// sum over j >= 1 of 1/(j (j + 1)), with its first `terms` partial sums.
/// The value is the last partial sum plus the telescoped tail 1/(J + 1).
inline series_value dirichlet_intg5b(int terms = 1000)
{
    if (terms < 1)
        throw domain_error("dirichlet_intg5b: need at least one term");
    series_value out{0.0, {}};
    out.partial_sums.reserve(static_cast<std::size_t>(terms));
    double sum = 0.0;
    for (int j = 1; j <= terms; ++j) {
        const double jd = j;
        sum += std::sqrt(jd) / (jd + 1.0) * std::pow(jd, -1.5);
        out.partial_sums.push_back(sum);
    }
    out.value = sum + 1.0 / (terms + 1.0);
    return out;
}

/// Integral of zeta(c - iv)/(c - iv), c = a + b, by the termwise split into
/// a cosine part pi j^(-c) and a sine part pi j^(-c) for j > 1. Each weighted
/// by j^(-c), the two sums cancel except for the j = 1 cosine term.
inline double appendix_b_value(double a, double b, int terms = 10000)
{
    const double c = a + b;
    if (!(c > 1.0))
        throw domain_error("appendix_b_value: need a + b > 1");
    double cos_part = 0.0, sin_part = 0.0;
    for (int j = terms; j >= 1; --j) {
        const double w = std::pow(static_cast<double>(j), -c);
        cos_part += w * pi * w;
        if (j > 1)
            sin_part += w * pi * w;
    }
    return cos_part - sin_part;
}

/// Integral of sech(pi v / 2) sech(pi v)^n over the real line:
/// (-1)^(n-1) (-2 + 2 sqrt(2) sum_{k<n} (-1/4)^k C(2k, k)).
inline double oeis_sum(int n)
{
    if (n < 1)
        throw domain_error("oeis_sum: n must be positive");
    double sum = 0.0, term = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += term;
        term *= -0.25 * (2.0 * k + 1.0) * (2.0 * k + 2.0) / ((k + 1.0) * (k + 1.0));
    }
    const double sign = n % 2 == 1 ? 1.0 : -1.0;
    return sign * (-2.0 + 2.0 * std::sqrt(2.0) * sum);
}

/// -(1 + 2b^2)/(12|b|) + (1/|b|) sum_{j=1}^{ceil(|b|/2) - 1} cot(j pi / b) csc(j pi / b).
/// Even integer b puts double poles on the strip edges and is rejected.
inline double test2g_rhs(double b)
{
    const double m = std::abs(b);
    if (m == 0.0)
        throw domain_error("test2g_rhs: b must be nonzero");
    if (m / 2.0 == std::round(m / 2.0))
        throw domain_error("test2g_rhs: b must not be an even integer");
    double sum = 0.0;
    const int top = static_cast<int>(std::ceil(m / 2.0)) - 1;
    for (int j = 1; j <= top; ++j) {
        const double sn = std::sin(j * pi / m);
        if (std::abs(sn) < 1e-12)
            throw domain_error("test2g_rhs: csc is singular");
        sum += std::cos(j * pi / m) / (sn * sn);
    }
    return -(1.0 + 2.0 * m * m) / (12.0 * m) + sum / m;
}

/// Truncated even-moment expansion of the critical-line integral at b = 1:
/// (1/2) sum_{j<=N} E_2j (zeta^(2j)(it) + zeta^(2j)(1 + it)) / (2^2j (2j)!)
/// minus the boundary term pi / (2 cosh(pi t)).
inline cplx zid_approximation(double t, int N, const context& ctx = default_context())
{
    if (!(t > 0.0))
        throw domain_error("zid_approximation: t must be positive");
    if (N < 0 || N > 6)
        throw domain_error("zid_approximation: N must be in [0, 6]");
    if (N > t * t / 10.0)
        throw domain_error("zid_approximation: N must not exceed t^2 / 10");
    cplx sum = 0.0;
    double scale = 1.0; // 2^2j (2j)!
    for (int j = 0; j <= N; ++j) {
        if (j > 0)
            scale *= 4.0 * (2.0 * j - 1.0) * (2.0 * j);
        const double e = static_cast<double>(euler_number(2 * j, ctx));
        const cplx d = zeta_derivative(cplx(0.0, t), 2 * j, ctx).value +
                       zeta_derivative(cplx(1.0, t), 2 * j, ctx).value;
        sum += e * d / scale;
    }
    return 0.5 * sum - pi / (2.0 * std::cosh(pi * t));
}

/// The Ded1 integral by quadrature and its closed form.
inline std::pair<double, double> ded1_check(const integration_settings& s = {})
{
    const double r2 = std::sqrt(2.0);
    const double b = 1.0 / r2, a = 0.5 - b / 2.0;
    integrand f = [=](double v) {
        const cplx z = riemann_zeta(cplx(a, v)) * riemann_zeta(cplx(a + b, -v));
        return cplx(z.imag() / std::sinh(pi * v / r2) - z.real() / std::cosh(pi * v / r2));
    };
    const double lhs = integrate_real_line(f, pi * b, s, {0.0}).value.re();
    const double rhs = -r2 * riemann_zeta(0.5 - r2 / 4.0) * riemann_zeta(0.5 + r2 / 4.0);
    return {lhs, rhs};
}

} // namespace glasser

#endif
