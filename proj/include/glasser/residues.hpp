#ifndef GLASSER_RESIDUES_HPP
#define GLASSER_RESIDUES_HPP

// Residues of meromorphic integrands and their classification against the
// strip between Im(v) = 0 and Im(v) = -b.

#include <glasser/errors.hpp>
#include <glasser/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

namespace glasser {

using analytic_fn = std::function<cplx(cplx)>;

inline constexpr double boundary_tolerance = 1e-12;

/// The strip between Im(v) = 0 and Im(v) = -b. For b < 0 it lies above the
/// real axis and the contour runs the other way.
class strip_spec {
public:
    explicit strip_spec(double b) : b_(b)
    {
        if (!(b != 0.0) || !std::isfinite(b))
            throw domain_error("strip_spec: b must be a nonzero finite real");
    }
    double b() const { return b_; }
    int orientation_sign() const { return b_ > 0.0 ? 1 : -1; }
    double lower() const { return std::min(0.0, -b_); }
    double upper() const { return std::max(0.0, -b_); }

    /// 1 strictly inside, 1/2 on either edge, 0 outside.
    double weight(cplx location) const
    {
        const double y = location.imag();
        if (std::abs(y - lower()) <= boundary_tolerance || std::abs(y - upper()) <= boundary_tolerance)
            return 0.5;
        return (y > lower() && y < upper()) ? 1.0 : 0.0;
    }

private:
    double b_;
};

struct pole_spec {
    complex_point location;
    int order = 1;
    double boundary_weight = 1.0;
    std::optional<complex_point> analytic_residue;
};

/// Pole with its weight taken from strip membership.
inline pole_spec make_pole(cplx location, const strip_spec& strip, int order = 1,
                           std::optional<cplx> analytic = std::nullopt)
{
    if (order < 1)
        throw domain_error("make_pole: order must be positive");
    pole_spec p;
    p.location = complex_point(location);
    p.order = order;
    p.boundary_weight = strip.weight(location);
    if (analytic)
        p.analytic_residue = complex_point(*analytic);
    return p;
}

/// (1 / 2 pi i) times the contour integral of f around |v - v0| = radius, by
/// the trapezoidal rule with sample doubling until two estimates agree.
inline cplx numeric_residue(const analytic_fn& f, cplx v0, double radius, int samples = 32)
{
    if (!(radius > 0.0))
        throw domain_error("numeric_residue: radius must be positive");
    if (samples < 4)
        samples = 4;
    auto circle = [&](int m) {
        cplx acc = 0.0;
        for (int k = 0; k < m; ++k) {
            const cplx offset = std::polar(radius, 2.0 * pi * (k + 0.5) / m);
            const cplx value = f(v0 + offset);
            if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
                throw singular_sample("numeric_residue: integrand not finite on the circle");
            acc += value * offset;
        }
        return acc / static_cast<double>(m);
    };
    cplx previous = circle(samples);
    for (int m = 2 * samples; m <= (1 << 16); m *= 2) {
        const cplx current = circle(m);
        if (std::abs(current - previous) <= 1e-12 * std::max(1.0, std::abs(current)))
            return current;
        previous = current;
    }
    throw non_convergence("numeric_residue: circle estimates did not agree");
}

/// Half the distance from `at` to the nearest other listed point, capped at 0.25.
inline double contour_radius(cplx at, const std::vector<cplx>& singularities, double cap = 0.25)
{
    double nearest = 2.0 * cap;
    for (cplx s : singularities) {
        const double d = std::abs(s - at);
        if (d > 1e-14)
            nearest = std::min(nearest, d);
    }
    return std::min(cap, nearest / 2.0);
}

/// Residue at each pole, numerically. Poles with zero weight are skipped
/// (their entry stays 0). `extra` lists singularities outside the pole list
/// that the contour must avoid.
inline std::vector<cplx> numeric_residues(const analytic_fn& f, const std::vector<pole_spec>& poles,
                                          const std::vector<cplx>& extra = {})
{
    std::vector<cplx> all = extra;
    for (const pole_spec& p : poles)
        all.push_back(p.location);
    std::vector<cplx> out;
    out.reserve(poles.size());
    for (const pole_spec& p : poles) {
        if (p.boundary_weight == 0.0) {
            out.emplace_back(0.0);
            continue;
        }
        out.push_back(numeric_residue(f, p.location, contour_radius(p.location, all)));
    }
    return out;
}

enum class criterion_kind { antisymmetric, difference_h, additive_h };

/// Right-hand side of the contour identity from weighted residues.
inline cplx rhs_from_residues(const std::vector<pole_spec>& poles, const std::vector<cplx>& residues,
                              criterion_kind kind, int orientation_sign)
{
    if (residues.size() != poles.size())
        throw unresolved_residue("rhs_from_residues: residue count does not match pole count");
    cplx sum = 0.0;
    for (std::size_t j = 0; j < poles.size(); ++j)
        sum += poles[j].boundary_weight * residues[j];
    const double factor = kind == criterion_kind::antisymmetric ? pi : 2.0 * pi;
    return -factor * I * sum * static_cast<double>(orientation_sign);
}

/// Same, using the analytic residues attached to the poles.
inline cplx rhs_from_residues(const std::vector<pole_spec>& poles, criterion_kind kind, int orientation_sign)
{
    std::vector<cplx> residues;
    for (const pole_spec& p : poles) {
        if (p.boundary_weight == 0.0) {
            residues.emplace_back(0.0);
            continue;
        }
        if (!p.analytic_residue)
            throw unresolved_residue("rhs_from_residues: pole without a residue");
        residues.push_back(*p.analytic_residue);
    }
    return rhs_from_residues(poles, residues, kind, orientation_sign);
}

// ---------------------------------------------------------------------------
// Residue tables for the zeta-power kernel
//   (zeta(a + i v)^n + zeta(a + b - i v)^n) / cosh(pi v / b).

/// Weight of the zeta poles of that kernel: 1 if they lie strictly inside
/// the strip, 1/2 on its edge, 0 outside.
inline double indicator_H(double a, double b)
{
    return strip_spec(b).weight(I * (a - 1.0));
}

/// Poles of the zeta-power kernel with analytic residues, n = 1..4.
inline std::vector<pole_spec> appendix_a_residues(int n, double a, double b,
                                                  const context& ctx = default_context())
{
    if (n < 1 || n > 4)
        throw domain_error("appendix_a_residues: n must be in 1..4");
    const strip_spec strip(b);
    std::vector<pole_spec> poles;
    const cplx z = riemann_zeta(cplx(a + b / 2.0, 0.0), ctx);
    poles.push_back(make_pole(-I * b / 2.0, strip, 1, 2.0 * I * b * std::pow(z, n) / pi));

    const double h = indicator_H(a, b);
    if (h == 0.0)
        return poles;
    const double A = pi * (a - 1.0) / b;
    const double c = std::cos(A);
    const double s = std::sin(A);
    if (std::abs(c) < 1e-14)
        throw domain_error("appendix_a_residues: cos(pi (a - 1) / b) vanishes");
    const double g = euler_gamma;
    const double g1 = stieltjes_constant(1, ctx);
    const double g2 = stieltjes_constant(2, ctx);
    cplx r;
    switch (n) {
    case 1:
        r = -I / c;
        break;
    case 2:
        r = I * (-2.0 * g / c + pi * s / (b * c * c));
        break;
    case 3:
        r = I * ((3.0 * g1 - 3.0 * g * g + pi * pi / (2.0 * b * b)) / c + 3.0 * s * pi * g / (b * c * c) -
                 pi * pi / (b * b * c * c * c));
        break;
    default:
        r = I * ((12.0 * g1 * g - 2.0 * g2 - 4.0 * g * g * g + 2.0 * g * pi * pi / (b * b)) / c -
                 pi * s * (-36.0 * g * g * b * b + 24.0 * g1 * b * b + pi * pi) / (6.0 * b * b * b * c * c) -
                 4.0 * pi * pi * g / (b * b * c * c * c) + pi * pi * pi * s / (b * b * b * c * c * c * c));
        break;
    }
    pole_spec p1 = make_pole(I * (a - 1.0), strip, n, r);
    pole_spec p2 = make_pole(-I * (a + b - 1.0), strip, n, r);
    p1.boundary_weight = h;
    p2.boundary_weight = h;
    poles.push_back(p1);
    poles.push_back(p2);
    return poles;
}

} // namespace glasser

#endif
