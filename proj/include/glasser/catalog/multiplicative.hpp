#ifndef GLASSER_CATALOG_MULTIPLICATIVE_HPP
#define GLASSER_CATALOG_MULTIPLICATIVE_HPP

// F = zeta(a + iv)^r zeta(a + b - iv)^r / ((b - iv)^p (a + b - iv)^q), which
// satisfies F(v) + F(-ib - v) = h(v) F(v). The integrals are of F (2 - h)
// over the half line, i.e. half the line integral of its real part.

#include <glasser/catalog/core.hpp>
#include <glasser/catalog/pairing.hpp>

namespace glasser::cat {

inline analytic_fn fpqr(int r, double p, double q, double a, double b)
{
    return [=](cplx v) {
        const cplx z = std::pow(zeta(a + I * v) * zeta(a + b - I * v), static_cast<double>(r));
        return z / (std::pow(b - I * v, p) * std::pow(a + b - I * v, q));
    };
}

inline analytic_fn fpqr_h(double p, double q, double a, double b)
{
    return [=](cplx v) {
        return 1.0 + std::pow(a + b - I * v, q) * std::pow(b - I * v, p) / (std::pow(I * v, p) * std::pow(a + I * v, q));
    };
}

inline theorem_spec additive_theorem(analytic_fn F, analytic_fn h, double b, const std::vector<cplx>& candidates,
                                     cplx scale, std::vector<cplx> avoid)
{
    theorem_spec t = theorem(std::move(F), b, merged_poles(b, candidates), scale);
    t.kind = criterion_kind::additive_h;
    t.h = std::move(h);
    t.avoid = std::move(avoid);
    return t;
}

/// Half-line integral of an even real integrand g as half its windowed
/// line integral.
inline identity even_windowed(std::function<double(double)> g, theorem_spec t, std::function<cplx()> closed)
{
    identity idn = windowed([g = std::move(g)](double v) { return cplx(g(v)); }, std::move(closed));
    idn.lhs.scale = 0.5;
    idn.lhs.breakpoints = {0.0};
    idn.theorem = std::move(t);
    return idn;
}

/// Half-line integral of a real integrand that decays like a high power of v.
inline identity power_half_line(std::function<double(double)> g, theorem_spec t, std::function<cplx()> closed)
{
    identity idn;
    idn.lhs.where = lhs_spec::domain::half_line;
    idn.lhs.f = [g = std::move(g)](double v) { return cplx(g(v)); };
    idn.lhs.decay_rate = 0.1; // first cut near v = 370
    idn.theorem = std::move(t);
    idn.closed_form = std::move(closed);
    return idn;
}

/// Half-line integral with v = e^u, for integrands with power-law ends.
inline identity log_half_line(std::function<double(double)> g, double decay, theorem_spec t,
                              std::function<cplx()> closed)
{
    identity idn;
    idn.lhs.f = [g = std::move(g)](double u) {
        const double v = std::exp(u);
        return cplx(g(v) * v);
    };
    idn.lhs.decay_rate = decay;
    idn.theorem = std::move(t);
    idn.closed_form = std::move(closed);
    return idn;
}

/// Re of zeta(a + b - iv) zeta(a + iv) (ib + 2v) / ((b - iv)(a + b - iv)(a + iv) v).
inline double fint_r1(double a, double b, double v)
{
    const cplx z = zeta(a + b - I * v) * zeta(a + I * v);
    return (z * (I * b + 2.0 * v) / ((b - I * v) * (a + b - I * v) * (a + I * v) * v)).real();
}

/// Singular points of fpqr near the strip, each repeated by its order: the
/// zeta poles for r > 0, the trivial zeros of both factors for r < 0, -ib and
/// 0 for p > 0, -i(a + b) and ia for q > 0.
inline std::vector<cplx> multiplicative_singular_points(double a, double b, double p, double q, int r)
{
    require(b > 0.0, "poles_multiplicative: b must be positive");
    auto order_of = [](double x, const char* name) {
        require(x <= 0.0 || x == std::round(x), std::string("poles_multiplicative: positive ") + name +
                                                    " must be an integer");
        return x > 0.0 ? static_cast<int>(x) : 0;
    };
    const int np = order_of(p, "p"), nq = order_of(q, "q");
    std::vector<cplx> at;
    auto push = [&](cplx z, int n) { at.insert(at.end(), static_cast<std::size_t>(n), z); };
    if (r > 0) {
        push(I * (a - 1.0), r);
        push(-I * (a + b - 1.0), r);
    }
    for (int k = 1; r < 0 && a + 2.0 * k < 1.0; ++k) {
        push(I * (a + 2.0 * k), -r);
        push(-I * (a + b + 2.0 * k), -r);
    }
    push(-I * b, np);
    push(0.0, np);
    push(-I * (a + b), nq);
    push(I * a, nq);
    return at;
}

/// Poles of fpqr in the strip with their weights; the points on Im(v) = 0
/// and Im(v) = -b carry 1/2.
inline std::vector<pole_spec> poles_multiplicative(double a, double b, double p, double q, int r)
{
    return merged_poles(b, multiplicative_singular_points(a, b, p, q, r));
}

inline theorem_spec fint_r1_theorem(double a, double b, cplx scale)
{
    const std::vector<cplx> at = multiplicative_singular_points(a, b, 1.0, 1.0, 1);
    return additive_theorem(fpqr(1, 1.0, 1.0, a, b), fpqr_h(1.0, 1.0, a, b), b, at, scale, at);
}

/// (2v + ib) / (zeta(a + iv) (b - iv) zeta(a + b - iv) v).
inline cplx fint_rm1(double a, double b, double v)
{
    return (2.0 * v + I * b) / (zeta(a + I * v) * (b - I * v) * zeta(a + b - I * v) * v);
}

/// Poles of 1/(zeta(a + iv) zeta(a + b - iv) (b - iv)) in the strip: -ib and
/// the trivial zeros of both factors.
inline theorem_spec fint_rm1_theorem(double a, double b, cplx scale)
{
    const std::vector<cplx> at = multiplicative_singular_points(a, b, 1.0, 0.0, -1);
    return additive_theorem(fpqr(-1, 1.0, 0.0, a, b), fpqr_h(1.0, 0.0, a, b), b, at, scale, at);
}

/// pi / (2 zeta(a + b) zeta(a)) less the trivial-zero terms for each k with
/// -b < a + 2k < 0, counted once for each zeta factor.
inline double fint_rm1_rhs(double a, double b)
{
    double sum = pi / (2.0 * zeta(a + b) * zeta(a));
    for (int k = 1; a + 2.0 * k < 0.0; ++k) {
        if (!(a + 2.0 * k > -b))
            continue;
        const double dz = zeta_prime(cplx(-2.0 * k)).real();
        sum -= 2.0 * pi * (a + b / 2.0 + 2.0 * k) /
               (dz * (a + b + 2.0 * k) * zeta(2.0 * a + 2.0 * k + b) * (a + 2.0 * k));
    }
    return sum;
}

/// The FintBx integrand written without cancellation between its terms.
inline double fint_bx(double a, double b, double v)
{
    const double c = a + b;
    const double rho = std::hypot(a, v), r = std::hypot(c, v);
    const double A = std::sqrt(rho + a), B = std::sqrt(r + c);
    // -sqrt(rho - a)/v = -1/A and v sqrt(r - c) = v^2 / B.
    const double a_minus_b = ((a * a - c * c) / (rho + r) + a - c) / (A + B);
    const double w = b * b + v * v;
    return (v * v * a_minus_b - b * b * B) / (A * B * w) + b * B / w;
}

inline double fint_bx2(double v)
{
    const double r = std::hypot(1.0, v);
    const double s = std::sqrt(v * (r + 1.0));
    // r - sqrt(v (r + 1)) with r^2 - v r - v = 1 - v - v / (v + r).
    return (1.0 - v - v / (v + r)) / ((r + s) * r * std::sqrt(v));
}

inline void add_multiplicative(std::vector<catalog_entry>& out)
{
    const std::string sec = "4.3";
    const std::string fam = "multiplicative_h";

    auto r1 = [](double a, double b, std::function<cplx()> closed) {
        require(b > 0.0, "b must be positive");
        require(std::abs(a) > 1e-6 && std::abs(a - 1.0) > 1e-6 && std::abs(a + b) > 1e-6 &&
                    std::abs(a + b - 1.0) > 1e-6 && std::abs(2.0 * a + b - 2.0) > 1e-6,
                "a sits on a singular value");
        return even_windowed([a, b](double v) { return fint_r1(a, b, v); },
                             fint_r1_theorem(a, b, 1.0 / (2.0 * (a + b))), std::move(closed));
    };
    auto lead = [](double a, double b) { return pi * zeta(a + b) * zeta(a) / (2.0 * (a + b) * a); };

    out.push_back({"FintB1", sec, fam, {open("a", 0.3, -3.0, 3.0), left_open("b", 1.2, 0.0, 3.0)},
                   "pi zeta(a + b) zeta(a) / (2 (a + b) a) - pi zeta(2a - 1 + b) (2a + b - 2) / "
                   "((a + b - 1)(2a - 1 + b)(a - 1))",
                   "r = p = q = 1 with 1 - b < a < 1",
                   [=](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       require(a > 1.0 - b && a < 1.0, "need 1 - b < a < 1");
                       return r1(a, b, [=] {
                           return cplx(lead(a, b) - pi * zeta(2.0 * a - 1.0 + b) * (2.0 * a + b - 2.0) /
                                                        ((a + b - 1.0) * (2.0 * a - 1.0 + b) * (a - 1.0)));
                       });
                   }});

    out.push_back({"Fint1B", sec, fam, {open("a", 1.5, -3.0, 3.0), left_open("b", 1.0, 0.0, 3.0)},
                   "pi zeta(a + b) zeta(a) / (2 (a + b) a)", "a > 1 or a < -b",
                   [=](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       require(a > 1.0 || a < -b, "need a > 1 or a < -b");
                       return r1(a, b, [=] { return cplx(lead(a, b)); });
                   }});

    out.push_back({"Fint1C", sec, fam, {open("a", -0.1, -0.3, 0.0), left_open("b", 1.0, 0.0, 3.0)},
                   "pi zeta(a + b) zeta(a) / (2 (a + b) a) + pi zeta(2a + b) / (2 (a + b) a)",
                   "-b < a < 0 and a + b < 1, so that the zeta poles stay outside the strip",
                   [=](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       require(a > -b && a < 0.0 && a + b < 1.0, "need -b < a < 0 and a + b < 1");
                       return r1(a, b, [=] { return cplx(lead(a, b) + pi * zeta(2.0 * a + b) / (2.0 * (a + b) * a)); });
                   }});

    out.push_back({"Fint1", sec, fam, {}, "pi zeta(1/2) / 3 - pi zeta(1/4) zeta(5/4) / 10",
                   "a = 1/4, b = 1 imaginary-part form",
                   [](const param_map&) {
                       auto g = [](double v) {
                           const cplx num = zeta(cplx(1.25, -v)) * (1.0 - 2.0 * I * v) * zeta(cplx(0.25, v));
                           const cplx den = (1.0 - I * v) * (5.0 - 4.0 * I * v) * (1.0 + 4.0 * I * v) * v;
                           return (num / den).imag();
                       };
                       return even_windowed(g, fint_r1_theorem(0.25, 1.0, -1.0 / 40.0), [] {
                           return cplx(pi * zeta(0.5) / 3.0 - pi * zeta(0.25) * zeta(1.25) / 10.0);
                       });
                   }});

    out.push_back({"FintBx", sec, fam, {left_open("a", 2.0, 0.0, 10.0), left_open("b", 3.0, 0.0, 10.0)},
                   "pi sqrt(a/2)", "r = 0, p = 1, q = -1/2; independent of b",
                   [](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       theorem_spec t = additive_theorem(fpqr(0, 1.0, -0.5, a, b), fpqr_h(1.0, -0.5, a, b), b,
                                                         {-I * b}, 1.0 / std::sqrt(2.0), {0.0, -I * (a + b), I * a});
                       return log_half_line([a, b](double v) { return fint_bx(a, b, v); }, 0.5, std::move(t),
                                            [a] { return cplx(pi * std::sqrt(a / 2.0)); });
                   }});

    out.push_back({"FintBx2", sec, fam, {}, "0",
                   "a -> 0 with b = 1; the branch point at -i on the edge is integrable and adds nothing",
                   [](const param_map&) {
                       theorem_spec t = additive_theorem(fpqr(0, 1.0, -0.5, 0.0, 1.0), fpqr_h(1.0, -0.5, 0.0, 1.0),
                                                         1.0, {}, -1.0 / std::sqrt(2.0), {});
                       return log_half_line(fint_bx2, 0.5, std::move(t), value(0.0));
                   }});

    auto rm1 = [](double a, double b, std::function<cplx()> closed, cplx extra = 1.0) {
        return even_windowed([a, b, extra](double v) { return (extra * fint_rm1(a, b, v)).real(); },
                             fint_rm1_theorem(a, b, 0.5 * extra), std::move(closed));
    };

    out.push_back({"FintG1", sec, fam, {open("a", 2.0, 1.0, 6.0), left_open("b", 1.0, 0.0, 6.0)},
                   "pi / (2 zeta(a + b) zeta(a))", "r = -1, p = 1, q = 0 with 0 < b < a",
                   [=](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       require(b < a, "need b < a");
                       return rm1(a, b, [=] { return cplx(pi / (2.0 * zeta(a + b) * zeta(a))); });
                   }});

    out.push_back({"FintG1a", sec, fam, {open("b", 2.0, 1.0, 6.0)}, "0", "a = 1",
                   [=](const param_map& p) { return rm1(1.0, p.at("b"), value(0.0)); }});

    out.push_back({"FintG1b", sec, fam, {open("b", 3.0, 1.0, 6.0)}, "0",
                   "difference of the two sides of the transformation",
                   [](const param_map& p) {
                       const double b = p.at("b");
                       auto g = [b](double v) {
                           const cplx q = 1.0 / (zeta(cplx(1.0, v)) * zeta(cplx(b + 1.0, -v)));
                           return (q / (b - I * v)).real() - (q / v).imag();
                       };
                       return even_windowed(g, fint_rm1_theorem(1.0, b, 0.5), value(0.0));
                   }});

    out.push_back({"FintG2", sec, fam, {closed("a", -3.0, -8.0, -2.0), left_open("b", 2.5, 0.0, 8.0)},
                   "pi / (2 zeta(a + b) zeta(a)) - sum over trivial zeros -2k in the strip of "
                   "2 pi (a + b/2 + 2k) / (zeta'(-2k) (a + b + 2k) zeta(2a + 2k + b) (a + 2k))",
                   "a + b <= 0 keeps the critical strip out of the strip",
                   [=](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       require(a + b <= 0.0, "need a + b <= 0");
                       for (int k = 1; a + 2.0 * k < 1.0; ++k)
                           require(std::abs(a + 2.0 * k) > 1e-6 && std::abs(a + 2.0 * k + b) > 1e-6,
                                   "a trivial zero sits on the strip edge");
                       for (int k = 1; a + 2.0 * k < 0.0; ++k) {
                           const double m = 2.0 * a + 2.0 * k + b;
                           require(!(m <= 0.0 && std::abs(m / 2.0 - std::round(m / 2.0)) < 1e-9),
                                   "two trivial zeros coincide and the pole is double");
                       }
                       return power_half_line([a, b](double v) { return fint_rm1(a, b, v).real(); },
                                              fint_rm1_theorem(a, b, 0.5), [=] { return cplx(fint_rm1_rhs(a, b)); });
                   }});

    out.push_back({"FintG3", sec, fam, {},
                   "96 pi^5 / (7 zeta(5)) - 64 pi^3 / zeta(3) - pi / (4 zeta(-1/2) zeta(-9/2))",
                   "a = -9/2, b = 4; four trivial-zero poles",
                   [=](const param_map&) {
                       auto g = [](double v) {
                           const cplx d = zeta(cplx(-4.5, v)) * (I * v - 4.0) * zeta(cplx(-0.5, -v)) * v;
                           return ((v + 2.0 * I) / d).real();
                       };
                       return power_half_line(g, fint_rm1_theorem(-4.5, 4.0, -0.25), [] {
                           return cplx(96.0 * std::pow(pi, 5) / (7.0 * zeta(5.0)) - 64.0 * std::pow(pi, 3) / zeta(3.0) -
                                       pi / (4.0 * zeta(-0.5) * zeta(-4.5)));
                       });
                   }});

    out.push_back({"FintAb", sec, fam, {},
                   "32 pi / 9 (-pi^4 zeta(1/2)^2 / 4 + (49/2 - 23 gamma / 3) zeta(3/2)^2 + 23 zeta(3/2) zeta'(3/2) / 3)",
                   "r = 2, p = 1, q = 3, a = 1/2, b = 3/2",
                   [](const param_map&) {
                       auto g = [](double v) {
                           const cplx z = zeta(cplx(2.0, -v)) * zeta(cplx(0.5, v));
                           const cplx num = z * z * (18.0 * v * v + 27.0 * I * v - 32.0) * (4.0 * v + 3.0 * I);
                           const cplx den = (1.5 - I * v) * std::pow(2.0 - I * v, 3) * std::pow(0.5 + I * v, 3) * v;
                           return (num / den).real();
                       };
                       const std::vector<cplx> at = {-0.5 * I, -0.5 * I, -I, -I, -1.5 * I, 0.0};
                       theorem_spec t = additive_theorem(fpqr(2, 1.0, 3.0, 0.5, 1.5), fpqr_h(1.0, 3.0, 0.5, 1.5), 1.5,
                                                         at, -4.0, {-0.5 * I, -I, -1.5 * I, 0.0, -2.0 * I, 0.5 * I});
                       return even_windowed(g, std::move(t), [] {
                           const double z = zeta(1.5);
                           return cplx(32.0 * pi / 9.0 *
                                       (-std::pow(pi, 4) * zeta(0.5) * zeta(0.5) / 4.0 + (49.0 / 2.0 - 23.0 * eg / 3.0) * z * z +
                                        23.0 * z * zeta_prime(cplx(1.5)).real() / 3.0));
                       });
                   }});
}

} // namespace glasser::cat

#endif
