#ifndef GLASSER_CATALOG_EX6_HPP
#define GLASSER_CATALOG_EX6_HPP

// The zeta-power kernel (zeta(a + iv)^n + zeta(a + b - iv)^n) / cosh(pi v / b)
// and the identities obtained from it by fixing a, b or n.

#include <glasser/catalog/core.hpp>

namespace glasser::cat {

inline analytic_fn zeta_power_kernel(int n, cplx a, double b)
{
    return [n, a, b](cplx v) {
        return (std::pow(zeta(a + I * v), n) + std::pow(zeta(a + b - I * v), n)) / std::cosh(pi * v / b);
    };
}

/// g(zeta(a + iv)) + g(zeta(a + b - iv)) over cosh(pi v / b), a = -b/2, with
/// the single pole at -ib/2.
inline identity composed_identity(std::function<cplx(cplx)> g, double b, cplx closed)
{
    analytic_fn F = [g, b](cplx v) {
        return (g(zeta(-b / 2.0 + I * v)) + g(zeta(b / 2.0 - I * v))) / std::cosh(pi * v / b);
    };
    identity idn = line_identity(F, b, poles(b, {{-I * b / 2.0, 1}}), pi / b, value(closed));
    idn.theorem->avoid = cosh_neighbours(b);
    return idn;
}

/// The zeta-power identity with full-line left side and Appendix-style
/// residues for the closed form.
inline identity zeta_power_identity(int n, double a, double b, std::function<cplx()> closed = {})
{
    std::vector<pole_spec> ps = appendix_a_residues(n, a, b);
    identity idn = line_identity(zeta_power_kernel(n, a, b), b, ps, pi / std::abs(b), std::move(closed));
    idn.theorem->avoid = cosh_neighbours(b);
    if (!idn.closed_form)
        idn.closed_form = [ps, b] {
            return rhs_from_residues(ps, criterion_kind::antisymmetric, strip_spec(b).orientation_sign());
        };
    return idn;
}

/// Product kernel zeta(a + iv) zeta(a + b - iv) / cosh(pi v / b) and its
/// three simple poles.
inline analytic_fn zeta_product_kernel(double a, double b)
{
    return [a, b](cplx v) { return zeta(a + I * v) * zeta(a + b - I * v) / std::cosh(pi * v / b); };
}

inline std::vector<pole_spec> zeta_product_poles(double a, double b)
{
    return poles(b, {{I * (a - 1.0), 1}, {-I * (a + b - 1.0), 1}, {-I * b / 2.0, 1}});
}

inline void add_ex6(std::vector<catalog_entry>& out)
{
    const std::string sec = "3.3";
    const std::string fam = "general_ex6";

    out.push_back({"Ex6", sec, fam,
                   {closed("n", 2.0, 1.0, 4.0), closed("a", 0.5, -3.0, 3.0), closed("b", 2.0, -4.0, 4.0)},
                   "-i pi sgn(b) (R_{n,1} + (R_{n,2} + R_{n,3}) H(a,b))",
                   "zeta poles weighted by strip membership 1-b < a < 1 (reversed for b < 0)",
                   [](const param_map& p) {
                       const int n = integer_param(p.at("n"), "n");
                       require(p.at("b") != 0.0, "b must be nonzero");
                       return zeta_power_identity(n, p.at("a"), p.at("b"));
                   }});

    // a = -b, strip 2b, half-line real part.
    out.push_back({"YLR1", "3.3.1", fam, {open("b", 0.5, 0.0, 1.0)}, "-b", "",
                   [](const param_map& p) {
                       const double b = p.at("b");
                       analytic_fn F = zeta_power_kernel(1, -b, 2.0 * b);
                       theorem_spec t = theorem(F, 2.0 * b, poles(2.0 * b, {{-I * b, 1}}), 0.5);
                       t.avoid = cosh_neighbours(2.0 * b);
                       return half_line_re(F, pi / (2.0 * b), t, [b] { return cplx(-b); });
                   }});

    // The b = 1/2 case of YLR1 minus the unit-sum kernel; half its integral
    // plus the Dirichlet value 1 of the 3/2 line gives YLR2.
    auto ylr2_route = [](cplx scale) {
        analytic_fn F = [](cplx v) {
            return (zeta(-0.5 + I * v) + zeta(0.5 - I * v) - zeta(1.5 - I * v) - zeta(0.5 + I * v)) /
                   std::cosh(pi * v);
        };
        return theorem(F, 1.0, poles(1.0, {{-0.5 * I, 2}}), 0.5 * scale, scale);
    };

    out.push_back({"YLR2", "3.3.1", fam, {}, "1/2 - gamma", "",
                   [=](const param_map&) {
                       return half_line_re([](cplx v) { return zeta(-0.5 + I * v) / std::cosh(pi * v); }, pi,
                                           ylr2_route(1.0), [] { return cplx(0.5 - eg); });
                   }});

    out.push_back({"K1", "3.3.1", fam, {}, "1/2 - gamma", "functional-equation form of YLR2",
                   [=](const param_map&) {
                       analytic_fn G = [](cplx v) {
                           return std::pow(pi, I * v - 1.0) * gam(0.75 - I * v / 2.0) * zeta(1.5 - I * v) /
                                  (std::cosh(pi * v) * gam(-0.25 + I * v / 2.0));
                       };
                       return half_line_re(G, pi, ylr2_route(1.0), [] { return cplx(0.5 - eg); });
                   }});

    out.push_back({"K1b", "3.3.1", fam, {}, "pi^(1/4) (1/2 - gamma)", "Upsilon form",
                   [=](const param_map&) {
                       analytic_fn G = [](cplx v) {
                           return std::pow(pi, I * v / 2.0) * upsilon(1.5 - I * v) /
                                  (gam(-0.25 + I * v / 2.0) * std::cosh(pi * v));
                       };
                       const double q = std::pow(pi, 0.25);
                       return half_line_re(G, pi, ylr2_route(q), [q] { return cplx(q * (0.5 - eg)); });
                   }});

    out.push_back({"K1d", "3.3.1", fam, {}, "pi^(1/4) (gamma - 1/2)", "xi form",
                   [=](const param_map&) {
                       analytic_fn G = [](cplx v) {
                           const cplx s = 1.5 - I * v;
                           return std::pow(pi, I * v / 2.0) * xi(s) /
                                  (s * gam(0.75 + I * v / 2.0) * std::cosh(pi * v));
                       };
                       const double q = std::pow(pi, 0.25);
                       return half_line_re(G, pi, ylr2_route(-q), [q] { return cplx(q * (eg - 0.5)); });
                   }});

    const std::string sec1a = "3.3.2";
    out.push_back({"Ex6n", sec1a, fam,
                   {closed("n", 2.0, 1.0, 4.0), closed("a", 2.0, -3.0, 3.0), open("b", 1.0, 0.0, 4.0)},
                   "2|b| zeta(a + b/2)^n", "valid while the zeta poles lie outside the strip",
                   [](const param_map& p) {
                       const int n = integer_param(p.at("n"), "n");
                       const double a = p.at("a"), b = p.at("b");
                       require(indicator_H(a, b) == 0.0, "Ex6n needs the zeta poles outside the strip");
                       return zeta_power_identity(n, a, b, [=] {
                           return cplx(2.0 * std::abs(b) * std::pow(zeta(a + b / 2.0), n));
                       });
                   }});

    out.push_back({"Ex6b", sec1a, fam, {closed("n", 1.0, 1.0, 4.0), open("b", 1.0, 0.0, 2.0)},
                   "2|b| (-1/2)^n", "",
                   [](const param_map& p) {
                       const int n = integer_param(p.at("n"), "n");
                       const double b = p.at("b");
                       return zeta_power_identity(n, -b / 2.0, b,
                                                  [=] { return cplx(2.0 * std::abs(b) * std::pow(-0.5, n)); });
                   }});

    // exp(zeta) grows like exp(|v|^(1/2 + b/2)) on the left line, so these
    // converge only for b <= 1.
    struct composed {
        const char* id;
        const char* expr;
        cplx (*g)(cplx);
        double (*closed)(double);
    };
    const composed forms[] = {
        {"Ex6Exp", "2|b| exp(-1/2)", [](cplx z) { return std::exp(z); },
         [](double b) { return 2.0 * b * std::exp(-0.5); }},
        {"Ex6cB", "2|b| exp(1/2)", [](cplx z) { return std::exp(-z); },
         [](double b) { return 2.0 * b * std::exp(0.5); }},
        {"Ex6ApB", "2|b| cosh(1/2)", [](cplx z) { return std::cosh(z); },
         [](double b) { return 2.0 * b * std::cosh(0.5); }},
        {"Ex6AmB", "-2|b| sinh(1/2)", [](cplx z) { return std::sinh(z); },
         [](double b) { return -2.0 * b * std::sinh(0.5); }},
    };
    for (const composed& c : forms)
        out.push_back({c.id, sec1a, fam, {left_open("b", 1.0, 0.0, 1.0)}, c.expr,
                       "b restricted to (0, 1] so that the composed integrand decays",
                       [c](const param_map& p) {
                           const double b = p.at("b");
                           return composed_identity(c.g, b, c.closed(b));
                       }});
    out.push_back({"Scn1", sec1a, fam, {}, "0", "a = -b/2 - 2 with b = -2: zeta(0 - 2) vanishes",
                   [](const param_map&) { return zeta_power_identity(1, -1.0, -2.0, value(0.0)); }});

    const std::string sec2 = "3.3.3";
    auto both_in = [](double a, double b) {
        require(a > 0.0 && a < 1.0 && a + b > 1.0, "needs 0 < a < 1 and a + b > 1");
    };
    auto trig = [](double a, double b) {
        const double A = pi * (a - 1.0) / b;
        return std::pair{std::cos(A), std::sin(A)};
    };

    out.push_back({"IFg1d", sec2, fam, {open("a", 0.5, 0.0, 1.0), open("b", 1.5, 0.0, 4.0)},
                   "b zeta(a + b/2)^2 - 2 pi zeta(2a - 1 + b) / cos(pi (a - 1) / b)", "",
                   [=](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       both_in(a, b);
                       identity idn = line_identity(zeta_product_kernel(a, b), b, zeta_product_poles(a, b),
                                                    pi / b, [=] {
                                                        const double z = zeta(a + b / 2.0);
                                                        return cplx(b * z * z - 2.0 * pi * zeta(2.0 * a - 1.0 + b) /
                                                                                    trig(a, b).first);
                                                    });
                       idn.theorem->avoid = cosh_neighbours(b);
                       return idn;
                   }});

    auto ifg1e = [=](double a, double b) {
        const auto [c, s] = trig(a, b);
        const double z = zeta(a + b / 2.0);
        return 2.0 * b * z * z - 4.0 * eg * pi / c + 2.0 * pi * pi * s / (b * c * c);
    };
    out.push_back({"IFg1e", sec2, fam, {open("a", 0.5, 0.0, 1.0), open("b", 1.5, 0.0, 4.0)},
                   "2b zeta(a + b/2)^2 - 4 gamma pi / cos A + 2 pi^2 sin A / (b cos^2 A), A = pi (a - 1) / b",
                   "",
                   [=](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       both_in(a, b);
                       return zeta_power_identity(2, a, b, [=] { return cplx(ifg1e(a, b)); });
                   }});

    auto square_identity = [=](double a, double b, double sign) {
        analytic_fn F = [=](cplx v) {
            const cplx d = zeta(a + I * v) + sign * zeta(a + b - I * v);
            return d * d / std::cosh(pi * v / b);
        };
        std::vector<pole_spec> ps = poles(b, {{I * (a - 1.0), 2}, {-I * (a + b - 1.0), 2}, {-I * b / 2.0, 1}});
        identity idn = line_identity(F, b, ps, pi / b, [=] {
            const double z = zeta(a + b / 2.0);
            const double cross = 2.0 * (b * z * z - 2.0 * pi * zeta(2.0 * a - 1.0 + b) / trig(a, b).first);
            return cplx(ifg1e(a, b) + sign * cross);
        });
        idn.theorem->avoid = cosh_neighbours(b);
        return idn;
    };
    out.push_back({"BothSq", sec2, fam, {open("a", 0.5, 0.0, 1.0), open("b", 1.5, 0.0, 4.0)},
                   "4b zeta(a + b/2)^2 - 4 gamma pi / cos A + 2 pi^2 sin A / (b cos^2 A) - 4 pi zeta(2a - 1 + b) "
                   "/ cos A",
                   "",
                   [=](const param_map& p) {
                       both_in(p.at("a"), p.at("b"));
                       return square_identity(p.at("a"), p.at("b"), 1.0);
                   }});
    out.push_back({"DiffSq", sec2, fam, {open("a", 0.5, 0.0, 1.0), open("b", 1.5, 0.0, 4.0)},
                   "-4 gamma pi / cos A + 2 pi^2 sin A / (b cos^2 A) + 4 pi zeta(2a - 1 + b) / cos A", "",
                   [=](const param_map& p) {
                       both_in(p.at("a"), p.at("b"));
                       return square_identity(p.at("a"), p.at("b"), -1.0);
                   }});

    const std::string sec3 = "3.3.4";
    out.push_back({"YLR2x", sec3, fam, {open("b", 1.5, 2.0 / 3.0, 2.0)}, "b zeta(b) - pi / sin(pi / b)",
                   "b = 1 excluded: the zeta pole meets the cosh zero",
                   [](const param_map& p) {
                       const double b = p.at("b");
                       require(std::abs(b - 1.0) > 1e-9, "b = 1 is a removable limit, not evaluated");
                       analytic_fn F = zeta_power_kernel(1, b / 2.0, b);
                       theorem_spec t = theorem(F, b, appendix_a_residues(1, b / 2.0, b), 0.5);
                       t.avoid = cosh_neighbours(b);
                       return half_line_re(F, pi / b, t,
                                           [b] { return cplx(b * zeta(b) - pi / std::sin(pi / b)); });
                   }});

    out.push_back({"YLR2b", sec3, fam, {}, "zeta(1/2)/2", "",
                   [](const param_map&) {
                       analytic_fn F = zeta_power_kernel(1, 0.25, 0.5);
                       theorem_spec t = theorem(F, 0.5, appendix_a_residues(1, 0.25, 0.5), 0.5);
                       t.avoid = cosh_neighbours(0.5);
                       return half_line_re(F, 2.0 * pi, t, [] { return cplx(zeta(0.5) / 2.0); });
                   }});

    const std::string sec4 = "3.3.5";
    auto sc_identity = [](double b, double sign, std::function<cplx()> closed) {
        const double a = 1.0 - b / 2.0;
        analytic_fn F = [=](cplx v) {
            const cplx d = zeta(a + I * v) + sign * zeta(a + b - I * v);
            return d * d / std::cosh(pi * v / b);
        };
        identity idn = line_identity(F, b, poles(b, {{-I * b / 2.0, 3}}), pi / b, std::move(closed));
        idn.theorem->avoid = cosh_neighbours(b);
        return idn;
    };
    out.push_back({"ScPlus", sec4, fam, {closed("b", 1.0, 0.25, 3.0)}, "4 gamma^2 b", "",
                   [=](const param_map& p) {
                       const double b = p.at("b");
                       return sc_identity(b, 1.0, [b] { return cplx(4.0 * eg * eg * b); });
                   }});
    out.push_back({"ScMin", sec4, fam, {closed("b", 1.0, 0.25, 3.0)}, "-8 b gamma(1) + 2 pi^2 / (3b)", "",
                   [=](const param_map& p) {
                       const double b = p.at("b");
                       return sc_identity(b, -1.0, [b] { return cplx(-8.0 * b * g(1) + 2.0 * pi * pi / (3.0 * b)); });
                   }});
}

} // namespace glasser::cat

#endif
