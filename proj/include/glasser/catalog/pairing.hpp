#ifndef GLASSER_CATALOG_PAIRING_HPP
#define GLASSER_CATALOG_PAIRING_HPP

// zeta(s)/s paired with its reflection across the strip. The single terms
// decay like 1/v and oscillate, so the left sides are summed with a window.

#include <glasser/catalog/core.hpp>
#include <glasser/oracles.hpp>

namespace glasser::cat {

/// zeta(a + iv)/(a + iv) - zeta(a + b - iv)/(a + b - iv).
inline analytic_fn zeta_over_s_pair(double a, double b)
{
    return [a, b](cplx v) {
        const cplx s1 = a + I * v, s2 = a + b - I * v;
        return zeta(s1) / s1 - zeta(s2) / s2;
    };
}

inline theorem_spec zeta_over_s_theorem(double a, double b, cplx offset = 0.0)
{
    const std::vector<cplx> at = {I * (a - 1.0), -I * (a + b - 1.0), I * a, -I * (a + b)};
    theorem_spec t = theorem(zeta_over_s_pair(a, b), b, merged_poles(b, at), 1.0, offset);
    t.avoid = at;
    return t;
}

inline identity windowed(integrand f, std::function<cplx()> closed, bool half_line = false)
{
    identity idn;
    idn.lhs.where = half_line ? lhs_spec::domain::windowed_half : lhs_spec::domain::windowed_real;
    idn.lhs.f = std::move(f);
    idn.closed_form = std::move(closed);
    return idn;
}

/// 2^(iv) zeta(1/2 + iv)/(1/2 + iv) - 2^(1 - iv) zeta(3/2 - iv)/(3/2 - iv).
inline analytic_fn two_power_pair()
{
    return [](cplx v) {
        const cplx s1 = 0.5 + I * v, s2 = 1.5 - I * v;
        return std::pow(2.0, I * v) * zeta(s1) / s1 - std::pow(2.0, 1.0 - I * v) * zeta(s2) / s2;
    };
}

inline theorem_spec two_power_theorem(cplx offset = 0.0)
{
    theorem_spec t = theorem(two_power_pair(), 1.0, merged_poles(1.0, {-0.5 * I}), 1.0, offset);
    t.avoid = {0.5 * I, -1.5 * I};
    return t;
}

/// zeta(1/2 + iv, w')/(1/2 + iv) - zeta(3/2 - iv, w')/(3/2 - iv).
inline analytic_fn hurwitz_pair(double w)
{
    return [w](cplx v) {
        const cplx s1 = 0.5 + I * v, s2 = 1.5 - I * v;
        return hurwitz_zeta(s1, w) / s1 - hurwitz_zeta(s2, w) / s2;
    };
}

inline void add_pairing(std::vector<catalog_entry>& out)
{
    const std::string sec = "4.1";
    const std::string fam = "pairing_convergence";

    auto t1 = [](double a, double b) {
        identity idn = windowed(on_axis(zeta_over_s_pair(a, b)), value(-2.0 * pi));
        idn.theorem = zeta_over_s_theorem(a, b);
        return idn;
    };

    out.push_back({"T1", sec, fam, {open("a", 0.3, 0.0, 1.0), left_open("b", 1.2, 0.0, 3.0)}, "-2 pi",
                   "1 - b < a < 1", [=](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       require(a > 1.0 - b, "a must exceed 1 - b");
                       return t1(a, b);
                   }});

    out.push_back({"IntF6", sec, fam, {}, "-2 pi", "a = 1/2, b = 1",
                   [=](const param_map&) { return t1(0.5, 1.0); }});

    out.push_back({"JaJbx", sec, fam, {open("c", 1.5, 1.0, 4.0)}, "pi", "c = a + b > 1",
                   [](const param_map& p) {
                       const double c = p.at("c");
                       identity idn = windowed(
                           [c](double v) {
                               const cplx s(c, -v);
                               return zeta(s) / s;
                           },
                           value(pi));
                       idn.residue_route = [c] { return cplx(perron_integral(c, 1.0)); };
                       return idn;
                   }});

    // T1 at b = 1 less the c = a + 1 single term.
    auto ja1 = [](double a) {
        identity idn = windowed(
            [a](double v) {
                const cplx s(a, v);
                return zeta(s) / s;
            },
            value(-pi));
        idn.theorem = zeta_over_s_theorem(a, 1.0, perron_integral(a + 1.0, 1.0));
        return idn;
    };

    out.push_back({"JA1", sec, fam, {open("a", 0.3, 0.0, 1.0)}, "-pi", "0 < a < 1",
                   [=](const param_map& p) { return ja1(p.at("a")); }});

    out.push_back({"Jh", sec, fam, {}, "-pi", "a = 1/2", [=](const param_map&) { return ja1(0.5); }});

    out.push_back({"Jh1", sec, fam, {}, "-pi", "half-line real form of Jh",
                   [](const param_map&) {
                       identity idn = windowed(
                           [](double v) {
                               const cplx z = zeta(cplx(0.5, v));
                               return cplx((2.0 * v * z.imag() + z.real()) / (0.25 + v * v));
                           },
                           value(-pi), true);
                       idn.theorem = zeta_over_s_theorem(0.5, 1.0, perron_integral(1.5, 1.0));
                       return idn;
                   }});

    const std::string sech = "4.2";
    const std::string famh = "hurwitz";

    out.push_back({"Fz", sech, famh, {closed("w", 0.5, 0.0, 3.0)}, "-2 pi", "Hurwitz parameter w + 1/2",
                   [](const param_map& p) {
                       const double w = p.at("w") + 0.5;
                       identity idn = windowed(on_axis(hurwitz_pair(w)), value(-2.0 * pi));
                       idn.theorem = theorem(hurwitz_pair(w), 1.0, merged_poles(1.0, {-0.5 * I}));
                       idn.theorem->avoid = {0.5 * I, -1.5 * I};
                       return idn;
                   }});

    out.push_back({"AA", sech, famh, {}, "-2 pi", "w = 0, zeta(s, 1/2) = (2^s - 1) zeta(s)",
                   [](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           const cplx s1 = 0.5 + I * v, s2 = 1.5 - I * v;
                           return (std::pow(2.0, s1) - 1.0) * zeta(s1) / s1 - (std::pow(2.0, s2) - 1.0) * zeta(s2) / s2;
                       };
                       identity idn = windowed(on_axis(F), value(-2.0 * pi));
                       idn.theorem = theorem(F, 1.0, merged_poles(1.0, {-0.5 * I}));
                       idn.theorem->avoid = {0.5 * I, -1.5 * I};
                       return idn;
                   }});

    out.push_back({"AAE1", sech, famh, {}, "-2 sqrt(2) pi", "AA plus IntF6, over sqrt(2)",
                   [](const param_map&) {
                       identity idn = windowed(on_axis(two_power_pair()), value(-2.0 * std::sqrt(2.0) * pi));
                       idn.theorem = two_power_theorem();
                       return idn;
                   }});

    out.push_back({"J5e6", sech, famh, {}, "3 pi sqrt(2) / 4", "single term summed from the Dirichlet series",
                   [](const param_map&) {
                       identity idn = windowed(
                           [](double v) {
                               const cplx s(1.5, -v);
                               return std::pow(2.0, -I * v) * zeta(s) / s;
                           },
                           value(3.0 * pi * std::sqrt(2.0) / 4.0));
                       idn.residue_route = [] { return cplx(perron_integral(1.5, 0.5)); };
                       return idn;
                   }});

    out.push_back({"J8b", sech, famh, {}, "-pi sqrt(2) / 2", "AAE1 plus twice J5e6",
                   [](const param_map&) {
                       identity idn = windowed(
                           [](double v) {
                               const cplx s(0.5, v);
                               return std::pow(2.0, I * v) * zeta(s) / s;
                           },
                           value(-pi * std::sqrt(2.0) / 2.0));
                       idn.theorem = two_power_theorem(2.0 * perron_integral(1.5, 0.5));
                       return idn;
                   }});
}

} // namespace glasser::cat

#endif
