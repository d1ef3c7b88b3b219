#ifndef GLASSER_CATALOG_SHIFTED_HPP
#define GLASSER_CATALOG_SHIFTED_HPP

// Zeta-power kernels whose poles sit on the strip edges: b = 1/2 at the
// critical-strip boundaries, and complex a = 1/2 + it - b/2 which recovers
// zeta on the critical line.

#include <glasser/catalog/ex6.hpp>
#include <glasser/oracles.hpp>

namespace glasser::cat {

/// The boundary-pole term added in the critical-line representation. The
/// denominator carries b itself, not |b|, so the term is even in b.
inline cplx critical_line_correction(double t, double b)
{
    const double h = std::abs(b) > 1.0 ? 1.0 : (std::abs(b) == 1.0 ? 0.5 : 0.0);
    const cplx den = std::cos(pi / (2.0 * b)) * std::sinh(pi * t / b) +
                     I * std::cosh(pi * t / b) * std::sin(pi / (2.0 * b));
    return -I * pi * h / (den * b);
}

/// zeta(1/2 + it) = (1 / 2|b|) PV integral + correction.
inline identity critical_line_identity(double t, double b)
{
    const cplx a = 0.5 + I * t - b / 2.0;
    analytic_fn F = zeta_power_kernel(1, a, b);
    const cplx corr = critical_line_correction(t, b);
    std::vector<pole_spec> ps = poles(b, {{-I * b / 2.0, 1},
                                          {-I * (1.0 - a), 1},      // zeta(a + iv)
                                          {-I * (a + b - 1.0), 1}}); // zeta(a + b - iv)
    identity idn;
    idn.lhs.f = on_axis(F);
    idn.lhs.scale = 1.0 / (2.0 * std::abs(b));
    idn.lhs.offset = corr;
    idn.lhs.decay_rate = pi / std::abs(b);
    theorem_spec th = theorem(F, b, ps, 1.0 / (2.0 * std::abs(b)), corr);
    th.avoid = cosh_neighbours(b);
    for (const pole_spec& p : ps)
        if (std::abs(p.location.im()) < 1e-12)
            idn.lhs.principal_values.push_back(pv_at(F, p.location.re()));
    idn.theorem = std::move(th);
    idn.closed_form = [t] { return zeta(cplx(0.5, t)); };
    return idn;
}

inline void add_shifted(std::vector<catalog_entry>& out)
{
    const std::string fam = "general_ex6";

    const std::string sec = "3.3.6";
    auto b_half = [](double a) {
        analytic_fn F = zeta_power_kernel(1, a, 0.5);
        theorem_spec t = theorem(F, 0.5, poles(0.5, {{-0.25 * I, 1}, {I * (a - 1.0), 1}, {-I * (a - 0.5), 1}}), 0.5);
        t.avoid = cosh_neighbours(0.5);
        return t;
    };

    out.push_back({"J1", sec, fam, {}, "(zeta(3/4) + pi)/2", "zeta poles on both strip edges",
                   [=](const param_map&) {
                       return half_line_re(zeta_power_kernel(1, 0.5, 0.5), 2.0 * pi, b_half(0.5),
                                           [] { return cplx((zeta(0.75) + pi) / 2.0); });
                   }});

    out.push_back({"J1a", sec, fam, {}, "zeta(1/4)/2", "",
                   [=](const param_map&) {
                       return half_line_re(zeta_power_kernel(1, 0.0, 0.5), 2.0 * pi, b_half(0.0),
                                           [] { return cplx(zeta(0.25) / 2.0); });
                   }});

    out.push_back({"J1ab", sec, fam, {}, "(zeta(3/4) - zeta(1/4) + pi)/2", "difference of J1 and J1a",
                   [=](const param_map&) {
                       analytic_fn G = [](cplx v) {
                           return (zeta(1.0 + I * v) - zeta(I * v)) / std::cosh(2.0 * pi * v);
                       };
                       // The a = 0 kernel only adds to the residue at -i/4.
                       theorem_spec t = b_half(0.5);
                       t.F = [F1 = t.F, F0 = zeta_power_kernel(1, 0.0, 0.5)](cplx v) { return F1(v) - F0(v); };
                       return half_line_re(G, 2.0 * pi, t,
                                           [] { return cplx((zeta(0.75) - zeta(0.25) + pi) / 2.0); });
                   }});

    const std::string secc = "3.3.7";
    out.push_back({"K4x", secc, fam, {closed("t", 2.0, 0.0, 30.0)}, "zeta(1/2 + it)",
                   "principal value at the real-axis pole v = t",
                   [](const param_map& p) { return critical_line_identity(p.at("t"), 1.0); }});

    out.push_back({"K4xR1", secc, fam, {}, "zeta(1/2) + pi/2", "t = 0 real part on the half line",
                   [](const param_map&) {
                       analytic_fn F = zeta_power_kernel(1, 0.0, 1.0);
                       theorem_spec t = theorem(F, 1.0, poles(1.0, {{-0.5 * I, 1}, {-I, 1}, {0.0, 1}}), 0.5);
                       return half_line_re(F, pi, t, [] { return cplx(zeta(0.5) + pi / 2.0); });
                   }});

    out.push_back({"Ex7ab", secc, fam, {closed("t", 3.0, 0.0, 30.0), closed("b", 2.0, -4.0, 4.0)},
                   "zeta(1/2 + it)", "independent of b and invariant under b -> -b",
                   [](const param_map& p) {
                       require(std::abs(p.at("b")) >= 0.25, "|b| must be at least 1/4");
                       return critical_line_identity(p.at("t"), p.at("b"));
                   }});

    out.push_back({"ZhId", secc, fam, {closed("t", 3.0, 0.0, 30.0)}, "zeta(1/2 + it)", "b = 2 case",
                   [](const param_map& p) { return critical_line_identity(p.at("t"), 2.0); }});

    // b = 2, t = 0 after v -> 2v: antisymmetric on the unit strip with poles
    // at -i/4, -i/2 and -3i/4.
    const std::vector<std::pair<cplx, int>> quarter = {{-0.25 * I, 1}, {-0.5 * I, 1}, {-0.75 * I, 1}};
    auto quarter_poles = [=](int order) {
        std::vector<pole_spec> ps;
        const strip_spec strip(1.0);
        for (const auto& [at, o] : quarter)
            ps.push_back(make_pole(at, strip, std::abs(at + 0.5 * I) < 1e-12 ? o : order));
        return ps;
    };

    out.push_back({"ZhId0", secc, fam, {}, "2 zeta(1/2) + pi sqrt(2)", "",
                   [=](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           return (zeta(-0.5 + 2.0 * I * v) + zeta(1.5 - 2.0 * I * v)) / std::cosh(pi * v);
                       };
                       return line_identity(F, 1.0, quarter_poles(1), pi,
                                            [] { return cplx(2.0 * zeta(0.5) + pi * std::sqrt(2.0)); });
                   }});

    out.push_back({"Ex7ab0", secc, fam, {}, "sqrt(2) pi (pi - 4)/4", "b-derivative at b = 2, t = 0",
                   [=](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           return (-zeta_prime(-0.5 + 2.0 * I * v) + zeta_prime(1.5 - 2.0 * I * v)) *
                                  (1.0 - 2.0 * I * v) / std::cosh(pi * v);
                       };
                       return line_identity(F, 1.0, quarter_poles(2), pi,
                                            [] { return cplx(std::sqrt(2.0) * pi * (pi - 4.0) / 4.0); });
                   }});

    out.push_back({"Ex7B", secc, fam, {},
                   "-sqrt(2) (-zeta(1/2) (gamma/2 + ln(8 pi)/2 + pi/4) sqrt(2) - pi^2/2)",
                   "t-derivative at b = 2, t = 0",
                   [=](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           return (zeta_prime(-0.5 + 2.0 * I * v) + zeta_prime(1.5 - 2.0 * I * v)) /
                                  std::cosh(pi * v);
                       };
                       return line_identity(F, 1.0, quarter_poles(2), pi, [] {
                           const double r2 = std::sqrt(2.0);
                           return cplx(-r2 * (-zeta(0.5) * (eg / 2.0 + std::log(8.0 * pi) / 2.0 + pi / 4.0) * r2 -
                                              pi * pi / 2.0));
                       });
                   }});

    out.push_back({"Zid", secc, "approximation", {closed("t", 20.0, 5.0, 40.0), closed("N", 4.0, 0.0, 6.0)},
                   "zeta(1/2 + it)",
                   "truncated even-moment expansion of the b = 1 integral, N <= t^2/10; held to 1e-3",
                   [](const param_map& p) {
                       const double t = p.at("t");
                       const int n = integer_param(p.at("N"), "N");
                       require(n <= t * t / 10.0, "N must not exceed t^2/10");
                       identity idn = critical_line_identity(t, 1.0);
                       idn.approximation = [t, n] { return zid_approximation(t, n); };
                       idn.approximation_bound = 1e-3;
                       return idn;
                   }});
}

} // namespace glasser::cat

#endif
