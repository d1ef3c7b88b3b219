#ifndef GLASSER_CATALOG_SIMPLE_HPP
#define GLASSER_CATALOG_SIMPLE_HPP

// Unit-strip identities built from zeta(3/2 - iv) and zeta(1/2 + iv), and
// the half-line forms obtained by pairing them with a Dirichlet series.

#include <glasser/catalog/core.hpp>

namespace glasser::cat {

// (zeta(3/2 - iv) + zeta(1/2 + iv)) / cosh(pi v): the sum form that pairs
// half-line integrals inside and outside the critical strip.
inline analytic_fn unit_sum_kernel()
{
    return [](cplx v) { return (zeta(1.5 - I * v) + zeta(0.5 + I * v)) / std::cosh(pi * v); };
}

inline void add_simple(std::vector<catalog_entry>& out)
{
    const cplx mid = -0.5 * I;

    out.push_back({"Intf1", "3.1", "b1_specific", {}, "2*gamma",
                   "single double pole at -i/2 with residue 2 i gamma / pi",
                   [=](const param_map&) {
                       return line_identity(unit_sum_kernel(), 1.0, poles(1.0, {{mid, 2}}), pi,
                                            [] { return cplx(2.0 * eg); });
                   }});

    out.push_back({"Intf2", "3.1", "b1_specific", {}, "2*gamma(1) + gamma^2 - pi^2/6", "",
                   [=](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           return zeta(1.5 - I * v) * zeta(0.5 + I * v) / std::cosh(pi * v);
                       };
                       return line_identity(F, 1.0, poles(1.0, {{mid, 3}}), pi,
                                            [] { return cplx(2.0 * g(1) + eg * eg - pi * pi / 6.0); });
                   }});

    out.push_back({"Intf3", "3.1", "b1_specific", {}, "-4*gamma(1) + 2*gamma^2 + pi^2/3", "",
                   [=](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           const cplx z1 = zeta(1.5 - I * v), z2 = zeta(0.5 + I * v);
                           return (z1 * z1 + z2 * z2) / std::cosh(pi * v);
                       };
                       return line_identity(F, 1.0, poles(1.0, {{mid, 3}}), pi,
                                            [] { return cplx(-4.0 * g(1) + 2.0 * eg * eg + pi * pi / 3.0); });
                   }});

    out.push_back({"Thing1", "3.1", "b1_specific", {}, "-2*pi",
                   "Gamma factors supply the decay; no cosh kernel",
                   [=](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           return gam(1.5 - I * v) * zeta(0.5 + I * v) - gam(0.5 + I * v) * zeta(1.5 - I * v);
                       };
                       return line_identity(F, 1.0, poles(1.0, {{mid, 1}}), pi / 2.0,
                                            [] { return cplx(-2.0 * pi); });
                   }});

    out.push_back({"IntG1", "3.1", "b1_specific", {}, "-2*gamma(1)/pi + 2*pi/3", "",
                   [=](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           const cplx c = std::cosh(pi * v);
                           return (zeta(1.5 - I * v) - zeta(0.5 + I * v)) / (c * c);
                       };
                       return line_identity(F, 1.0, poles(1.0, {{mid, 3}}), 2.0 * pi,
                                            [] { return cplx(-2.0 * g(1) / pi + 2.0 * pi / 3.0); });
                   }});

    out.push_back({"IntG2", "3.1", "b1_specific", {}, "4*gamma*pi/3 - (4*gamma*gamma(1) - 2*gamma(2))/pi", "",
                   [=](const param_map&) {
                       analytic_fn F = [](cplx v) {
                           const cplx c = std::cosh(pi * v);
                           const cplx z1 = zeta(1.5 - I * v), z2 = zeta(0.5 + I * v);
                           return (z1 * z1 - z2 * z2) / (c * c);
                       };
                       return line_identity(F, 1.0, poles(1.0, {{mid, 4}}), 2.0 * pi, [] {
                           return cplx(4.0 * eg * pi / 3.0 - (4.0 * eg * g(1) - 2.0 * g(2)) / pi);
                       });
                   }});

    out.push_back(
        {"IntG3", "3.1", "b1_specific", {},
         "-17*pi^2/120 + gamma^2/2 + gamma(1) + (gamma(3)/3 + gamma*gamma(2) - gamma(1)^2)/pi^2", "",
         [=](const param_map&) {
             analytic_fn F = [](cplx v) {
                 const cplx c = std::cosh(pi * v);
                 return zeta(1.5 - I * v) * zeta(0.5 + I * v) / (c * c * c);
             };
             return line_identity(F, 1.0, poles(1.0, {{mid, 5}}), 3.0 * pi, [] {
                 return cplx(-17.0 * pi * pi / 120.0 + eg * eg / 2.0 + g(1) +
                             (g(3) / 3.0 + eg * g(2) - g(1) * g(1)) / (pi * pi));
             });
         }});

    // Half-line forms. The theorem route is half the unit-sum identity.
    auto half_sum = [](std::function<cplx(double)> f, cplx offset, std::function<cplx()> closed) {
        identity idn;
        idn.lhs.where = lhs_spec::domain::half_line;
        idn.lhs.f = std::move(f);
        theorem_spec t;
        t.F = unit_sum_kernel();
        t.poles = poles(1.0, {{-0.5 * I, 2}});
        t.scale = 0.5;
        t.offset = offset;
        idn.theorem = std::move(t);
        idn.closed_form = std::move(closed);
        return idn;
    };

    out.push_back({"fromDet", "3.2", "b1_specific", {}, "gamma - 1",
                   "residue side: half the unit-sum identity minus the Dirichlet-series value 1 of the "
                   "3/2 half",
                   [=](const param_map&) {
                       return half_sum([](double v) { return cplx(zeta(cplx(0.5, v)).real() * sech(pi * v)); },
                                       -1.0, [] { return cplx(eg - 1.0); });
                   }});

    out.push_back({"IntG5", "3.2", "b1_specific", {}, "gamma", "",
                   [=](const param_map&) {
                       return half_sum(
                           [](double v) {
                               return cplx((zeta(cplx(0.5, v)) + zeta(cplx(1.5, v))).real() * sech(pi * v));
                           },
                           0.0, [] { return cplx(eg); });
                   }});

    out.push_back({"IntG5b", "3.2", "b1_specific", {}, "1",
                   "residue side: half the unit-sum identity minus the known critical-line half (gamma - 1)",
                   [=](const param_map&) {
                       return half_sum([](double v) { return cplx(zeta(cplx(1.5, v)).real() * sech(pi * v)); },
                                       -(eg - 1.0), [] { return cplx(1.0); });
                   }});

    out.push_back({"GRx", "3.2", "b1_specific", {open("j", 4.0, 0.0, 1e6)}, "sqrt(j)/(j+1)",
                   "theorem function (j^{iv} + j j^{-iv}) / cosh(pi v)",
                   [=](const param_map& p) {
                       const double j = p.at("j");
                       const double L = std::log(j);
                       identity idn;
                       idn.lhs.where = lhs_spec::domain::half_line;
                       idn.lhs.f = [L](double v) { return cplx(std::cos(v * L) * sech(pi * v)); };
                       theorem_spec t;
                       t.F = [L, j](cplx v) {
                           return (std::exp(I * v * L) + j * std::exp(-I * v * L)) / std::cosh(pi * v);
                       };
                       t.poles = poles(1.0, {{-0.5 * I, 1}});
                       t.scale = 1.0 / (2.0 * (1.0 + j));
                       idn.theorem = std::move(t);
                       idn.closed_form = [j] { return cplx(std::sqrt(j) / (j + 1.0)); };
                       return idn;
                   }});
}

} // namespace glasser::cat

#endif
