#ifndef GLASSER_CATALOG_FOURPOLE_HPP
#define GLASSER_CATALOG_FOURPOLE_HPP

// g(v) - g(-ib - v) with g = zeta(a + iv) zeta(a + b - iv) sech(pi b v): the
// product kernel against a sech kernel whose zeros move with b.

#include <glasser/catalog/product.hpp>

namespace glasser::cat {

inline cplx zeta_pair(double a, double b, cplx v, int n = 1)
{
    return std::pow(zeta(a + I * v) * zeta(a + b - I * v), n);
}

/// Z^n (sech(pi b v)^s - sech(pi b (v + ib))^s), Z = zeta(a + iv) zeta(a + b - iv).
inline analytic_fn four_pole_kernel(double a, double b, int n = 1, double s = 1.0)
{
    return [=](cplx v) {
        const cplx k1 = 1.0 / std::cosh(pi * b * v);
        const cplx k2 = 1.0 / std::cosh(pi * b * (v + I * b));
        const cplx kern = s == 1.0 ? k1 - k2 : std::pow(k1, s) - std::pow(k2, s);
        return zeta_pair(a, b, v, n) * kern;
    };
}

/// Singular points of the kernel near the strip, with multiplicity one each.
inline std::vector<cplx> four_pole_candidates(double a, double b)
{
    std::vector<cplx> found = {I * (a - 1.0), -I * (a + b - 1.0)};
    const int reach = static_cast<int>(std::ceil(2.0 * b * b)) + 2;
    for (int k = -reach; k <= reach; ++k) {
        const cplx z = I * (k + 0.5) / b;
        found.push_back(z);
        found.push_back(z - I * b);
    }
    return found;
}

inline std::vector<pole_spec> four_pole_poles(double a, double b)
{
    return merged_poles(b, four_pole_candidates(a, b));
}

/// The product-kernel points P1, P2 and the sech zeros of both terms, with
/// their strip weights.
inline std::vector<pole_spec> poles_fgen_kernel(double a, double b) { return four_pole_poles(a, b); }

inline theorem_spec four_pole_theorem(double a, double b, cplx scale = 1.0)
{
    theorem_spec t = theorem(four_pole_kernel(a, b), b, four_pole_poles(a, b), scale);
    t.avoid = four_pole_candidates(a, b);
    return t;
}

/// Residue route taking the real part of a scaled theorem value.
inline std::function<cplx()> real_part_route(theorem_spec t, cplx offset = 0.0)
{
    return [t = std::move(t), offset] { return cplx(theorem_rhs(t).real()) + offset; };
}

inline void add_fourpole(std::vector<catalog_entry>& out)
{
    const std::string sec = "3.5";
    const std::string fam = "fgen_fourpole";
    const double r2 = std::sqrt(2.0);

    out.push_back({"C4f", sec, fam, {}, "pi zeta(1/2) (sqrt(2) - 1)", "a = b = 1/2; minus the real part",
                   [=](const param_map&) {
                       identity idn;
                       idn.lhs.f = [=](double v) {
                           const cplx z = zeta_pair(0.5, 0.5, v);
                           const double ch = std::cosh(pi * v);
                           return cplx(r2 * z.imag() * std::sinh(pi * v / 2.0) / ch +
                                       r2 * z.real() * std::cosh(pi * v / 2.0) / ch -
                                       z.real() / std::cosh(pi * v / 2.0));
                       };
                       idn.lhs.decay_rate = pi / 2.0;
                       idn.lhs.breakpoints = {0.0};
                       idn.theorem = four_pole_theorem(0.5, 0.5, -1.0);
                       idn.residue_route = real_part_route(*idn.theorem);
                       idn.closed_form = [=] { return cplx(pi * zeta(0.5) * (r2 - 1.0)); };
                       return idn;
                   }});

    // Diagonal a = 1/2 - b/2 in the three b regimes.
    auto diagonal = [](double b, std::function<cplx()> closed) {
        const double a = 0.5 - b / 2.0;
        identity idn = line_identity(four_pole_kernel(a, b), b, four_pole_poles(a, b), pi * std::abs(b),
                                     std::move(closed));
        idn.theorem->avoid = four_pole_candidates(a, b);
        return idn;
    };
    auto zz = [](double b) {
        return 2.0 / std::abs(b) * zeta((b * b + b - 1.0) / (2.0 * b)) * zeta((-b * b + b + 1.0) / (2.0 * b));
    };

    out.push_back({"Crit4bB", sec, fam, {open("b", 0.5, -1.0 / r2, 1.0 / r2)}, "0",
                   "no singular point in the strip",
                   [=](const param_map& p) {
                       require(std::abs(p.at("b")) >= 0.1, "|b| must be at least 0.1");
                       return diagonal(p.at("b"), value(0.0));
                   }});

    out.push_back({"Crit4bA", sec, fam, {open("b", 0.9, 1.0 / r2, 1.0)},
                   "2/|b| zeta((b^2 + b - 1)/(2b)) zeta((-b^2 + b + 1)/(2b))", "",
                   [=](const param_map& p) {
                       const double b = p.at("b");
                       return diagonal(b, [=] { return cplx(zz(b)); });
                   }});

    out.push_back({"Crit4bC", sec, fam, {open("b", 1.1, 1.0, std::sqrt(6.0) / 2.0)},
                   "2/|b| zeta((b^2 + b - 1)/(2b)) zeta((-b^2 + b + 1)/(2b)) + 4 pi sin(pi b^2 / 2) "
                   "sin(pi |b| / 2) / (cos(pi b) + cos(pi b^2))",
                   "",
                   [=](const param_map& p) {
                       const double b = p.at("b");
                       return diagonal(b, [=] {
                           return cplx(zz(b) + 4.0 * pi * std::sin(pi * b * b / 2.0) * std::sin(pi * std::abs(b) / 2.0) /
                                                   (std::cos(pi * b) + std::cos(pi * b * b)));
                       });
                   }});

    out.push_back({"Crit4d", sec, fam, {open("b", 0.5, 0.0, 1.0 / r2)}, "0",
                   "real part of Crit4bB with the second kernel written out",
                   [=](const param_map& p) {
                       const double b = p.at("b");
                       const double a = 0.5 - b / 2.0;
                       const double sn = std::sin(pi * b * b), cs = std::cos(pi * b * b);
                       identity idn;
                       idn.lhs.f = [=](double v) {
                           const cplx z = zeta_pair(a, b, v);
                           const double ch = std::cosh(pi * b * v), sh = std::sinh(pi * b * v);
                           const double den = sn * sn - ch * ch;
                           return cplx(cs * z.real() * ch / den + z.real() / ch + sn * z.imag() * sh / den);
                       };
                       idn.lhs.decay_rate = pi * b;
                       idn.theorem = four_pole_theorem(a, b);
                       idn.residue_route = real_part_route(*idn.theorem);
                       idn.closed_form = value(0.0);
                       return idn;
                   }});

    // b = 1/sqrt(2): the second kernel becomes -i / sinh(pi b v).
    const double bc = 1.0 / r2;
    const double ac = 0.5 - bc / 2.0;
    auto ded1_integrand = [=](double v) {
        const cplx z = zeta_pair(ac, bc, v);
        return z.imag() / std::sinh(pi * v / r2) - z.real() / std::cosh(pi * v / r2);
    };
    auto z0 = [=] { return zeta(0.5 - r2 / 4.0) * zeta(0.5 + r2 / 4.0); };

    out.push_back({"Ded1", sec, fam, {}, "-sqrt(2) zeta(1/2 - sqrt(2)/4) zeta(1/2 + sqrt(2)/4)",
                   "second zeta argument as derived; see notes on the printed (1 + sqrt(2))/4",
                   [=](const param_map&) {
                       identity idn;
                       idn.lhs.f = [=](double v) { return cplx(ded1_integrand(v)); };
                       idn.lhs.decay_rate = pi * bc;
                       idn.lhs.breakpoints = {0.0};
                       idn.theorem = four_pole_theorem(ac, bc, -1.0);
                       idn.residue_route = real_part_route(*idn.theorem);
                       idn.closed_form = [=] { return cplx(-r2 * z0()); };
                       return idn;
                   }});

    out.push_back({"CritLim", sec, fam, {}, "0",
                   "mid-point of the one-sided limits at b = 1/sqrt(2), evaluated through its finite surrogate",
                   [=](const param_map&) {
                       identity idn;
                       idn.lhs.f = [=](double v) { return cplx(ded1_integrand(v)); };
                       idn.lhs.decay_rate = pi * bc;
                       idn.lhs.breakpoints = {0.0};
                       idn.lhs.offset = r2 * z0();
                       idn.theorem = four_pole_theorem(ac, bc, -1.0);
                       idn.residue_route = real_part_route(*idn.theorem, r2 * z0());
                       idn.closed_form = value(0.0);
                       return idn;
                   }});

    out.push_back({"Crit4bnS", sec, fam,
                   {closed("n", 1.0, 1.0, 3.0), left_open("s", 2.0, 0.0, 4.0), open("b", 0.5, -1.0 / r2, 1.0 / r2)},
                   "0", "second kernel taken at pi b (v + ib) so that the criterion holds",
                   [=](const param_map& p) {
                       const int n = integer_param(p.at("n"), "n");
                       const double s = p.at("s"), b = p.at("b");
                       require(std::abs(b) >= 0.1, "|b| must be at least 0.1");
                       const double a = 0.5 - b / 2.0;
                       analytic_fn F = four_pole_kernel(a, b, n, s);
                       return line_identity(F, b, {}, pi * std::abs(b) * s, value(0.0));
                   }});
}

} // namespace glasser::cat

#endif
