#ifndef GLASSER_CATALOG_PRODUCT_HPP
#define GLASSER_CATALOG_PRODUCT_HPP

// The product kernel zeta(a + iv) zeta(a + b - iv) / cosh(pi v / b) with
// its three residues, and the diagonal case a = 1/2 - b/2.

#include <glasser/catalog/ex6.hpp>

namespace glasser::cat {

/// -i pi sgn(b) (R3 + w (R1 + R2)) with w the strip weight of (a - 1) i.
inline cplx product_kernel_rhs(double a, double b)
{
    const strip_spec strip(b);
    const double w = strip.weight(I * (a - 1.0));
    const double z = zeta(a + b / 2.0);
    const cplx r3 = I * z * z * b / pi;
    cplx r12 = 0.0;
    if (w != 0.0)
        r12 = -2.0 * I * zeta(2.0 * a + b - 1.0) / std::cos(pi * (a - 1.0) / b);
    return -I * pi * static_cast<double>(strip.orientation_sign()) * (r3 + w * r12);
}

/// P1 = i(a - 1), P2 = i(1 - a - b), P3 = -ib/2 with their analytic residues
/// R1 = R2 = -i zeta(2a + b - 1) sec(pi (a - 1)/b), R3 = i zeta(a + b/2)^2 b / pi.
inline std::vector<pole_spec> poles_product_kernel(double a, double b)
{
    std::vector<pole_spec> ps = zeta_product_poles(a, b);
    const double c = std::cos(pi * (a - 1.0) / b);
    const bool zeta_poles = ps[0].boundary_weight != 0.0;
    if (zeta_poles && std::abs(c) < 1e-14)
        throw domain_error("poles_product_kernel: sec(pi (a - 1)/b) is singular");
    if (zeta_poles) {
        const cplx r = -I * zeta(2.0 * a + b - 1.0) / c;
        ps[0].analytic_residue = complex_point(r);
        ps[1].analytic_residue = complex_point(r);
    }
    const double z = zeta(a + b / 2.0);
    ps[2].analytic_residue = complex_point(I * z * z * b / pi);
    return ps;
}

/// X = 0, 1/2, 1 as |b| is below, at or above 1.
inline double diagonal_weight(double b)
{
    const double m = std::abs(b);
    return m < 1.0 ? 0.0 : (m == 1.0 ? 0.5 : 1.0);
}

/// sgn(b) (b zeta(1/2)^2 + X pi sec(pi (-1 - b) / (2b))).
inline double diagonal_rhs(double b)
{
    const double z = zeta(0.5);
    const double x = diagonal_weight(b);
    const double sec_term = x == 0.0 ? 0.0 : x * pi / std::cos(pi * (-1.0 - b) / (2.0 * b));
    return (b > 0.0 ? 1.0 : -1.0) * (b * z * z + sec_term);
}

/// Theorem for the product kernel, with the principal-value breakpoint
/// added when a pole sits on the axis.
inline theorem_spec product_theorem(double a, double b, cplx scale = 1.0)
{
    theorem_spec t = theorem(zeta_product_kernel(a, b), b, zeta_product_poles(a, b), scale);
    t.avoid = cosh_neighbours(b);
    return t;
}

/// Real-line integral of Re or Im of G, compared with a product-kernel route.
inline identity product_line(integrand f, double decay, theorem_spec t, std::function<cplx()> closed)
{
    identity idn;
    idn.lhs.f = std::move(f);
    idn.lhs.decay_rate = decay;
    for (const pole_spec& p : t.poles)
        if (std::abs(p.location.im()) < 1e-12)
            idn.lhs.breakpoints.push_back(p.location.re());
    idn.theorem = std::move(t);
    idn.closed_form = std::move(closed);
    return idn;
}

inline void add_product(std::vector<catalog_entry>& out)
{
    const std::string sec = "3.4";
    const std::string fam = "product_kernel";

    out.push_back({"FCrit1", sec, fam, {closed("a", 0.3, -2.0, 2.0), closed("b", 1.2, -3.0, 3.0)},
                   "-i pi sgn(b) (R3 + H (R1 + R2)), R1 = R2 = -i zeta(2a + b - 1) sec(pi (a - 1)/b), "
                   "R3 = i zeta(a + b/2)^2 b / pi",
                   "",
                   [](const param_map& p) {
                       const double a = p.at("a"), b = p.at("b");
                       require(b != 0.0, "b must be nonzero");
                       return line_identity(zeta_product_kernel(a, b), b, zeta_product_poles(a, b),
                                            pi / std::abs(b), [=] { return product_kernel_rhs(a, b); });
                   }});

    out.push_back({"Ctx2m", sec, fam, {}, "zeta(1/2) pi + zeta(3/4)^2 / 2",
                   "a = 1, b = -1/2: both zeta poles on the strip edges",
                   [](const param_map&) {
                       identity idn = product_line(on_axis(zeta_product_kernel(1.0, -0.5)), 2.0 * pi,
                                                   product_theorem(1.0, -0.5),
                                                   [] { return cplx(zeta(0.5) * pi + zeta(0.75) * zeta(0.75) / 2.0); });
                       idn.lhs.mode = integration_mode::real_part_only;
                       return idn;
                   }});

    out.push_back({"Ctx3", sec, fam, {left_open("b", 0.4, 0.0, 3.0)}, "b zeta(1/2 - b/2)^2", "a = 1/2 - b",
                   [](const param_map& p) {
                       const double b = p.at("b");
                       const double a = 0.5 - b;
                       return line_identity(zeta_product_kernel(a, b), b, zeta_product_poles(a, b), pi / b, [b] {
                           const double z = zeta(0.5 - b / 2.0);
                           return cplx(b * z * z);
                       });
                   }});

    out.push_back({"Ctx4", sec, fam, {closed("b", 1.5, -3.0, 3.0)},
                   "sgn(b) (b zeta(1/2)^2 + X pi sec(pi (-1 - b) / (2b)))",
                   "a = 1/2 - b/2; both signs follow sgn(b)",
                   [](const param_map& p) {
                       const double b = p.at("b");
                       require(std::abs(b) >= 0.25, "|b| must be at least 1/4");
                       identity idn = product_line(on_axis(zeta_product_kernel(0.5 - b / 2.0, b)), pi / std::abs(b),
                                                   product_theorem(0.5 - b / 2.0, b),
                                                   [b] { return cplx(diagonal_rhs(b)); });
                       idn.lhs.mode = integration_mode::real_part_only;
                       return idn;
                   }});

    // Functional-equation form: (2 pi)^(iv) zeta(1 - s)^2 Gamma(1 - s) sin(pi s / 2)
    // with s = 1/2 - b/2 + iv, i.e. pi (2 pi)^(b/2 - 1/2) times the diagonal kernel.
    auto functional_form = [](double b) {
        return [b](cplx v) {
            const cplx s1 = 0.5 + b / 2.0 - I * v;
            const cplx z = zeta(s1);
            return z * z * gam(s1) * std::pow(2.0 * pi, I * v) * std::sin(pi * (0.25 - b / 4.0 + I * v / 2.0)) /
                   std::cosh(pi * v / b);
        };
    };
    auto functional_scale = [](double b) { return pi * std::pow(2.0 * pi, b / 2.0 - 0.5); };

    out.push_back({"CTy1a", sec, fam, {closed("b", 1.5, 0.25, 3.0)},
                   "(2 pi)^(1/2 + b/2) / 2 (zeta(1/2)^2 b + X pi sec(pi (-1 - b) / (2b)))", "",
                   [=](const param_map& p) {
                       const double b = p.at("b");
                       identity idn = product_line(on_axis(functional_form(b)), pi / b,
                                                   product_theorem(0.5 - b / 2.0, b, functional_scale(b)),
                                                   [=] { return cplx(functional_scale(b) * diagonal_rhs(b)); });
                       idn.lhs.mode = integration_mode::real_part_only;
                       return idn;
                   }});

    out.push_back({"Ct4b1", sec, fam, {}, "pi (pi/2 - zeta(1/2)^2)", "b = 1 imaginary-part form",
                   [](const param_map&) {
                       integrand f = [](double v) {
                           const cplx s1(1.0, -v);
                           const cplx z = zeta(s1);
                           const cplx w = std::pow(2.0 * pi, I * v) * z * z * gam(s1);
                           return cplx(w.imag() * std::sinh(pi * v / 2.0) / std::cosh(pi * v));
                       };
                       return product_line(f, pi, product_theorem(0.0, 1.0, -pi),
                                           [] { return cplx(pi * (pi / 2.0 - zeta(0.5) * zeta(0.5))); });
                   }});

    out.push_back({"Ct4bm1", sec, fam, {}, "zeta(1/2)^2 / 2 - pi/4", "b = -1 real-part form",
                   [](const param_map&) {
                       integrand f = [](double v) {
                           const cplx s1(0.0, -v);
                           const cplx z = zeta(s1);
                           const cplx w = std::pow(2.0 * pi, I * v) * z * z * gam(s1);
                           return cplx(w.real() * std::cosh(pi * v / 2.0) / std::cosh(pi * v));
                       };
                       return product_line(f, pi, product_theorem(1.0, -1.0, 0.5),
                                           [] { return cplx(zeta(0.5) * zeta(0.5) / 2.0 - pi / 4.0); });
                   }});
}

} // namespace glasser::cat

#endif
