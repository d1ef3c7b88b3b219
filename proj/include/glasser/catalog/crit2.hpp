#ifndef GLASSER_CATALOG_CRIT2_HPP
#define GLASSER_CATALOG_CRIT2_HPP

// zeta(a - iv) zeta(a - 1 + iv) / cosh(pi v) on the unit strip.

#include <glasser/catalog/fourpole.hpp>

namespace glasser::cat {

inline analytic_fn crit2_kernel(double a)
{
    return [a](cplx v) { return zeta(a - I * v) * zeta(a - 1.0 + I * v) / std::cosh(pi * v); };
}

inline theorem_spec crit2_theorem(double a)
{
    const std::vector<cplx> at = {I * (1.0 - a), I * (a - 2.0), -0.5 * I};
    theorem_spec t = theorem(crit2_kernel(a), 1.0, merged_poles(1.0, at));
    t.avoid = {I * (1.0 - a), I * (a - 2.0), -0.5 * I, 0.5 * I, -1.5 * I};
    return t;
}

/// zeta(a - 1/2)^2 - 2 pi X zeta(2a - 2) sec(pi a), X the weight of i(a - 2).
/// At a = 3/2 both terms have double poles; their difference tends to
/// gamma^2 + 2 gamma(1) - pi^2/6.
inline double crit2_rhs(double a)
{
    if (std::abs(a - 1.5) < 1e-9)
        return eg * eg + 2.0 * g(1) - pi * pi / 6.0;
    const double z = zeta(a - 0.5);
    const double x = strip_spec(1.0).weight(I * (a - 2.0));
    return z * z - (x == 0.0 ? 0.0 : 2.0 * pi * x * zeta(2.0 * a - 2.0) / std::cos(pi * a));
}

inline void add_crit2(std::vector<catalog_entry>& out)
{
    const std::string sec = "3.6";
    const std::string fam = "crit2_family";

    out.push_back({"Ct2", sec, fam, {closed("a", 1.3, 0.25, 2.5)},
                   "zeta(a - 1/2)^2 - 2 pi X zeta(2a - 2) sec(pi a)",
                   "X = 1 for 1 < a < 2, 1/2 at the ends; a = 1 integrates the real part; a = 3/2 is the limit",
                   [](const param_map& p) {
                       const double a = p.at("a");
                       require(std::abs(a - 2.0) > 1e-9, "a = 2 puts a zeta pole on the axis");
                       theorem_spec t = crit2_theorem(a);
                       if (std::abs(a - 1.0) < 1e-9) {
                           identity idn = product_line(on_axis(t.F), pi, t, [] { return cplx(crit2_rhs(1.0)); });
                           idn.lhs.mode = integration_mode::real_part_only;
                           return idn;
                       }
                       identity idn = line_identity(t.F, 1.0, t.poles, pi, [a] { return cplx(crit2_rhs(a)); });
                       idn.theorem = std::move(t);
                       return idn;
                   }});

    out.push_back({"Ct2d", sec, fam, {}, "1/4", "a = 1/2",
                   [](const param_map&) {
                       theorem_spec t = crit2_theorem(0.5);
                       identity idn = line_identity(t.F, 1.0, t.poles, pi, value(0.25));
                       idn.theorem = std::move(t);
                       return idn;
                   }});

    out.push_back({"Ct2e", sec, fam, {}, "zeta(1/2)^2 - pi/2", "a = 1; only the imaginary part diverges",
                   [](const param_map&) {
                       theorem_spec t = crit2_theorem(1.0);
                       identity idn = product_line(on_axis(t.F), pi, t, [] {
                           const double z = zeta(0.5);
                           return cplx(z * z - pi / 2.0);
                       });
                       idn.lhs.mode = integration_mode::real_part_only;
                       return idn;
                   }});
}

} // namespace glasser::cat

#endif
