#ifndef GLASSER_CATALOG_CORE_HPP
#define GLASSER_CATALOG_CORE_HPP

// Catalog entry type and the small helpers every family uses.

#include <glasser/errors.hpp>
#include <glasser/master.hpp>
#include <glasser/quadrature.hpp>
#include <glasser/residues.hpp>
#include <glasser/specfun.hpp>

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace glasser {

struct param_range {
    std::string name;
    double default_value = 0.0;
    double min = 0.0;
    double max = 0.0;
    bool open_min = false;
    bool open_max = false;

    bool contains(double x) const
    {
        const bool above = open_min ? x > min : x >= min;
        const bool below = open_max ? x < max : x <= max;
        return above && below;
    }
};

struct catalog_entry {
    std::string id;
    std::string section;
    std::string family;
    std::vector<param_range> params;
    std::string closed_form_expr;
    std::string notes;
    std::function<identity(const param_map&)> builder;

    /// Defaults merged with `overrides`, each checked against its range.
    param_map resolve(const param_map& overrides = {}) const
    {
        param_map out;
        for (const param_range& p : params)
            out[p.name] = p.default_value;
        for (const auto& [name, value] : overrides) {
            const auto it = std::find_if(params.begin(), params.end(),
                                         [&](const param_range& p) { return p.name == name; });
            if (it == params.end())
                throw domain_error(id + ": unknown parameter '" + name + "'");
            if (!it->contains(value))
                throw domain_error(id + ": parameter '" + name + "' = " + std::to_string(value) +
                                   " is outside its range");
            out[name] = value;
        }
        return out;
    }

    identity bind(const param_map& overrides = {}) const
    {
        identity idn = builder(resolve(overrides));
        idn.id = id;
        idn.params = resolve(overrides);
        return idn;
    }
};

namespace cat {

// Shorthands used throughout the entry definitions.
inline cplx zeta(cplx s) { return riemann_zeta(s); }
inline double zeta(double s) { return riemann_zeta(s); }
inline cplx gam(cplx z) { return gamma(z); }
inline double g(int j) { return stieltjes_constant(j); }
inline constexpr double eg = euler_gamma;
inline cplx sech_c(cplx z) { return 1.0 / std::cosh(z); }

inline param_range fixed(const std::string& name, double value)
{
    return {name, value, value, value, false, false};
}
inline param_range open(const std::string& name, double value, double lo, double hi)
{
    return {name, value, lo, hi, true, true};
}
inline param_range left_open(const std::string& name, double value, double lo, double hi)
{
    return {name, value, lo, hi, true, false};
}
inline param_range closed(const std::string& name, double value, double lo, double hi)
{
    return {name, value, lo, hi, false, false};
}

/// Poles at the given points, each weighted by strip membership.
inline std::vector<pole_spec> poles(double b, std::initializer_list<std::pair<cplx, int>> at)
{
    const strip_spec strip(b);
    std::vector<pole_spec> out;
    for (const auto& [where, order] : at)
        out.push_back(make_pole(where, strip, order));
    return out;
}

/// Simple singular points kept when they lie in the closed strip, with
/// coincident points merged into one pole of the summed order.
inline std::vector<pole_spec> merged_poles(double b, const std::vector<cplx>& candidates)
{
    const strip_spec strip(b);
    std::vector<std::pair<cplx, int>> merged;
    for (cplx z : candidates) {
        if (strip.weight(z) == 0.0)
            continue;
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const auto& m) { return std::abs(m.first - z) < 1e-12; });
        if (it == merged.end())
            merged.push_back({z, 1});
        else
            ++it->second;
    }
    std::vector<pole_spec> out;
    for (const auto& [z, order] : merged)
        out.push_back(make_pole(z, strip, order));
    return out;
}

/// The real-line restriction of an analytic function.
inline integrand on_axis(analytic_fn F)
{
    return [F = std::move(F)](double v) { return F(cplx(v, 0.0)); };
}

/// Identity whose left side is the real-line integral of the theorem
/// function itself.
inline identity line_identity(analytic_fn F, double b, std::vector<pole_spec> ps, double decay,
                              std::function<cplx()> closed)
{
    identity idn;
    idn.lhs.f = on_axis(F);
    idn.lhs.decay_rate = decay;
    theorem_spec t;
    t.F = std::move(F);
    t.b = b;
    t.poles = std::move(ps);
    idn.theorem = std::move(t);
    idn.closed_form = std::move(closed);
    return idn;
}

inline std::function<cplx()> value(cplx c)
{
    return [c] { return c; };
}

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw domain_error(what);
}

inline int integer_param(double x, const std::string& name)
{
    require(x == std::round(x), name + " must be an integer");
    return static_cast<int>(x);
}

/// Principal-value subtraction for a simple pole of F at the real point x0.
inline pv_pole pv_at(const analytic_fn& F, double x0, double half_width = 0.25)
{
    return {x0, numeric_residue(F, cplx(x0, 0.0), half_width / 2.0), half_width};
}

/// Zeros of cosh(pi v / b) next to the one at -ib/2.
inline std::vector<cplx> cosh_neighbours(double b)
{
    return {I * b / 2.0, -1.5 * I * b};
}

/// Theorem spec with poles weighted against the strip of width b.
inline theorem_spec theorem(analytic_fn F, double b, std::vector<pole_spec> ps, cplx scale = 1.0,
                            cplx offset = 0.0)
{
    theorem_spec t;
    t.F = std::move(F);
    t.b = b;
    t.poles = std::move(ps);
    t.scale = scale;
    t.offset = offset;
    return t;
}

/// Half-line integral of Re(G(v)) against a theorem route.
inline identity half_line_re(analytic_fn G, double decay, theorem_spec t, std::function<cplx()> closed,
                             std::vector<double> cuts = {})
{
    identity idn;
    idn.lhs.where = lhs_spec::domain::half_line;
    idn.lhs.f = on_axis(std::move(G));
    idn.lhs.mode = integration_mode::real_part_only;
    idn.lhs.decay_rate = decay;
    idn.lhs.breakpoints = std::move(cuts);
    idn.theorem = std::move(t);
    idn.closed_form = std::move(closed);
    return idn;
}

} // namespace cat
} // namespace glasser

#endif
