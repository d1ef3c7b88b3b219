#ifndef GLASSER_MASTER_HPP
#define GLASSER_MASTER_HPP

// The strip theorem end to end: criterion check, residue-sum right-hand side
// and three-way verification of a bound identity.

#include <glasser/errors.hpp>
#include <glasser/quadrature.hpp>
#include <glasser/residues.hpp>
#include <glasser/specfun.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace glasser {

using param_map = std::map<std::string, double>;

/// A simple pole of the integrand on the real axis, integrated as a
/// principal value by subtracting coefficient / (v - at) on |v - at| < half_width.
struct pv_pole {
    double at = 0.0;
    cplx coefficient{};
    double half_width = 0.25;
};

/// How the left-hand side integral is evaluated.
struct lhs_spec {
    enum class domain { real_line, half_line, finite, windowed_real, windowed_half };
    domain where = domain::real_line;
    integrand f;               // real_line, half_line, windowed
    finite_integrand finite_f; // finite
    double lo = 0.0, hi = 1.0;
    endpoint_singularity singularity;
    double decay_rate = pi;
    std::vector<double> breakpoints;
    integration_mode mode = integration_mode::full_value;
    std::vector<pv_pole> principal_values; // real_line and half_line only
    window_options window;
    /// The reported left side is scale * integral + offset.
    cplx scale = 1.0;
    cplx offset = 0.0;
    /// Tolerances that this integrand can honour; defaults to the run's settings.
    std::optional<double> abs_tol;
};

/// A function F meeting one of the strip criteria, with its poles.
struct theorem_spec {
    analytic_fn F;
    double b = 1.0;
    criterion_kind kind = criterion_kind::antisymmetric;
    analytic_fn h; // for difference_h / additive_h
    std::vector<pole_spec> poles;
    std::vector<cplx> avoid; // other singularities near the poles
    cplx scale = 1.0;        // the identity's RHS is scale * theorem RHS + offset
    cplx offset = 0.0;
};

/// An identity with its parameters bound.
struct identity {
    std::string id;
    param_map params;
    lhs_spec lhs;
    std::optional<theorem_spec> theorem;
    /// Overrides the theorem route when the residue-side value is assembled
    /// differently (derivatives, independent series).
    std::function<cplx()> residue_route;
    std::function<cplx()> closed_form;
    /// Approximation entries: a directly computed value stands in for the
    /// integral and both residuals are held to this bound instead.
    std::function<cplx()> approximation;
    double approximation_bound = 0.0;
};

struct verify_settings {
    integration_settings quad;
    double tolerance = 1e-6;
    double criterion_tolerance = 1e-10;
    int criterion_samples = 64;
    unsigned seed = 20240116;
};

struct verification_report {
    std::string id;
    param_map params;
    cplx lhs{};
    double lhs_error = 0.0;
    cplx rhs_closed{};
    cplx rhs_residues{};
    double criterion_deviation = 0.0;
    double residual_closed = 0.0;
    double residual_residues = 0.0;
    bool pass = false;
    double seconds = 0.0;
    std::string error; // empty unless a stage threw
};

/// Largest normalised violation of the criterion over seeded real samples
/// with |v| <= 10, kept 1e-3 away from `avoid` (real parts of poles and
/// other singular points on the axis).
inline double check_criterion(const analytic_fn& F, double b, criterion_kind kind, const analytic_fn& h,
                              int sample_count, unsigned seed = 20240116,
                              const std::vector<double>& avoid = {})
{
    if (sample_count < 1)
        throw domain_error("check_criterion: sample_count must be positive");
    if (kind != criterion_kind::antisymmetric && !h)
        throw domain_error("check_criterion: h is required for the corollary forms");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    double worst = 0.0;
    for (int k = 0; k < sample_count;) {
        const double v = dist(rng);
        bool near = false;
        for (double x : avoid)
            near = near || std::abs(v - x) < 1e-3;
        if (near)
            continue;
        ++k;
        const cplx fv = F(cplx(v, 0.0));
        const cplx fm = F(cplx(-v, -b));
        if (!std::isfinite(std::abs(fv)) || !std::isfinite(std::abs(fm)))
            throw singular_sample("check_criterion: F not finite at v = " + std::to_string(v));
        cplx dev;
        switch (kind) {
        case criterion_kind::antisymmetric:
            dev = fv + fm;
            break;
        case criterion_kind::difference_h:
            dev = fv - fm - h(cplx(v, 0.0)) * fv;
            break;
        default:
            dev = fv + fm - h(cplx(v, 0.0)) * fv;
            break;
        }
        worst = std::max(worst, std::abs(dev) / std::max(1.0, std::abs(fv)));
    }
    return worst;
}

/// Residue-sum value of a theorem spec: numeric residues at the weighted
/// poles, then scale and offset.
inline cplx theorem_rhs(const theorem_spec& t)
{
    const strip_spec strip(t.b);
    const std::vector<cplx> residues = numeric_residues(t.F, t.poles, t.avoid);
    return t.scale * rhs_from_residues(t.poles, residues, t.kind, strip.orientation_sign()) + t.offset;
}

/// Same, from the analytic residues attached to the poles.
inline cplx theorem_rhs_analytic(const theorem_spec& t)
{
    const strip_spec strip(t.b);
    return t.scale * rhs_from_residues(t.poles, t.kind, strip.orientation_sign()) + t.offset;
}

namespace detail {

// The integrand with its on-axis poles subtracted near each pole; the
// subtracted terms have zero principal value over the symmetric windows.
inline integrand subtract_pv_poles(const integrand& f, const std::vector<pv_pole>& ps,
                                   std::vector<double>& breakpoints)
{
    for (const pv_pole& p : ps) {
        if (!(p.half_width > 0.0))
            throw domain_error("pv_pole: half_width must be positive");
        breakpoints.insert(breakpoints.end(), {p.at - p.half_width, p.at, p.at + p.half_width});
    }
    return [f, ps](double v) {
        cplx value = f(v);
        for (const pv_pole& p : ps)
            if (std::abs(v - p.at) < p.half_width)
                value -= p.coefficient / (v - p.at);
        return value;
    };
}

} // namespace detail

inline integration_result evaluate_lhs(const lhs_spec& l, integration_settings s)
{
    s.mode = l.mode;
    if (l.abs_tol)
        s.abs_tol = *l.abs_tol;
    std::vector<double> cuts = l.breakpoints;
    const integrand f = l.principal_values.empty() ? l.f : detail::subtract_pv_poles(l.f, l.principal_values, cuts);
    switch (l.where) {
    case lhs_spec::domain::real_line:
        return integrate_real_line(f, l.decay_rate, s, cuts);
    case lhs_spec::domain::half_line:
        for (const pv_pole& p : l.principal_values)
            if (p.at - p.half_width < 0.0)
                throw domain_error("pv_pole: window crosses the half-line origin");
        return integrate_half_line(f, l.decay_rate, s, cuts);
    case lhs_spec::domain::finite:
        return integrate_finite(l.finite_f, l.lo, l.hi, l.singularity, s);
    case lhs_spec::domain::windowed_real:
        return integrate_windowed(l.f, l.window, s, l.breakpoints, false);
    default:
        return integrate_windowed(l.f, l.window, s, l.breakpoints, true);
    }
}

inline double relative_residual(cplx value, cplx reference)
{
    return std::abs(value - reference) / (1.0 + std::abs(reference));
}

/// Three-way verification. Never throws for numerical trouble: failures are
/// recorded in the report.
inline verification_report verify(const identity& idn, const verify_settings& vs = {})
{
    const auto start = std::chrono::steady_clock::now();
    verification_report r;
    r.id = idn.id;
    r.params = idn.params;
    try {
        double tolerance = vs.tolerance;
        if (idn.approximation) {
            r.lhs = idn.approximation();
            tolerance = std::max(tolerance, idn.approximation_bound);
        } else {
            const integration_result q = evaluate_lhs(idn.lhs, vs.quad);
            r.lhs = idn.lhs.scale * cplx(q.value) + idn.lhs.offset;
            r.lhs_error = std::abs(idn.lhs.scale) * q.error_estimate;
        }
        r.rhs_closed = idn.closed_form();
        if (idn.residue_route)
            r.rhs_residues = idn.residue_route();
        else if (idn.theorem)
            r.rhs_residues = theorem_rhs(*idn.theorem);
        else
            throw unresolved_residue("identity has no residue route");
        if (idn.theorem) {
            std::vector<double> avoid = idn.lhs.breakpoints;
            for (const pole_spec& p : idn.theorem->poles)
                avoid.push_back(p.location.re());
            r.criterion_deviation = check_criterion(idn.theorem->F, idn.theorem->b, idn.theorem->kind,
                                                    idn.theorem->h, vs.criterion_samples, vs.seed, avoid);
        }
        r.residual_closed = relative_residual(r.lhs, r.rhs_closed);
        r.residual_residues = relative_residual(r.lhs, r.rhs_residues);
        r.pass = r.residual_closed <= tolerance && r.residual_residues <= tolerance &&
                 r.criterion_deviation <= vs.criterion_tolerance;
    } catch (const std::exception& e) {
        r.error = e.what();
        r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace glasser

#endif
