#ifndef GLASSER_QUADRATURE_HPP
#define GLASSER_QUADRATURE_HPP

// Adaptive Gauss-Kronrod quadrature for complex integrands on the real line,
// the half line and finite intervals.

#include <glasser/errors.hpp>
#include <glasser/specfun.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace glasser {

using integrand = std::function<cplx(double)>;

enum class integration_mode { full_value, real_part_only, imaginary_part_only };

struct integration_settings {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 200000;
    double tail_cutoff_eps = 1e-16;
    integration_mode mode = integration_mode::full_value;
    double max_panel_width = 0.5;

    void validate() const
    {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(tail_cutoff_eps > 0.0))
            throw validation_error("integration_settings: tolerances must be positive");
        if (max_subdivisions < 1)
            throw validation_error("integration_settings: max_subdivisions must be >= 1");
        if (!(max_panel_width > 0.0))
            throw validation_error("integration_settings: max_panel_width must be positive");
    }
    double tolerance_for(double magnitude) const { return std::max(abs_tol, rel_tol * magnitude); }
};

struct integration_result {
    complex_point value;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

inline cplx project(cplx z, integration_mode mode)
{
    switch (mode) {
    case integration_mode::real_part_only:
        return {z.real(), 0.0};
    case integration_mode::imaginary_part_only:
        return {0.0, z.imag()};
    default:
        return z;
    }
}

/// Numerically stable sech.
inline double sech(double x)
{
    const double e = std::exp(-std::abs(x));
    return 2.0 * e / (1.0 + e * e);
}

namespace detail {

inline constexpr std::array<double, 8> kronrod_nodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kronrod_weights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> gauss_weights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct panel {
    double lo, hi;
    cplx value;
    double error;
    bool operator<(const panel& other) const { return error < other.error; }
};

class sampler {
public:
    sampler(const integrand& f, integration_mode mode) : f_(f), mode_(mode) {}

    cplx operator()(double v)
    {
        ++evaluations;
        const cplx raw = project(f_(v), mode_);
        if (!std::isfinite(raw.real()) || !std::isfinite(raw.imag()))
            throw singular_sample("integrand is not finite at v = " + std::to_string(v));
        return raw;
    }

    long evaluations = 0;

private:
    const integrand& f_;
    integration_mode mode_;
};

inline panel gauss_kronrod(sampler& g, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const cplx f_center = g(center);
    cplx kronrod = f_center * kronrod_weights[7];
    cplx gauss = f_center * gauss_weights[3];
    double abs_sum = std::abs(f_center) * kronrod_weights[7];
    std::array<cplx, 15> samples{};
    samples[7] = f_center;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[static_cast<std::size_t>(j)];
        const cplx f1 = g(center - dx);
        const cplx f2 = g(center + dx);
        samples[static_cast<std::size_t>(j)] = f1;
        samples[static_cast<std::size_t>(14 - j)] = f2;
        const double w = kronrod_weights[static_cast<std::size_t>(j)];
        kronrod += w * (f1 + f2);
        abs_sum += w * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            gauss += gauss_weights[static_cast<std::size_t>(j / 2)] * (f1 + f2);
    }
    const cplx mean = kronrod / 2.0;
    double asc = std::abs(f_center - mean) * kronrod_weights[7];
    for (int j = 0; j < 7; ++j)
        asc += kronrod_weights[static_cast<std::size_t>(j)] *
               (std::abs(samples[static_cast<std::size_t>(j)] - mean) +
                std::abs(samples[static_cast<std::size_t>(14 - j)] - mean));

    const double resabs = abs_sum * std::abs(half);
    const double resasc = asc * std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);
    return {lo, hi, kronrod * half, err};
}

// Adaptive integration over the union of [cuts[i], cuts[i+1]].
inline integration_result adaptive(const integrand& f, std::vector<double> cuts,
                                   const integration_settings& s, double extra_error = 0.0)
{
    s.validate();
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    sampler g(f, s.mode);

    std::priority_queue<panel> queue;
    cplx total = 0.0;
    double total_err = 0.0;
    double frozen_err = 0.0;
    cplx frozen = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / s.max_panel_width)));
        for (int k = 0; k < pieces; ++k) {
            const double a = lo + (hi - lo) * k / pieces;
            const double b = (k + 1 == pieces) ? hi : lo + (hi - lo) * (k + 1) / pieces;
            panel p = gauss_kronrod(g, a, b);
            total += p.value;
            total_err += p.error;
            queue.push(p);
        }
    }

    int subdivisions = 0;
    while (!queue.empty() && total_err + extra_error > s.tolerance_for(std::abs(total))) {
        if (subdivisions >= s.max_subdivisions)
            throw non_convergence("adaptive quadrature: subdivision budget exhausted");
        panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi) ||
            (worst.hi - worst.lo) < 1e-13 * std::max(1.0, std::abs(mid))) {
            // cannot be split further; keep its contribution as is
            frozen += worst.value;
            frozen_err += worst.error;
            total_err -= worst.error;
            total -= worst.value;
            if (frozen_err > s.tolerance_for(std::abs(total + frozen)))
                throw non_convergence("adaptive quadrature: unresolvable panel near v = " +
                                      std::to_string(mid));
            continue;
        }
        panel left = gauss_kronrod(g, worst.lo, mid);
        panel right = gauss_kronrod(g, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++subdivisions;
    }

    // Re-sum in panel order so the result does not depend on queue history.
    std::vector<panel> finals;
    finals.reserve(queue.size());
    while (!queue.empty()) {
        finals.push_back(queue.top());
        queue.pop();
    }
    std::sort(finals.begin(), finals.end(), [](const panel& a, const panel& b) { return a.lo < b.lo; });
    cplx sum = frozen;
    double err = frozen_err;
    for (const panel& p : finals) {
        sum += p.value;
        err += p.error;
    }
    err += extra_error;
    integration_result r;
    r.value = complex_point(sum);
    r.error_estimate = err;
    r.evaluations = g.evaluations;
    r.converged = err <= s.tolerance_for(std::abs(sum));
    return r;
}

// Truncation point: start from the kernel envelope and push out until the
// sampled integrand is negligible at the edge.
inline double truncation_point(const integrand& f, double decay_rate, const integration_settings& s,
                               bool both_sides, double& tail_error)
{
    if (!(decay_rate > 0.0))
        throw domain_error("decay_rate must be positive");
    double cut = std::log(1.0 / s.tail_cutoff_eps) / decay_rate;
    const double target = 1e-3 * s.abs_tol;
    for (int iter = 0; iter < 60; ++iter) {
        double edge = std::abs(project(f(cut), s.mode));
        if (both_sides)
            edge += std::abs(project(f(-cut), s.mode));
        if (!std::isfinite(edge))
            throw singular_sample("integrand is not finite at the truncation point");
        const double tail = edge / decay_rate;
        if (tail <= target) {
            tail_error = tail;
            return cut;
        }
        cut *= 1.25;
    }
    throw non_convergence("integrand does not decay at the declared rate");
}

inline std::vector<double> cuts_within(double lo, double hi, const std::vector<double>& breakpoints)
{
    std::vector<double> cuts{lo, hi};
    for (double p : breakpoints)
        if (p > lo && p < hi)
            cuts.push_back(p);
    return cuts;
}

} // namespace detail

/// Integral of f over the whole real line. `breakpoints` are points where f
/// (or the selected component) is singular or non-smooth; they become panel
/// edges and are never sampled.
inline integration_result integrate_real_line(const integrand& f, double decay_rate,
                                              const integration_settings& s = {},
                                              const std::vector<double>& breakpoints = {})
{
    double tail = 0.0;
    const double cut = detail::truncation_point(f, decay_rate, s, true, tail);
    return detail::adaptive(f, detail::cuts_within(-cut, cut, breakpoints), s, tail);
}

/// Integral of f over [0, infinity).
inline integration_result integrate_half_line(const integrand& f, double decay_rate,
                                              const integration_settings& s = {},
                                              const std::vector<double>& breakpoints = {})
{
    double tail = 0.0;
    const double cut = detail::truncation_point(f, decay_rate, s, false, tail);
    return detail::adaptive(f, detail::cuts_within(0.0, cut, breakpoints), s, tail);
}

/// Same as integrate_real_line with only the real part of f retained, so f
/// may have a non-integrable imaginary part at the breakpoints.
inline integration_result real_part_integral(const integrand& f, double decay_rate,
                                             integration_settings s = {},
                                             const std::vector<double>& breakpoints = {})
{
    s.mode = integration_mode::real_part_only;
    return integrate_real_line(f, decay_rate, s, breakpoints);
}

/// Integrand on a finite interval given the point and its distances to both
/// ends, which stay accurate where hi - v or v - lo would cancel.
using finite_integrand = std::function<cplx(double v, double from_lo, double to_hi)>;

struct endpoint_singularity {
    enum class kind { none, inverse_sqrt_both, inverse_power };
    kind type = kind::none;
    double exponent = 0.0; // for inverse_power: f ~ distance^(-exponent)

    static endpoint_singularity none() { return {}; }
    static endpoint_singularity inverse_sqrt_both() { return {kind::inverse_sqrt_both, 0.5}; }
    static endpoint_singularity inverse_power(double e) { return {kind::inverse_power, e}; }
};

/// Integral over [lo, hi]. Singular endpoints are handled with v = tanh(u),
/// which turns a power singularity into exponential decay in u.
inline integration_result integrate_finite(const finite_integrand& f, double lo, double hi,
                                           endpoint_singularity sing = {},
                                           const integration_settings& s = {})
{
    if (!(lo < hi))
        throw domain_error("integrate_finite: need lo < hi");
    if (sing.type == endpoint_singularity::kind::none) {
        const integrand g = [&](double v) { return f(v, v - lo, hi - v); };
        return detail::adaptive(g, {lo, hi}, s);
    }
    if (!(sing.exponent < 1.0))
        throw domain_error("integrate_finite: endpoint singularity is not integrable");
    const double half = 0.5 * (hi - lo);
    const integrand g = [&](double u) -> cplx {
        const double e = std::exp(-2.0 * std::abs(u));
        const double near = half * 2.0 * e / (1.0 + e); // distance to the closer end
        const double far = 2.0 * half - near;
        const double v = u >= 0.0 ? hi - near : lo + near;
        const double jac = half * 4.0 * e / ((1.0 + e) * (1.0 + e));
        // Below the smallest normal double the distance itself is inexact.
        if (near < std::numeric_limits<double>::min())
            return 0.0;
        return (u >= 0.0 ? f(v, far, near) : f(v, near, far)) * jac;
    };
    const double decay = 2.0 * (1.0 - std::max(0.0, sing.exponent));
    return integrate_real_line(g, decay, s, {0.0});
}

inline integration_result integrate_finite(const integrand& f, double lo, double hi,
                                           endpoint_singularity sing = {},
                                           const integration_settings& s = {})
{
    return integrate_finite(
        finite_integrand([&](double v, double, double) { return f(v); }), lo, hi, sing, s);
}

/// Window used to sum conditionally convergent integrals. It equals 1 to
/// within 1e-17 on [0, 1] and falls smoothly to 0 around 1 + 4 width.
inline double smooth_window(double x, double width = 0.5)
{
    return 0.5 * std::erfc((x - 1.0 - 4.0 * width) / width);
}

struct window_options {
    double scale = 32.0;      // first window scale T
    double width = 0.5;       // transition width in units of T
    int richardson_levels = 3; // number of scales T, 2T, 4T, ...
};

/// Integral over the real line of an integrand whose tail decays only
/// algebraically and oscillates. Computes windowed integrals at scales
/// T, 2T, 4T and removes the leading powers of 1/T by Richardson extrapolation.
/// The oscillating part is suppressed by the smooth window itself.
inline integration_result integrate_windowed(const integrand& f, window_options w,
                                             const integration_settings& s = {},
                                             const std::vector<double>& breakpoints = {},
                                             bool half_line = false)
{
    if (w.richardson_levels < 1 || w.richardson_levels > 4)
        throw domain_error("integrate_windowed: richardson_levels must be in [1, 4]");
    std::vector<cplx> level;
    long evals = 0;
    double quad_err = 0.0;
    double t = w.scale;
    for (int k = 0; k < w.richardson_levels; ++k, t *= 2.0) {
        const double reach = t * (1.0 + 11.0 * w.width);
        const double tt = t;
        const integrand g = [&, tt](double v) { return f(v) * smooth_window(std::abs(v) / tt, w.width); };
        const integration_result r =
            detail::adaptive(g, detail::cuts_within(half_line ? 0.0 : -reach, reach, breakpoints), s);
        level.push_back(r.value);
        evals += r.evaluations;
        quad_err = std::max(quad_err, r.error_estimate);
    }
    // Richardson table for errors in powers of 1/T.
    std::vector<cplx> prev = level;
    cplx best = level.back();
    double extrap_err = level.size() > 1 ? std::abs(level.back() - level[level.size() - 2]) : 0.0;
    // Over the whole line only the even part of the tail survives, so the
    // window error runs in odd powers of 1/T.
    const double step = half_line ? 2.0 : 4.0;
    double factor = 2.0;
    for (std::size_t order = 1; order < level.size(); ++order, factor *= step) {
        std::vector<cplx> next;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i)
            next.push_back((factor * prev[i + 1] - prev[i]) / (factor - 1.0));
        extrap_err = std::abs(next.back() - prev.back());
        best = next.back();
        prev = std::move(next);
    }
    integration_result r;
    r.value = complex_point(best);
    r.error_estimate = extrap_err + quad_err;
    r.evaluations = evals;
    r.converged = r.error_estimate <= s.tolerance_for(std::abs(best));
    return r;
}

} // namespace glasser

#endif
