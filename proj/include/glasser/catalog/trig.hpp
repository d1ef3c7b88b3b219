#ifndef GLASSER_CATALOG_TRIG_HPP
#define GLASSER_CATALOG_TRIG_HPP

// cos^s and sin^s of pi (b/2 - iv) over cosh(pi v / b), their real-line and
// finite-interval forms, and the s-derivative of the b = 1/2 cosine case.

#include <glasser/catalog/core.hpp>
#include <glasser/oracles.hpp>

namespace glasser::cat {

inline double log_cosh(double x)
{
    const double m = std::abs(x);
    return m + std::log1p(std::exp(-2.0 * m)) - std::log(2.0);
}

/// cos^s(pi (b/2 - iv)) / cosh(pi v / b).
inline analytic_fn cos_kernel(double b, double s)
{
    return [=](cplx v) { return std::pow(std::cos(pi * (b / 2.0 - I * v)), s) / std::cosh(pi * v / b); };
}

/// sin^s(pi (b/2 - iv)) / cosh(pi v / b).
inline analytic_fn sin_kernel(double b, double s)
{
    return [=](cplx v) { return std::pow(std::sin(pi * (b / 2.0 - I * v)), s) / std::cosh(pi * v / b); };
}

/// The cosh zero at -ib/2, plus the zeros of the power (i(k + c) for integer
/// k, each `order` times) when the power is negative.
inline std::vector<cplx> trig_candidates(double b, double c, int order)
{
    std::vector<cplx> found = {-I * b / 2.0};
    const int reach = static_cast<int>(std::ceil(std::abs(b))) + 2;
    for (int k = -reach; k <= reach; ++k)
        for (int j = 0; j < order; ++j)
            found.push_back(I * (k + c));
    return found;
}

inline theorem_spec trig_theorem(analytic_fn F, double b, std::vector<cplx> candidates, cplx scale)
{
    theorem_spec t = theorem(std::move(F), b, merged_poles(b, candidates), scale);
    candidates.push_back(I * b / 2.0);
    candidates.push_back(-1.5 * I * b);
    t.avoid = std::move(candidates);
    return t;
}

enum class trig_kind { cosine, sine };

/// Singular points of the cosine or sine kernel that the strip sees. The
/// cosine kernel takes 0 < s < 1/|b| or a negative integer s; the sine kernel
/// takes a negative even integer s.
inline std::vector<cplx> trig_singular_points(double b, double s, trig_kind kind)
{
    require(b != 0.0, "poles_trig: b must be nonzero");
    const bool negative_integer = s < 0.0 && s == std::round(s);
    if (kind == trig_kind::cosine) {
        require(negative_integer || (s > 0.0 && s < 1.0 / std::abs(b)),
                "poles_trig: cosine kernel needs 0 < s < 1/|b| or a negative integer s");
        return trig_candidates(b, (1.0 - b) / 2.0, negative_integer ? static_cast<int>(-s) : 0);
    }
    require(negative_integer && static_cast<long>(s) % 2 == 0, "poles_trig: sine kernel needs a negative even s");
    return trig_candidates(b, -b / 2.0, static_cast<int>(-s));
}

/// Poles inside the strip, coincident points merged into multipoles.
inline std::vector<pole_spec> poles_trig(double b, double s, trig_kind kind = trig_kind::cosine)
{
    return merged_poles(b, trig_singular_points(b, s, kind));
}

inline theorem_spec cos_theorem(double b, double s, cplx scale = 1.0)
{
    return trig_theorem(cos_kernel(b, s), b, trig_singular_points(b, s, trig_kind::cosine), scale);
}

inline theorem_spec sin_theorem(double b, int s, cplx scale = 1.0)
{
    return trig_theorem(sin_kernel(b, s), b, trig_singular_points(b, s, trig_kind::sine), scale);
}

/// d/ds of 2^(s/2) cos^s(pi (1/4 - iv)) / cosh(2 pi v).
inline analytic_fn cos_kernel_ds(double s)
{
    return [s](cplx v) {
        const cplx c = std::cos(pi * (0.25 - I * v));
        return std::pow(2.0, s / 2.0) * std::pow(c, s) * (std::log(2.0) / 2.0 + std::log(c)) /
               std::cosh(2.0 * pi * v);
    };
}

inline theorem_spec cos_ds_theorem(analytic_fn F, cplx scale)
{
    return trig_theorem(std::move(F), 0.5, {-0.25 * I}, scale);
}

/// Identity over [-1, 1] with the v = tanh(u) substitution at both ends.
inline identity finite_identity(finite_integrand f, double exponent, theorem_spec t, std::function<cplx()> closed)
{
    identity idn;
    idn.lhs.where = lhs_spec::domain::finite;
    idn.lhs.finite_f = std::move(f);
    idn.lhs.lo = -1.0;
    idn.lhs.hi = 1.0;
    idn.lhs.singularity = endpoint_singularity::inverse_power(std::max(0.0, exponent));
    idn.theorem = std::move(t);
    idn.closed_form = std::move(closed);
    return idn;
}

/// (v^2 + 1)^(s/2 - 1) (1 - v^2)^(-s/2) from the distances to both ends.
inline double cr2b_weight(double s, double v, double from_lo, double to_hi)
{
    return std::exp((s / 2.0 - 1.0) * std::log1p(v * v) - (s / 2.0) * std::log(from_lo * to_hi));
}

/// ln((1 - v^2)/(1 + v^2)).
inline double cr2b_log(double v, double from_lo, double to_hi)
{
    return std::log(from_lo * to_hi) - std::log1p(v * v);
}

inline void add_trig(std::vector<catalog_entry>& out)
{
    const double r2 = std::sqrt(2.0);
    const double ln2 = std::log(2.0);

    const std::string sc = "5.1";
    const std::string fc = "trig_cosine";

    out.push_back({"CR1", sc, fc, {open("b", 0.5, -1.0, 1.0), open("s", 1.0, 0.0, 20.0)}, "|b|",
                   "s < 1/|b|",
                   [](const param_map& p) {
                       const double b = p.at("b"), s = p.at("s");
                       require(std::abs(b) >= 0.05, "|b| must be at least 0.05");
                       require(s < 1.0 / std::abs(b) - 0.1, "s must stay below 1/|b| - 0.1");
                       const double sn = std::sin(pi * b / 2.0), tn = std::tan(pi * b / 2.0);
                       identity idn;
                       idn.lhs.f = [=](double v) {
                           const double lc = log_cosh(pi * v);
                           const double mod = (s / 2.0) * (2.0 * lc + std::log1p(-sn * sn * std::exp(-2.0 * lc)));
                           return cplx(std::exp(mod - log_cosh(pi * v / b)) *
                                       std::cos(s * std::atan(tn * std::tanh(pi * v))));
                       };
                       idn.lhs.decay_rate = pi * (1.0 / std::abs(b) - s);
                       idn.theorem = cos_theorem(b, s);
                       idn.closed_form = value(std::abs(b));
                       return idn;
                   }});

    out.push_back({"Cr2a", sc, fc, {open("b", 0.5, -1.0, 1.0), open("s", 1.0, 0.0, 20.0)}, "pi |b|",
                   "CR1 after v = tanh(pi u); B = tan(pi b / 2)",
                   [](const param_map& p) {
                       const double b = p.at("b"), s = p.at("s");
                       require(std::abs(b) >= 0.05, "|b| must be at least 0.05");
                       require(s < 1.0 / std::abs(b) - 0.1, "s must stay below 1/|b| - 0.1");
                       const double B = std::tan(pi * b / 2.0);
                       const double lcs = s * std::log(std::cos(pi * b / 2.0));
                       finite_integrand f = [=](double v, double from_lo, double to_hi) {
                           const double w = 0.5 * std::log(from_lo / to_hi) / b;
                           const double l = lcs + (s / 2.0) * std::log1p(B * B * v * v) -
                                            (s / 2.0 + 1.0) * std::log(from_lo * to_hi) - log_cosh(w);
                           return cplx(std::exp(l) * std::cos(s * std::atan(B * v)));
                       };
                       const double e = 1.0 + s / 2.0 - 1.0 / (2.0 * std::abs(b));
                       return finite_identity(f, e, cos_theorem(b, s, pi), value(pi * std::abs(b)));
                   }});

    out.push_back({"Cg", sc, fc, {closed("n", 1.0, 1.0, 6.0)},
                   "(-1)^(n-1) (-2 + 2 sqrt(2) sum_{k<n} (-1/4)^k C(2k, k))",
                   "b = 2, s = -n; the sign alternates with n",
                   [](const param_map& p) {
                       const int n = integer_param(p.at("n"), "n");
                       identity idn;
                       idn.lhs.f = [n](double v) { return cplx(sech(pi * v / 2.0) * std::pow(sech(pi * v), n)); };
                       idn.lhs.decay_rate = pi * (n + 0.5);
                       idn.theorem = cos_theorem(2.0, -n, n % 2 == 0 ? 1.0 : -1.0);
                       idn.closed_form = [n] { return cplx(oeis_sum(n)); };
                       return idn;
                   }});

    auto b4 = [](int n, double closed) {
        identity idn;
        idn.lhs.f = [n](double v) { return cplx(sech(pi * v / 4.0) * std::pow(sech(pi * v), n)); };
        idn.lhs.decay_rate = pi * (n + 0.25);
        idn.theorem = cos_theorem(4.0, -n);
        idn.closed_form = value(closed);
        return idn;
    };

    out.push_back({"B4a", sc, fc, {}, "4 - sqrt(1490 - 497 sqrt(2))/8", "b = 4, s = -3",
                   [=](const param_map&) { return b4(3, 4.0 - std::sqrt(1490.0 - 497.0 * r2) / 8.0); }});

    out.push_back({"C4s", sc, fc, {}, "4 - sqrt(11978 + 809 sqrt(2))/32", "b = 4, s = -4",
                   [=](const param_map&) { return b4(4, 4.0 - std::sqrt(11978.0 + 809.0 * r2) / 32.0); }});

    out.push_back({"CR2b", sc, fc, {open("s", 1.0, -4.0, 2.0)}, "2^(s/2 - 1) pi", "Cr2a at b = 1/2",
                   [](const param_map& p) {
                       const double s = p.at("s");
                       require(s <= 1.9, "s must be at most 1.9");
                       finite_integrand f = [=](double v, double from_lo, double to_hi) {
                           return cplx(cr2b_weight(s, v, from_lo, to_hi) * std::cos(s * std::atan(v)));
                       };
                       return finite_identity(f, s / 2.0, cos_theorem(0.5, s, pi * std::pow(2.0, s / 2.0)),
                                              value(std::pow(2.0, s / 2.0 - 1.0) * pi));
                   }});

    const std::string sd = "5.2";
    const std::string fd = "trig_differentiated";

    // The printed integrand is -2 d/ds of the CR2b integrand.
    auto cr2bd = [](double s) -> finite_integrand {
        return [s](double v, double from_lo, double to_hi) {
            const double at = std::atan(v);
            return cplx(cr2b_weight(s, v, from_lo, to_hi) *
                        (cr2b_log(v, from_lo, to_hi) * std::cos(s * at) + 2.0 * at * std::sin(s * at)));
        };
    };

    out.push_back({"Cr2bd", sd, fd, {open("s", 0.0, -4.0, 2.0)}, "-pi 2^(s/2 - 1) ln 2",
                   "s-derivative of CR2b; the power of 2 on the right is s/2 - 1",
                   [=](const param_map& p) {
                       const double s = p.at("s");
                       require(s <= 1.9, "s must be at most 1.9");
                       return finite_identity(cr2bd(s), s / 2.0, cos_ds_theorem(cos_kernel_ds(s), -2.0 * pi),
                                              value(-pi * std::pow(2.0, s / 2.0 - 1.0) * ln2));
                   }});

    out.push_back({"Q1", sd, fd, {}, "-pi ln(2) / sqrt(2)", "Cr2bd at s = 1",
                   [=](const param_map&) {
                       finite_integrand f = [](double v, double from_lo, double to_hi) {
                           return cplx((2.0 * v * std::atan(v) + cr2b_log(v, from_lo, to_hi)) /
                                       ((v * v + 1.0) * std::sqrt(from_lo * to_hi)));
                       };
                       return finite_identity(f, 0.5, cos_ds_theorem(cos_kernel_ds(1.0), -2.0 * pi),
                                              value(-pi * ln2 / r2));
                   }});

    out.push_back({"Q2", sd, fd, {}, "pi sqrt(2) ln(2) / 4", "minus Cr2bd at s = -1",
                   [=](const param_map&) {
                       finite_integrand f = [](double v, double from_lo, double to_hi) {
                           const double q = v * v + 1.0;
                           return cplx(std::sqrt(from_lo * to_hi) *
                                       (2.0 * v * std::atan(v) - cr2b_log(v, from_lo, to_hi)) / (q * q));
                       };
                       return finite_identity(f, 0.0, cos_ds_theorem(cos_kernel_ds(-1.0), 2.0 * pi),
                                              value(pi * r2 * ln2 / 4.0));
                   }});

    // Half the difference and half the sum of Q1 and Q2.
    auto combined = [](double sign) {
        analytic_fn g1 = cos_kernel_ds(1.0), gm1 = cos_kernel_ds(-1.0);
        return cos_ds_theorem([=](cplx v) { return g1(v) + sign * gm1(v); }, -pi);
    };

    out.push_back({"Q1mQ2", sd, fd, {}, "-3 pi sqrt(2) ln(2) / 8", "(Q1 - Q2)/2",
                   [=](const param_map&) {
                       finite_integrand f = [](double v, double from_lo, double to_hi) {
                           const double q = v * v + 1.0;
                           return cplx((cr2b_log(v, from_lo, to_hi) + 2.0 * v * v * v * std::atan(v)) /
                                       (std::sqrt(from_lo * to_hi) * q * q));
                       };
                       return finite_identity(f, 0.5, combined(1.0), value(-3.0 * pi * r2 * ln2 / 8.0));
                   }});

    out.push_back({"Q1pQ2", sd, fd, {}, "-pi sqrt(2) ln(2) / 8", "(Q1 + Q2)/2",
                   [=](const param_map&) {
                       finite_integrand f = [](double v, double from_lo, double to_hi) {
                           const double q = v * v + 1.0;
                           return cplx((v * v * cr2b_log(v, from_lo, to_hi) + 2.0 * v * std::atan(v)) /
                                       (std::sqrt(from_lo * to_hi) * q * q));
                       };
                       return finite_identity(f, 0.5, combined(-1.0), value(-pi * r2 * ln2 / 8.0));
                   }});

    const std::string ss = "5.3";
    const std::string fs = "trig_sine";

    // -Re(1/sin^2) / 2 on the axis.
    auto sine2 = [](double b) {
        const double c = std::cos(pi * b);
        return [=](double v) {
            const double ch = std::cosh(2.0 * pi * v);
            return cplx((ch * c - 1.0) / (std::cosh(pi * v / b) * (ch - c) * (ch - c)));
        };
    };
    auto sine2_identity = [=](double b, std::function<cplx()> closed) {
        identity idn;
        idn.lhs.f = sine2(b);
        idn.lhs.decay_rate = pi * (2.0 + 1.0 / std::abs(b));
        idn.theorem = sin_theorem(b, -2, -0.5);
        idn.closed_form = std::move(closed);
        return idn;
    };

    out.push_back({"Sintm2", ss, fs, {open("b", 1.0, -2.0, 2.0)}, "-(1 + 2b^2)/(12|b|)", "s = -2",
                   [=](const param_map& p) {
                       const double b = p.at("b");
                       require(std::abs(b) >= 0.1, "|b| must be at least 0.1");
                       return sine2_identity(b, [b] { return cplx(-(1.0 + 2.0 * b * b) / (12.0 * std::abs(b))); });
                   }});

    out.push_back({"Test2G", ss, fs, {closed("b", 2.6, -8.0, 8.0)},
                   "-(1 + 2b^2)/(12|b|) + (1/|b|) sum_{j=1}^{ceil(|b|/2)-1} cot(j pi / b) csc(j pi / b)",
                   "b not an even integer",
                   [=](const param_map& p) {
                       const double b = p.at("b");
                       require(std::abs(b) >= 0.1, "|b| must be at least 0.1");
                       require(std::abs(b / 2.0 - std::round(b / 2.0)) > 1e-3, "b must stay away from even integers");
                       return sine2_identity(b, [b] { return cplx(test2g_rhs(b)); });
                   }});

    out.push_back({"Shalf7", ss, fs, {}, "17/28 - (2/7) cot(2 pi / 7) csc(2 pi / 7)",
                   "minus the Test2G integral at b = 7/2",
                   [](const param_map&) {
                       identity idn;
                       idn.lhs.f = [](double v) {
                           const double h = sech(2.0 * pi * v);
                           return cplx(sech(2.0 * pi * v / 7.0) * h * h);
                       };
                       idn.lhs.decay_rate = pi * (4.0 + 2.0 / 7.0);
                       idn.theorem = sin_theorem(3.5, -2, 0.5);
                       idn.closed_form = [] {
                           const double x = 2.0 * pi / 7.0;
                           return cplx(17.0 / 28.0 - 2.0 * std::cos(x) / (7.0 * std::sin(x) * std::sin(x)));
                       };
                       return idn;
                   }});

    out.push_back({"Sint4", ss, fs, {open("b", 1.0, 0.0, 2.0)}, "(88b^4 + 40b^2 + 7)/(720b^3)", "s = -4",
                   [](const param_map& p) {
                       const double b = p.at("b");
                       require(b >= 0.1, "b must be at least 0.1");
                       const double c = std::cos(pi * b), c2 = std::cos(2.0 * pi * b);
                       identity idn;
                       idn.lhs.f = [=](double v) {
                           const double ch = std::cosh(2.0 * pi * v);
                           const double d = ch - c;
                           return cplx((c2 * std::cosh(4.0 * pi * v) - 4.0 * ch * c + 3.0) /
                                       (d * d * d * d * std::cosh(pi * v / b)));
                       };
                       idn.lhs.decay_rate = pi * (4.0 + 1.0 / b);
                       idn.theorem = sin_theorem(b, -4, 0.5);
                       idn.closed_form = value((88.0 * std::pow(b, 4) + 40.0 * b * b + 7.0) / (720.0 * std::pow(b, 3)));
                       return idn;
                   }});
}

} // namespace glasser::cat

#endif
