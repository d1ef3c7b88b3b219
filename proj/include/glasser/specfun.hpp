#ifndef GLASSER_SPECFUN_HPP
#define GLASSER_SPECFUN_HPP

// Complex special-function kernel: Riemann and Hurwitz zeta, Gamma, zeta
// derivatives, Stieltjes constants, Euler numbers and Riemann's xi/Upsilon.
//
// Everything here is pure. A `context` is built once (eagerly filling its
// tables) and may then be shared between threads.

#include <glasser/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace glasser {

using cplx = std::complex<double>;
using big_int = boost::multiprecision::cpp_int;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr cplx I{0.0, 1.0};

/// A complex number whose components are both finite.
class complex_point {
public:
    complex_point() = default;
    complex_point(double re, double im) : value_(re, im)
    {
        if (!std::isfinite(re) || !std::isfinite(im))
            throw domain_error("complex_point: non-finite component");
    }
    explicit complex_point(cplx z) : complex_point(z.real(), z.imag()) {}

    double re() const { return value_.real(); }
    double im() const { return value_.imag(); }
    cplx value() const { return value_; }
    operator cplx() const { return value_; }

    friend bool operator==(const complex_point&, const complex_point&) = default;

private:
    cplx value_{};
};

/// A value together with an estimate of its absolute error.
struct estimate {
    cplx value;
    double error = 0.0;
};

namespace detail {

// B_{2k} for k = 1..15 as exact ratios.
inline constexpr std::array<std::pair<double, double>, 15> bernoulli_ratios{{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

// gamma(j), j = 0..8, to 22 significant digits (computed offline with an
// arbitrary-precision Stieltjes summation and checked by the unit tests).
inline constexpr std::array<double, 9> stieltjes_table{
    0.5772156649015328606065,
    -0.07281584548367672486059,
    -0.00969036319287231848453,
    0.00205383442030334586616,
    0.002325370065467300057468,
    0.0007933238173010627017533,
    -0.0002387693454301996098724,
    -0.0005272895670577510460741,
    -0.0003521233538030395096021,
};

inline std::vector<big_int> euler_numbers_upto(int max_even)
{
    // sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0 for n >= 1.
    std::vector<big_int> e;
    e.reserve(static_cast<std::size_t>(max_even / 2 + 1));
    e.emplace_back(1);
    for (int n = 1; 2 * n <= max_even; ++n) {
        big_int acc = 0;
        big_int binom = 1; // C(2n, 0)
        for (int k = 0; k < n; ++k) {
            acc += binom * e[static_cast<std::size_t>(k)];
            // advance C(2n, 2k) -> C(2n, 2k + 2)
            binom = binom * (2 * n - 2 * k) * (2 * n - 2 * k - 1) / ((2 * k + 1) * (2 * k + 2));
        }
        e.push_back(-acc);
    }
    return e;
}

} // namespace detail

/// Precision policy and cached tables shared by every special function.
class context {
public:
    explicit context(int em_terms = 25, int em_correction_order = 12, double target_eps = 1e-15)
        : em_terms_(em_terms), em_order_(em_correction_order), target_eps_(target_eps)
    {
        if (em_terms < 2)
            throw domain_error("context: em_terms must be >= 2");
        if (em_correction_order < 1 ||
            em_correction_order > static_cast<int>(detail::bernoulli_ratios.size()))
            throw domain_error("context: em_correction_order must be in [1, 15]");
        if (!(target_eps > 0.0))
            throw domain_error("context: target_eps must be positive");

        double fact = 1.0; // (2k)!
        for (int k = 1; k <= em_order_; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            const auto [num, den] = detail::bernoulli_ratios[static_cast<std::size_t>(k - 1)];
            bernoulli_.push_back(num / den);
            bernoulli_over_factorial_.push_back(num / den / fact);
        }
        stieltjes_.assign(detail::stieltjes_table.begin(), detail::stieltjes_table.end());
        euler_numbers_ = detail::euler_numbers_upto(40);
    }

    int em_terms() const { return em_terms_; }
    int em_correction_order() const { return em_order_; }
    double target_eps() const { return target_eps_; }

    /// B_{2k}, k >= 1.
    double bernoulli(int k) const { return bernoulli_.at(static_cast<std::size_t>(k - 1)); }
    double bernoulli_over_factorial(int k) const
    {
        return bernoulli_over_factorial_.at(static_cast<std::size_t>(k - 1));
    }
    const std::vector<double>& stieltjes_cache() const { return stieltjes_; }
    const std::vector<big_int>& euler_number_cache() const { return euler_numbers_; }

private:
    int em_terms_;
    int em_order_;
    double target_eps_;
    std::vector<double> bernoulli_;
    std::vector<double> bernoulli_over_factorial_;
    std::vector<double> stieltjes_;
    std::vector<big_int> euler_numbers_;
};

inline const context& default_context()
{
    static const context ctx;
    return ctx;
}

inline constexpr double zeta_pole_exclusion = 1e-8;

// ---------------------------------------------------------------------------
// Gamma

namespace detail {

inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coeffs{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

inline bool is_nonpositive_integer(cplx z)
{
    return z.real() <= 0.5 && std::abs(z.imag()) < 1e-14 &&
           std::abs(z.real() - std::round(z.real())) < 1e-14;
}

// log Gamma(z) for Re(z) >= 1/2, Lanczos form. Not necessarily the principal branch.
inline cplx log_gamma_right(cplx z)
{
    z -= 1.0;
    cplx series = lanczos_coeffs[0];
    for (std::size_t k = 1; k < lanczos_coeffs.size(); ++k)
        series += lanczos_coeffs[k] / (z + static_cast<double>(k));
    const cplx t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

// A logarithm of sin(z) that stays finite when |Im z| is large enough for
// sin(z) itself to overflow.
inline cplx log_sin(cplx z)
{
    const cplx i(0.0, 1.0);
    if (z.imag() >= 0.0)
        return -i * z + std::log((std::exp(2.0 * i * z) - 1.0) / (2.0 * i));
    return i * z + std::log((1.0 - std::exp(-2.0 * i * z)) / (2.0 * i));
}

} // namespace detail

/// A logarithm of Gamma(z) (branch not normalised); exp() of it is Gamma(z).
inline cplx log_gamma(cplx z)
{
    if (detail::is_nonpositive_integer(z))
        throw pole_at_nonpositive_integer("log_gamma");
    if (z.real() >= 0.5)
        return detail::log_gamma_right(z);
    return std::log(pi) - detail::log_sin(pi * z) - detail::log_gamma_right(1.0 - z);
}

inline cplx gamma(cplx z)
{
    if (detail::is_nonpositive_integer(z))
        throw pole_at_nonpositive_integer("gamma");
    if (z.real() >= 0.5)
        return std::exp(detail::log_gamma_right(z));
    // reflection
    return std::exp(std::log(pi) - detail::log_sin(pi * z) - detail::log_gamma_right(1.0 - z));
}

// ---------------------------------------------------------------------------
// Zeta

namespace detail {

// Euler-Maclaurin for sum_{n>=0} (n + w)^{-s}, assuming Im(s) >= 0 is not required.
inline estimate euler_maclaurin(cplx s, double w, const context& ctx)
{
    const int n_terms = ctx.em_terms() + static_cast<int>(std::ceil(std::abs(s.imag())));
    cplx sum = 0.0;
    for (int n = n_terms - 1; n >= 0; --n)
        sum += std::exp(-s * std::log(n + w));

    const double big_n = n_terms + w;
    const double log_n = std::log(big_n);
    const cplx n_pow = std::exp(-s * log_n); // N^{-s}
    sum += big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

    // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    cplx rising = s;          // s (s+1) ... (s+2k-2)
    cplx power = n_pow / big_n; // N^{-s-1}
    cplx term = 0.0;
    for (int k = 1; k <= ctx.em_correction_order(); ++k) {
        term = ctx.bernoulli_over_factorial(k) * rising * power;
        sum += term;
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        power /= big_n * big_n;
    }
    // Next term bounds the remainder for these step sizes.
    const double err = std::abs(term) * std::abs((s + 2.0 * ctx.em_correction_order() - 1.0) *
                                                 (s + 2.0 * ctx.em_correction_order())) /
                       (4.0 * pi * pi * big_n * big_n);
    return {sum, err};
}

inline cplx zeta_upper(cplx s, const context& ctx);

inline cplx zeta_reflected(cplx s, const context& ctx)
{
    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const cplx one_minus = 1.0 - s;
    cplx z1 = zeta_upper(cplx(one_minus.real(), std::abs(one_minus.imag())), ctx);
    if (one_minus.imag() < 0.0)
        z1 = std::conj(z1);
    const cplx log_factor =
        s * std::log(2.0) + (s - 1.0) * std::log(pi) + log_gamma(one_minus) + log_sin(pi * s / 2.0);
    return std::exp(log_factor) * z1;
}

// Requires Im(s) >= 0.
inline cplx zeta_upper(cplx s, const context& ctx)
{
    if (s.real() < -0.5)
        return zeta_reflected(s, ctx);
    const estimate em = euler_maclaurin(s, 1.0, ctx);
    const double scale = std::max(1.0, std::abs(em.value));
    if (em.error > 1e3 * ctx.target_eps() * scale)
        throw accuracy_loss("riemann_zeta: Euler-Maclaurin remainder too large");
    return em.value;
}

inline void check_not_pole(cplx s, const char* where)
{
    if (std::abs(s - 1.0) < zeta_pole_exclusion)
        throw pole_at_one(where);
}

} // namespace detail

inline cplx riemann_zeta(cplx s, const context& ctx = default_context())
{
    detail::check_not_pole(s, "riemann_zeta");
    if (s.imag() < 0.0)
        return std::conj(detail::zeta_upper(std::conj(s), ctx));
    return detail::zeta_upper(s, ctx);
}

inline double riemann_zeta(double s, const context& ctx = default_context())
{
    return riemann_zeta(cplx(s, 0.0), ctx).real();
}

inline cplx hurwitz_zeta(cplx s, double w, const context& ctx = default_context())
{
    if (!(w > 0.0))
        throw domain_error("hurwitz_zeta: w must be positive");
    detail::check_not_pole(s, "hurwitz_zeta");
    if (w == 1.0)
        return riemann_zeta(s, ctx);
    const bool lower = s.imag() < 0.0;
    const cplx su = lower ? std::conj(s) : s;
    const estimate em = detail::euler_maclaurin(su, w, ctx);
    if (em.error > 1e3 * ctx.target_eps() * std::max(1.0, std::abs(em.value)))
        throw accuracy_loss("hurwitz_zeta: Euler-Maclaurin remainder too large");
    return lower ? std::conj(em.value) : em.value;
}

namespace detail {

// d/ds of the Euler-Maclaurin sum for zeta, valid for Re(s) >= -1/2.
inline estimate euler_maclaurin_prime(cplx s, const context& ctx)
{
    const int n_terms = ctx.em_terms() + static_cast<int>(std::ceil(std::abs(s.imag())));
    cplx sum = 0.0;
    for (int n = n_terms; n >= 2; --n) {
        const double ln = std::log(static_cast<double>(n));
        sum -= ln * std::exp(-s * ln);
    }
    const double big_n = n_terms + 1.0;
    const double log_n = std::log(big_n);
    const cplx n_pow = std::exp(-s * log_n);
    const cplx sm1 = s - 1.0;
    sum += big_n * n_pow * (-log_n / sm1 - 1.0 / (sm1 * sm1)) - 0.5 * log_n * n_pow;

    cplx rising = s;   // s (s+1) ... (s+2k-2)
    cplx d_rising = 1.0;
    cplx power = n_pow / big_n;
    cplx term = 0.0;
    for (int k = 1; k <= ctx.em_correction_order(); ++k) {
        term = ctx.bernoulli_over_factorial(k) * power * (d_rising - log_n * rising);
        sum += term;
        const cplx u = s + (2.0 * k - 1.0), w = s + 2.0 * k;
        d_rising = d_rising * u * w + rising * (u + w);
        rising *= u * w;
        power /= big_n * big_n;
    }
    const double m = ctx.em_correction_order();
    const double err = std::abs(term) * std::abs((s + 2.0 * m - 1.0) * (s + 2.0 * m)) /
                       (4.0 * pi * pi * big_n * big_n);
    return {sum, err};
}

} // namespace detail

/// zeta'(s), the first derivative, summed directly. Falls back to circle
/// sampling left of Re(s) = -1/2.
inline cplx zeta_prime(cplx s, const context& ctx = default_context());

/// n-th derivative of zeta by trapezoidal sampling on a circle around s.
/// The returned error is the difference between the last two refinements.
inline estimate zeta_derivative(cplx s, int n, const context& ctx = default_context())
{
    if (n < 0 || n > 12)
        throw domain_error("zeta_derivative: order must be in [0, 12]");
    detail::check_not_pole(s, "zeta_derivative");
    if (n == 0)
        return {riemann_zeta(s, ctx), 0.0};
    if (s.imag() < 0.0) {
        const estimate up = zeta_derivative(std::conj(s), n, ctx);
        return {std::conj(up.value), up.error};
    }

    const double radius = std::min(0.25, std::abs(s - 1.0) / 2.0);
    double n_fact = 1.0;
    for (int k = 2; k <= n; ++k)
        n_fact *= k;

    auto circle = [&](int samples, double& max_abs) {
        cplx acc = 0.0;
        max_abs = 0.0;
        for (int k = 0; k < samples; ++k) {
            const double theta = 2.0 * pi * k / samples;
            const cplx unit = std::polar(1.0, theta);
            const cplx f = riemann_zeta(s + radius * unit, ctx);
            max_abs = std::max(max_abs, std::abs(f));
            acc += f * std::polar(1.0, -n * theta);
        }
        return acc * n_fact / (samples * std::pow(radius, n));
    };

    double max_abs = 0.0;
    cplx previous = circle(64, max_abs);
    for (int samples = 128; samples <= 1024; samples *= 2) {
        const cplx current = circle(samples, max_abs);
        const double diff = std::abs(current - previous);
        const double floor = 100.0 * std::numeric_limits<double>::epsilon() * max_abs * n_fact /
                             std::pow(radius, n);
        if (diff <= std::max(1e-12 * std::abs(current), floor))
            return {current, std::max(diff, floor)};
        previous = current;
    }
    throw accuracy_loss("zeta_derivative: circle sampling did not settle");
}

inline cplx zeta_prime(cplx s, const context& ctx)
{
    detail::check_not_pole(s, "zeta_prime");
    if (s.real() < -0.5)
        return zeta_derivative(s, 1, ctx).value;
    if (s.imag() < 0.0)
        return std::conj(zeta_prime(std::conj(s), ctx));
    const estimate em = detail::euler_maclaurin_prime(s, ctx);
    if (em.error > 1e3 * ctx.target_eps() * std::max(1.0, std::abs(em.value)))
        throw accuracy_loss("zeta_prime: Euler-Maclaurin remainder too large");
    return em.value;
}

/// Stieltjes constant gamma(j), 0 <= j <= 8.
inline double stieltjes_constant(int j, const context& ctx = default_context())
{
    const auto& table = ctx.stieltjes_cache();
    if (j < 0 || j >= static_cast<int>(table.size()))
        throw domain_error("stieltjes_constant: index must be in [0, 8]");
    return table[static_cast<std::size_t>(j)];
}

/// Euler number E_k (coefficients of sech), k even and <= 40.
inline big_int euler_number(int k, const context& ctx = default_context())
{
    if (k < 0 || k % 2 != 0)
        throw domain_error("euler_number: index must be even and non-negative");
    if (k > 40)
        throw domain_error("euler_number: index above 40 is not tabulated");
    return ctx.euler_number_cache()[static_cast<std::size_t>(k / 2)];
}

/// Upsilon(s) = zeta(s) Gamma(s/2) pi^{-s/2}.
inline cplx upsilon(cplx s, const context& ctx = default_context())
{
    detail::check_not_pole(s, "upsilon");
    return riemann_zeta(s, ctx) * gamma(s / 2.0) * std::exp(-s / 2.0 * std::log(pi));
}

/// Riemann's xi(s) = s (s-1) Upsilon(s) / 2, entire.
inline cplx xi(cplx s, const context& ctx = default_context())
{
    if (s.real() < 0.5)
        s = 1.0 - s;
    if (std::abs(s - 1.0) < 1e-3) {
        // mean value over a small circle; xi is entire
        constexpr int samples = 32;
        constexpr double r = 0.05;
        cplx acc = 0.0;
        for (int k = 0; k < samples; ++k)
            acc += xi(s + std::polar(r, 2.0 * pi * (k + 0.5) / samples), ctx);
        return acc / static_cast<double>(samples);
    }
    return s * (s - 1.0) * upsilon(s, ctx) / 2.0;
}

} // namespace glasser

#endif
