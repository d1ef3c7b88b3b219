#include <glasser/catalog.hpp>

#include "reference.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace glasser;
using namespace glasser::cat;
using Catch::Approx;

namespace {

double rel(cplx x, cplx y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

/// (zeta(a + iv)^n + zeta(a + b - iv)^n) / cosh(pi v / b).
analytic_fn zeta_power_kernel(int n, double a, double b)
{
    return [=](cplx v) {
        return (std::pow(riemann_zeta(a + I * v), n) + std::pow(riemann_zeta(a + b - I * v), n)) /
               std::cosh(pi * v / b);
    };
}

/// Theorem of a catalog entry at its defaults, with the poles replaced.
cplx analytic_rhs_with(const std::string& id, std::vector<pole_spec> ps)
{
    theorem_spec t = *find_entry(id).bind().theorem;
    t.poles = std::move(ps);
    return theorem_rhs_analytic(t);
}

cplx closed_of(const std::string& id) { return find_entry(id).bind().closed_form(); }

} // namespace

TEST_CASE("strip membership and weights")
{
    const strip_spec s(2.0);
    CHECK(s.orientation_sign() == 1);
    CHECK(s.weight(cplx(3.0, -1.0)) == 1.0);
    CHECK(s.weight(cplx(0.0, 0.0)) == 0.5);
    CHECK(s.weight(cplx(0.0, -2.0)) == 0.5);
    CHECK(s.weight(cplx(0.0, -2.0 + 1e-13)) == 0.5);
    CHECK(s.weight(cplx(0.0, 0.5)) == 0.0);
    const strip_spec up(-1.5);
    CHECK(up.orientation_sign() == -1);
    CHECK(up.weight(cplx(0.0, 1.0)) == 1.0);
    CHECK(up.weight(cplx(0.0, -0.1)) == 0.0);
    CHECK_THROWS_AS(strip_spec(0.0), domain_error);
    CHECK_THROWS_AS(make_pole(0.0, s, 0), domain_error);
}

TEST_CASE("numeric residues")
{
    const analytic_fn sech_pi = [](cplx v) { return 1.0 / std::cosh(pi * v); };
    CHECK(std::abs(numeric_residue(sech_pi, -0.5 * I, 0.25) - I / pi) < 1e-13);
    CHECK(std::abs(numeric_residue([](cplx v) { return 1.0 / (v * v); }, 0.0, 0.25)) < 1e-14);
    CHECK(std::abs(numeric_residue([](cplx v) { return std::exp(v) / (v * v * v); }, 0.0, 0.5) - 0.5) < 1e-13);

    // against a plain fixed-count circle sum
    const analytic_fn f = [](cplx v) {
        return (riemann_zeta(1.5 - I * v) + riemann_zeta(0.5 + I * v)) / std::cosh(pi * v);
    };
    CHECK(std::abs(numeric_residue(f, -0.5 * I, 0.2) - reference::circle_residue(f, -0.5 * I, 0.2)) < 1e-12);
    // both zeta poles meet the cosh zero at v = -i/2, leaving residue 2i gamma / pi
    CHECK(std::abs(numeric_residue(f, -0.5 * I, 0.2) - 2.0 * I * euler_gamma / pi) < 1e-11);

    CHECK_THROWS_AS(numeric_residue(sech_pi, 0.0, 0.0), domain_error);
}

TEST_CASE("indicator_H")
{
    CHECK(indicator_H(0.5, 1.0) == 1.0);
    CHECK(indicator_H(1.0, 1.0) == 0.5);
    CHECK(indicator_H(0.0, 1.0) == 0.5);
    CHECK(indicator_H(-0.5, 1.0) == 0.0);
    CHECK(indicator_H(1.5, -1.0) == 1.0);
    CHECK(indicator_H(0.5, -1.0) == 0.0);
    // perturbing a boundary case moves the weight consistently with the inequalities
    for (double b : {1.0, 2.0, 0.7}) {
        CHECK(indicator_H(1.0 - 1e-3, b) == 1.0);
        CHECK(indicator_H(1.0 + 1e-3, b) == 0.0);
        CHECK(indicator_H(1.0 - b + 1e-3, b) == 1.0);
        CHECK(indicator_H(1.0 - b - 1e-3, b) == 0.0);
    }
    for (double b : {-1.0, -2.0}) {
        CHECK(indicator_H(1.0 + 1e-3, b) == 1.0);
        CHECK(indicator_H(1.0 - 1e-3, b) == 0.0);
    }
    CHECK_THROWS_AS(indicator_H(0.5, 0.0), domain_error);
}

TEST_CASE("appendix A residue tables: printed values")
{
    const auto r = appendix_a_residues(1, 0.5, 2.0);
    REQUIRE(r.size() == 3);
    CHECK(std::abs(cplx(*r[0].analytic_residue) - 4.0 * I * riemann_zeta(1.5) / pi) < 1e-13);

    const auto q = appendix_a_residues(1, 0.25, 1.0);
    REQUIRE(q.size() == 3);
    CHECK(std::abs(cplx(*q[1].analytic_residue) - I * std::sqrt(2.0)) < 1e-13);

    // a = 1 - b/2 puts the zeta poles on -ib/2, where zeta(a + b/2) = zeta(1)
    CHECK_THROWS_AS(appendix_a_residues(1, 0.5, 1.0), pole_at_one);
    CHECK_THROWS_AS(appendix_a_residues(5, 0.25, 1.0), domain_error);
    CHECK(appendix_a_residues(2, -0.5, 1.0).size() == 1);
}

TEST_CASE("appendix A residues agree with contour residues")
{
    const std::vector<double> as = {0.15, 0.33, 0.47, 0.61, 0.78};
    const std::vector<double> bs = {1.12, 1.37, 1.63, 1.91, 2.27};
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
        for (double a : as)
            for (double b : bs) {
                const auto poles = appendix_a_residues(n, a, b);
                std::vector<cplx> avoid = cosh_neighbours(b);
                const auto numeric = numeric_residues(zeta_power_kernel(n, a, b), poles, avoid);
                for (std::size_t k = 0; k < poles.size(); ++k) {
                    const cplx analytic = *poles[k].analytic_residue;
                    worst = std::max(worst, rel(numeric[k], analytic));
                }
            }
    CHECK(worst <= 1e-9);
}

TEST_CASE("appendix A against an independent circle sum")
{
    const double a = 0.4, b = 1.3;
    for (int n = 1; n <= 4; ++n) {
        const auto poles = appendix_a_residues(n, a, b);
        std::vector<cplx> singular = cosh_neighbours(b);
        for (const pole_spec& p : poles)
            singular.push_back(p.location);
        for (const pole_spec& p : poles) {
            const double r = contour_radius(p.location, singular) * 0.9;
            const cplx ref = reference::circle_residue(zeta_power_kernel(n, a, b), p.location, std::min(r, 0.1), 1024);
            CHECK(rel(ref, *p.analytic_residue) < 1e-9);
        }
    }
}

TEST_CASE("product-kernel poles")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(0.05, 0.95), ub(0.6, 2.2);
    double worst = 0.0;
    for (int k = 0; k < 25; ++k) {
        const double a = ua(rng), b = ub(rng);
        if (std::abs(std::cos(pi * (a - 1.0) / b)) < 0.05 || std::abs(a - 1.0 + b / 2.0) < 0.05)
            continue;
        const auto ps = poles_product_kernel(a, b);
        std::vector<cplx> avoid = cosh_neighbours(b);
        for (const pole_spec& p : ps)
            avoid.push_back(p.location);
        const auto numeric = numeric_residues(zeta_product_kernel(a, b), ps, avoid);
        for (std::size_t j = 0; j < ps.size(); ++j)
            if (ps[j].boundary_weight > 0.0)
                worst = std::max(worst, rel(numeric[j], *ps[j].analytic_residue));
    }
    CHECK(worst <= 1e-9);

    // the same residue at -ib/2 in both notations: R_{2,1} counts both squares
    for (double a : {0.2, 0.6})
        for (double b : {1.1, 1.7}) {
            const cplx p3 = *poles_product_kernel(a, b)[2].analytic_residue;
            const cplx r21 = *appendix_a_residues(2, a, b)[0].analytic_residue;
            CHECK(std::abs(r21 - 2.0 * p3) < 1e-12 * std::abs(p3));
        }

    // weights: all three inside, a half-weight pair, and only P3
    const auto inside = poles_product_kernel(0.4, 1.0);
    CHECK(inside[0].boundary_weight == 1.0);
    CHECK(inside[2].boundary_weight == 1.0);
    const auto half = poles_product_kernel(1.0, -0.5);
    CHECK(half[0].boundary_weight == 0.5);
    CHECK(half[1].boundary_weight == 0.5);
    const auto outside = poles_product_kernel(0.5 - 0.4, 0.4);
    CHECK(outside[0].boundary_weight == 0.0);
    CHECK(outside[2].boundary_weight == 1.0);

    CHECK(std::abs(analytic_rhs_with("Ctx2m", poles_product_kernel(1.0, -0.5)) - closed_of("Ctx2m")) < 1e-12);
    CHECK(std::abs(analytic_rhs_with("Ctx3", poles_product_kernel(0.1, 0.4)) - closed_of("Ctx3")) < 1e-12);
    // a = 1/2, b = 1: P1 and P3 coincide and sec(pi (a - 1)/b) is singular
    CHECK_THROWS_AS(poles_product_kernel(0.5, 1.0), domain_error);
}

TEST_CASE("four-pole kernel poles")
{
    auto rhs = [](const std::string& id, double b) {
        const identity idn = find_entry(id).bind({{"b", b}});
        return std::make_pair(theorem_rhs(*idn.theorem), idn.closed_form());
    };
    // below 1/sqrt(2) nothing contributes
    const auto [zero_rhs, zero_closed] = rhs("Crit4bB", 0.5);
    CHECK(std::abs(zero_rhs) < 1e-12);
    CHECK(std::abs(zero_closed) == 0.0);
    for (const auto& [id, b] : std::vector<std::pair<std::string, double>>{{"Crit4bA", 0.9}, {"Crit4bC", 1.1}}) {
        const auto [r, c] = rhs(id, b);
        CHECK(rel(r, c) < 1e-9);
    }
    const double b = 0.9, a = 0.5 - b / 2.0;
    CHECK(std::abs(riemann_zeta((b * b + b - 1.0) / (2.0 * b)) * riemann_zeta((-b * b + b + 1.0) / (2.0 * b)) * 2.0 /
                   b -
                   closed_of("Crit4bA")) < 1e-12);
    CHECK(poles_fgen_kernel(a, b).size() == four_pole_poles(a, b).size());
}

TEST_CASE("multiplicative-family poles")
{
    // P3 = -ib and P5 = 0 always sit on the edges with weight 1/2
    const auto ps = poles_multiplicative(0.25, 1.0, 1.0, 1.0, 1);
    int halves = 0;
    for (const pole_spec& p : ps)
        if (p.boundary_weight == 0.5)
            ++halves;
    CHECK(halves >= 2);
    bool has_minus_ib = false, has_zero = false;
    for (const pole_spec& p : ps) {
        has_minus_ib = has_minus_ib || std::abs(cplx(p.location) + I) < 1e-12;
        has_zero = has_zero || std::abs(cplx(p.location)) < 1e-12;
    }
    CHECK(has_minus_ib);
    CHECK(has_zero);

    // trivial zeros of 1/zeta enter for r < 0: a = -9/2, b = 4 has i(a + 2k) for k = 1, 2
    const auto g = poles_multiplicative(-4.5, 4.0, 1.0, 0.0, -1);
    int trivial = 0;
    for (const pole_spec& p : g)
        if (std::abs(p.location.re()) < 1e-12 && p.location.im() < -1e-9 && p.location.im() > -4.0 + 1e-9)
            ++trivial;
    CHECK(trivial == 4);

    CHECK_THROWS_AS(poles_multiplicative(0.25, 1.0, 1.5, 0.0, 1), domain_error);
    CHECK_THROWS_AS(poles_multiplicative(0.25, -1.0, 1.0, 0.0, 1), domain_error);
    CHECK_NOTHROW(poles_multiplicative(0.25, 1.0, 1.0, -0.5, 0));
}

TEST_CASE("trig kernel poles")
{
    const auto cr1 = poles_trig(0.5, 1.0);
    REQUIRE(cr1.size() == 1);
    CHECK(std::abs(cplx(cr1[0].location) + 0.25 * I) < 1e-15);
    CHECK(cr1[0].order == 1);

    // b = 2, s = -3 is the Cg n = 3 configuration; b = 4, s = -3 is B4a
    const auto cg3 = poles_trig(2.0, -3.0);
    int triple = 0;
    for (const pole_spec& p : cg3)
        triple += p.order == 3 ? 1 : 0;
    CHECK(triple == 2);
    theorem_spec t = *find_entry("B4a").bind().theorem;
    CHECK(t.poles.size() == poles_trig(4.0, -3.0).size());
    CHECK(rel(theorem_rhs(t), closed_of("B4a")) < 1e-9);

    const auto s7 = poles_trig(3.5, -2.0, trig_kind::sine);
    CHECK(!s7.empty());
    theorem_spec ts = *find_entry("Shalf7").bind().theorem;
    ts.poles = s7;
    CHECK(rel(theorem_rhs(ts), closed_of("Shalf7")) < 1e-9);

    CHECK_THROWS_AS(poles_trig(0.5, 2.5), domain_error);
    CHECK_THROWS_AS(poles_trig(0.5, -1.5), domain_error);
    CHECK_THROWS_AS(poles_trig(2.0, -3.0, trig_kind::sine), domain_error);
    CHECK_THROWS_AS(poles_trig(0.0, 1.0), domain_error);

    // even-order pure poles of sin^-2 carry no residue
    const analytic_fn sin2 = [](cplx v) { return std::pow(std::sin(pi * (1.75 - I * v)), -2.0); };
    for (int k = -1; k <= 1; ++k)
        CHECK(std::abs(numeric_residue(sin2, I * (k - 1.75), 0.2)) < 1e-13);
}
