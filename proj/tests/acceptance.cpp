// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <glasser/oracles.hpp>
#include <glasser/report.hpp>
#include <glasser/runner.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace glasser;

namespace {

using clock_type = std::chrono::steady_clock;

double since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double rel(cplx x, cplx y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

struct outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [" << what << "]";
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(outcome&)>& body)
{
    outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %d: %s%s\n", o.pass ? "PASS" : "FAIL", n, title.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
}

verification_report run(const std::string& id, const param_map& p = {})
{
    return verify(find_entry(id).bind(p));
}

std::vector<labelled_report> sweep(const std::string& id, const std::string& name, const std::vector<double>& values)
{
    std::vector<run_task> tasks;
    for (double v : values)
        tasks.push_back(make_task(find_entry(id), {{name, v}}));
    return run_tasks(tasks, {}, default_jobs());
}

} // namespace

int main()
{
    std::vector<labelled_report> full;

    criterion(1, "headline suite within 1e-6 against both right sides", [](outcome& o) {
        const auto t0 = clock_type::now();
        std::vector<run_task> tasks;
        for (const catalog_entry& e : headline_suite())
            tasks.push_back(make_task(e));
        const auto reports = run_tasks(tasks, {}, default_jobs());
        const double seconds = since(t0);
        o.require(reports.size() == 18, "expected 18 entries");
        for (const labelled_report& lr : reports)
            o.require(lr.report.pass, lr.report.id + " " + lr.report.error);
        o.require(seconds <= 300.0, "runtime over 5 minutes");
        o.detail << " (" << reports.size() << " entries, " << seconds << " s)";
    });

    criterion(2, "full catalog passes at defaults", [&full](outcome& o) {
        const auto t0 = clock_type::now();
        std::vector<run_task> tasks;
        for (const catalog_entry& e : catalog())
            tasks.push_back(make_task(e));
        full = run_tasks(tasks, {}, default_jobs());
        const double seconds = since(t0);
        o.require(full.size() >= 80, "fewer than 80 entries");
        int passed = 0;
        for (const labelled_report& lr : full) {
            passed += lr.report.pass ? 1 : 0;
            o.require(lr.report.pass, lr.report.id + " " + lr.report.error);
        }
        o.require(seconds <= 900.0, "runtime over 15 minutes");
        o.detail << " (" << passed << "/" << full.size() << ", " << seconds << " s)";
    });

    criterion(3, "residue formulas for n <= 4 against contour residues on a 5x5 grid", [](outcome& o) {
        const std::vector<double> as = {0.15, 0.33, 0.47, 0.61, 0.78};
        const std::vector<double> bs = {1.12, 1.37, 1.63, 1.91, 2.27};
        double worst = 0.0;
        int count = 0;
        for (int n = 1; n <= 4; ++n)
            for (double a : as)
                for (double b : bs) {
                    const auto poles = appendix_a_residues(n, a, b);
                    const auto numeric = numeric_residues(cat::zeta_power_kernel(n, a, b), poles, cat::cosh_neighbours(b));
                    for (std::size_t k = 0; k < poles.size(); ++k) {
                        worst = std::max(worst, rel(numeric[k], *poles[k].analytic_residue));
                        ++count;
                    }
                }
        o.require(worst <= 1e-9, "deviation above 1e-9");
        o.detail << " (" << count << " residues, worst " << worst << ")";
    });

    criterion(4, "criterion deviation <= 1e-10 for every entry", [&full](outcome& o) {
        double worst = 0.0;
        int multiplicative = 0;
        for (const labelled_report& lr : full) {
            const verification_report& r = lr.report;
            const catalog_entry& e = find_entry(r.id);
            const identity idn = e.bind();
            if (!idn.theorem)
                continue;
            worst = std::max(worst, r.criterion_deviation);
            o.require(r.criterion_deviation <= 1e-10, r.id);
            if (e.family == "multiplicative_h") {
                ++multiplicative;
                o.require(idn.theorem->kind != criterion_kind::antisymmetric, r.id + " should carry h");
            }
        }
        o.require(!full.empty(), "no catalog run");
        o.require(multiplicative > 0, "no multiplicative entries");
        o.detail << " (worst " << worst << ", " << multiplicative << " with h)";
    });

    criterion(5, "IntG5b: quadrature, Dirichlet series and residue sum agree", [](outcome& o) {
        const verification_report r = run("IntG5b");
        const double series = dirichlet_intg5b().value;
        o.require(std::abs(r.lhs - series) <= 1e-7, "quadrature vs series");
        o.require(std::abs(r.rhs_residues - series) <= 1e-7, "residues vs series");
        o.require(std::abs(r.lhs - r.rhs_residues) <= 1e-7, "quadrature vs residues");
        o.detail << " (lhs " << r.lhs.real() << ", series " << series << ")";
    });

    criterion(6, "fromDet equals IntG5 minus the series value", [](outcome& o) {
        const cplx from_det = run("fromDet").lhs, g5 = run("IntG5").lhs;
        const double dev = std::abs(from_det - (g5 - dirichlet_intg5b().value));
        o.require(dev <= 2e-7, "deviation above 2e-7");
        o.detail << " (deviation " << dev << ")";
    });

    criterion(7, "trigonometric kernels", [](outcome& o) {
        double worst = 0.0;
        for (int n = 1; n <= 6; ++n) {
            const double d = std::abs(run("Cg", {{"n", double(n)}}).lhs - oeis_sum(n));
            worst = std::max(worst, d);
            o.require(d <= 1e-8, "Cg n=" + std::to_string(n));
        }
        for (double b : {0.6, 1.0, 1.4, 2.6, 3.4, 4.6}) {
            const double d = std::abs(run("Test2G", {{"b", b}}).lhs - test2g_rhs(b));
            worst = std::max(worst, d);
            o.require(d <= 1e-7, "Test2G b=" + std::to_string(b));
        }
        for (const char* id : {"B4a", "C4s", "Shalf7", "Sint4"}) {
            const verification_report r = id == std::string("Sint4") ? run(id, {{"b", 1.0}}) : run(id);
            const double d = std::abs(r.lhs - r.rhs_closed);
            worst = std::max(worst, d);
            o.require(d <= 1e-7, id);
        }
        o.detail << " (worst " << worst << ")";
    });

    criterion(8, "sweeps across regime boundaries", [](outcome& o) {
        int count = 0;
        auto all = [&](const std::vector<labelled_report>& rs) {
            for (const labelled_report& lr : rs) {
                ++count;
                o.require(lr.report.pass, lr.report.id + " " + lr.report.error);
            }
        };
        all(sweep("Ctx4", "b", {0.5, 1.0, 1.5}));
        all(sweep("Ct2", "a", {0.5, 1.0, 1.5}));
        all(sweep("Crit4bB", "b", {0.5}));
        all(sweep("Crit4bA", "b", {0.9}));
        all(sweep("Crit4bC", "b", {1.1}));
        o.detail << " (" << count << " runs)";
    });

    criterion(9, "parameter independence", [](outcome& o) {
        const cplx base = run("FintBx", {{"b", 0.5}}).lhs;
        for (double b : {1.0, 2.0})
            o.require(std::abs(run("FintBx", {{"b", b}}).lhs - base) <= 1e-7, "FintBx b=" + std::to_string(b));
        for (double b : {1.0, 2.0, 3.0}) {
            const cplx plus = run("Ex7ab", {{"b", b}}).lhs, minus = run("Ex7ab", {{"b", -b}}).lhs;
            o.require(std::abs(plus - minus) <= 1e-8 * (1.0 + std::abs(plus)), "Ex7ab b=" + std::to_string(b));
        }
        for (double a : {-0.5, 0.2, 0.5, 3.0})
            for (double b : {0.9, 1.0, 2.5})
                if (a + b > 1.0)
                    o.require(appendix_b_value(a, b) == pi, "termwise value not pi");
    });

    criterion(10, "critical-line expansion error falls with N at t = 20", [](outcome& o) {
        const cplx exact = riemann_zeta(cplx(0.5, 20.0));
        double previous = std::numeric_limits<double>::infinity();
        for (int N = 0; N <= 4; ++N) {
            const double err = std::abs(zid_approximation(20.0, N) - exact);
            o.require(err <= previous, "not monotone at N=" + std::to_string(N));
            previous = err;
            o.detail << (N == 0 ? " (" : ", ") << err;
        }
        o.detail << ")";
        o.require(previous <= 1e-3, "error above 1e-3 at N=4");
    });

    criterion(11, "functional equation and Laurent reconstruction", [](outcome& o) {
        const auto t0 = clock_type::now();
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> re(-5.0, 6.0), im(-30.0, 30.0);
        double fe = 0.0;
        for (int k = 0; k < 100;) {
            const cplx s(re(rng), im(rng));
            if (std::abs(s - 1.0) <= 0.1 || std::abs(s) <= 0.1)
                continue;
            ++k;
            const cplx rhs = std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) * gamma(1.0 - s) *
                             riemann_zeta(1.0 - s);
            fe = std::max(fe, std::abs(riemann_zeta(s) - rhs));
        }
        double laurent = 0.0;
        for (double r : {1e-2, 1e-3})
            for (int k = 0; k < 8; ++k) {
                const cplx d = std::polar(r, 2.0 * pi * k / 8.0);
                cplx sum = 1.0 / d;
                double fact = 1.0;
                for (int j = 0; j <= 6; ++j) {
                    if (j > 0)
                        fact *= j;
                    sum += (j % 2 == 0 ? 1.0 : -1.0) * stieltjes_constant(j) * std::pow(d, j) / fact;
                }
                laurent = std::max(laurent, std::abs(riemann_zeta(1.0 + d) - sum));
            }
        const double seconds = since(t0);
        o.require(fe <= 1e-9, "functional equation");
        o.require(laurent <= 1e-9, "Laurent series");
        o.require(seconds <= 10.0, "over 10 s");
        o.detail << " (functional " << fe << ", Laurent " << laurent << ", " << seconds << " s)";
    });

    std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
