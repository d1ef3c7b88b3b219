#include <glasser/report.hpp>
#include <glasser/runner.hpp>

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>

using namespace glasser;
using Catch::Approx;

namespace {

// Every in-scope displayed identity, by label.
const std::vector<std::string> in_scope = {
    "Intf1",   "Intf2",   "Intf3",   "Thing1",  "IntG1",   "IntG2",   "IntG3",   "fromDet", "IntG5",  "IntG5b",
    "GRx",     "Ex6",     "YLR1",    "YLR2",    "K1",      "K1b",     "K1d",     "Ex6n",    "Ex6b",   "Ex6Exp",
    "Ex6cB",   "Ex6ApB",  "Ex6AmB",  "Scn1",    "IFg1d",   "IFg1e",   "BothSq",  "DiffSq",  "YLR2x",  "YLR2b",
    "ScPlus",  "ScMin",   "J1",      "J1a",     "J1ab",    "K4x",     "K4xR1",   "Ex7ab",   "ZhId",   "ZhId0",
    "Ex7ab0",  "Ex7B",    "Zid",     "FCrit1",  "Ctx2m",   "Ctx3",    "Ctx4",    "CTy1a",   "Ct4b1",  "Ct4bm1",
    "C4f",     "Crit4bB", "Crit4bA", "Crit4bC", "Crit4d",  "Ded1",    "CritLim", "Crit4bnS", "Ct2",   "Ct2d",
    "Ct2e",    "T1",      "IntF6",   "JaJbx",   "JA1",     "Jh",      "Jh1",     "Fz",      "AA",     "AAE1",
    "J5e6",    "J8b",     "FintB1",  "Fint1B",  "Fint1C",  "Fint1",   "FintBx",  "FintBx2", "FintG1", "FintG1a",
    "FintG1b", "FintG2",  "FintG3",  "FintAb",  "CR1",     "Cr2a",    "Cg",      "B4a",     "C4s",    "CR2b",
    "Cr2bd",   "Q1",      "Q2",      "Q1mQ2",   "Q1pQ2",   "Sintm2",  "Test2G",  "Shalf7",  "Sint4"};

const std::vector<labelled_report>& full_run()
{
    static const std::vector<labelled_report> reports = [] {
        std::vector<run_task> tasks;
        for (const catalog_entry& e : catalog())
            tasks.push_back(make_task(e));
        return run_tasks(tasks, {}, std::max(2, default_jobs()));
    }();
    return reports;
}

} // namespace

TEST_CASE("catalog shape")
{
    const auto& entries = catalog();
    CHECK(entries.size() >= 80);
    std::set<std::string> ids;
    for (const catalog_entry& e : entries) {
        INFO(e.id);
        CHECK(ids.insert(e.id).second);
        CHECK_FALSE(e.section.empty());
        CHECK_FALSE(e.family.empty());
        CHECK_FALSE(e.closed_form_expr.empty());
        for (const param_range& p : e.params)
            CHECK(p.contains(p.default_value));
    }
}

TEST_CASE("coverage: catalog labels match the in-scope list")
{
    std::vector<std::string> have, want = in_scope;
    for (const catalog_entry& e : catalog())
        have.push_back(e.id);
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    std::vector<std::string> missing, extra;
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(missing));
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(extra));
    CHECK(missing.empty());
    CHECK(extra.empty());
    for (const std::string& id : missing)
        UNSCOPED_INFO("missing " << id);
    for (const std::string& id : extra)
        UNSCOPED_INFO("extra " << id);
}

TEST_CASE("headline suite")
{
    const auto suite = headline_suite();
    CHECK(suite.size() == 18);
    std::set<std::string> ids;
    for (const catalog_entry& e : suite)
        ids.insert(e.id);
    CHECK(ids.size() == 18);
}

TEST_CASE("every entry verifies at its defaults")
{
    const auto& reports = full_run();
    REQUIRE(reports.size() == catalog().size());
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const verification_report& r = reports[k].report;
        INFO(r.id << " " << r.error);
        CHECK(r.id == catalog()[k].id);
        CHECK(r.pass);
        CHECK(r.criterion_deviation <= 1e-10);
    }
}

TEST_CASE("residue sums reproduce the closed forms")
{
    for (const labelled_report& lr : full_run()) {
        const verification_report& r = lr.report;
        if (r.id == "Zid")
            continue; // an approximation, held to its own bound
        INFO(r.id);
        CHECK(std::abs(r.rhs_residues - r.rhs_closed) <= 1e-8 * (1.0 + std::abs(r.rhs_closed)));
    }
}

TEST_CASE("printed values")
{
    const auto value = [](const std::string& id, const param_map& p = {}) {
        return find_entry(id).bind(p).closed_form();
    };
    CHECK(std::abs(value("FintBx2")) < 1e-12);
    CHECK(value("Ct2d").real() == Approx(0.25).epsilon(1e-14));
    CHECK(value("FintBx", {{"a", 2.0}, {"b", 3.0}}).real() == Approx(pi).epsilon(1e-14));
    CHECK(value("Intf1").real() == Approx(2.0 * euler_gamma).epsilon(1e-14));
    CHECK(value("IntG5b").real() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("lookup and parameter errors")
{
    CHECK_THROWS_AS(find_entry("NoSuch"), domain_error);
    CHECK_THROWS_AS(family_suite("nonsense"), domain_error);
    CHECK_FALSE(family_suite("trig_cosine").empty());
    CHECK_THROWS_AS(find_entry("Sintm2").resolve({{"b", 3.0}}), domain_error);
    CHECK_THROWS_AS(find_entry("Ct2d").resolve({{"zz", 1.0}}), domain_error);
    CHECK_NOTHROW(find_entry("Ctx4").resolve({{"b", 1.5}}));
}

TEST_CASE("catalog JSON")
{
    const auto j = nlohmann::json::parse(catalog_json(catalog()));
    REQUIRE(j.is_array());
    CHECK(j.size() == catalog().size());
    for (const auto& e : j) {
        for (const char* key : {"id", "section", "family", "params", "closed_form_expr", "notes"})
            CHECK(e.contains(key));
        for (const auto& [name, p] : e["params"].items()) {
            INFO(e["id"] << " " << name);
            for (const char* key : {"default", "min", "max", "open_min", "open_max"})
                CHECK(p.contains(key));
        }
    }
}
