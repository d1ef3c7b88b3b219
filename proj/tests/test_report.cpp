#include <glasser/report.hpp>
#include <glasser/runner.hpp>

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <random>
#include <sstream>

using namespace glasser;

namespace {

labelled_report synthetic(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    labelled_report lr;
    verification_report& r = lr.report;
    r.id = "Synthetic";
    lr.paper_eq = "9.9 Synthetic";
    r.params = {{"a", u(rng)}, {"b", 1.0 / 3.0}};
    r.lhs = cplx(u(rng), u(rng) * 1e-17);
    r.lhs_error = std::abs(u(rng)) * 1e-11;
    r.rhs_closed = cplx(u(rng), 0.0);
    r.rhs_residues = cplx(u(rng), -u(rng));
    r.criterion_deviation = std::abs(u(rng)) * 1e-300;
    r.residual_closed = std::abs(u(rng));
    r.residual_residues = 5e-324;
    r.pass = u(rng) > 0.0;
    r.seconds = 0.125;
    r.error = u(rng) > 0.0 ? "quadrature: \"stalled\"" : "";
    return lr;
}

void check_same(const labelled_report& x, const labelled_report& y)
{
    const verification_report &a = x.report, &b = y.report;
    CHECK(x.paper_eq == y.paper_eq);
    CHECK(a.id == b.id);
    CHECK(a.params == b.params);
    CHECK(a.lhs == b.lhs);
    CHECK(a.lhs_error == b.lhs_error);
    CHECK(a.rhs_closed == b.rhs_closed);
    CHECK(a.rhs_residues == b.rhs_residues);
    CHECK(a.criterion_deviation == b.criterion_deviation);
    CHECK(a.residual_closed == b.residual_closed);
    CHECK(a.residual_residues == b.residual_residues);
    CHECK(a.pass == b.pass);
    CHECK(a.seconds == b.seconds);
    CHECK(a.error == b.error);
}

std::vector<labelled_report> small_run(int jobs, bool timing)
{
    std::vector<run_task> tasks;
    for (const char* id : {"Intf1", "Ct2d", "GRx", "Cg", "FintBx"})
        tasks.push_back(make_task(find_entry(id)));
    tasks.push_back(make_task(find_entry("Ctx4"), {{"b", 0.5}}));
    return run_tasks(tasks, {}, jobs, timing);
}

} // namespace

TEST_CASE("JSON reports round-trip exactly")
{
    std::mt19937_64 rng(11);
    std::vector<labelled_report> reports;
    for (int k = 0; k < 20; ++k)
        reports.push_back(synthetic(rng));
    const auto back = reports_from_json(reports_json(reports));
    REQUIRE(back.size() == reports.size());
    for (std::size_t k = 0; k < reports.size(); ++k)
        check_same(reports[k], back[k]);

    const auto real = small_run(1, true);
    const auto real_back = reports_from_json(reports_json(real));
    REQUIRE(real_back.size() == real.size());
    for (std::size_t k = 0; k < real.size(); ++k)
        check_same(real[k], real_back[k]);
}

TEST_CASE("JSON schema")
{
    const auto j = nlohmann::json::parse(reports_json(small_run(1, false)));
    REQUIRE(j.is_array());
    for (const auto& r : j) {
        for (const char* key : {"id", "paper_eq", "params", "lhs", "rhs_closed", "rhs_residues", "criterion_dev",
                                "residual_closed", "residual_residues", "pass", "seconds"})
            CHECK(r.contains(key));
        for (const char* key : {"re", "im", "err"})
            CHECK(r["lhs"].contains(key));
        CHECK(r["rhs_closed"].contains("re"));
        CHECK(r["rhs_residues"].contains("im"));
    }
    CHECK(j[0]["paper_eq"] == "3.1 Intf1");
}

TEST_CASE("numbers carry 17 significant digits")
{
    labelled_report lr;
    lr.report.id = "x";
    lr.report.lhs = cplx(0.1, 0.0);
    const std::string s = report_json(lr);
    CHECK(s.find("0.10000000000000001") != std::string::npos);
}

TEST_CASE("CSV and text formats")
{
    const auto reports = small_run(1, false);
    const std::string csv = reports_csv(reports);
    std::istringstream in(csv);
    std::string line;
    int rows = 0;
    std::getline(in, line);
    CHECK(line.rfind("id,paper_eq,params,lhs_re", 0) == 0);
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == static_cast<int>(reports.size()));

    const std::string text = reports_text(reports);
    CHECK(text.find("3.6 Ct2d") != std::string::npos);
    CHECK(text.find("6/6 passed") != std::string::npos);

    CHECK(emit_reports(reports, report_format::csv) == csv);
    CHECK(emit_reports(reports, report_format::text) == text);
    CHECK(parse_format("json") == report_format::json);
    CHECK(parse_format("csv") == report_format::csv);
    CHECK(parse_format("text") == report_format::text);
    CHECK_THROWS_AS(parse_format("xml"), domain_error);
}

TEST_CASE("output is deterministic across thread counts")
{
    const std::string one = reports_json(small_run(1, false));
    const std::string four = reports_json(small_run(4, false));
    CHECK(one == four);
    CHECK(reports_json(small_run(3, false)) == one);
}
