// Verifies one family from the catalog and prints the text report.
// Usage: catalog_walk [family]   (default: trig_cosine)

#include <glasser/report.hpp>
#include <glasser/runner.hpp>

#include <cstdio>
#include <exception>

using namespace glasser;

int main(int argc, char** argv)
{
    const std::string family = argc > 1 ? argv[1] : "trig_cosine";
    try {
        std::vector<run_task> tasks;
        for (const catalog_entry& e : family_suite(family))
            tasks.push_back(make_task(e));
        const auto reports = run_tasks(tasks, {}, default_jobs());
        std::fputs(reports_text(reports).c_str(), stdout);
        return all_pass(reports) ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "catalog_walk: %s\n", e.what());
        return 2;
    }
}
