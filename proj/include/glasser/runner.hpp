#ifndef GLASSER_RUNNER_HPP
#define GLASSER_RUNNER_HPP

// Runs a list of bound identities on a bounded number of threads. Results
// keep the order of the input list whatever the scheduling.

#include <glasser/report.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace glasser {

struct run_task {
    std::string paper_eq;
    identity idn;
};

/// Binds an entry with its overrides. Domain errors (unknown parameter,
/// value out of range, rejected combination) propagate to the caller.
inline run_task make_task(const catalog_entry& e, const param_map& overrides = {})
{
    return {paper_eq(e), e.bind(overrides)};
}

inline std::vector<labelled_report> run_tasks(const std::vector<run_task>& tasks, const verify_settings& vs,
                                              int jobs = 1, bool timing = true)
{
    std::vector<labelled_report> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            out[i].paper_eq = tasks[i].paper_eq;
            out[i].report = verify(tasks[i].idn, vs);
            if (!timing)
                out[i].report.seconds = 0.0;
        }
    };
    const std::size_t n = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                  std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < n; ++k)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();
    return out;
}

/// Default thread count: GLASSER_JOBS when set to a positive integer,
/// otherwise the hardware concurrency.
inline int default_jobs()
{
    if (const char* env = std::getenv("GLASSER_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(v);
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

inline bool all_pass(const std::vector<labelled_report>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const labelled_report& r) { return r.report.pass; });
}

} // namespace glasser

#endif
