#pragma once

#include <prophom/verify/runner.hpp>

namespace prophom::verify {

namespace detail {

inline Job make_job(std::string claim, JobParams p) { return {std::move(claim), std::move(p)}; }

inline JobParams zn(int z, int N, int pmax)
{
    JobParams p;
    p.z = z;
    p.N = N;
    p.pmax = pmax;
    return p;
}

}  // namespace detail

inline const std::vector<std::pair<int, int>>& core_pairs()
{
    static const std::vector<std::pair<int, int>> pairs{{1, 0}, {1, 1}, {2, 0}, {1, 2}, {2, 1}, {3, 0}};
    return pairs;
}

/**
 * smoke: small instances of every claim.
 * full: the acceptance battery (Chevalley to z = 5, elementary to p' = 10, the six (z, N) pairs to p' = 4, ...).
 */
inline std::vector<Job> suite_jobs(const std::string& name)
{
    using detail::make_job;
    using detail::zn;
    if (name != "smoke" && name != "full")
        throw InvalidJob("unknown suite: " + name);
    const bool full = name == "full";
    std::vector<Job> jobs;
    for (int z = 1; z <= (full ? 5 : 3); ++z)
        jobs.push_back(make_job("lemma34", {.z = z}));
    for (int z = 1; z <= (full ? 4 : 3); ++z)
        jobs.push_back(make_job("assoc-wedge", {.z = z}));
    for (int n = 1; n <= (full ? 5 : 3); ++n)
        jobs.push_back(make_job("koszul", {.n = n}));
    for (int e = 0; e <= 1; ++e)
        for (int f = 0; f <= 1; ++f) {
            jobs.push_back(make_job("elementary", {.eps = e, .epsp = f, .pmax = full ? 10 : 6}));
            jobs.push_back(make_job("poisson-graded", {.eps = e, .epsp = f, .pmax = full ? 6 : 4}));
            jobs.push_back(make_job("pbw-filtration", {.eps = e, .epsp = f, .pmax = full ? 5 : 3}));
        }
    const int pmax = full ? 4 : 2;
    for (const auto& [z, N] : core_pairs()) {
        if (!full && z + N > 2)
            continue;
        jobs.push_back(make_job("a-acyclic", zn(z, N, pmax)));
        jobs.push_back(make_job("c-acyclic", zn(z, N, pmax)));
        jobs.push_back(make_job("dynkin", zn(z, N, pmax)));
        jobs.push_back(make_job("sigma-split", zn(z, N, pmax)));
        jobs.push_back(make_job("a-e-factorization", zn(z, N, pmax)));
    }
    for (const auto& [z, N] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}}) {
        if (!full && z + N > 2)
            continue;
        JobParams p = zn(z, N, 2);
        p.q = 2;
        jobs.push_back(make_job("kunneth-c", p));
    }
    for (int z = 1; z <= (full ? 7 : 5); ++z) {
        JobParams p = zn(z, 0, 0);
        if (z <= 3) {
            p.N = 1;
            p.pmax = 2;
        }
        jobs.push_back(make_job("dims", p));
    }
    return jobs;
}

/// Runs the jobs on a pool of `options.jobs` workers; reports come back in job order.
inline std::vector<Report> run_suite(const std::vector<Job>& jobs, const RunOptions& options)
{
    std::vector<Report> reports(jobs.size());
    RunOptions inner = options;
    inner.jobs = 1;
    parallel_for(jobs.size(), options.jobs, [&](std::size_t i) { reports[i] = run(jobs[i], inner); });
    return reports;
}

}  // namespace prophom::verify
