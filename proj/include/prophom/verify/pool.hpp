#pragma once

#include <prophom/exactlin/homology.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace prophom::verify {

/// Runs f(0..n-1) on up to `jobs` threads; the first exception is rethrown after all workers finish.
template <typename F>
void parallel_for(std::size_t n, int jobs, F&& f)
{
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

/// exactlin::homology with the d∘d checks and the per-degree ranks spread over a worker pool.
inline exactlin::HomologyProfile parallel_homology(const exactlin::ComplexWindow& w, int jobs)
{
    if (jobs <= 1)
        return exactlin::homology(w);
    w.validate();
    std::vector<int> degrees;
    for (int p = w.lo(); p <= w.hi(); ++p)
        if (w.has_differential(p))
            degrees.push_back(p);
    std::vector<std::size_t> ranks(degrees.size());
    std::vector<char> square_zero(degrees.size(), 1);
    parallel_for(degrees.size(), jobs, [&](std::size_t i) {
        const int p = degrees[i];
        if (w.has_differential(p + w.step()))
            square_zero[i] = (w.differential(p + w.step()) * w.differential(p)).is_zero();
        ranks[i] = exactlin::rank(w.differential(degrees[i]));
    });
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (!square_zero[i])
            throw Error("not a complex: d∘d != 0 out of degree " + std::to_string(degrees[i]));
    exactlin::HomologyProfile h;
    for (int p = w.lo(); p <= w.hi(); ++p) {
        exactlin::DegreeHomology d;
        d.p = p;
        d.dim = w.dim(p);
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            if (degrees[i] == p)
                d.rank_out = ranks[i];
            if (degrees[i] == p - w.step())
                d.rank_in = ranks[i];
        }
        d.betti = d.dim - d.rank_in - d.rank_out;
        d.complete = w.complete(p);
        h.degrees.push_back(d);
    }
    return h;
}

}  // namespace prophom::verify
