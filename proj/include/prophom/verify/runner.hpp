#pragma once

#include <prophom/complexes/dims.hpp>
#include <prophom/complexes/factorization.hpp>
#include <prophom/complexes/koszul.hpp>
#include <prophom/complexes/pbw_check.hpp>
#include <prophom/complexes/wedge.hpp>
#include <prophom/exactlin/market.hpp>
#include <prophom/verify/cache.hpp>
#include <prophom/verify/pool.hpp>
#include <prophom/verify/report.hpp>

#include <chrono>
#include <functional>

namespace prophom::verify {

struct RunOptions
{
    int jobs = 1;
    std::string cache_dir;  // already resolved against the environment
    Limits limits;
};

namespace detail {

using exactlin::ComplexWindow;
using exactlin::HomologyProfile;

struct Outcome
{
    std::optional<ComplexWindow> window;
    std::optional<HomologyProfile> homology;
    std::vector<Check> checks;

    void check(std::string name, bool ok, std::string detail = {})
    {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

inline std::string betti_text(const HomologyProfile& h)
{
    std::string s;
    for (const auto& d : h.degrees)
        s += (s.empty() ? "" : " ") + std::to_string(d.p) + ":" + std::to_string(d.betti) + (d.complete ? "" : "?");
    return s;
}

/// Betti numbers on complete degrees equal `expected` (missing degrees mean 0).
inline bool betti_is(const HomologyProfile& h, const std::map<int, std::size_t>& expected)
{
    for (const auto& d : h.degrees) {
        if (!d.complete)
            continue;
        auto it = expected.find(d.p);
        if (d.betti != (it == expected.end() ? 0 : it->second))
            return false;
    }
    return true;
}

inline void set_window(Outcome& o, ComplexWindow w, int jobs)
{
    o.homology = parallel_homology(w, jobs);
    o.window = std::move(w);
}

inline std::string rational_list(const std::vector<Rational>& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : ",") + x.get_str();
    return s;
}

inline void run_lemma34(const JobParams& p, Outcome& o, int jobs)
{
    const int z = *p.z;
    set_window(o, complexes::build_chevalley_wedge(z), jobs);
    std::map<int, std::size_t> expected;
    if (z == 1)
        expected[0] = 1;
    o.check("betti", betti_is(*o.homology, expected), betti_text(*o.homology));
    bool dims = true;
    for (int h = 0; h < z; ++h) {
        Integer predicted = complexes::dim_predict("la_Tz_Tm", {{"z", z}, {"m", h + 1}}) / symgrp::factorial(h + 1);
        dims = dims && predicted == o.window->dim(h);
    }
    o.check("wedge dims match la_Tz_Tm/k!", dims);
}

inline void run_assoc_wedge(const JobParams& p, Outcome& o, int jobs)
{
    const int z = *p.z;
    auto cmp = complexes::compare_wedges(z);
    const auto hc = parallel_homology(cmp.chevalley, jobs);
    set_window(o, cmp.assoc, jobs);
    std::map<int, std::size_t> expected;
    if (z == 1)
        expected[0] = 1;
    o.check("chain map", cmp.chain_map, "scalars " + rational_list(cmp.scalars));
    o.check("degreewise bijective", cmp.bijective);
    o.check("betti profiles equal", hc.complete_betti() == o.homology->complete_betti(), betti_text(hc));
    o.check("betti", betti_is(*o.homology, expected), betti_text(*o.homology));
}

inline void run_koszul(const JobParams& p, Outcome& o, int jobs)
{
    set_window(o, complexes::build_koszul_multilinear(*p.n), jobs);
    bool ok = true;
    for (const auto& d : o.homology->degrees)
        if (d.p > 0 && d.complete && d.betti != 0)
            ok = false;
    o.check("betti 0 in positive degrees", ok, betti_text(*o.homology));
}

inline std::map<int, std::size_t> exact_or_unit(int eps, int epsp)
{
    return eps == epsp ? std::map<int, std::size_t>{{0, 1}} : std::map<int, std::size_t>{};
}

inline void run_elementary(const JobParams& p, Outcome& o, int jobs)
{
    const int eps = *p.eps, epsp = *p.epsp, pmax = *p.pmax;
    auto s = complexes::build_elementary(eps, epsp, pmax);
    bool products = true;
    for (int k = 0; k + 1 <= pmax; ++k)
        products = products && sgn(s.lambda[k] * s.lambda[k + 1]) == 0;
    o.check("lambda_p * lambda_{p+1} = 0", products, "lambda " + rational_list(s.lambda));
    if (eps == epsp)
        o.check("lambda_0 = 0", sgn(s.lambda[0]) == 0);
    set_window(o, complexes::elementary_window(s), jobs);
    o.check("betti", betti_is(*o.homology, exact_or_unit(eps, epsp)), betti_text(*o.homology));
}

inline void run_poisson(const JobParams& p, Outcome& o, int jobs)
{
    const int eps = *p.eps, epsp = *p.epsp, pmax = *p.pmax;
    auto pg = complexes::build_poisson_graded(eps, epsp, pmax);
    o.check("p_n nonzero", pg.elements_nonzero);
    o.check("p_n graded", pg.elements_graded);
    o.check("p_n antiinvariant", pg.elements_antiinvariant);
    auto support = complexes::grading_support(pmax + 1);
    o.check("grading support", support.holds);
    bool formula = true;
    std::string detail = "mu " + rational_list(pg.mu);
    for (int n = 0; n < static_cast<int>(pg.mu.size()); ++n) {
        const Rational& mu = pg.mu[n];
        if (eps == epsp) {
            Rational want = n % 2 == 1 ? Rational((n + 1) / 2 * (eps == 0 ? 1 : -1)) : Rational(0);
            formula = formula && mu == want;
        } else if (n % 2 == 0) {
            formula = formula && (eps == 0 ? mu == 1 : sgn(mu) != 0);
        } else {
            formula = formula && sgn(mu) == 0;
        }
    }
    o.check("graded formula", formula, detail);
    set_window(o, pg.window, jobs);
    o.check("betti", betti_is(*o.homology, exact_or_unit(eps, epsp)), betti_text(*o.homology));
}

inline void run_pbw(const JobParams& p, Outcome& o)
{
    auto r = complexes::pbw_filtration_check(*p.eps, *p.epsp, *p.pmax);
    for (const auto& s : r.steps) {
        const std::string at = "p=" + std::to_string(s.p);
        o.check(at + " degree shift <= " + std::to_string(r.shift), s.within_shift,
                std::to_string(s.source_degree) + "->" + std::to_string(s.image_degree));
        o.check(at + " symbol matches graded differential", s.symbol_matches);
        o.check(at + " symbol spans P", s.symbol_spans);
    }
}

inline void run_dynkin(const JobParams& p, Outcome& o, int jobs)
{
    auto d = complexes::dynkin_compare(*p.z, *p.N, *p.pmin, *p.pmax);
    const auto hl = parallel_homology(d.lie, jobs);
    set_window(o, d.assoc, jobs);
    o.check("chain map", d.chain_map);
    o.check("degreewise bijective", d.bijective);
    o.check("betti A = betti C", hl.complete_betti() == o.homology->complete_betti(), betti_text(hl));
}

inline void run_acyclic(const JobParams& p, Outcome& o, int jobs, bool lie)
{
    const int z = *p.z, N = *p.N, q = p.q ? *p.q : 1;
    set_window(o, lie ? complexes::build_C(z, N, q, *p.pmin, *p.pmax) : complexes::build_A(z, N, *p.pmin, *p.pmax), jobs);
    o.check("interior betti 0", betti_is(*o.homology, {}), betti_text(*o.homology));
    bool dims = true;
    for (int k = *p.pmin; k <= *p.pmax; ++k) {
        Integer predicted = lie ? complexes::dim_predict("C_degree", {{"z", z}, {"N", N}, {"q", q}, {"p", k}})
                                : complexes::dim_predict("A_degree", {{"z", z}, {"N", N}, {"p", k}});
        dims = dims && predicted == o.window->dim(k);
    }
    o.check(lie ? "dims match C_degree" : "dims match A_degree", dims);
}

inline void run_sigma_split(const JobParams& p, Outcome& o, int jobs)
{
    const int z = *p.z, N = *p.N;
    auto s = complexes::sigma_split(z, N, *p.pmin, *p.pmax);
    o.check("differential is block diagonal", s.block_diagonal);
    o.check("block dims add up", s.dims_add_up);
    bool compositions = true, acyclic = true;
    for (const auto& [sigma, w] : s.blocks) {
        for (int k = *p.pmin; k <= *p.pmax; ++k)
            compositions = compositions && Integer(w.dim(k)) == symgrp::binomial(k + z + N - 1, z + N - 1);
        acyclic = acyclic && betti_is(parallel_homology(w, jobs), {});
    }
    o.check("block dims are composition counts", compositions);
    o.check("blocks acyclic", acyclic);
    o.check("block count", s.blocks.size() == complexes::sigma_range(z, N).size(), std::to_string(s.blocks.size()));
    set_window(o, s.total, jobs);
}

inline void run_factorization(const JobParams& p, Outcome& o, int jobs)
{
    const int z = *p.z, N = *p.N;
    std::vector<symgrp::Permutation> sigmas;
    if (p.sigma) {
        auto s = symgrp::Permutation::parse_cycles(*p.sigma, z + N);
        if (s(1) != 1)
            throw InvalidJob("--sigma must fix 1");
        sigmas.push_back(s);
    } else {
        sigmas = complexes::sigma_range(z, N);
    }
    std::vector<complexes::SigmaFactorization> results(sigmas.size());
    parallel_for(sigmas.size(), jobs, [&](std::size_t i) {
        results[i] = complexes::verify_A_sigma_factorization(z, N, sigmas[i], *p.pmax);
    });
    for (const auto& r : results) {
        std::string eps;
        for (int e : r.eps)
            eps += std::to_string(e);
        const std::string tag = "sigma=" + r.sigma.to_cycle_string();
        o.check(tag + " chain isomorphism", r.chain_map && r.bijective, "eps " + eps);
        o.check(tag + " composition count", r.dims_match_compositions);
    }
    set_window(o, complexes::build_A(z, N, 0, *p.pmax), jobs);
}

inline void run_kunneth(const JobParams& p, Outcome& o, int jobs)
{
    auto k = complexes::verify_kunneth_C(*p.z, *p.N, *p.q, *p.pmax);
    o.check("dimension identity", k.dims_match);
    o.check("interior betti agree", k.betti_match);
    o.check("summand count", true, std::to_string(k.summands.size()));
    set_window(o, k.direct, jobs);
}

inline void run_dims(const JobParams& p, Outcome& o)
{
    const int z = *p.z, N = *p.N, q = *p.q, pmax = *p.pmax;
    const Integer lie = complexes::dim_predict("lie_multilinear", {{"z", z}});
    o.check("lie_multilinear basis size", lie == freealg::lie_basis(complexes::letter_range(1, z)).size(), lie.get_str());
    o.check("lie_multilinear enumerated", lie == complexes::enumerated_tensor_lie_dim(z, 1));
    for (int m = 2; m <= std::min(3, z); ++m) {
        const Integer pred = complexes::dim_predict("la_Tz_Tm", {{"z", z}, {"m", m}});
        o.check("la_Tz_Tm m=" + std::to_string(m) + " enumerated", pred == complexes::enumerated_tensor_lie_dim(z, m),
                pred.get_str());
    }
    for (int k = 0; k <= pmax; ++k) {
        const Integer a = complexes::dim_predict("A_degree", {{"z", z}, {"N", N}, {"p", k}});
        o.check("A_degree p=" + std::to_string(k), a == complexes::assoc_side_basis(z, N, k).size(), a.get_str());
        const Integer c = complexes::dim_predict("C_degree", {{"z", z}, {"N", N}, {"q", q}, {"p", k}});
        o.check("C_degree p=" + std::to_string(k), c == complexes::LieSideSpace(z, N, q, k).dim(), c.get_str());
    }
}

inline Outcome execute(const Job& job, int jobs)
{
    Outcome o;
    const auto& c = job.claim;
    const auto& p = job.params;
    if (c == "lemma34")
        run_lemma34(p, o, jobs);
    else if (c == "assoc-wedge")
        run_assoc_wedge(p, o, jobs);
    else if (c == "koszul")
        run_koszul(p, o, jobs);
    else if (c == "elementary")
        run_elementary(p, o, jobs);
    else if (c == "poisson-graded")
        run_poisson(p, o, jobs);
    else if (c == "pbw-filtration")
        run_pbw(p, o);
    else if (c == "dynkin")
        run_dynkin(p, o, jobs);
    else if (c == "sigma-split")
        run_sigma_split(p, o, jobs);
    else if (c == "a-e-factorization")
        run_factorization(p, o, jobs);
    else if (c == "kunneth-c")
        run_kunneth(p, o, jobs);
    else if (c == "c-acyclic")
        run_acyclic(p, o, jobs, true);
    else if (c == "a-acyclic")
        run_acyclic(p, o, jobs, false);
    else if (c == "dims")
        run_dims(p, o);
    else
        throw InvalidJob("unknown claim: " + c);
    return o;
}

}  // namespace detail

/**
 * Runs one verification. Invalid or over-cap jobs throw InvalidJob. Any other error inside the
 * computation becomes a failing check, so a report is always produced for a valid job.
 */
inline Report run(const Job& job, const RunOptions& options = {})
{
    const auto start = std::chrono::steady_clock::now();
    const Job normalized = normalize(job, options.limits);
    Report r;
    r.claim = normalized.claim;
    r.params = normalized.params;
    r.input_hash = input_hash(normalized);
    const Cache cache(options.cache_dir);
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    if (auto hit = cache.load(r.input_hash, "json")) {
        // unreadable entries are recomputed and overwritten
        try {
            Report cached = report_from_json(nlohmann::ordered_json::parse(*hit));
            if (cached.input_hash == r.input_hash) {
                cached.elapsed_ms = elapsed();
                return cached;
            }
        } catch (const std::exception&) {
        }
    }
    std::optional<exactlin::ComplexWindow> window;
    bool has_complete = true;
    try {
        auto o = detail::execute(normalized, options.jobs);
        r.checks = std::move(o.checks);
        if (o.homology) {
            r.degrees = degree_rows(*o.homology);
            has_complete = std::any_of(r.degrees.begin(), r.degrees.end(), [](const DegreeRow& d) { return d.complete; });
        }
        window = std::move(o.window);
    } catch (const InvalidJob&) {
        throw;
    } catch (const std::exception& e) {
        r.checks.push_back({"internal", false, e.what()});
    }
    const bool all_ok = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.ok; });
    r.verdict = !all_ok ? "fail" : (has_complete ? "pass" : "incomplete");
    if (cache.enabled()) {
        cache.store(r.input_hash, "json", to_json(r, false).dump(2) + "\n");
        if (window) {
            std::ostringstream dump;
            exactlin::write_window(dump, *window);
            cache.store(r.input_hash, "window", dump.str());
        }
    }
    r.elapsed_ms = elapsed();
    return r;
}

}  // namespace prophom::verify
