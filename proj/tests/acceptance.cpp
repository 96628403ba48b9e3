// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit status if any fails.

#include <prophom/prophom.hpp>
#include <prophom/verify/suite.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

using namespace prophom;
using namespace prophom::complexes;
using exactlin::homology;

namespace {

struct Result
{
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool complete_betti_zero(const exactlin::HomologyProfile& h, int except_degree = -1, std::size_t except_value = 0)
{
    for (const auto& d : h.degrees)
        if (d.complete && d.betti != (d.p == except_degree ? except_value : 0))
            return false;
    return true;
}

const std::vector<std::pair<int, int>> core_pairs{{1, 0}, {1, 1}, {2, 0}, {1, 2}, {2, 1}, {3, 0}};

Result lemma34()
{
    Result r;
    auto t = Clock::now();
    for (int z = 1; z <= 4; ++z) {
        auto h = homology(build_chevalley_wedge(z));
        r.require(z == 1 ? complete_betti_zero(h, 0, 1) : complete_betti_zero(h), "betti at z=" + std::to_string(z));
    }
    r.require(since(t) < 10, "z<=4 over 10 s");
    t = Clock::now();
    r.require(complete_betti_zero(homology(build_chevalley_wedge(5))), "betti at z=5");
    r.require(since(t) < 300, "z=5 over 5 min");
    return r;
}

Result assoc_wedge()
{
    Result r;
    for (int z = 1; z <= 4; ++z) {
        auto c = compare_wedges(z);
        const std::string at = " at z=" + std::to_string(z);
        r.require(c.chain_map, "chain map" + at);
        r.require(c.bijective, "bijectivity" + at);
        r.require(homology(c.assoc).complete_betti() == homology(c.chevalley).complete_betti(), "betti profiles" + at);
    }
    return r;
}

Result koszul()
{
    Result r;
    auto t = Clock::now();
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : homology(build_koszul_multilinear(n)).degrees)
            if (d.p > 0)
                r.require(d.betti == 0, "betti at n=" + std::to_string(n) + " p=" + std::to_string(d.p));
    r.require(since(t) < 30, "over 30 s");
    return r;
}

Result elementary()
{
    Result r;
    auto t = Clock::now();
    for (int eps = 0; eps <= 1; ++eps)
        for (int epsp = 0; epsp <= 1; ++epsp) {
            const std::string at = " for (" + std::to_string(eps) + "," + std::to_string(epsp) + ")";
            auto s = build_elementary(eps, epsp, 10);
            for (int p = 0; p <= 9; ++p)
                r.require(sgn(s.lambda[p] * s.lambda[p + 1]) == 0, "lambda product" + at);
            auto h = homology(elementary_window(s));
            for (const auto& d : h.degrees)
                if (d.p <= 9) {
                    r.require(d.complete, "degree " + std::to_string(d.p) + " incomplete" + at);
                    r.require(d.betti == (eps == epsp && d.p == 0 ? 1u : 0u), "betti" + at);
                }
        }
    r.require(since(t) < 10, "over 10 s");
    return r;
}

Result graded_formulas()
{
    Result r;
    auto t = Clock::now();
    for (int m = 0; m <= 3; ++m)
        r.require(graded_differential(0, 1, poisson_element(2 * m), 2 * m) == poisson_element(2 * m + 1),
                  "gr d_{0,1}(p_" + std::to_string(2 * m) + ")");
    for (int u = 1; u <= 3; ++u) {
        auto src = poisson_element(2 * u - 1);
        auto dst = poisson_element(2 * u);
        r.require(graded_differential(0, 0, src, 2 * u - 1) == u * dst, "gr d_{0,0} at u=" + std::to_string(u));
        r.require(graded_differential(1, 1, src, 2 * u - 1) == -u * dst, "gr d_{1,1} at u=" + std::to_string(u));
    }
    r.require(since(t) < 10, "over 10 s");
    return r;
}

Result grading_support_lemma()
{
    Result r;
    auto gs = grading_support(7);
    r.require(gs.dims.size() == 8, "table size");
    for (int n = 0; n < static_cast<int>(gs.dims.size()); ++n) {
        const int u_star = n % 2 == 0 ? n / 2 : n / 2 + 1;
        for (int u = 0; u < static_cast<int>(gs.dims[n].size()); ++u)
            r.require(gs.dims[n][u] == (u == u_star ? 1 : 0),
                      "dim P^" + std::to_string(n) + "[" + std::to_string(u) + "]");
    }
    r.require(gs.holds, "support flag");
    return r;
}

Result pbw()
{
    Result r;
    for (int eps = 0; eps <= 1; ++eps)
        for (int epsp = 0; epsp <= 1; ++epsp) {
            auto rep = pbw_filtration_check(eps, epsp, 5);
            r.require(rep.ok, "(" + std::to_string(eps) + "," + std::to_string(epsp) + ")");
            r.require(rep.shift == (eps == epsp ? 0 : 1), "shift");
        }
    return r;
}

Result core_acyclicity()
{
    Result r;
    auto t = Clock::now();
    std::vector<Result> parts(core_pairs.size());
    verify::parallel_for(core_pairs.size(), 4, [&](std::size_t i) {
        auto [z, N] = core_pairs[i];
        const std::string at = " at (" + std::to_string(z) + "," + std::to_string(N) + ")";
        parts[i].require(complete_betti_zero(homology(build_A(z, N, 0, 4))), "A betti" + at);
        parts[i].require(complete_betti_zero(homology(build_C(z, N, 1, 0, 4))), "C betti" + at);
        parts[i].require(dynkin_compare(z, N, 0, 4).ok(), "Dynkin" + at);
    });
    for (const auto& p : parts)
        r.require(p.ok, p.note);
    r.require(since(t) < 900, "over 15 min");
    return r;
}

Result sigma_decomposition()
{
    Result r;
    for (auto [z, N] : core_pairs) {
        const std::string at = " at (" + std::to_string(z) + "," + std::to_string(N) + ")";
        auto s = sigma_split(z, N, 0, 4);
        r.require(s.dims_add_up, "dims add up" + at);
        r.require(s.block_diagonal, "block diagonal" + at);
        for (const auto& [sigma, w] : s.blocks)
            for (int p = 0; p <= 4; ++p)
                r.require(Integer(w.dim(p)) == symgrp::binomial(p + z + N - 1, z + N - 1), "stars and bars" + at);
        for (const auto& sigma : sigma_range(z, N))
            r.require(verify_A_sigma_factorization(z, N, sigma, 4).ok(),
                      "A:E for sigma=" + sigma.to_cycle_string() + at);
    }
    return r;
}

Result kunneth()
{
    Result r;
    for (auto [z, N, q] : std::vector<std::tuple<int, int, int>>{{1, 0, 2}, {1, 1, 2}, {2, 1, 2}}) {
        auto k = verify_kunneth_C(z, N, q, 2);
        const std::string at = " at (" + std::to_string(z) + "," + std::to_string(N) + "," + std::to_string(q) + ")";
        r.require(k.dims_match, "dims" + at);
        r.require(k.betti_match, "betti" + at);
    }
    return r;
}

Result dimensions()
{
    Result r;
    for (int z = 1; z <= 7; ++z) {
        const Integer predicted = dim_predict("lie_multilinear", {{"z", z}});
        r.require(predicted == enumerated_tensor_lie_dim(z, 1), "lie_multilinear z=" + std::to_string(z));
        r.require(predicted == freealg::lie_basis(letter_range(1, z)).size(), "basis size z=" + std::to_string(z));
    }
    for (int z = 1; z <= 6; ++z)
        for (int m = 1; m <= 3 && m <= z; ++m)
            r.require(dim_predict("la_Tz_Tm", {{"z", z}, {"m", m}}) == enumerated_tensor_lie_dim(z, m),
                      "la_Tz_Tm z=" + std::to_string(z) + " m=" + std::to_string(m));
    return r;
}

freealg::LiePoly random_lie(std::mt19937& rng, const LetterSet& s)
{
    freealg::LiePoly p(s);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& b : freealg::lie_basis(s))
        if (rng() % 2)
            p.add_term(b, coef(rng));
    return p;
}

freealg::LetterMap random_bijection(std::mt19937& rng, const LetterSet& s)
{
    LetterSet img(s);
    std::shuffle(img.begin(), img.end(), rng);
    freealg::LetterMap m;
    for (std::size_t i = 0; i < s.size(); ++i)
        m[s[i]] = img[i];
    return m;
}

Result properties()
{
    Result r;
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto s = letter_range(1, n);
        auto l = random_lie(rng, s);
        r.require(freealg::strip_to_lie(freealg::expand_lie_to_assoc(l), 1) == l, "strip∘expand");
        auto sigma = random_bijection(rng, s), tau = random_bijection(rng, s);
        r.require(freealg::relabel_lie(freealg::relabel_lie(l, sigma), tau) ==
                      freealg::relabel_lie(l, freealg::compose(tau, sigma)),
                  "relabel action");
    }
    for (int trial = 0; trial < 40; ++trial) {
        const int a = 1 + static_cast<int>(rng() % 2), b = 1 + static_cast<int>(rng() % 2),
                  c = 1 + static_cast<int>(rng() % 2);
        auto x = random_lie(rng, letter_range(1, a));
        auto y = random_lie(rng, letter_range(a + 1, a + b));
        auto z = random_lie(rng, letter_range(a + b + 1, a + b + c));
        using freealg::lie_bracket;
        r.require((lie_bracket(x, y) + lie_bracket(y, x)).is_zero(), "antisymmetry");
        r.require((lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
                   lie_bracket(lie_bracket(z, x), y))
                      .is_zero(),
                  "Jacobi");
    }
    for (int trial = 0; trial < 12; ++trial) {
        const int z = 1 + static_cast<int>(rng() % 2), N = static_cast<int>(rng() % 2);
        const int q = 1 + static_cast<int>(rng() % 2), pmax = 1 + static_cast<int>(rng() % 3);
        for (const auto& w : {build_C(z, N, q, 0, pmax), build_A(z, N, 0, pmax),
                              build_chevalley_wedge(1 + static_cast<int>(rng() % 5)),
                              build_assoc_wedge(1 + static_cast<int>(rng() % 4)),
                              build_koszul_multilinear(1 + static_cast<int>(rng() % 5)),
                              elementary_window(build_elementary(static_cast<int>(rng() % 2),
                                                                 static_cast<int>(rng() % 2), 6))}) {
            try {
                exactlin::check_is_complex(w);
            } catch (const std::exception& e) {
                r.require(false, w.name() + ": " + e.what());
            }
        }
    }
    auto jobs = verify::suite_jobs("smoke");
    auto first = verify::run_suite(jobs, {.jobs = 4});
    auto second = verify::run_suite(jobs, {.jobs = 1});
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        r.require(!first[i].failed(), "smoke " + jobs[i].claim);
        r.require(verify::to_json(first[i], false).dump() == verify::to_json(second[i], false).dump(),
                  "report determinism for " + jobs[i].claim);
    }
    return r;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"chevalley wedge Betti numbers, z <= 5", lemma34},
        {"associative wedge chain isomorphism, z <= 4", assoc_wedge},
        {"Koszul slices acyclic in positive degrees, n <= 5", koszul},
        {"elementary complexes to p' = 10", elementary},
        {"graded formulas on p_n", graded_formulas},
        {"grading support, n <= 7", grading_support_lemma},
        {"PBW filtration, p' <= 5", pbw},
        {"core acyclicity and Dynkin isomorphism, p' <= 4", core_acyclicity},
        {"sigma decomposition and elementary factorization", sigma_decomposition},
        {"Kunneth decomposition of the q-fold Lie side", kunneth},
        {"dimension predictions", dimensions},
        {"property suites", properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t = Clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.require(false, std::string("exception: ") + e.what());
        }
        const double s = since(t);
        std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(2) << s << " s)";
        if (!r.ok)
            std::cout << " -- " << r.note;
        std::cout << std::endl;
        failures += r.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
