#pragma once

#include <prophom/complexes/lie_side.hpp>

namespace prophom::complexes {

/// Signed-orbit basis of antiinvariant words in a_2..a_{z+N}, x_1..x_p.
inline OrbitBasis assoc_side_basis(int z, int N, int p)
{
    const LetterLayout layout{z, N, p};
    return OrbitBasis(letter_range(2, layout.a_count()), layout.first_x(), p);
}

/**
 * Associative-side differential on a cochain Q in degree p, at word level:
 * Σ_{i<j} (-1)^{i+j+1} Q([x_i,x_j], rest)
 * + Σ_i (-1)^{i+1} (Q(rest) x_i + Σ_{z'=2..z} Q(a_z' ← [x_i,a_z'], rest)).
 */
inline WordVec assoc_side_differential(const WordVec& q, int z, int N, int p)
{
    const LetterLayout layout{z, N, p};
    WordVec out;
    detail::bracket_insertion(out, q, layout.first_x(), p);
    for (int i = 1; i <= p + 1; ++i) {
        const Rational sign(i % 2 == 1 ? 1 : -1);
        std::map<Letter, detail::LetterImage> rest;
        detail::map_remaining_x(rest, layout.first_x(), p, {i}, 1);
        detail::substitute_words(out, q, rest, sign, layout.x(i));
        for (int a = 2; a <= z; ++a) {
            auto images = rest;
            images[a] = detail::bracket_image(layout.x(i), a);
            detail::substitute_words(out, q, images, sign);
        }
    }
    return out;
}

namespace detail {

inline WordVec as_word_vec(const exactlin::SparseVec<Word>& v)
{
    WordVec out;
    for (const auto& [w, c] : v)
        out.emplace(WordTuple{w}, c);
    return out;
}

inline exactlin::SparseVec<Word> from_word_vec(const WordVec& v)
{
    exactlin::SparseVec<Word> out;
    for (const auto& [t, c] : v) {
        if (t.size() != 1)
            throw Error("expected single words");
        out.emplace(t[0], c);
    }
    return out;
}

}  // namespace detail

/// The associative-side cochain complex on degrees pmin..pmax in the signed-orbit basis.
inline ComplexWindow build_A(int z, int N, int pmin, int pmax)
{
    if (z < 1 || N < 0 || pmin < 0 || pmax < pmin)
        throw Error("invalid parameters for the associative-side complex");
    ComplexWindow w(window_name("A", z, N, 0), pmin, pmax, 1, pmin == 0, false);
    std::vector<OrbitBasis> bases;
    for (int p = pmin; p <= pmax; ++p) {
        bases.push_back(assoc_side_basis(z, N, p));
        std::vector<std::string> labels;
        for (const auto& r : bases.back().reps())
            labels.push_back(freealg::word_text(r));
        w.set_space(p, std::move(labels));
    }
    for (int p = pmin; p < pmax; ++p) {
        const auto& src = bases[p - pmin];
        const auto& dst = bases[p + 1 - pmin];
        SparseMatrix d(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            WordVec image = assoc_side_differential(detail::as_word_vec(src.vector(col)), z, N, p);
            auto c = dst.coordinates(detail::from_word_vec(image));
            for (std::size_t r = 0; r < c.size(); ++r)
                d.set(r, col, c[r]);
        }
        w.set_differential(p, std::move(d));
    }
    return w;
}

struct DynkinComparison
{
    ComplexWindow assoc;
    ComplexWindow lie;
    exactlin::ChainMap map;
    bool chain_map = false;
    bool bijective = false;
    bool ok() const { return chain_map && bijective; }
};

/// The map Q ↦ ad(Q)(a_1); a word u_1...u_s goes to (-1)^s [[a_1, u_s], ..., u_1].
inline DynkinComparison dynkin_compare(int z, int N, int pmin, int pmax)
{
    DynkinComparison out{build_A(z, N, pmin, pmax), build_C(z, N, 1, pmin, pmax), {}, false, false};
    for (int p = pmin; p <= pmax; ++p) {
        OrbitBasis src = assoc_side_basis(z, N, p);
        LieSideSpace dst(z, N, 1, p);
        SparseMatrix f(dst.dim(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            WordVec image;
            for (const auto& [w, c] : src.vector(col)) {
                Word u{1};
                u.insert(u.end(), w.rbegin(), w.rend());
                for (const auto& [e, s] : freealg::expand_left_normed(u))
                    add_to(image, WordTuple{e}, (w.size() % 2 == 0 ? s : -s) * c);
            }
            auto c = dst.coordinates(strip_words(image));
            for (std::size_t r = 0; r < c.size(); ++r)
                f.set(r, col, c[r]);
        }
        out.map[p] = std::move(f);
    }
    out.chain_map = exactlin::check_chain_map(out.map, out.assoc, out.lie);
    out.bijective = exactlin::is_degreewise_bijective(out.map);
    return out;
}

/// Order of the a-letters in a word as a permutation of [1, z+N] fixing 1: word order a_σ(2), a_σ(3), ...
inline symgrp::Permutation a_order(const Word& w, int a_count)
{
    std::vector<int> img{1};
    for (Letter l : w)
        if (l >= 2 && l <= a_count)
            img.push_back(l);
    return symgrp::Permutation(std::move(img));
}

struct SigmaSplit
{
    ComplexWindow total;
    std::map<symgrp::Permutation, ComplexWindow> blocks;
    std::map<symgrp::Permutation, std::map<int, std::vector<std::size_t>>> members;  // basis indices of total
    bool block_diagonal = false;
    bool dims_add_up = false;
};

/// Splits the associative-side complex by the order in which the a-letters occur.
inline SigmaSplit sigma_split(int z, int N, int pmin, int pmax)
{
    SigmaSplit out;
    out.total = build_A(z, N, pmin, pmax);
    const int M = z + N;
    std::map<int, std::vector<symgrp::Permutation>> sigma_of;
    for (int p = pmin; p <= pmax; ++p) {
        auto basis = assoc_side_basis(z, N, p);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            auto s = a_order(basis.reps()[k], M);
            sigma_of[p].push_back(s);
            out.members[s][p].push_back(k);
        }
    }
    out.block_diagonal = true;
    for (int p = pmin; p < pmax; ++p)
        for (const auto& [rc, v] : out.total.differential(p).entries())
            if (sigma_of[p + 1][rc.first] != sigma_of[p][rc.second])
                out.block_diagonal = false;
    for (const auto& [s, by_degree] : out.members) {
        ComplexWindow w("A_sigma(" + s.to_cycle_string() + ")", pmin, pmax, 1, pmin == 0, false);
        for (int p = pmin; p <= pmax; ++p) {
            std::vector<std::string> labels;
            auto it = by_degree.find(p);
            if (it != by_degree.end())
                for (std::size_t k : it->second)
                    labels.push_back(out.total.labels(p)[k]);
            w.set_space(p, std::move(labels));
        }
        for (int p = pmin; p < pmax; ++p) {
            const auto& rows = by_degree.count(p + 1) ? by_degree.at(p + 1) : std::vector<std::size_t>{};
            const auto& cols = by_degree.count(p) ? by_degree.at(p) : std::vector<std::size_t>{};
            SparseMatrix d(rows.size(), cols.size());
            const auto& full = out.total.differential(p);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    d.set(r, c, full.get(rows[r], cols[c]));
            w.set_differential(p, std::move(d));
        }
        out.blocks.emplace(s, std::move(w));
    }
    out.dims_add_up = true;
    for (int p = pmin; p <= pmax; ++p) {
        std::size_t sum = 0;
        for (const auto& [s, w] : out.blocks)
            sum += w.dim(p);
        if (sum != out.total.dim(p))
            out.dims_add_up = false;
    }
    return out;
}

/// ε_1 = 0, ε_{z+N+1} = 1 and ε_α = 1 iff σ(α) ∈ [2, z] for α in [2, z+N].
inline std::vector<int> epsilon_sequence(const symgrp::Permutation& sigma, int z, int N)
{
    const int M = z + N;
    if (sigma.size() != M || sigma(1) != 1)
        throw Error("σ must be a permutation of [1, z+N] fixing 1");
    std::vector<int> eps(M + 1, 0);
    for (int a = 2; a <= M; ++a)
        eps[a - 1] = sigma(a) <= z ? 1 : 0;
    eps[M] = 1;
    return eps;
}

}  // namespace prophom::complexes
