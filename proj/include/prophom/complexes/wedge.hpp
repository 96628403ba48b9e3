#pragma once

#include <prophom/complexes/common.hpp>
#include <prophom/exactlin/homology.hpp>

namespace prophom::complexes {

namespace detail {

using Blocks = std::vector<LieBasisWord>;

/// Wedge basis of degree k on a letter set: blocks sorted by minimal letter.
inline std::vector<Blocks> wedge_basis(const LetterSet& letters, int k)
{
    std::vector<Blocks> out;
    if (k == 0) {
        if (letters.empty())
            out.emplace_back();
        return out;
    }
    for (const auto& partition : symgrp::set_partitions(letters, k))
        for (auto& t : lie_block_tuples(partition))
            out.push_back(std::move(t));
    return out;
}

inline std::vector<std::string> wedge_labels(const std::vector<Blocks>& basis)
{
    std::vector<std::string> labels;
    for (const auto& t : basis)
        labels.push_back(blocks_text(t, "^"));
    return labels;
}

}  // namespace detail

/**
 * Chevalley–Eilenberg complex of the free Lie algebra, multilinear part in letters 1..z.
 * Homological degree h holds (wedge^{h+1} L)_{[1,z]}; d lowers h by one.
 * Wedge basis vectors are normalized, b1^...^bk = (1/k!) Σ ε(σ) b_σ1 ⊗ ... ⊗ b_σk.
 */
inline ComplexWindow build_chevalley_wedge(int z)
{
    if (z < 1)
        throw Error("z must be at least 1");
    const LetterSet letters = letter_range(1, z);
    ComplexWindow w("chevalley_wedge(z=" + std::to_string(z) + ")", 0, z - 1, -1, true, true);
    std::vector<std::vector<detail::Blocks>> bases(z);
    for (int h = 0; h < z; ++h) {
        bases[h] = detail::wedge_basis(letters, h + 1);
        w.set_space(h, detail::wedge_labels(bases[h]));
    }
    for (int h = 1; h < z; ++h) {
        const int k = h + 1;
        auto target = detail::index_of(bases[h - 1]);
        SparseMatrix d(bases[h - 1].size(), bases[h].size());
        const auto perms = symgrp::all_permutations(k);
        for (std::size_t col = 0; col < bases[h].size(); ++col) {
            const auto& src = bases[h][col];
            for (const auto& s : perms) {
                LiePoly br = freealg::lie_bracket(LiePoly::basis(src[s(1) - 1]), LiePoly::basis(src[s(2) - 1]));
                for (const auto& [b, c] : br.terms()) {
                    detail::Blocks t{b};
                    for (int i = 3; i <= k; ++i)
                        t.push_back(src[s(i) - 1]);
                    int sign = s.sign() * sort_blocks_with_sign(t);
                    d.add(target.at(t), col, Rational(sign) * c / k);
                }
            }
        }
        w.set_differential(h, std::move(d));
    }
    return w;
}

/// Basis element of the associative-coefficient wedge complex: a word and a sorted wedge of Lie blocks.
struct AssocWedgeKey
{
    Word word;
    detail::Blocks blocks;
    auto operator<=>(const AssocWedgeKey&) const = default;
};

namespace detail {

inline std::vector<AssocWedgeKey> assoc_wedge_basis(const LetterSet& letters, int h)
{
    std::vector<AssocWedgeKey> out;
    const std::size_t n = letters.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        LetterSet word_letters, rest;
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1 ? word_letters : rest).push_back(letters[i]);
        auto wedges = wedge_basis(rest, h);
        if (wedges.empty())
            continue;
        Word w(word_letters);
        do {
            for (const auto& t : wedges)
                out.push_back({w, t});
        } while (std::next_permutation(w.begin(), w.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/**
 * Chevalley–Eilenberg complex of the free Lie algebra on letters 2..z with coefficients in the
 * free associative algebra (acting by right multiplication). Degree h holds (A ⊗ wedge^h L)_{[2,z]}.
 */
inline ComplexWindow build_assoc_wedge(int z)
{
    if (z < 1)
        throw Error("z must be at least 1");
    const LetterSet letters = letter_range(2, z);
    ComplexWindow w("assoc_wedge(z=" + std::to_string(z) + ")", 0, z - 1, -1, true, true);
    std::vector<std::vector<AssocWedgeKey>> bases(z);
    for (int h = 0; h < z; ++h) {
        bases[h] = detail::assoc_wedge_basis(letters, h);
        std::vector<std::string> labels;
        for (const auto& key : bases[h])
            labels.push_back(freealg::word_text(key.word) + "#" + blocks_text(key.blocks, "^"));
        w.set_space(h, std::move(labels));
    }
    for (int h = 1; h < z; ++h) {
        auto target = detail::index_of(bases[h - 1]);
        SparseMatrix d(bases[h - 1].size(), bases[h].size());
        for (std::size_t col = 0; col < bases[h].size(); ++col) {
            const auto& [word, blocks] = bases[h][col];
            for (int i = 0; i < h; ++i) {
                detail::Blocks rest;
                for (int k = 0; k < h; ++k)
                    if (k != i)
                        rest.push_back(blocks[k]);
                const Rational sign = i % 2 == 0 ? 1 : -1;
                for (const auto& [u, s] : freealg::expand_left_normed(blocks[i].word()))
                    d.add(target.at({freealg::concat(word, u), rest}), col, sign * s);
            }
            for (int i = 0; i < h; ++i)
                for (int j = i + 1; j < h; ++j) {
                    LiePoly br = freealg::lie_bracket(LiePoly::basis(blocks[i]), LiePoly::basis(blocks[j]));
                    for (const auto& [b, c] : br.terms()) {
                        detail::Blocks t;
                        for (int k = 0; k < h; ++k)
                            if (k == i)
                                t.push_back(b);
                            else if (k != j)
                                t.push_back(blocks[k]);
                        int sign = (j % 2 == 0 ? 1 : -1) * sort_blocks_with_sign(t);
                        d.add(target.at({word, t}), col, Rational(sign) * c);
                    }
                }
        }
        w.set_differential(h, std::move(d));
    }
    return w;
}

/// Lift from the associative wedge complex to the Chevalley complex, with per-degree scalars.
struct WedgeComparison
{
    ComplexWindow chevalley;
    ComplexWindow assoc;
    exactlin::ChainMap lift;
    std::vector<Rational> scalars;
    bool chain_map = false;
    bool bijective = false;
};

/**
 * Lift (w, b_1..b_h) ↦ s_h (1|w, b_1..b_h). The scalars s_h absorb the wedge normalization;
 * they are read off from one nonzero entry per degree and then the chain-map equation is
 * checked on every entry.
 */
inline WedgeComparison compare_wedges(int z)
{
    WedgeComparison out{build_chevalley_wedge(z), build_assoc_wedge(z), {}, {}, false, false};
    const LetterSet lie_letters = letter_range(1, z);
    std::vector<SparseMatrix> raw(z);
    for (int h = 0; h < z; ++h) {
        auto cbasis = detail::wedge_basis(lie_letters, h + 1);
        auto cindex = detail::index_of(cbasis);
        auto abasis = detail::assoc_wedge_basis(letter_range(2, z), h);
        SparseMatrix f(cbasis.size(), abasis.size());
        for (std::size_t col = 0; col < abasis.size(); ++col) {
            detail::Blocks t{LieBasisWord(1, abasis[col].word)};
            t.insert(t.end(), abasis[col].blocks.begin(), abasis[col].blocks.end());
            f.set(cindex.at(t), col, 1);
        }
        raw[h] = std::move(f);
    }
    out.scalars.assign(z, Rational(1));
    for (int h = 1; h < z; ++h) {
        SparseMatrix lhs = raw[h - 1] * out.assoc.differential(h);
        SparseMatrix rhs = out.chevalley.differential(h) * raw[h];
        for (const auto& [rc, v] : rhs.entries()) {
            Rational l = lhs.get(rc.first, rc.second);
            if (sgn(l) != 0) {
                out.scalars[h] = out.scalars[h - 1] * l / v;
                break;
            }
        }
    }
    for (int h = 0; h < z; ++h)
        out.lift[h] = out.scalars[h] * raw[h];
    out.chain_map = exactlin::check_chain_map(out.lift, out.assoc, out.chevalley);
    out.bijective = exactlin::is_degreewise_bijective(out.lift);
    return out;
}

}  // namespace prophom::complexes
