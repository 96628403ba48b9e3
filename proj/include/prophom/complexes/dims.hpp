#pragma once

#include <prophom/complexes/common.hpp>
#include <prophom/exactlin/rank.hpp>

#include <map>
#include <string>

namespace prophom::complexes {

using DimParams = std::map<std::string, long>;

namespace detail {

inline long param(const DimParams& params, const std::string& key)
{
    auto it = params.find(key);
    if (it == params.end())
        throw Error("dim_predict: missing parameter " + key);
    if (it->second < 0)
        throw Error("dim_predict: negative parameter " + key);
    return it->second;
}

/// Single-block Lie-side dimension: M a-letters and p x-letters, antiinvariant in the x-letters.
inline Integer lie_side_single(long M, long p)
{
    if (M == 0)
        return (p == 1 || p == 2) ? 1 : 0;
    return symgrp::factorial(M - 1 + p) / symgrp::factorial(p);
}

}  // namespace detail

/**
 * Predicted dimensions.
 *   lie_multilinear {z}:        (z-1)!
 *   la_Tz_Tm {z, m}:            Σ over ordered partitions of [1,z] into m nonempty blocks of ∏ (|I|-1)!
 *   A_degree {z, N, p}:         (z+N-1+p)!/p!
 *   C_degree {z, N, q, p}:      Σ over ordered q-tuples of blocks of the a-letters and compositions of p
 *                               of ∏ single-block dimensions
 */
inline Integer dim_predict(const std::string& kind, const DimParams& params)
{
    using symgrp::factorial;
    if (kind == "lie_multilinear") {
        const long z = detail::param(params, "z");
        return z == 0 ? Integer(0) : factorial(z - 1);
    }
    if (kind == "la_Tz_Tm") {
        const long z = detail::param(params, "z"), m = detail::param(params, "m");
        Integer total = 0;
        for (const auto& part : symgrp::ordered_set_partitions(letter_range(1, z), static_cast<int>(m), false)) {
            Integer prod = 1;
            for (const auto& block : part)
                prod *= factorial(static_cast<long>(block.size()) - 1);
            total += prod;
        }
        return total;
    }
    if (kind == "A_degree") {
        const long z = detail::param(params, "z"), N = detail::param(params, "N"), p = detail::param(params, "p");
        if (z < 1)
            throw Error("dim_predict: A_degree needs z >= 1");
        return factorial(z + N - 1 + p) / factorial(p);
    }
    if (kind == "C_degree") {
        const long z = detail::param(params, "z"), N = detail::param(params, "N");
        const long q = detail::param(params, "q"), p = detail::param(params, "p");
        if (q < 1)
            throw Error("dim_predict: C_degree needs q >= 1");
        Integer total = 0;
        for (const auto& blocks : symgrp::ordered_set_partitions(letter_range(1, z + N), static_cast<int>(q), true))
            for (const auto& comp : symgrp::weak_compositions(static_cast<int>(p), static_cast<int>(q))) {
                Integer prod = 1;
                for (long a = 0; a < q; ++a)
                    prod *= detail::lie_side_single(static_cast<long>(blocks[a].size()), comp[a]);
                total += prod;
            }
        return total;
    }
    throw Error("dim_predict: unknown kind " + kind);
}

/**
 * dim of the multilinear part of L^{⊗m} in letters 1..z, by enumeration: for every ordered
 * partition into m nonempty blocks, the rank of the associative expansions of all tuples of
 * left-normed brackets over all orderings of each block.
 */
inline std::size_t enumerated_tensor_lie_dim(int z, int m)
{
    std::size_t total = 0;
    for (const auto& part : symgrp::ordered_set_partitions(letter_range(1, z), m, false)) {
        std::vector<std::vector<std::vector<std::pair<Word, int>>>> per_block;
        for (const auto& block : part) {
            std::vector<std::vector<std::pair<Word, int>>> expansions;
            Word w(block);
            do
                expansions.push_back(freealg::expand_left_normed(w));
            while (std::next_permutation(w.begin(), w.end()));
            per_block.push_back(std::move(expansions));
        }
        std::map<WordTuple, std::size_t> rows;
        std::vector<std::map<WordTuple, int>> cols;
        std::vector<std::size_t> choice(m, 0);
        auto rec = [&](auto&& self, int a) -> void {
            if (a == m) {
                std::map<WordTuple, int> col{{WordTuple{}, 1}};
                for (int b = 0; b < m; ++b) {
                    std::map<WordTuple, int> next;
                    for (const auto& [t, c] : col)
                        for (const auto& [u, s] : per_block[b][choice[b]]) {
                            WordTuple nt(t);
                            nt.push_back(u);
                            next[nt] += c * s;
                        }
                    col = std::move(next);
                }
                for (const auto& [t, c] : col)
                    rows.emplace(t, rows.size());
                cols.push_back(std::move(col));
                return;
            }
            for (std::size_t i = 0; i < per_block[a].size(); ++i) {
                choice[a] = i;
                self(self, a + 1);
            }
        };
        rec(rec, 0);
        SparseMatrix mat(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [t, v] : cols[c])
                if (v != 0)
                    mat.set(rows.at(t), c, v);
        total += exactlin::rank(mat);
    }
    return total;
}

}  // namespace prophom::complexes
