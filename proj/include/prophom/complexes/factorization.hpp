#pragma once

#include <prophom/complexes/assoc_side.hpp>
#include <prophom/complexes/elementary.hpp>
#include <prophom/complexes/tensor.hpp>

namespace prophom::complexes {

struct SigmaFactorization
{
    symgrp::Permutation sigma;
    std::vector<int> eps;
    ComplexWindow block;
    ComplexWindow product;
    exactlin::ChainMap map;
    bool chain_map = false;
    bool bijective = false;
    bool dims_match_compositions = false;
    bool ok() const { return chain_map && bijective && dims_match_compositions; }
};

/**
 * A_σ against E_{ε_1,ε_2} ⊗ ... ⊗ E_{ε_{z+N},ε_{z+N+1}} on degrees 0..pmax. The composition
 * (p_1..p_{z+N}) goes to the orbit vector of x..x a_σ(2) x..x ... a_σ(z+N) x..x with p_α x-letters
 * in slot α and increasing x-labels.
 */
inline SigmaFactorization verify_A_sigma_factorization(int z, int N, const symgrp::Permutation& sigma, int pmax)
{
    const int M = z + N;
    SigmaFactorization out;
    out.sigma = sigma;
    out.eps = epsilon_sequence(sigma, z, N);
    auto split = sigma_split(z, N, 0, pmax);
    auto it = split.blocks.find(sigma);
    if (it == split.blocks.end())
        throw Error("σ does not occur in the associative-side complex");
    out.block = it->second;
    std::vector<ComplexWindow> factors;
    for (int a = 1; a <= M; ++a)
        factors.push_back(elementary_window(build_elementary(out.eps[a - 1], out.eps[a], pmax)));
    out.product = tensor_complexes(factors);
    out.dims_match_compositions = true;
    for (int p = 0; p <= pmax; ++p) {
        const auto comps = symgrp::weak_compositions(p, M);
        if (out.block.dim(p) != comps.size() || out.product.dim(p) != comps.size())
            out.dims_match_compositions = false;
        const auto basis = assoc_side_basis(z, N, p);
        std::map<Word, std::size_t> position;
        const auto& members = split.members.at(sigma);
        if (auto m = members.find(p); m != members.end())
            for (std::size_t k = 0; k < m->second.size(); ++k)
                position.emplace(basis.reps()[m->second[k]], k);
        const auto cols = detail::tensor_basis(factors, p);
        SparseMatrix f(out.block.dim(p), cols.size());
        for (std::size_t col = 0; col < cols.size(); ++col) {
            Word w;
            Letter next = LetterLayout{z, N, p}.first_x();
            for (int a = 1; a <= M; ++a) {
                if (a > 1)
                    w.push_back(sigma(a));
                for (int k = 0; k < cols[col].degrees[a - 1]; ++k)
                    w.push_back(next++);
            }
            auto pos = position.find(w);
            if (pos == position.end())
                throw Error("composition word missing from the σ-block");
            f.set(pos->second, col, 1);
        }
        out.map[p] = std::move(f);
    }
    out.chain_map = exactlin::check_chain_map(out.map, out.product, out.block);
    out.bijective = exactlin::is_degreewise_bijective(out.map);
    return out;
}

/// All permutations of [1, z+N] fixing 1.
inline std::vector<symgrp::Permutation> sigma_range(int z, int N)
{
    std::vector<symgrp::Permutation> out;
    for (const auto& s : symgrp::all_permutations(z + N))
        if (s(1) == 1)
            out.push_back(s);
    return out;
}

struct KunnethReport
{
    ComplexWindow direct;
    std::vector<ComplexWindow> summands;
    std::map<int, std::size_t> summand_dims;
    std::map<int, std::size_t> summand_betti;
    bool dims_match = false;
    bool betti_match = false;
    bool ok() const { return dims_match && betti_match; }
};

/**
 * C_{z,N,q} against ⊕ ⊗_α C_{|I_α|,|J_α|,1}, summed over ordered q-tuples of possibly empty
 * blocks (I_α) of [1, z] and (J_α) of [z+1, z+N].
 */
inline KunnethReport verify_kunneth_C(int z, int N, int q, int pmax)
{
    if (q < 1)
        throw Error("q must be at least 1");
    KunnethReport out;
    out.direct = build_C(z, N, q, 0, pmax);
    const auto hd = exactlin::homology(out.direct);
    std::map<std::pair<int, int>, ComplexWindow> single;
    auto factor = [&](int zi, int ni) -> const ComplexWindow& {
        auto key = std::make_pair(zi, ni);
        if (!single.count(key))
            single.emplace(key, build_C(zi, ni, 1, 0, pmax));
        return single.at(key);
    };
    for (const auto& is : symgrp::ordered_set_partitions(letter_range(1, z), q, true))
        for (const auto& js : symgrp::ordered_set_partitions(letter_range(z + 1, z + N), q, true)) {
            std::vector<ComplexWindow> ws;
            for (int a = 0; a < q; ++a)
                ws.push_back(factor(static_cast<int>(is[a].size()), static_cast<int>(js[a].size())));
            out.summands.push_back(tensor_complexes(ws));
        }
    for (const auto& s : out.summands) {
        const auto h = exactlin::homology(s);
        for (const auto& d : h.degrees) {
            out.summand_dims[d.p] += d.dim;
            if (d.complete)
                out.summand_betti[d.p] += d.betti;
        }
    }
    out.dims_match = true;
    out.betti_match = true;
    for (const auto& d : hd.degrees) {
        if (out.summand_dims[d.p] != d.dim)
            out.dims_match = false;
        if (d.complete && out.summand_betti[d.p] != d.betti)
            out.betti_match = false;
    }
    return out;
}

}  // namespace prophom::complexes
