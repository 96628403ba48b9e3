#pragma once

#include <prophom/exactlin/sparse_matrix.hpp>
#include <prophom/exactlin/subspace.hpp>
#include <prophom/freealg/sym_lie.hpp>
#include <prophom/freealg/tensor_lie.hpp>
#include <prophom/symgrp/combinatorics.hpp>

#include <functional>
#include <random>

namespace prophom::symgrp {

using freealg::Letter;
using freealg::LetterMap;

/// Letter map sending letters[k] to letters[π(k+1)-1] and fixing everything else in `support`.
inline LetterMap letter_map(const Permutation& pi, const std::vector<Letter>& letters, const LetterSet& support)
{
    LetterMap m;
    for (Letter l : support)
        m[l] = l;
    for (std::size_t k = 0; k < letters.size(); ++k)
        m[letters[k]] = letters[pi(static_cast<int>(k) + 1) - 1];
    return m;
}

namespace detail {

inline void require_letters_in(const std::vector<Letter>& letters, const LetterSet& support)
{
    for (Letter l : letters)
        if (!std::binary_search(support.begin(), support.end(), l))
            throw Error("antisymmetrized letter " + std::to_string(l) + " not in support");
    if (freealg::support_of(freealg::Word(letters)).size() != letters.size())
        throw Error("repeated antisymmetrized letter");
}

template <typename Poly, typename Relabel>
Poly alt(const Poly& p, const std::vector<Letter>& letters, const LetterSet& support, Relabel relabel)
{
    require_letters_in(letters, support);
    Poly out = p;
    out *= Rational(0);
    for (const auto& pi : all_permutations(static_cast<int>(letters.size()))) {
        Poly term = relabel(p, letter_map(pi, letters, support));
        term *= Rational(pi.sign());
        out += term;
    }
    return out;
}

}  // namespace detail

/// Σ_π ε(π) π·p over permutations of `letters`, without 1/n!.
inline freealg::AssocPoly antisymmetrize(const freealg::AssocPoly& p, const std::vector<Letter>& letters)
{
    return detail::alt(p, letters, p.support(), [](const auto& q, const LetterMap& m) { return relabel(q, m); });
}

inline freealg::TensorLiePoly antisymmetrize(const freealg::TensorLiePoly& t, const std::vector<Letter>& letters)
{
    return detail::alt(t, letters, t.ambient(),
                       [](const auto& q, const LetterMap& m) { return freealg::relabel_tensor(q, m); });
}

inline freealg::SymLiePoly antisymmetrize(const freealg::SymLiePoly& f, const std::vector<Letter>& letters)
{
    return detail::alt(f, letters, f.support(),
                       [](const auto& q, const LetterMap& m) { return freealg::relabel_sym(q, m); });
}

/// Matrix of a permutation acting on a based space of dimension dim.
using Action = std::function<exactlin::SparseMatrix(const Permutation&)>;

/**
 * Basis of the sign-isotypic subspace of a representation of S_p.
 *
 * The representation property is checked on every pair of adjacent
 * transpositions and on a fixed-seed sample of random pairs. The result is the
 * column space of (1/p!) Σ ε(σ) ρ(σ), reduced to echelon form.
 */
inline std::vector<exactlin::SparseVec<std::size_t>> antiinvariant_basis(const Action& action, std::size_t dim, int p)
{
    using exactlin::SparseMatrix;
    auto check_shape = [&](const SparseMatrix& m) {
        if (m.rows() != dim || m.cols() != dim)
            throw Error("action matrix has wrong shape");
    };
    auto perms = all_permutations(p);
    std::map<Permutation, SparseMatrix> rho;
    for (const auto& s : perms) {
        rho.emplace(s, action(s));
        check_shape(rho.at(s));
    }
    auto check_pair = [&](const Permutation& s, const Permutation& t) {
        if (!(rho.at(s) * rho.at(t) == rho.at(compose(s, t))))
            throw Error("action is not a representation");
    };
    if (!(rho.at(Permutation::identity(p)) == SparseMatrix::identity(dim)))
        throw Error("action is not a representation");
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j)
            check_pair(Permutation::transposition(p, i, i + 1), Permutation::transposition(p, j, j + 1));
    std::mt19937 rng(20240607u);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int k = 0; k < 16; ++k)
        check_pair(perms[pick(rng)], perms[pick(rng)]);

    SparseMatrix proj(dim, dim);
    for (const auto& [s, m] : rho)
        proj = proj + Rational(s.sign()) * m;
    proj *= Rational(1) / Rational(factorial(p));

    std::vector<exactlin::SparseVec<std::size_t>> cols(dim);
    for (const auto& [rc, v] : proj.entries())
        cols[rc.second][rc.first] = v;
    exactlin::Subspace<std::size_t> span;
    for (auto& c : cols)
        span.insert(std::move(c));
    return span.basis();
}

}  // namespace prophom::symgrp
