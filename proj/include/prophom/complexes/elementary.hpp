#pragma once

#include <prophom/complexes/common.hpp>
#include <prophom/symgrp/permutation.hpp>

#include <random>

namespace prophom::complexes {

/// Sign of a word read as a permutation of its sorted letters.
inline int word_sign(const Word& w)
{
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[j] < w[i])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// e_p = Σ_π ε(π) x_π(1)...x_π(p) on letters 1..p.
inline AssocPoly elementary_element(int p)
{
    AssocPoly e(letter_range(1, p));
    Word w = letter_range(1, p);
    do {
        e.add_unchecked(w, word_sign(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return e;
}

/**
 * The differential of the elementary complex E_{ε,ε'} applied to a cochain E(x_1..x_p):
 * bracket insertion Σ_{i<j} (-1)^{i+j+1} E([x_i,x_j], rest)
 * plus ε Σ (-1)^i x_i E(rest) plus ε' Σ (-1)^{i+1} E(rest) x_i.
 */
inline AssocPoly elementary_differential(int eps, int epsp, const AssocPoly& e, int p)
{
    if (!e.is_zero() && e.support() != letter_range(1, p))
        throw Error("cochain must be multilinear in letters 1..p");
    const int n = p + 1;
    AssocPoly out(letter_range(1, n));
    auto rest_map = [&](std::vector<int> skip, int offset) {
        // letter k of the cochain ↦ the (k - offset)-th x not in skip
        std::vector<Letter> m(p + 1, 0);
        int k = offset + 1;
        for (int x = 1; x <= n; ++x)
            if (std::find(skip.begin(), skip.end(), x) == skip.end())
                m[k++] = x;
        return m;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto m = rest_map({i, j}, 1);
            const int sign = (i + j + 1) % 2 == 0 ? 1 : -1;
            for (const auto& [w, c] : e.terms()) {
                Word a, b;
                for (Letter l : w) {
                    if (l == 1) {
                        a.push_back(i), a.push_back(j);
                        b.push_back(j), b.push_back(i);
                    } else {
                        a.push_back(m[l]), b.push_back(m[l]);
                    }
                }
                out.add_unchecked(a, sign * c);
                out.add_unchecked(b, -sign * c);
            }
        }
    for (int i = 1; i <= n; ++i) {
        auto m = rest_map({i}, 0);
        for (const auto& [w, c] : e.terms()) {
            Word body;
            for (Letter l : w)
                body.push_back(m[l]);
            if (eps) {
                Word u{i};
                u.insert(u.end(), body.begin(), body.end());
                out.add_unchecked(u, (i % 2 == 0 ? 1 : -1) * c);
            }
            if (epsp) {
                Word u(body);
                u.push_back(i);
                out.add_unchecked(u, (i % 2 == 0 ? -1 : 1) * c);
            }
        }
    }
    return out;
}

namespace detail {

/// Coefficient of the word u (letters 1..p+1) in d(e_p), read off without expanding d(e_p).
inline long elementary_coefficient(int eps, int epsp, const Word& u)
{
    const int n = static_cast<int>(u.size());
    long total = 0;
    Word collapsed;
    for (int k = 0; k + 1 < n; ++k) {
        const int a = u[k], b = u[k + 1];
        const int i = std::min(a, b), j = std::max(a, b);
        // y_1 stands for the bracketed pair, the other letters keep their relative order
        collapsed.clear();
        for (int t = 0; t < n; ++t) {
            if (t == k + 1)
                continue;
            if (t == k) {
                collapsed.push_back(0);
                continue;
            }
            collapsed.push_back(u[t]);
        }
        const int sign = ((i + j + 1) % 2 == 0 ? 1 : -1) * (a < b ? 1 : -1);
        total += sign * word_sign(collapsed);
    }
    if (n >= 1) {
        if (eps) {
            Word rest(u.begin() + 1, u.end());
            total += (u.front() % 2 == 0 ? 1 : -1) * word_sign(rest);
        }
        if (epsp) {
            Word rest(u.begin(), u.end() - 1);
            total += (u.back() % 2 == 0 ? -1 : 1) * word_sign(rest);
        }
    }
    return total;
}

}  // namespace detail

/// The scalars λ_p with d(e_p) = λ_p e_{p+1}.
struct ElementaryScalars
{
    int eps = 0;
    int epsp = 0;
    std::vector<Rational> lambda;
};

inline constexpr int elementary_exhaustive_letters = 9;
inline constexpr int elementary_samples = 4000;

/**
 * Computes λ_0..λ_pmax. Proportionality d(e_p) ∝ e_{p+1} is checked on every word up to
 * elementary_exhaustive_letters letters and on a fixed pseudo-random sample of words beyond.
 */
inline ElementaryScalars build_elementary(int eps, int epsp, int pmax)
{
    if ((eps != 0 && eps != 1) || (epsp != 0 && epsp != 1))
        throw Error("ε and ε' must be 0 or 1");
    if (pmax < 0)
        throw Error("pmax must be nonnegative");
    ElementaryScalars out{eps, epsp, {}};
    std::mt19937 rng(20240611);
    for (int p = 0; p <= pmax; ++p) {
        const int n = p + 1;
        Word id = letter_range(1, n);
        const long lambda = detail::elementary_coefficient(eps, epsp, id);
        auto check = [&](const Word& u) {
            if (detail::elementary_coefficient(eps, epsp, u) != lambda * word_sign(u))
                throw Error("1-dimensionality violated");
        };
        if (n <= elementary_exhaustive_letters) {
            Word u(id);
            do {
                check(u);
            } while (std::next_permutation(u.begin(), u.end()));
        } else {
            Word u(id);
            for (int s = 0; s < elementary_samples; ++s) {
                std::shuffle(u.begin(), u.end(), rng);
                check(u);
            }
        }
        out.lambda.emplace_back(lambda);
    }
    return out;
}

/// One-dimension-per-degree cochain window on degrees 0..pmax with d_p = λ_p.
inline ComplexWindow elementary_window(const ElementaryScalars& s)
{
    const int pmax = static_cast<int>(s.lambda.size()) - 1;
    ComplexWindow w("elementary(" + std::to_string(s.eps) + "," + std::to_string(s.epsp) + ")", 0, pmax, 1, true,
                    false);
    for (int p = 0; p <= pmax; ++p)
        w.set_space(p, std::vector<std::string>{"e" + std::to_string(p)});
    for (int p = 0; p < pmax; ++p) {
        SparseMatrix d(1, 1);
        d.set(0, 0, s.lambda[p]);
        w.set_differential(p, std::move(d));
    }
    return w;
}

}  // namespace prophom::complexes
