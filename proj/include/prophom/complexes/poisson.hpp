#pragma once

#include <prophom/complexes/common.hpp>
#include <prophom/symgrp/antisym.hpp>
#include <prophom/symgrp/characters.hpp>

namespace prophom::complexes {

/**
 * Spanning element of the antiinvariants in degree n, summed over unordered pair partitions:
 * p_{2m} = (1/m!) Σ_{σ ∈ Sh(2,...,2)} ε(σ) {x_σ1,x_σ2}...{x_σ(2m-1),x_σ(2m)},
 * p_{2m+1} = (1/m!) Σ_{σ ∈ Sh(1,2,...,2)} ε(σ) x_σ1 {x_σ2,x_σ3}..., p_0 = 1.
 * With `per_shuffle` the 1/m! is dropped.
 */
inline SymLiePoly poisson_element(int n, bool per_shuffle = false)
{
    if (n < 0)
        throw Error("negative degree");
    if (n == 0)
        return SymLiePoly::one();
    std::vector<int> blocks;
    if (n % 2 == 1)
        blocks.push_back(1);
    for (int k = 0; k < n / 2; ++k)
        blocks.push_back(2);
    SymLiePoly out(letter_range(1, n));
    for (const auto& s : symgrp::shuffles(blocks)) {
        SymLieTerm t;
        int pos = 1;
        for (int len : blocks) {
            if (len == 1)
                t.emplace_back(s(pos), Word{});
            else
                t.emplace_back(s(pos), Word{s(pos + 1)});
            pos += len;
        }
        freealg::sort_blocks(t);
        out.add_unchecked(t, s.sign());
    }
    if (!per_shuffle)
        out *= Rational(1, symgrp::factorial(n / 2));
    return out;
}

namespace detail {

inline constexpr Letter placeholder_letter = 1 << 20;

/// Image of a Lie basis block under a letter map, with the placeholder replaced by [x_i, x_j].
inline LiePoly map_block(const LieBasisWord& b, const LetterMap& m, Letter i, Letter j)
{
    AssocPoly a = freealg::relabel(freealg::expand_lie_to_assoc(LiePoly::basis(b)), m);
    if (std::find(a.support().begin(), a.support().end(), placeholder_letter) != a.support().end())
        a = freealg::substitute(a, placeholder_letter,
                                freealg::commutator(AssocPoly::letter(i), AssocPoly::letter(j)));
    return freealg::strip_to_lie(a);
}

/// P(y_1 ← {x_i,x_j}, y_{k+1} ← k-th remaining x) for P on letters 1..n-1.
inline SymLiePoly insert_bracket(const SymLiePoly& p, int n, Letter i, Letter j)
{
    LetterMap m{{1, placeholder_letter}};
    Letter k = 2;
    for (Letter x = 1; x <= n; ++x)
        if (x != i && x != j)
            m[k++] = x;
    SymLiePoly out(letter_range(1, n));
    for (const auto& [t, c] : p.terms()) {
        SymLiePoly prod = SymLiePoly::one();
        for (const auto& b : t)
            prod = freealg::poisson_mul(prod, SymLiePoly::from_lie(map_block(b, m, i, j)));
        prod *= c;
        out += prod;
    }
    return out;
}

/// P(y_k ← k-th x other than x_i).
inline SymLiePoly skip_letter(const SymLiePoly& p, int n, Letter i)
{
    LetterMap m;
    Letter k = 1;
    for (Letter x = 1; x <= n; ++x)
        if (x != i)
            m[k++] = x;
    return freealg::relabel_sym(p, m);
}

}  // namespace detail

/**
 * Associated graded differential on S(L)-valued cochains in letters 1..n-1.
 * ε = ε': Σ_{i<j} (-1)^{i+j+1} P({x_i,x_j}, rest) + ε Σ (-1)^i {x_i, P(rest)} (degree preserved).
 * ε ≠ ε': (ε' - ε) Σ (-1)^{i+1} x_i P(rest) (degree raised by one).
 */
inline SymLiePoly graded_differential(int eps, int epsp, const SymLiePoly& p, int n_in)
{
    const int n = n_in + 1;
    SymLiePoly out(letter_range(1, n));
    if (eps == epsp) {
        for (Letter i = 1; i <= n; ++i)
            for (Letter j = i + 1; j <= n; ++j) {
                SymLiePoly t = detail::insert_bracket(p, n, i, j);
                t *= Rational((i + j + 1) % 2 == 0 ? 1 : -1);
                out += t;
            }
        if (eps)
            for (Letter i = 1; i <= n; ++i) {
                SymLiePoly t = freealg::poisson_bracket(SymLiePoly::generator(i), detail::skip_letter(p, n, i));
                t *= Rational(i % 2 == 0 ? 1 : -1);
                out += t;
            }
        return out;
    }
    const int orient = epsp - eps;
    for (Letter i = 1; i <= n; ++i) {
        SymLiePoly t = freealg::poisson_mul(SymLiePoly::generator(i), detail::skip_letter(p, n, i));
        t *= Rational(orient * (i % 2 == 0 ? -1 : 1));
        out += t;
    }
    return out;
}

/// Multilinear basis of S^u(L) in letters 1..n.
inline std::vector<SymLieTerm> symmetric_lie_basis(int n, int u)
{
    std::vector<SymLieTerm> out;
    if (n == 0) {
        if (u == 0)
            out.emplace_back();
        return out;
    }
    for (const auto& partition : symgrp::set_partitions(letter_range(1, n), u)) {
        std::vector<SymLieTerm> acc{SymLieTerm{}};
        for (const auto& block : partition) {
            std::vector<SymLieTerm> next;
            auto basis = freealg::lie_basis(block);
            for (const auto& prefix : acc)
                for (const auto& b : basis) {
                    SymLieTerm t(prefix);
                    t.push_back(b);
                    next.push_back(std::move(t));
                }
            acc = std::move(next);
        }
        for (auto& t : acc)
            out.push_back(std::move(t));
    }
    return out;
}

/// Dimension of the sign-isotypic part of S^u(L)_{[1,n]}, from traces on conjugacy classes.
inline Integer antiinvariant_symmetric_dim(int n, int u)
{
    auto basis = symmetric_lie_basis(n, u);
    if (n == 0)
        return Integer(basis.size());
    std::map<symgrp::IntPartition, Rational> traces;
    for (const auto& mu : symgrp::integer_partitions(n)) {
        auto g = symgrp::class_representative(mu);
        LetterMap m;
        for (int i = 1; i <= n; ++i)
            m[i] = g(i);
        Rational tr = 0;
        for (const auto& t : basis) {
            // only terms whose set of block supports g permutes can map to themselves
            std::vector<LetterSet> supports, images;
            for (const auto& b : t) {
                supports.push_back(b.support());
                LetterSet img;
                for (Letter l : supports.back())
                    img.push_back(g(l));
                std::sort(img.begin(), img.end());
                images.push_back(std::move(img));
            }
            std::sort(supports.begin(), supports.end());
            std::sort(images.begin(), images.end());
            const bool stable = supports == images;
            if (!stable)
                continue;
            // g maps each block onto the block with the image support
            Rational c = 1;
            for (const auto& b : t) {
                Word img;
                for (Letter l : b.word())
                    img.push_back(g(l));
                LetterSet s = freealg::support_of(img);
                auto target = std::find_if(t.begin(), t.end(), [&](const LieBasisWord& o) { return o.support() == s; });
                c *= freealg::left_normed(img).coeff(*target);
                if (sgn(c) == 0)
                    break;
            }
            tr += c;
        }
        traces[mu] = tr;
    }
    auto mult = symgrp::multiplicities(traces, n);
    return mult.at(symgrp::IntPartition(std::vector<int>(n, 1)));
}

/// Symmetric degree u at which P^n is concentrated.
inline int poisson_grading(int n)
{
    return n % 2 == 0 ? n / 2 : (n + 1) / 2;
}

/// Dimensions dim P^n[u] for n = 0..nmax, u = 0..n.
struct GradingSupport
{
    std::vector<std::vector<Integer>> dims;
    bool holds = false;  // 1-dimensional exactly at u = poisson_grading(n)
};

inline GradingSupport grading_support(int nmax)
{
    GradingSupport out;
    out.holds = true;
    for (int n = 0; n <= nmax; ++n) {
        std::vector<Integer> row;
        for (int u = 0; u <= n; ++u) {
            row.push_back(antiinvariant_symmetric_dim(n, u));
            if (row.back() != (u == poisson_grading(n) ? 1 : 0))
                out.holds = false;
        }
        out.dims.push_back(std::move(row));
    }
    return out;
}

struct PoissonGraded
{
    ComplexWindow window;
    std::vector<Rational> mu;  // gr d(p_n) = mu[n] p_{n+1}
    bool elements_nonzero = false;
    bool elements_graded = false;        // p_n has exactly poisson_grading(n) blocks per term
    bool elements_antiinvariant = false; // each adjacent transposition acts by -1
};

/// Graded Poisson complex on degrees 0..pmax spanned by the p_n, with d read off from gr d(p_n).
inline PoissonGraded build_poisson_graded(int eps, int epsp, int pmax)
{
    if ((eps != 0 && eps != 1) || (epsp != 0 && epsp != 1))
        throw Error("ε and ε' must be 0 or 1");
    PoissonGraded out;
    out.window = ComplexWindow("poisson_graded(" + std::to_string(eps) + "," + std::to_string(epsp) + ")", 0, pmax, 1,
                               true, false);
    out.elements_nonzero = out.elements_graded = out.elements_antiinvariant = true;
    std::vector<SymLiePoly> elements;
    for (int n = 0; n <= pmax; ++n) {
        elements.push_back(poisson_element(n));
        const SymLiePoly& e = elements.back();
        if (e.is_zero())
            out.elements_nonzero = false;
        for (const auto& [t, c] : e.terms())
            if (static_cast<int>(t.size()) != poisson_grading(n))
                out.elements_graded = false;
        for (Letter i = 1; i < n; ++i) {
            LetterMap swap;
            for (Letter l = 1; l <= n; ++l)
                swap[l] = l == i ? i + 1 : l == i + 1 ? i : l;
            SymLiePoly neg = e;
            neg *= Rational(-1);
            if (!(freealg::relabel_sym(e, swap) == neg))
                out.elements_antiinvariant = false;
        }
        out.window.set_space(n, std::vector<std::string>{"p" + std::to_string(n)});
    }
    for (int n = 0; n < pmax; ++n) {
        SymLiePoly image = graded_differential(eps, epsp, elements[n], n);
        const SymLiePoly& target = elements[n + 1];
        Rational scalar = 0;
        if (!image.is_zero()) {
            const auto& [t, c] = *image.terms().begin();
            Rational tc = target.coeff(t);
            if (sgn(tc) == 0)
                throw Error("1-dimensionality violated");
            scalar = c / tc;
        }
        SymLiePoly expected = target;
        expected *= scalar;
        if (!(image == expected))
            throw Error("1-dimensionality violated");
        out.mu.push_back(scalar);
        SparseMatrix d(1, 1);
        d.set(0, 0, scalar);
        out.window.set_differential(n, std::move(d));
    }
    return out;
}

}  // namespace prophom::complexes
