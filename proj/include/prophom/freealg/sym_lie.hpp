#pragma once

#include <prophom/freealg/lie_poly.hpp>

#include <map>
#include <vector>

namespace prophom::freealg {

/// Commutative product of Lie basis blocks, blocks sorted by anchor.
using SymLieTerm = std::vector<LieBasisWord>;

inline LetterSet support_of(const SymLieTerm& t)
{
    LetterSet s;
    for (const auto& b : t) {
        auto bs = b.support();
        if (!disjoint(s, bs))
            throw Error("non-multilinear product");
        s = set_union(s, bs);
    }
    return s;
}

inline void sort_blocks(SymLieTerm& t)
{
    std::sort(t.begin(), t.end(), [](const LieBasisWord& a, const LieBasisWord& b) {
        return a.anchor < b.anchor;
    });
}

/**
 * Multilinear element of the free Poisson algebra S(L): rational combination
 * of commutative products of Lie basis words with disjoint supports.
 * The number of blocks of a term is its PBW / polynomial degree.
 */
class SymLiePoly
{
public:
    using Terms = std::map<SymLieTerm, Rational>;

    SymLiePoly() = default;
    explicit SymLiePoly(LetterSet support) : support_(std::move(support)) {}

    static SymLiePoly one()
    {
        SymLiePoly p;
        p.add_unchecked({}, 1);
        return p;
    }

    static SymLiePoly term(SymLieTerm t, const Rational& c = 1)
    {
        sort_blocks(t);
        SymLiePoly p(support_of(t));
        p.add_unchecked(t, c);
        return p;
    }

    static SymLiePoly generator(Letter l) { return term({LieBasisWord(l, {})}); }

    static SymLiePoly from_lie(const LiePoly& l)
    {
        SymLiePoly p(l.support());
        for (const auto& [b, c] : l.terms())
            p.add_unchecked({b}, c);
        return p;
    }

    const LetterSet& support() const { return support_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(SymLieTerm t) const
    {
        sort_blocks(t);
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c*t; t is sorted into canonical block order first.
    void add_term(SymLieTerm t, const Rational& c)
    {
        sort_blocks(t);
        if (support_of(t) != support_)
            throw Error("term does not match Poisson polynomial support");
        add_unchecked(t, c);
    }

    /// `t` must already be in canonical order.
    void add_unchecked(const SymLieTerm& t, const Rational& c)
    {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    /// Component of polynomial degree u (terms with exactly u blocks).
    SymLiePoly degree_part(std::size_t u) const
    {
        SymLiePoly out(support_);
        for (const auto& [t, c] : terms_)
            if (t.size() == u)
                out.add_unchecked(t, c);
        return out;
    }

    SymLiePoly& operator+=(const SymLiePoly& o)
    {
        adopt_support(o);
        for (const auto& [t, c] : o.terms_)
            add_unchecked(t, c);
        return *this;
    }

    SymLiePoly& operator-=(const SymLiePoly& o)
    {
        adopt_support(o);
        for (const auto& [t, c] : o.terms_)
            add_unchecked(t, -c);
        return *this;
    }

    SymLiePoly& operator*=(const Rational& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, c] : terms_)
            c *= s;
        return *this;
    }

    friend SymLiePoly operator+(SymLiePoly a, const SymLiePoly& b) { return a += b; }
    friend SymLiePoly operator-(SymLiePoly a, const SymLiePoly& b) { return a -= b; }
    friend SymLiePoly operator*(const Rational& s, SymLiePoly a) { return a *= s; }
    friend SymLiePoly operator-(SymLiePoly a) { return a *= Rational(-1); }

    friend bool operator==(const SymLiePoly& a, const SymLiePoly& b)
    {
        if (a.is_zero() && b.is_zero())
            return true;
        return a.support_ == b.support_ && a.terms_ == b.terms_;
    }

private:
    void adopt_support(const SymLiePoly& o)
    {
        if (support_ == o.support_ || o.is_zero())
            return;
        if (is_zero()) {
            support_ = o.support_;
            return;
        }
        throw Error("adding Poisson polynomials with different supports");
    }

    LetterSet support_;
    Terms terms_;
};

inline SymLiePoly poisson_mul(const SymLiePoly& f, const SymLiePoly& g)
{
    if (!disjoint(f.support(), g.support()))
        throw Error("non-multilinear product");
    SymLiePoly out(set_union(f.support(), g.support()));
    for (const auto& [s, a] : f.terms())
        for (const auto& [t, b] : g.terms()) {
            SymLieTerm u(s);
            u.insert(u.end(), t.begin(), t.end());
            sort_blocks(u);
            out.add_unchecked(u, a * b);
        }
    return out;
}

/// Leibniz extension of the Lie bracket to products of blocks.
inline SymLiePoly poisson_bracket(const SymLiePoly& f, const SymLiePoly& g)
{
    if (!disjoint(f.support(), g.support()))
        throw Error("non-multilinear product");
    SymLiePoly out(set_union(f.support(), g.support()));
    for (const auto& [s, a] : f.terms())
        for (const auto& [t, b] : g.terms())
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = 0; j < t.size(); ++j) {
                    LiePoly br = lie_bracket(LiePoly::basis(s[i]), LiePoly::basis(t[j]));
                    SymLieTerm rest;
                    for (std::size_t k = 0; k < s.size(); ++k)
                        if (k != i)
                            rest.push_back(s[k]);
                    for (std::size_t k = 0; k < t.size(); ++k)
                        if (k != j)
                            rest.push_back(t[k]);
                    for (const auto& [blk, c] : br.terms()) {
                        SymLieTerm u(rest);
                        u.push_back(blk);
                        sort_blocks(u);
                        out.add_unchecked(u, a * b * c);
                    }
                }
    return out;
}

/// Relabels each block through relabel_lie.
inline SymLiePoly relabel_sym(const SymLiePoly& f, const LetterMap& m)
{
    check_bijective_on(m, f.support());
    LetterSet s;
    for (Letter l : f.support())
        s.push_back(apply(m, l));
    std::sort(s.begin(), s.end());
    SymLiePoly out(s);
    for (const auto& [t, c] : f.terms()) {
        SymLiePoly prod = SymLiePoly::one();
        for (const auto& blk : t)
            prod = poisson_mul(prod, SymLiePoly::from_lie(relabel_lie(LiePoly::basis(blk), m)));
        prod *= c;
        out += prod;
    }
    return out;
}

}  // namespace prophom::freealg
