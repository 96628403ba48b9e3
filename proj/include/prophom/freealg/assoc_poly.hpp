#pragma once

#include <prophom/freealg/word.hpp>

#include <map>
#include <utility>

namespace prophom::freealg {

/**
 * Multilinear element of a free associative algebra: a rational combination
 * of words that all use exactly the letters of `support()` once each.
 *
 * The empty support holds the scalars; its only word is the empty word.
 */
class AssocPoly
{
public:
    using Terms = std::map<Word, Rational>;

    AssocPoly() = default;
    explicit AssocPoly(LetterSet support) : support_(std::move(support)) {}

    static AssocPoly unit() { return monomial({}); }

    static AssocPoly monomial(const Word& w, const Rational& c = 1)
    {
        AssocPoly p(support_of(w));
        p.add_term(w, c);
        return p;
    }

    static AssocPoly letter(Letter l) { return monomial({l}); }

    const LetterSet& support() const { return support_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c*w. The word must use exactly the support letters.
    void add_term(const Word& w, const Rational& c)
    {
        if (w.size() != support_.size() || support_of(w) != support_)
            throw Error("word does not match polynomial support");
        add_unchecked(w, c);
    }

    /// Hot-path variant of add_term for callers that build words from the support.
    void add_unchecked(const Word& w, const Rational& c)
    {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    AssocPoly& operator+=(const AssocPoly& o)
    {
        adopt_support(o);
        for (const auto& [w, c] : o.terms_)
            add_unchecked(w, c);
        return *this;
    }

    AssocPoly& operator-=(const AssocPoly& o)
    {
        adopt_support(o);
        for (const auto& [w, c] : o.terms_)
            add_unchecked(w, -c);
        return *this;
    }

    AssocPoly& operator*=(const Rational& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_)
            c *= s;
        return *this;
    }

    friend AssocPoly operator+(AssocPoly a, const AssocPoly& b) { return a += b; }
    friend AssocPoly operator-(AssocPoly a, const AssocPoly& b) { return a -= b; }
    friend AssocPoly operator*(const Rational& s, AssocPoly a) { return a *= s; }
    friend AssocPoly operator-(AssocPoly a) { return a *= Rational(-1); }

    friend bool operator==(const AssocPoly& a, const AssocPoly& b)
    {
        if (a.is_zero() && b.is_zero())
            return true;
        return a.support_ == b.support_ && a.terms_ == b.terms_;
    }

private:
    void adopt_support(const AssocPoly& o)
    {
        if (support_ == o.support_)
            return;
        if (o.is_zero())
            return;
        if (is_zero()) {
            support_ = o.support_;
            return;
        }
        throw Error("adding polynomials with different supports");
    }

    LetterSet support_;
    Terms terms_;
};

/// Concatenation product; supports must be disjoint.
inline AssocPoly assoc_mul(const AssocPoly& p, const AssocPoly& q)
{
    if (!disjoint(p.support(), q.support()))
        throw Error("non-multilinear product");
    AssocPoly out(set_union(p.support(), q.support()));
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms())
            out.add_unchecked(concat(u, v), a * b);
    return out;
}

inline AssocPoly commutator(const AssocPoly& p, const AssocPoly& q)
{
    return assoc_mul(p, q) - assoc_mul(q, p);
}

inline AssocPoly relabel(const AssocPoly& p, const LetterMap& m)
{
    check_bijective_on(m, p.support());
    LetterSet s;
    for (Letter l : p.support())
        s.push_back(apply(m, l));
    std::sort(s.begin(), s.end());
    AssocPoly out(std::move(s));
    for (const auto& [w, c] : p.terms())
        out.add_unchecked(relabel(w, m), c);
    return out;
}

/**
 * Replaces the letter `target` by the polynomial `replacement` in every word
 * of `p`. Multilinearity requires the replacement letters to be disjoint from
 * the remaining support of `p`.
 */
inline AssocPoly substitute(const AssocPoly& p, Letter target, const AssocPoly& replacement)
{
    LetterSet rest = set_minus(p.support(), {target});
    if (rest.size() == p.support().size())
        throw Error("substituted letter not in support");
    if (!disjoint(rest, replacement.support()))
        throw Error("non-multilinear product");
    AssocPoly out(set_union(rest, replacement.support()));
    for (const auto& [w, c] : p.terms()) {
        auto pos = std::find(w.begin(), w.end(), target);
        for (const auto& [r, rc] : replacement.terms()) {
            Word nw;
            nw.reserve(w.size() + r.size());
            nw.insert(nw.end(), w.begin(), pos);
            nw.insert(nw.end(), r.begin(), r.end());
            nw.insert(nw.end(), pos + 1, w.end());
            out.add_unchecked(nw, c * rc);
        }
    }
    return out;
}

}  // namespace prophom::freealg
