#pragma once

#include <prophom/freealg/assoc_poly.hpp>

#include <compare>
#include <map>

namespace prophom::freealg {

/**
 * Basis element of the multilinear free Lie algebra on a letter set S: the
 * left-normed bracket [[..[x_anchor, x_t1], x_t2].., x_tk] with
 * anchor = min(S) and tail a word on the remaining letters.
 *
 * The (|S|-1)! tails index a basis; the associative words starting with the
 * anchor are in bijection with these basis elements.
 */
struct LieBasisWord
{
    Letter anchor = 0;
    Word tail;

    LieBasisWord() = default;
    LieBasisWord(Letter a, Word t) : anchor(a), tail(std::move(t))
    {
        if (anchor <= 0)
            throw Error("anchor must be a positive letter");
        for (Letter l : tail)
            if (l <= anchor)
                throw Error("tail letters must exceed the anchor");
        (void)support_of(tail);
    }

    /// Reads a word that starts with its minimal letter.
    static LieBasisWord from_anchored_word(const Word& w)
    {
        if (w.empty())
            throw Error("empty Lie word");
        return LieBasisWord(w.front(), Word(w.begin() + 1, w.end()));
    }

    Word word() const
    {
        Word w;
        w.reserve(tail.size() + 1);
        w.push_back(anchor);
        w.insert(w.end(), tail.begin(), tail.end());
        return w;
    }

    LetterSet support() const { return support_of(word()); }
    std::size_t size() const { return tail.size() + 1; }

    auto operator<=>(const LieBasisWord&) const = default;
    bool operator==(const LieBasisWord&) const = default;
};

/// Multilinear element of the free Lie algebra in the left-normed min-anchored basis.
class LiePoly
{
public:
    using Terms = std::map<LieBasisWord, Rational>;

    LiePoly() = default;
    explicit LiePoly(LetterSet support) : support_(std::move(support)) {}

    static LiePoly generator(Letter l) { return basis(LieBasisWord(l, {})); }

    static LiePoly basis(const LieBasisWord& b, const Rational& c = 1)
    {
        LiePoly p(b.support());
        p.add_term(b, c);
        return p;
    }

    const LetterSet& support() const { return support_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const LieBasisWord& b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const LieBasisWord& b, const Rational& c)
    {
        if (b.support() != support_)
            throw Error("basis word does not match Lie polynomial support");
        add_unchecked(b, c);
    }

    void add_unchecked(const LieBasisWord& b, const Rational& c)
    {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    LiePoly& operator+=(const LiePoly& o)
    {
        adopt_support(o);
        for (const auto& [b, c] : o.terms_)
            add_unchecked(b, c);
        return *this;
    }

    LiePoly& operator-=(const LiePoly& o)
    {
        adopt_support(o);
        for (const auto& [b, c] : o.terms_)
            add_unchecked(b, -c);
        return *this;
    }

    LiePoly& operator*=(const Rational& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_)
            c *= s;
        return *this;
    }

    friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
    friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
    friend LiePoly operator*(const Rational& s, LiePoly a) { return a *= s; }
    friend LiePoly operator-(LiePoly a) { return a *= Rational(-1); }

    friend bool operator==(const LiePoly& a, const LiePoly& b)
    {
        if (a.is_zero() && b.is_zero())
            return true;
        return a.support_ == b.support_ && a.terms_ == b.terms_;
    }

private:
    void adopt_support(const LiePoly& o)
    {
        if (support_ == o.support_ || o.is_zero())
            return;
        if (is_zero()) {
            support_ = o.support_;
            return;
        }
        throw Error("adding Lie polynomials with different supports");
    }

    LetterSet support_;
    Terms terms_;
};

/// Canonical embedding L -> A (iterated commutators).
inline AssocPoly expand_lie_to_assoc(const LiePoly& l)
{
    AssocPoly out(l.support());
    for (const auto& [b, c] : l.terms())
        for (const auto& [w, sign] : expand_left_normed(b.word()))
            out.add_unchecked(w, sign > 0 ? c : Rational(-c));
    return out;
}

/**
 * Left inverse of expand_lie_to_assoc: keeps the words starting with `m`
 * and reads each as the basis word with tail = the rest of the word.
 * Only meaningful on Lie elements; `m` must be the minimal support letter.
 */
inline LiePoly strip_to_lie(const AssocPoly& p, Letter m)
{
    if (p.support().empty() || p.support().front() != m)
        throw Error("strip letter is not the minimal letter of the support");
    LiePoly out(p.support());
    for (const auto& [w, c] : p.terms())
        if (w.front() == m)
            out.add_unchecked(LieBasisWord(m, Word(w.begin() + 1, w.end())), c);
    return out;
}

inline LiePoly strip_to_lie(const AssocPoly& p)
{
    if (p.support().empty())
        throw Error("cannot strip an element with empty support");
    return strip_to_lie(p, p.support().front());
}

/// Left-normed bracket of an arbitrary word, in the canonical basis.
inline LiePoly left_normed(const Word& w)
{
    LiePoly out(support_of(w));
    if (w.empty())
        return out;
    const Letter m = out.support().front();
    for (const auto& [word, sign] : expand_left_normed(w))
        if (word.front() == m)
            out.add_unchecked(LieBasisWord::from_anchored_word(word), sign);
    return out;
}

inline LiePoly lie_bracket(const LiePoly& a, const LiePoly& b)
{
    if (!disjoint(a.support(), b.support()))
        throw Error("non-multilinear product");
    if (a.is_zero() || b.is_zero())
        return LiePoly(set_union(a.support(), b.support()));
    return strip_to_lie(commutator(expand_lie_to_assoc(a), expand_lie_to_assoc(b)));
}

/// Linear S_n action: expand, relabel words, strip at the new minimal letter.
inline LiePoly relabel_lie(const LiePoly& l, const LetterMap& m)
{
    check_bijective_on(m, l.support());
    if (l.support().empty())
        return l;
    return strip_to_lie(relabel(expand_lie_to_assoc(l), m));
}

/// All (|S|-1)! basis words on a letter set, tails in lexicographic order.
inline std::vector<LieBasisWord> lie_basis(const LetterSet& s)
{
    std::vector<LieBasisWord> out;
    if (s.empty())
        return out;
    Word tail(s.begin() + 1, s.end());
    do {
        out.emplace_back(s.front(), tail);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

}  // namespace prophom::freealg
