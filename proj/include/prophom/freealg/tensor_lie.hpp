#pragma once

#include <prophom/freealg/lie_poly.hpp>

#include <map>
#include <vector>

namespace prophom::freealg {

/// Ordered tuple of Lie basis blocks; position is significant.
using LieTensorTerm = std::vector<LieBasisWord>;

/// Ordered tuple of words, one per tensor factor.
using WordTuple = std::vector<Word>;

/**
 * Element of the multilinear part of L^{⊗q}: combination of q-tuples of Lie
 * basis words whose supports partition the ambient letter set.
 */
class TensorLiePoly
{
public:
    using Terms = std::map<LieTensorTerm, Rational>;

    TensorLiePoly() = default;
    TensorLiePoly(LetterSet ambient, std::size_t arity) : ambient_(std::move(ambient)), arity_(arity) {}

    static TensorLiePoly term(const LieTensorTerm& t, const Rational& c = 1)
    {
        LetterSet amb;
        for (const auto& b : t) {
            auto s = b.support();
            if (!disjoint(amb, s))
                throw Error("tensor blocks overlap");
            amb = set_union(amb, s);
        }
        TensorLiePoly p(amb, t.size());
        p.add_unchecked(t, c);
        return p;
    }

    /// Outer product: positions of `a` followed by positions of `b`.
    static TensorLiePoly outer(const TensorLiePoly& a, const TensorLiePoly& b)
    {
        if (!disjoint(a.ambient_, b.ambient_))
            throw Error("non-multilinear product");
        TensorLiePoly out(set_union(a.ambient_, b.ambient_), a.arity_ + b.arity_);
        for (const auto& [s, x] : a.terms_)
            for (const auto& [t, y] : b.terms_) {
                LieTensorTerm u(s);
                u.insert(u.end(), t.begin(), t.end());
                out.add_unchecked(u, x * y);
            }
        return out;
    }

    static TensorLiePoly from_lie(const LiePoly& l)
    {
        TensorLiePoly out(l.support(), 1);
        for (const auto& [b, c] : l.terms())
            out.add_unchecked({b}, c);
        return out;
    }

    const LetterSet& ambient() const { return ambient_; }
    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const LieTensorTerm& t) const
    {
        auto it = terms_.find(t);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const LieTensorTerm& t, const Rational& c)
    {
        if (t.size() != arity_)
            throw Error("tensor term has wrong arity");
        LetterSet amb;
        for (const auto& b : t) {
            auto s = b.support();
            if (!disjoint(amb, s))
                throw Error("tensor blocks overlap");
            amb = set_union(amb, s);
        }
        if (amb != ambient_)
            throw Error("tensor blocks do not partition the ambient set");
        add_unchecked(t, c);
    }

    void add_unchecked(const LieTensorTerm& t, const Rational& c)
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

    TensorLiePoly& operator+=(const TensorLiePoly& o)
    {
        if (!o.is_zero()) {
            if (is_zero() && terms_.empty() && ambient_.empty()) {
                ambient_ = o.ambient_;
                arity_ = o.arity_;
            } else if (ambient_ != o.ambient_ || arity_ != o.arity_) {
                throw Error("adding tensors of different shape");
            }
        }
        for (const auto& [t, c] : o.terms_)
            add_unchecked(t, c);
        return *this;
    }

    TensorLiePoly& operator*=(const Rational& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, c] : terms_)
            c *= s;
        return *this;
    }

    friend TensorLiePoly operator+(TensorLiePoly a, const TensorLiePoly& b) { return a += b; }
    friend TensorLiePoly operator*(const Rational& s, TensorLiePoly a) { return a *= s; }

    friend bool operator==(const TensorLiePoly& a, const TensorLiePoly& b)
    {
        if (a.is_zero() && b.is_zero())
            return true;
        return a.ambient_ == b.ambient_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    LetterSet ambient_;
    std::size_t arity_ = 0;
    Terms terms_;
};

/// (mu ⊗ id^{q-2}): brackets the first two tensor positions.
inline TensorLiePoly bracket_first_two(const TensorLiePoly& t)
{
    if (t.arity() < 2)
        throw Error("bracket needs arity at least 2");
    TensorLiePoly out(t.ambient(), t.arity() - 1);
    for (const auto& [term, c] : t.terms()) {
        LiePoly br = lie_bracket(LiePoly::basis(term[0]), LiePoly::basis(term[1]));
        for (const auto& [b, bc] : br.terms()) {
            LieTensorTerm u;
            u.reserve(term.size() - 1);
            u.push_back(b);
            u.insert(u.end(), term.begin() + 2, term.end());
            out.add_unchecked(u, c * bc);
        }
    }
    return out;
}

/// Moves the factor at position k to position perm[k] (0-based positions).
inline TensorLiePoly permute_positions(const TensorLiePoly& t, const std::vector<std::size_t>& perm)
{
    if (perm.size() != t.arity())
        throw Error("position permutation has wrong size");
    TensorLiePoly out(t.ambient(), t.arity());
    for (const auto& [term, c] : t.terms()) {
        LieTensorTerm u(term.size());
        for (std::size_t k = 0; k < term.size(); ++k)
            u[perm[k]] = term[k];
        out.add_unchecked(u, c);
    }
    return out;
}

/// Relabels every block; a linear action of letter permutations.
inline TensorLiePoly relabel_tensor(const TensorLiePoly& t, const LetterMap& m)
{
    check_bijective_on(m, t.ambient());
    LetterSet amb;
    for (Letter l : t.ambient())
        amb.push_back(apply(m, l));
    std::sort(amb.begin(), amb.end());
    TensorLiePoly out(amb, t.arity());
    for (const auto& [term, c] : t.terms()) {
        TensorLiePoly prod(LetterSet{}, 0);
        prod.add_unchecked({}, c);
        for (const auto& b : term)
            prod = TensorLiePoly::outer(prod, TensorLiePoly::from_lie(relabel_lie(LiePoly::basis(b), m)));
        out += prod;
    }
    return out;
}

/// Word-level image of a Lie tensor (each factor expanded to associative words).
inline std::map<WordTuple, Rational> expand_tensor(const TensorLiePoly& t)
{
    std::map<WordTuple, Rational> out;
    for (const auto& [term, c] : t.terms()) {
        std::vector<std::pair<WordTuple, int>> acc{{{}, 1}};
        for (const auto& b : term) {
            std::vector<std::pair<WordTuple, int>> next;
            for (const auto& [w, s] : expand_left_normed(b.word()))
                for (const auto& [tuple, ts] : acc) {
                    WordTuple u(tuple);
                    u.push_back(w);
                    next.emplace_back(std::move(u), ts * s);
                }
            acc = std::move(next);
        }
        for (auto& [tuple, s] : acc) {
            Rational& slot = out[tuple];
            slot += s > 0 ? c : Rational(-c);
        }
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

/// Factorwise strip: keeps tuples where every word starts with its minimal letter.
inline TensorLiePoly strip_tensor(const std::map<WordTuple, Rational>& x, const LetterSet& ambient, std::size_t arity)
{
    TensorLiePoly out(ambient, arity);
    for (const auto& [tuple, c] : x) {
        bool anchored = true;
        for (const auto& w : tuple)
            if (w.empty() || *std::min_element(w.begin(), w.end()) != w.front()) {
                anchored = false;
                break;
            }
        if (!anchored)
            continue;
        LieTensorTerm t;
        t.reserve(tuple.size());
        for (const auto& w : tuple)
            t.push_back(LieBasisWord::from_anchored_word(w));
        out.add_unchecked(t, c);
    }
    return out;
}

}  // namespace prophom::freealg
