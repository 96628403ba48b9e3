#pragma once

#include <prophom/freealg/sym_lie.hpp>

#include <map>

namespace prophom::freealg {

/// Coordinates of an associative element in the ordered PBW basis, split by degree.
struct PbwDecomposition
{
    /// degree u -> component with u Lie blocks per term (only nonzero components kept).
    std::map<std::size_t, SymLiePoly> by_degree;

    bool is_zero() const { return by_degree.empty(); }

    /// Filtration degree; -1 for the zero element.
    long degree() const { return by_degree.empty() ? -1 : static_cast<long>(by_degree.rbegin()->first); }

    SymLiePoly component(std::size_t u) const
    {
        auto it = by_degree.find(u);
        return it == by_degree.end() ? SymLiePoly() : it->second;
    }

    /// Top graded component (the principal symbol in S(L)).
    SymLiePoly symbol() const { return by_degree.empty() ? SymLiePoly() : by_degree.rbegin()->second; }
};

namespace detail {

/**
 * Rewrites words in the ordered PBW basis (blocks ascending by anchor).
 *
 * A word x1...xn is processed right to left: each letter is multiplied onto
 * the left of an already ordered monomial B1...Bk and moved right past every
 * block with a smaller anchor via x B = B x + [x, B]. Results are memoized per
 * word suffix.
 */
class Straightener
{
public:
    using Result = std::map<SymLieTerm, Rational>;

    const Result& word(const Word& w) { return suffix(w, 0); }

private:
    const Result& suffix(const Word& w, std::size_t from)
    {
        Word key(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Result out;
        if (from == w.size()) {
            out.emplace(SymLieTerm{}, 1);
        } else {
            const LieBasisWord x(w[from], {});
            for (const auto& [t, c] : suffix(w, from + 1))
                left_multiply(out, x, t, 0, c);
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

    /// Adds c * b * (t[from..]) in ordered form to `out`, with the ordered prefix t[0..from) kept in front.
    void left_multiply(Result& out, const LieBasisWord& b, const SymLieTerm& t, std::size_t from, const Rational& c)
    {
        if (from == t.size() || b.anchor < t[from].anchor) {
            SymLieTerm u;
            u.reserve(t.size() + 1);
            u.insert(u.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(from));
            u.push_back(b);
            u.insert(u.end(), t.begin() + static_cast<std::ptrdiff_t>(from), t.end());
            add(out, u, c);
            return;
        }
        // b B = B b + [b, B]; B stays in front of everything b produces.
        left_multiply(out, b, t, from + 1, c);
        for (const auto& [blk, bc] : bracket(b, t[from]).terms()) {
            // [b, B] has anchor B.anchor, smaller than every later block
            SymLieTerm u;
            u.reserve(t.size());
            u.insert(u.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(from));
            u.push_back(blk);
            u.insert(u.end(), t.begin() + static_cast<std::ptrdiff_t>(from) + 1, t.end());
            add(out, u, c * bc);
        }
    }

    const LiePoly& bracket(const LieBasisWord& a, const LieBasisWord& b)
    {
        auto key = std::make_pair(a, b);
        if (auto it = brackets_.find(key); it != brackets_.end())
            return it->second;
        return brackets_.emplace(key, lie_bracket(LiePoly::basis(a), LiePoly::basis(b))).first->second;
    }

    static void add(Result& into, const SymLieTerm& t, const Rational& c)
    {
        auto [it, inserted] = into.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                into.erase(it);
        }
    }

    std::map<Word, Result> memo_;
    std::map<std::pair<LieBasisWord, LieBasisWord>, LiePoly> brackets_;
};

}  // namespace detail

/**
 * Writes `p` in the PBW basis of ordered products of Lie basis words
 * (blocks ascending by anchor) by repeated x*y = y*x + [x,y] straightening.
 * Filtration degree u collects the products of exactly u blocks.
 */
inline PbwDecomposition pbw_decompose(const AssocPoly& p)
{
    detail::Straightener s;
    std::map<SymLieTerm, Rational> total;
    for (const auto& [w, c] : p.terms()) {
        for (const auto& [t, tc] : s.word(w)) {
            Rational& slot = total[t];
            slot += c * tc;
        }
    }
    PbwDecomposition out;
    for (const auto& [t, c] : total) {
        if (sgn(c) == 0)
            continue;
        auto [it, inserted] = out.by_degree.try_emplace(t.size(), p.support());
        it->second.add_unchecked(t, c);
    }
    return out;
}

}  // namespace prophom::freealg
