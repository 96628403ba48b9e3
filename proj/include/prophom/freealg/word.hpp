#pragma once

#include <prophom/core/rational.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace prophom::freealg {

/// Generator label. Positive; 0 is never a valid letter.
using Letter = int;

/// Ordered sequence of distinct letters.
using Word = std::vector<Letter>;

/// Sorted, duplicate-free set of letters.
using LetterSet = std::vector<Letter>;

/// Relabeling of letters. Must be injective on the support it is applied to.
using LetterMap = std::map<Letter, Letter>;

inline LetterSet support_of(const Word& w)
{
    LetterSet s(w);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw Error("repeated letter in multilinear word");
    for (Letter l : s)
        if (l <= 0)
            throw Error("letters must be positive");
    return s;
}

inline bool disjoint(const LetterSet& a, const LetterSet& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

inline LetterSet set_union(const LetterSet& a, const LetterSet& b)
{
    LetterSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline LetterSet set_minus(const LetterSet& a, const LetterSet& b)
{
    LetterSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Word concat(const Word& a, const Word& b)
{
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline Letter apply(const LetterMap& m, Letter l)
{
    auto it = m.find(l);
    if (it == m.end())
        throw Error("letter map undefined on letter " + std::to_string(l));
    return it->second;
}

/// Throws unless `m` is defined and injective on `support`.
inline void check_bijective_on(const LetterMap& m, const LetterSet& support)
{
    LetterSet images;
    images.reserve(support.size());
    for (Letter l : support)
        images.push_back(apply(m, l));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        throw Error("letter map is not a bijection on the support");
    for (Letter l : images)
        if (l <= 0)
            throw Error("letter map produces a non-positive letter");
}

inline Word relabel(const Word& w, const LetterMap& m)
{
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = apply(m, w[i]);
    return out;
}

/// Composite letter map (outer after inner).
inline LetterMap compose(const LetterMap& outer, const LetterMap& inner)
{
    LetterMap out;
    for (const auto& [from, to] : inner)
        out[from] = apply(outer, to);
    return out;
}

/// Associative expansion of the left-normed bracket [[..[w0,w1],w2]..,wn].
/// The 2^(n-1) resulting words are distinct; each carries sign (-1)^(#letters put on the left).
inline std::vector<std::pair<Word, int>> expand_left_normed(const Word& w)
{
    std::vector<std::pair<Word, int>> out;
    if (w.empty())
        return out;
    const std::size_t tail = w.size() - 1;
    out.reserve(std::size_t{1} << tail);
    for (std::size_t mask = 0; mask < (std::size_t{1} << tail); ++mask) {
        Word left, right;
        for (std::size_t k = 0; k < tail; ++k) {
            if (mask & (std::size_t{1} << k))
                left.push_back(w[k + 1]);
            else
                right.push_back(w[k + 1]);
        }
        Word word;
        word.reserve(w.size());
        word.insert(word.end(), left.rbegin(), left.rend());
        word.push_back(w[0]);
        word.insert(word.end(), right.begin(), right.end());
        out.emplace_back(std::move(word), (left.size() % 2 == 0) ? 1 : -1);
    }
    return out;
}

}  // namespace prophom::freealg
