#pragma once

#include <prophom/complexes/common.hpp>
#include <prophom/symgrp/permutation.hpp>

namespace prophom::complexes {

/**
 * Signed-orbit basis of the S_p-antiinvariant words in a fixed letter set, where S_p permutes
 * the x-letters first_x..first_x+p-1 and fixes the rest. Representatives are the words whose
 * x-letters appear in increasing order; basis vector k is Σ_π ε(π) π·reps[k].
 */
class OrbitBasis
{
public:
    OrbitBasis() = default;

    /// All words on `fixed` ∪ {x letters} with the x-letters increasing.
    OrbitBasis(const LetterSet& fixed, Letter first_x, int p) : first_x_(first_x), p_(p)
    {
        Word pattern(fixed);
        pattern.insert(pattern.end(), p, 0);
        std::sort(pattern.begin(), pattern.end());
        do {
            Word w(pattern);
            Letter next = first_x;
            for (auto& l : w)
                if (l == 0)
                    l = next++;
            index_.emplace(w, reps_.size());
            reps_.push_back(std::move(w));
        } while (std::next_permutation(pattern.begin(), pattern.end()));
    }

    std::size_t size() const { return reps_.size(); }
    const std::vector<Word>& reps() const { return reps_; }
    bool is_x(Letter l) const { return l >= first_x_ && l < first_x_ + p_; }

    /// Sorts the x-letters of w into increasing order in place; returns the sign of that sort.
    int canonicalize(Word& w) const
    {
        Word xs;
        for (Letter l : w)
            if (is_x(l))
                xs.push_back(l);
        int sign = sort_letters_with_sign(xs);
        std::size_t k = 0;
        for (auto& l : w)
            if (is_x(l))
                l = xs[k++];
        return sign;
    }

    /// Σ_π ε(π) π·reps[k].
    exactlin::SparseVec<Word> vector(std::size_t k) const
    {
        exactlin::SparseVec<Word> v;
        Word xs;
        for (Letter l = first_x_; l < first_x_ + p_; ++l)
            xs.push_back(l);
        do {
            Word w(reps_[k]);
            for (auto& l : w)
                if (is_x(l))
                    l = xs[l - first_x_];
            v.emplace(std::move(w), Rational(sign_of(xs)));
        } while (std::next_permutation(xs.begin(), xs.end()));
        return v;
    }

    /// Coefficients of an antiinvariant vector; throws unless v is exactly a combination of orbit sums.
    std::vector<Rational> coordinates(const exactlin::SparseVec<Word>& v) const
    {
        std::vector<Rational> c(reps_.size());
        std::vector<bool> seen(reps_.size(), false);
        for (const auto& [w, x] : v) {
            auto it = index_.find(w);
            if (it != index_.end()) {
                c[it->second] = x;
                seen[it->second] = true;
            }
        }
        std::size_t nonzero = 0;
        for (bool s : seen)
            nonzero += s;
        if (v.size() != nonzero * static_cast<std::size_t>(symgrp::factorial(p_).get_si()))
            throw Error("vector is not in the subspace");
        for (const auto& [w, x] : v) {
            Word r(w);
            int sign = canonicalize(r);
            auto it = index_.find(r);
            if (it == index_.end() || x != sign * c[it->second])
                throw Error("vector is not in the subspace");
        }
        return c;
    }

private:
    static int sign_of(const Word& w)
    {
        Word copy(w);
        return sort_letters_with_sign(copy);
    }

    Letter first_x_ = 1;
    int p_ = 0;
    std::vector<Word> reps_;
    std::map<Word, std::size_t> index_;
};

namespace detail {

/// Signed sum of words replacing a letter.
using LetterImage = std::vector<std::pair<Word, int>>;

/// Applies a letterwise substitution to every word of every tuple, then optionally appends a letter to each word.
inline void substitute_words(WordVec& out, const WordVec& v, const std::map<Letter, LetterImage>& images,
                             const Rational& scale, Letter append = 0)
{
    for (const auto& [tuple, c] : v) {
        std::vector<std::pair<WordTuple, int>> acc{{WordTuple{}, 1}};
        for (const auto& w : tuple) {
            std::vector<std::pair<Word, int>> words{{Word{}, 1}};
            for (Letter l : w) {
                auto it = images.find(l);
                if (it == images.end()) {
                    for (auto& [u, s] : words)
                        u.push_back(l);
                    continue;
                }
                std::vector<std::pair<Word, int>> next;
                for (const auto& [u, s] : words)
                    for (const auto& [r, rs] : it->second) {
                        Word nu(u);
                        nu.insert(nu.end(), r.begin(), r.end());
                        next.emplace_back(std::move(nu), s * rs);
                    }
                words = std::move(next);
            }
            if (append)
                for (auto& [u, s] : words)
                    u.push_back(append);
            std::vector<std::pair<WordTuple, int>> next;
            for (const auto& [t, s] : acc)
                for (const auto& [u, us] : words) {
                    WordTuple nt(t);
                    nt.push_back(u);
                    next.emplace_back(std::move(nt), s * us);
                }
            acc = std::move(next);
        }
        for (const auto& [t, s] : acc)
            add_to(out, t, s > 0 ? Rational(scale * c) : Rational(-scale * c));
    }
}

inline LetterImage bracket_image(Letter a, Letter b)
{
    return {{{a, b}, 1}, {{b, a}, -1}};
}

/// x-letter k (first_x + k - 1, k = 1..p) ↦ first_x + r_k - 1 where r lists 1..p+1 without `skip`.
inline void map_remaining_x(std::map<Letter, LetterImage>& images, Letter first_x, int p, std::vector<int> skip,
                            int start)
{
    int k = start;
    for (int r = 1; r <= p + 1 && k <= p; ++r) {
        if (std::find(skip.begin(), skip.end(), r) != skip.end())
            continue;
        images[first_x + k - 1] = {{{first_x + r - 1}, 1}};
        ++k;
    }
}

/// Σ_{i<j} (-1)^{i+j+1} F([x_i,x_j], x_1..x̌_i..x̌_j..x_{p+1}) at word level.
inline void bracket_insertion(WordVec& out, const WordVec& f, Letter first_x, int p)
{
    for (int i = 1; i <= p + 1; ++i)
        for (int j = i + 1; j <= p + 1; ++j) {
            std::map<Letter, LetterImage> images;
            if (p >= 1)
                images[first_x] = bracket_image(first_x + i - 1, first_x + j - 1);
            else
                continue;
            map_remaining_x(images, first_x, p, {i, j}, 2);
            substitute_words(out, f, images, Rational((i + j + 1) % 2 == 0 ? 1 : -1));
        }
}

}  // namespace detail

}  // namespace prophom::complexes
