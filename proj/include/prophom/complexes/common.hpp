#pragma once

#include <prophom/exactlin/complex_window.hpp>
#include <prophom/exactlin/subspace.hpp>
#include <prophom/freealg/text.hpp>
#include <prophom/symgrp/combinatorics.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace prophom::complexes {

using exactlin::ComplexWindow;
using exactlin::SparseMatrix;
using freealg::AssocPoly;
using freealg::Letter;
using freealg::LetterMap;
using freealg::LetterSet;
using freealg::LieBasisWord;
using freealg::LiePoly;
using freealg::LieTensorTerm;
using freealg::SymLiePoly;
using freealg::SymLieTerm;
using freealg::Word;
using freealg::WordTuple;

/// Word-level element of a tensor power of the free associative algebra.
using WordVec = std::map<WordTuple, Rational>;

inline void add_to(WordVec& v, const WordTuple& t, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = v.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            v.erase(it);
    }
}

template <typename Key>
void add_to(exactlin::SparseVec<Key>& v, const Key& k, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = v.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            v.erase(it);
    }
}

inline LetterSet letter_range(int first, int last)
{
    LetterSet s;
    for (int l = first; l <= last; ++l)
        s.push_back(l);
    return s;
}

/// Parity of the permutation sorting `v` ascending (entries distinct).
template <typename T, typename Less>
int sort_with_sign(std::vector<T>& v, Less less)
{
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && less(v[j], v[j - 1]); --j) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    return sign;
}

inline int sort_blocks_with_sign(std::vector<LieBasisWord>& blocks)
{
    return sort_with_sign(blocks, [](const LieBasisWord& a, const LieBasisWord& b) { return a.anchor < b.anchor; });
}

inline int sort_letters_with_sign(Word& w)
{
    return sort_with_sign(w, std::less<>());
}

/// Image of a tuple of Lie basis blocks under the embedding into tensor powers of words.
inline void expand_blocks(WordVec& out, const LieTensorTerm& t, const Rational& c)
{
    std::vector<std::vector<std::pair<Word, int>>> parts;
    parts.reserve(t.size());
    for (const auto& b : t)
        parts.push_back(freealg::expand_left_normed(b.word()));
    WordTuple cur(t.size());
    auto rec = [&](auto&& self, std::size_t k, int sign) -> void {
        if (k == t.size()) {
            add_to(out, cur, sign > 0 ? c : Rational(-c));
            return;
        }
        for (const auto& [w, s] : parts[k]) {
            cur[k] = w;
            self(self, k + 1, sign * s);
        }
    };
    rec(rec, 0, 1);
}

/// Factorwise strip; valid on word-level images of Lie tensors.
inline exactlin::SparseVec<LieTensorTerm> strip_words(const WordVec& v)
{
    exactlin::SparseVec<LieTensorTerm> out;
    for (const auto& [tuple, c] : v) {
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
        for (const auto& w : tuple) {
            LieBasisWord b;
            b.anchor = w.front();
            b.tail.assign(w.begin() + 1, w.end());
            t.push_back(std::move(b));
        }
        add_to(out, t, c);
    }
    return out;
}

/// Text label of a block tuple, blocks joined by `sep`.
inline std::string blocks_text(const std::vector<LieBasisWord>& blocks, const std::string& sep)
{
    if (blocks.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i)
            s += sep;
        s += freealg::to_text(blocks[i]);
    }
    return s;
}

namespace detail {

template <typename Key>
std::map<Key, std::size_t> index_of(const std::vector<Key>& keys)
{
    std::map<Key, std::size_t> idx;
    for (std::size_t i = 0; i < keys.size(); ++i)
        idx.emplace(keys[i], i);
    return idx;
}

/// All tuples of Lie basis words over the blocks of a set partition, in block order.
inline std::vector<std::vector<LieBasisWord>> lie_block_tuples(const std::vector<LetterSet>& partition)
{
    std::vector<std::vector<LieBasisWord>> out{std::vector<LieBasisWord>{}};
    for (const auto& block : partition) {
        std::vector<std::vector<LieBasisWord>> next;
        auto basis = freealg::lie_basis(block);
        for (const auto& prefix : out)
            for (const auto& b : basis) {
                std::vector<LieBasisWord> t(prefix);
                t.push_back(b);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace detail

/// Matrix whose columns are the given sparse vectors over row indices.
inline SparseMatrix columns_to_matrix(const std::vector<std::vector<Rational>>& cols, std::size_t rows)
{
    SparseMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw Error("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m.set(r, c, cols[c][r]);
    }
    return m;
}

}  // namespace prophom::complexes
