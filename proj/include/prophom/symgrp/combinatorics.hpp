#pragma once

#include <prophom/freealg/word.hpp>
#include <prophom/symgrp/permutation.hpp>

#include <vector>

namespace prophom::symgrp {

using freealg::LetterSet;

inline Integer factorial(long n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

inline Integer multinomial(const std::vector<int>& parts)
{
    long n = 0;
    Integer out = 1;
    for (int p : parts) {
        n += p;
        out *= binomial(n, p);
    }
    return out;
}

/**
 * Shuffle permutations of [1, p1+...+pk]: σ is increasing on each consecutive
 * block of the source. Enumerated in lexicographic order of the block-label
 * word (label of the block landing at each target position).
 */
inline std::vector<Permutation> shuffles(const std::vector<int>& blocks)
{
    std::vector<int> labels;
    std::vector<int> offset;
    int n = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b] < 0)
            throw Error("negative shuffle block");
        offset.push_back(n);
        n += blocks[b];
        labels.insert(labels.end(), blocks[b], static_cast<int>(b));
    }
    std::vector<Permutation> out;
    do {
        std::vector<int> img(n);
        std::vector<int> next(offset);
        for (int pos = 0; pos < n; ++pos)
            img[next[labels[pos]]++] = pos + 1;
        out.emplace_back(std::move(img));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

/// Ordered k-tuples of disjoint blocks covering `s`, enumerated by block assignment of each letter.
inline std::vector<std::vector<LetterSet>> ordered_set_partitions(const LetterSet& s, int k, bool allow_empty)
{
    std::vector<std::vector<LetterSet>> out;
    if (k <= 0)
        return s.empty() && k == 0 ? std::vector<std::vector<LetterSet>>{{}} : out;
    std::vector<int> assign(s.size(), 0);
    while (true) {
        std::vector<LetterSet> blocks(k);
        for (std::size_t i = 0; i < s.size(); ++i)
            blocks[assign[i]].push_back(s[i]);
        bool ok = allow_empty;
        if (!ok) {
            ok = true;
            for (const auto& b : blocks)
                if (b.empty())
                    ok = false;
        }
        if (ok)
            out.push_back(std::move(blocks));
        std::size_t i = s.size();
        while (i > 0 && assign[i - 1] == k - 1)
            assign[--i] = 0;
        if (i == 0)
            break;
        ++assign[i - 1];
    }
    return out;
}

/// Unordered partitions of `s` into k nonempty blocks, blocks sorted by least element.
inline std::vector<std::vector<LetterSet>> set_partitions(const LetterSet& s, int k)
{
    std::vector<std::vector<LetterSet>> out;
    const std::size_t n = s.size();
    if (k <= 0 || static_cast<std::size_t>(k) > n)
        return out;
    // restricted growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1])
    std::vector<int> a(n, 0);
    auto emit = [&] {
        std::vector<LetterSet> blocks(k);
        for (std::size_t i = 0; i < n; ++i)
            blocks[a[i]].push_back(s[i]);
        out.push_back(std::move(blocks));
    };
    auto rec = [&](auto&& self, std::size_t i, int used) -> void {
        if (static_cast<int>(n - i) < k - used)
            return;
        if (i == n) {
            if (used == k)
                emit();
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            a[i] = b;
            self(self, i + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Sequences of k nonnegative integers summing to n, lexicographically descending in the first part.
inline std::vector<std::vector<int>> weak_compositions(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k == 0) {
        if (n == 0)
            out.emplace_back();
        return out;
    }
    std::vector<int> c(k, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == k - 1) {
            c[i] = left;
            out.push_back(c);
            return;
        }
        for (int v = left; v >= 0; --v) {
            c[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

/// Partitions of n in ascending lexicographic order of their part sequences.
inline std::vector<IntPartition> integer_partitions(int n)
{
    std::vector<IntPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int max) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= std::min(left, max); ++p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Permutation with the given cycle type built from consecutive runs.
inline Permutation class_representative(const IntPartition& mu)
{
    std::vector<int> img(mu.size());
    int start = 0;
    for (int len : mu.parts) {
        for (int k = 0; k < len; ++k)
            img[start + k] = start + (k + 1) % len + 1;
        start += len;
    }
    return Permutation(std::move(img));
}

/// Number of permutations of cycle type mu.
inline Integer class_size(const IntPartition& mu)
{
    Integer z = 1;
    std::vector<int> mult(mu.size() + 1, 0);
    for (int p : mu.parts)
        ++mult[p];
    for (int i = 1; i <= mu.size(); ++i) {
        for (int k = 0; k < mult[i]; ++k)
            z *= i;
        z *= factorial(mult[i]);
    }
    return factorial(mu.size()) / z;
}

}  // namespace prophom::symgrp
