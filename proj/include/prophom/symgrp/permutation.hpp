#pragma once

#include <prophom/core/rational.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <sstream>
#include <string>
#include <vector>

namespace prophom::symgrp {

/// Integer partition, parts weakly decreasing.
struct IntPartition
{
    std::vector<int> parts;

    IntPartition() = default;
    explicit IntPartition(std::vector<int> p) : parts(std::move(p))
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        for (int x : parts)
            if (x <= 0)
                throw Error("partition parts must be positive");
    }

    int size() const
    {
        int n = 0;
        for (int x : parts)
            n += x;
        return n;
    }

    std::size_t length() const { return parts.size(); }

    /// Parts separated by spaces, e.g. "2 1 1"; the empty partition is "0".
    std::string to_string() const
    {
        if (parts.empty())
            return "0";
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(parts[i]);
        }
        return s;
    }

    auto operator<=>(const IntPartition&) const = default;
    bool operator==(const IntPartition&) const = default;
};

/// Permutation of {1..n}; images[i-1] = σ(i).
class Permutation
{
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images))
    {
        std::vector<bool> seen(img_.size() + 1, false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
                throw Error("not a permutation");
            seen[v] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = i + 1;
        return Permutation(std::move(v));
    }

    static Permutation transposition(int n, int a, int b)
    {
        Permutation p = identity(n);
        std::swap(p.img_.at(a - 1), p.img_.at(b - 1));
        return p;
    }

    /// Parses cycle notation such as "(2 3)(4 5)" or "(1,2,3)"; "id" and "()" give the identity.
    static Permutation parse_cycles(const std::string& text, int n)
    {
        Permutation p = identity(n);
        std::string t;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)) || !t.empty())
                t += std::isspace(static_cast<unsigned char>(c)) ? ' ' : c;
        while (!t.empty() && t.back() == ' ')
            t.pop_back();
        if (t == "id" || t.empty())
            return p;
        std::vector<bool> used(n + 1, false);
        std::size_t pos = 0;
        while (pos < t.size()) {
            if (t[pos] == ' ') {
                ++pos;
                continue;
            }
            if (t[pos] != '(')
                throw Error("bad cycle notation: " + text);
            auto close = t.find(')', pos);
            if (close == std::string::npos)
                throw Error("bad cycle notation: " + text);
            std::string body = t.substr(pos + 1, close - pos - 1);
            std::replace(body.begin(), body.end(), ',', ' ');
            std::istringstream in(body);
            std::vector<int> cycle;
            std::string tok;
            while (in >> tok) {
                std::size_t used_chars = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used_chars);
                } catch (const std::exception&) {
                    throw Error("bad cycle notation: " + text);
                }
                if (used_chars != tok.size() || v < 1 || v > n || used[v])
                    throw Error("bad cycle notation: " + text);
                used[v] = true;
                cycle.push_back(v);
            }
            for (std::size_t k = 0; k < cycle.size(); ++k)
                p.img_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
            pos = close + 1;
        }
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    const std::vector<int>& images() const { return img_; }

    int operator()(int i) const
    {
        if (i < 1 || i > size())
            throw Error("permutation argument out of range");
        return img_[i - 1];
    }

    Permutation inverse() const
    {
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i)
            v[img_[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(v));
    }

    /// Nontrivial cycles, each starting at its least element, ordered by that element.
    std::vector<std::vector<int>> cycles() const
    {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img_.size() + 1, false);
        for (int i = 1; i <= size(); ++i) {
            if (seen[i])
                continue;
            std::vector<int> c;
            for (int j = i; !seen[j]; j = img_[j - 1]) {
                seen[j] = true;
                c.push_back(j);
            }
            if (c.size() > 1)
                out.push_back(std::move(c));
        }
        return out;
    }

    IntPartition cycle_type() const
    {
        std::vector<int> parts;
        std::vector<bool> seen(img_.size() + 1, false);
        for (int i = 1; i <= size(); ++i) {
            if (seen[i])
                continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j - 1]) {
                seen[j] = true;
                ++len;
            }
            parts.push_back(len);
        }
        return IntPartition(std::move(parts));
    }

    int sign() const
    {
        int s = 1;
        for (const auto& c : cycles())
            if (c.size() % 2 == 0)
                s = -s;
        return s;
    }

    std::string to_cycle_string() const
    {
        auto cs = cycles();
        if (cs.empty())
            return "id";
        std::string s;
        for (const auto& c : cs) {
            s += '(';
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (k)
                    s += ' ';
                s += std::to_string(c[k]);
            }
            s += ')';
        }
        return s;
    }

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

/// (tau ∘ sigma)(i) = tau(sigma(i)).
inline Permutation compose(const Permutation& tau, const Permutation& sigma)
{
    if (tau.size() != sigma.size())
        throw Error("composing permutations of different sizes");
    std::vector<int> v(sigma.size());
    for (int i = 1; i <= sigma.size(); ++i)
        v[i - 1] = tau(sigma(i));
    return Permutation(std::move(v));
}

/// All n! permutations in lexicographic order of their image sequences.
inline std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    std::vector<int> v = Permutation::identity(n).images();
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace prophom::symgrp
