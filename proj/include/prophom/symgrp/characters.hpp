#pragma once

#include <prophom/symgrp/combinatorics.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace prophom::symgrp {

/// Integer character table of S_n; rows and columns both indexed by integer_partitions(n).
struct CharacterTable
{
    int n = 0;
    std::vector<IntPartition> irreps;
    std::vector<IntPartition> classes;
    std::vector<Integer> class_sizes;
    std::vector<std::vector<Integer>> values;  // values[irrep][class]

    std::size_t irrep_index(const IntPartition& lambda) const
    {
        for (std::size_t i = 0; i < irreps.size(); ++i)
            if (irreps[i] == lambda)
                return i;
        throw Error("not a partition of " + std::to_string(n) + ": " + lambda.to_string());
    }

    std::size_t class_index(const IntPartition& mu) const
    {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == mu)
                return i;
        throw Error("not a cycle type of S_" + std::to_string(n) + ": " + mu.to_string());
    }

    const Integer& value(const IntPartition& lambda, const IntPartition& mu) const
    {
        return values[irrep_index(lambda)][class_index(mu)];
    }

    /// Degree of the irreducible lambda (value on the identity class).
    Integer dimension(const IntPartition& lambda) const
    {
        return value(lambda, IntPartition(std::vector<int>(n, 1)));
    }

    /// Header "irrep,<class>,...", one row per irreducible; partitions written with spaces.
    std::string to_csv() const
    {
        std::string s = "irrep";
        for (const auto& c : classes)
            s += "," + c.to_string();
        s += "\n";
        for (std::size_t i = 0; i < irreps.size(); ++i) {
            s += irreps[i].to_string();
            for (const auto& v : values[i])
                s += "," + v.get_str();
            s += "\n";
        }
        return s;
    }
};

namespace detail {

/// Murnaghan–Nakayama on beta-sets: strip rim hooks of length mu[k] from the shape.
class MnEvaluator
{
public:
    Integer eval(std::vector<int> beta, const std::vector<int>& mu, std::size_t k)
    {
        if (k == mu.size())
            return 1;
        auto key = std::make_pair(beta, k);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const int r = mu[k];
        Integer total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            const int b = beta[i];
            const int t = b - r;
            if (t < 0 || std::binary_search(beta.begin(), beta.end(), t))
                continue;
            int between = 0;
            for (int x : beta)
                if (x > t && x < b)
                    ++between;
            std::vector<int> next(beta);
            next[i] = t;
            std::sort(next.begin(), next.end());
            Integer v = eval(std::move(next), mu, k + 1);
            total += (between % 2 == 0) ? v : Integer(-v);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo_;
};

inline std::vector<int> beta_set(const IntPartition& lambda)
{
    const int l = static_cast<int>(lambda.length());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i)
        beta[i] = lambda.parts[i] + (l - 1 - i);
    std::sort(beta.begin(), beta.end());
    return beta;
}

inline CharacterTable compute_table(int n)
{
    CharacterTable t;
    t.n = n;
    t.irreps = integer_partitions(n);
    t.classes = t.irreps;
    for (const auto& mu : t.classes)
        t.class_sizes.push_back(class_size(mu));
    for (const auto& lambda : t.irreps) {
        std::vector<Integer> row;
        for (const auto& mu : t.classes) {
            MnEvaluator mn;
            row.push_back(mn.eval(beta_set(lambda), mu.parts, 0));
        }
        t.values.push_back(std::move(row));
    }
    return t;
}

}  // namespace detail

inline constexpr int default_character_table_bound = 8;

/// Character table of S_n, computed once per n and shared between threads.
inline std::shared_ptr<const CharacterTable> character_table(int n, int bound = default_character_table_bound)
{
    if (n < 0)
        throw Error("negative symmetric group degree");
    if (n > bound)
        throw Error("table too large");
    static std::shared_mutex mutex;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    auto table = std::make_shared<const CharacterTable>(detail::compute_table(n));
    std::unique_lock lock(mutex);
    return cache.try_emplace(n, std::move(table)).first->second;
}

/**
 * Multiplicity of each irreducible in a module given by its traces per cycle type.
 * Throws "input not a character" unless every inner product is a nonnegative integer.
 */
inline std::map<IntPartition, Integer> multiplicities(const std::map<IntPartition, Rational>& traces, int n,
                                                     int bound = default_character_table_bound)
{
    auto table = character_table(n, bound);
    for (const auto& [mu, v] : traces)
        (void)table->class_index(mu);
    if (traces.size() != table->classes.size())
        throw Error("traces must be given on every conjugacy class");
    const Rational order = factorial(n);
    std::map<IntPartition, Integer> out;
    for (std::size_t i = 0; i < table->irreps.size(); ++i) {
        Rational ip = 0;
        for (std::size_t j = 0; j < table->classes.size(); ++j)
            ip += Rational(table->class_sizes[j]) * traces.at(table->classes[j]) * Rational(table->values[i][j]);
        ip /= order;
        if (ip.get_den() != 1 || ip < 0)
            throw Error("input not a character");
        out[table->irreps[i]] = ip.get_num();
    }
    return out;
}

}  // namespace prophom::symgrp
