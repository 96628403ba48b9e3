#pragma once

#include <prophom/core/rational.hpp>

#include <map>
#include <vector>

namespace prophom::exactlin {

/// Sparse vector over Q with arbitrary ordered coordinate keys.
template <typename Key>
using SparseVec = std::map<Key, Rational>;

template <typename Key>
void axpy(SparseVec<Key>& y, const Rational& a, const SparseVec<Key>& x)
{
    if (sgn(a) == 0)
        return;
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (sgn(it->second) == 0)
                y.erase(it);
        }
    }
}

/**
 * Subspace of a keyed coordinate space held in reduced row echelon form:
 * basis vector k has entry 1 at its pivot key and 0 at every other pivot.
 * Coordinates of a member vector are therefore its values at the pivot keys.
 */
template <typename Key>
class Subspace
{
public:
    using Vec = SparseVec<Key>;

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<Key>& pivots() const { return pivot_keys_; }

    /// Adds v to the spanning set; returns true if the dimension grew.
    bool insert(Vec v)
    {
        reduce(v);
        if (v.empty())
            return false;
        const Key pivot = v.begin()->first;
        const Rational inv = 1 / v.begin()->second;
        for (auto& [k, x] : v)
            x *= inv;
        for (auto& b : basis_) {
            auto it = b.find(pivot);
            if (it != b.end()) {
                Rational f = -it->second;
                axpy(b, f, v);
            }
        }
        pivot_index_.emplace(pivot, basis_.size());
        pivot_keys_.push_back(pivot);
        basis_.push_back(std::move(v));
        return true;
    }

    /// Residual of v after removing its projection along the pivots.
    Vec residual(Vec v) const
    {
        reduce(v);
        return v;
    }

    bool contains(const Vec& v) const { return residual(v).empty(); }

    /// Coordinates in the basis, read at the pivot keys. Throws if v is not a member.
    std::vector<Rational> coordinates(const Vec& v, bool verify = true) const
    {
        std::vector<Rational> c(basis_.size());
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            auto it = v.find(pivot_keys_[k]);
            if (it != v.end())
                c[k] = it->second;
        }
        if (verify) {
            Vec r = v;
            for (std::size_t k = 0; k < basis_.size(); ++k)
                axpy(r, Rational(-c[k]), basis_[k]);
            if (!r.empty())
                throw Error("vector is not in the subspace");
        }
        return c;
    }

private:
    void reduce(Vec& v) const
    {
        // Basis vectors vanish at foreign pivots, so one pass suffices.
        std::vector<std::pair<std::size_t, Rational>> hits;
        for (const auto& [k, x] : v) {
            auto it = pivot_index_.find(k);
            if (it != pivot_index_.end())
                hits.emplace_back(it->second, x);
        }
        for (const auto& [idx, x] : hits)
            axpy(v, Rational(-x), basis_[idx]);
    }

    std::vector<Vec> basis_;
    std::vector<Key> pivot_keys_;
    std::map<Key, std::size_t> pivot_index_;
};

}  // namespace prophom::exactlin
