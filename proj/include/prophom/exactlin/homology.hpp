#pragma once

#include <prophom/exactlin/complex_window.hpp>
#include <prophom/exactlin/rank.hpp>

#include <map>
#include <vector>

namespace prophom::exactlin {

struct DegreeHomology
{
    int p = 0;
    std::size_t dim = 0;
    std::size_t rank_in = 0;
    std::size_t rank_out = 0;
    std::size_t betti = 0;
    bool complete = false;

    bool operator==(const DegreeHomology&) const = default;
};

/// Betti numbers over Q on every degree of a window.
struct HomologyProfile
{
    std::vector<DegreeHomology> degrees;

    const DegreeHomology& at(int p) const
    {
        for (const auto& d : degrees)
            if (d.p == p)
                return d;
        throw Error("degree " + std::to_string(p) + " not in profile");
    }

    /// Betti numbers on complete degrees only.
    std::map<int, std::size_t> complete_betti() const
    {
        std::map<int, std::size_t> out;
        for (const auto& d : degrees)
            if (d.complete)
                out[d.p] = d.betti;
        return out;
    }

    bool acyclic_on_complete() const
    {
        for (const auto& d : degrees)
            if (d.complete && d.betti != 0)
                return false;
        return true;
    }

    bool operator==(const HomologyProfile&) const = default;
};

/// Throws "not a complex" unless every composable pair of differentials vanishes.
inline void check_is_complex(const ComplexWindow& w)
{
    w.validate();
    for (int p = w.lo(); p <= w.hi(); ++p) {
        int q = p + w.step();
        if (!w.has_differential(p) || !w.has_differential(q))
            continue;
        if (!(w.differential(q) * w.differential(p)).is_zero())
            throw Error("not a complex: d∘d != 0 out of degree " + std::to_string(p));
    }
}

inline HomologyProfile homology(const ComplexWindow& w)
{
    check_is_complex(w);
    std::map<int, std::size_t> ranks;
    for (int p = w.lo(); p <= w.hi(); ++p)
        if (w.has_differential(p))
            ranks[p] = rank(w.differential(p));
    HomologyProfile h;
    for (int p = w.lo(); p <= w.hi(); ++p) {
        DegreeHomology d;
        d.p = p;
        d.dim = w.dim(p);
        if (auto it = ranks.find(p); it != ranks.end())
            d.rank_out = it->second;
        if (auto it = ranks.find(p - w.step()); it != ranks.end())
            d.rank_in = it->second;
        d.betti = d.dim - d.rank_in - d.rank_out;
        d.complete = w.complete(p);
        h.degrees.push_back(d);
    }
    return h;
}

/// Degree-indexed linear map between two windows; f.at(p) maps w1 degree p to w2 degree p.
using ChainMap = std::map<int, SparseMatrix>;

/// True iff f∘d1 = d2∘f wherever both squares are inside the windows.
inline bool check_chain_map(const ChainMap& f, const ComplexWindow& w1, const ComplexWindow& w2)
{
    if (w1.step() != w2.step())
        throw Error("chain map between complexes of opposite direction");
    for (const auto& [p, m] : f)
        if (m.cols() != w1.dim(p) || m.rows() != w2.dim(p))
            throw Error("chain map shape mismatch at degree " + std::to_string(p));
    for (const auto& [p, m] : f) {
        int q = p + w1.step();
        auto next = f.find(q);
        if (next == f.end() || !w1.has_differential(p) || !w2.has_differential(p))
            continue;
        if (!(next->second * w1.differential(p) == w2.differential(p) * m))
            return false;
    }
    return true;
}

/// Square and full rank in every degree.
inline bool is_degreewise_bijective(const ChainMap& f)
{
    for (const auto& [p, m] : f)
        if (m.rows() != m.cols() || rank(m) != m.rows())
            return false;
    return true;
}

/**
 * Mapping cone of a cochain map f: A -> B on a common window,
 * cone^p = A^{p+1} ⊕ B^p with d(a, b) = (-d a, f a + d b).
 */
inline ComplexWindow cone(const ChainMap& f, const ComplexWindow& a, const ComplexWindow& b)
{
    if (a.step() != 1 || b.step() != 1 || a.lo() != b.lo() || a.hi() != b.hi())
        throw Error("cone needs cochain windows on the same range");
    const int lo = a.lo() - 1;
    const int hi = a.hi();
    ComplexWindow c("cone(" + a.name() + "->" + b.name() + ")", lo, hi, 1, a.closed_below() && b.closed_below(),
                    a.closed_above() && b.closed_above());
    for (int p = lo; p <= hi; ++p)
        c.set_space(p, a.dim(p + 1) + b.dim(p));
    for (int p = lo; p < hi; ++p) {
        const std::size_t na = a.dim(p + 1), nb = b.dim(p);
        const std::size_t ma = a.dim(p + 2), mb = b.dim(p + 1);
        SparseMatrix d(ma + mb, na + nb);
        if (a.has_differential(p + 1))
            for (const auto& [rc, v] : a.differential(p + 1).entries())
                d.set(rc.first, rc.second, -v);
        if (auto it = f.find(p + 1); it != f.end())
            for (const auto& [rc, v] : it->second.entries())
                d.set(ma + rc.first, rc.second, v);
        if (b.has_differential(p))
            for (const auto& [rc, v] : b.differential(p).entries())
                d.set(ma + rc.first, na + rc.second, v);
        c.set_differential(p, std::move(d));
    }
    return c;
}

}  // namespace prophom::exactlin
