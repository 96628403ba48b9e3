#pragma once

#include <prophom/complexes/common.hpp>
#include <prophom/exactlin/homology.hpp>

namespace prophom::complexes {

namespace detail {

/// Multi-degrees (p_1..p_k) with p_α in [lo_α, hi_α] summing to p, in lexicographic order.
inline std::vector<std::vector<int>> multi_degrees(const std::vector<ComplexWindow>& ws, int p)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t a, int left) -> void {
        if (a == ws.size()) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int d = ws[a].lo(); d <= std::min(ws[a].hi(), left); ++d) {
            cur.push_back(d);
            self(self, a + 1, left - d);
            cur.pop_back();
        }
    };
    rec(rec, 0, p);
    return out;
}

struct TensorKey
{
    std::vector<int> degrees;
    std::vector<std::size_t> index;
    auto operator<=>(const TensorKey&) const = default;
};

inline std::vector<TensorKey> tensor_basis(const std::vector<ComplexWindow>& ws, int p)
{
    std::vector<TensorKey> out;
    for (const auto& degs : multi_degrees(ws, p)) {
        TensorKey key{degs, {}};
        auto rec = [&](auto&& self, std::size_t a) -> void {
            if (a == ws.size()) {
                out.push_back(key);
                return;
            }
            for (std::size_t i = 0; i < ws[a].dim(degs[a]); ++i) {
                key.index.push_back(i);
                self(self, a + 1);
                key.index.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

}  // namespace detail

/**
 * Graded tensor product of windows sharing one step direction. The β-th differential carries
 * the sign (-1)^{p_1+...+p_{β-1}}. Factors must be closed below; the product stops at the last
 * degree where no summand reaches past the top of a factor that is open above.
 */
inline ComplexWindow tensor_complexes(const std::vector<ComplexWindow>& ws)
{
    if (ws.empty())
        throw Error("tensor product of no windows");
    const int step = ws[0].step();
    int lo_sum = 0, hi_sum = 0;
    bool below = true, above = true;
    std::string name;
    for (const auto& w : ws) {
        if (w.step() != step)
            throw Error("tensor factors must share the step direction");
        lo_sum += w.lo();
        hi_sum += w.hi();
        below = below && w.closed_below();
        above = above && w.closed_above();
        name += (name.empty() ? "" : "⊗") + w.name();
    }
    if (!below)
        throw Error("tensor factors must be closed below");
    int hi = hi_sum;
    for (std::size_t a = 0; a < ws.size(); ++a)
        if (!ws[a].closed_above())
            hi = std::min(hi, ws[a].hi() + lo_sum - ws[a].lo());
    ComplexWindow out(name, lo_sum, hi, step, true, above);
    std::map<int, std::vector<detail::TensorKey>> bases;
    for (int p = lo_sum; p <= hi; ++p) {
        bases[p] = detail::tensor_basis(ws, p);
        std::vector<std::string> labels;
        for (const auto& k : bases[p]) {
            std::string s;
            for (std::size_t a = 0; a < ws.size(); ++a) {
                const auto& l = ws[a].labels(k.degrees[a])[k.index[a]];
                s += (a ? "⊗" : "") + (l.empty() ? std::to_string(k.index[a]) : l);
            }
            labels.push_back(std::move(s));
        }
        out.set_space(p, std::move(labels));
    }
    for (int p = lo_sum; p <= hi; ++p) {
        const int q = p + step;
        if (q < lo_sum || q > hi)
            continue;
        auto target = detail::index_of(bases[q]);
        SparseMatrix d(bases[q].size(), bases[p].size());
        for (std::size_t col = 0; col < bases[p].size(); ++col) {
            const auto& key = bases[p][col];
            int prefix = 0;
            for (std::size_t b = 0; b < ws.size(); ++b) {
                const int pb = key.degrees[b];
                const int sign = prefix % 2 == 0 ? 1 : -1;
                prefix += pb;
                if (!ws[b].contains(pb + step))
                    continue;
                const auto& db = ws[b].differential(pb);
                for (const auto& [rc, v] : db.entries()) {
                    if (rc.second != key.index[b])
                        continue;
                    detail::TensorKey t = key;
                    t.degrees[b] = pb + step;
                    t.index[b] = rc.first;
                    d.add(target.at(t), col, sign * v);
                }
            }
        }
        out.set_differential(p, std::move(d));
    }
    return out;
}

}  // namespace prophom::complexes
