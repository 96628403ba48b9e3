#pragma once

#include <prophom/complexes/common.hpp>

#include <bit>

namespace prophom::complexes {

/**
 * Multilinear slice (letters 1..n) of the Koszul complex S(V) ⊗ wedge(V).
 * Degree k holds x_{[1,n]∖T} ⊗ x_{t1}^...^x_{tk} for subsets T of size k; d lowers k.
 */
inline ComplexWindow build_koszul_multilinear(int n)
{
    if (n < 1)
        throw Error("n must be at least 1");
    ComplexWindow w("koszul(n=" + std::to_string(n) + ")", 0, n, -1, true, true);
    std::vector<std::map<std::size_t, std::size_t>> index(n + 1);
    std::vector<std::vector<std::size_t>> masks(n + 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
        masks[std::popcount(mask)].push_back(mask);
    for (int k = 0; k <= n; ++k) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < masks[k].size(); ++i) {
            const std::size_t m = masks[k][i];
            index[k][m] = i;
            Word sym, ext;
            for (int l = 1; l <= n; ++l)
                ((m >> (l - 1)) & 1 ? ext : sym).push_back(l);
            labels.push_back(freealg::word_text(sym) + "#" + freealg::word_text(ext));
        }
        w.set_space(k, std::move(labels));
    }
    for (int k = 1; k <= n; ++k) {
        SparseMatrix d(masks[k - 1].size(), masks[k].size());
        for (std::size_t col = 0; col < masks[k].size(); ++col) {
            const std::size_t m = masks[k][col];
            int position = 0;
            for (int l = 0; l < n; ++l) {
                if (!((m >> l) & 1))
                    continue;
                d.set(index[k - 1].at(m & ~(std::size_t{1} << l)), col, position % 2 == 0 ? 1 : -1);
                ++position;
            }
        }
        w.set_differential(k, std::move(d));
    }
    return w;
}

}  // namespace prophom::complexes
