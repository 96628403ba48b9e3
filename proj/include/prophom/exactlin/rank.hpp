#pragma once

#include <prophom/exactlin/sparse_matrix.hpp>

#include <algorithm>
#include <map>
#include <vector>

namespace prophom::exactlin {

namespace detail {

/// Integer row: (column, value) sorted by column, no zeros.
using IntRow = std::vector<std::pair<std::size_t, Integer>>;

inline void make_primitive(IntRow& row)
{
    if (row.empty())
        return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            return;
    }
    if (row.front().second < 0)
        g = -g;
    for (auto& [c, v] : row)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// row <- p*row - a*pivot, where p and a are the leading entries; eliminates the leading column.
inline IntRow eliminate(const IntRow& row, const IntRow& pivot)
{
    const Integer& a = row.front().second;
    const Integer& p = pivot.front().second;
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
        if (j >= pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, p * row[i].second);
            ++i;
        } else if (i >= row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -a * pivot[j].second);
            ++j;
        } else {
            Integer v = p * row[i].second - a * pivot[j].second;
            if (v != 0)
                out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

}  // namespace detail

/**
 * Exact rank over Q.
 *
 * Rows are scaled to primitive integer vectors and reduced fraction-free
 * (row <- p*row - a*pivot, then divided by its content), so coefficients never
 * leave Z. Rows are processed shortest first; each surviving row becomes the
 * pivot for its leading column.
 */
inline std::size_t rank(const SparseMatrix& m)
{
    std::vector<detail::IntRow> rows(m.rows());
    {
        std::vector<std::vector<std::pair<std::size_t, Rational>>> qrows(m.rows());
        for (const auto& [rc, v] : m.entries())
            qrows[rc.first].emplace_back(rc.second, v);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Integer l = 1;
            for (const auto& [c, v] : qrows[r])
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
            for (const auto& [c, v] : qrows[r])
                rows[r].emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
            detail::make_primitive(rows[r]);
        }
    }
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });

    std::map<std::size_t, detail::IntRow> pivots;
    for (std::size_t r : order) {
        detail::IntRow row = std::move(rows[r]);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            row = detail::eliminate(row, it->second);
        }
    }
    return pivots.size();
}

}  // namespace prophom::exactlin
