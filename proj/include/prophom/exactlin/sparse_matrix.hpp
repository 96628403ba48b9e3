#pragma once

#include <prophom/core/rational.hpp>

#include <cstddef>
#include <map>
#include <utility>

namespace prophom::exactlin {

/// Exact sparse matrix over Q; zeros are never stored.
class SparseMatrix
{
public:
    using Index = std::pair<std::size_t, std::size_t>;
    using Entries = std::map<Index, Rational>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n)
    {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, 1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Rational get(std::size_t r, std::size_t c) const
    {
        check(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(std::size_t r, std::size_t c, const Rational& v)
    {
        check(r, c);
        if (sgn(v) == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    void add(std::size_t r, std::size_t c, const Rational& v)
    {
        check(r, c);
        if (sgn(v) == 0)
            return;
        auto [it, inserted] = entries_.try_emplace({r, c}, v);
        if (!inserted) {
            it->second += v;
            if (sgn(it->second) == 0)
                entries_.erase(it);
        }
    }

    SparseMatrix transpose() const
    {
        SparseMatrix t(cols_, rows_);
        for (const auto& [rc, v] : entries_)
            t.entries_.emplace(Index{rc.second, rc.first}, v);
        return t;
    }

    SparseMatrix& operator*=(const Rational& s)
    {
        if (sgn(s) == 0)
            entries_.clear();
        for (auto& [rc, v] : entries_)
            v *= s;
        return *this;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error("matrix shape mismatch in product");
        // b grouped by row for the inner loop
        std::map<std::size_t, std::vector<std::pair<std::size_t, const Rational*>>> brows;
        for (const auto& [rc, v] : b.entries_)
            brows[rc.first].emplace_back(rc.second, &v);
        SparseMatrix out(a.rows_, b.cols_);
        for (const auto& [rc, v] : a.entries_) {
            auto it = brows.find(rc.second);
            if (it == brows.end())
                continue;
            for (const auto& [col, w] : it->second)
                out.add(rc.first, col, v * *w);
        }
        return out;
    }

    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b)
    {
        a.require_same_shape(b);
        for (const auto& [rc, v] : b.entries_)
            a.add(rc.first, rc.second, v);
        return a;
    }

    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b)
    {
        a.require_same_shape(b);
        for (const auto& [rc, v] : b.entries_)
            a.add(rc.first, rc.second, -v);
        return a;
    }

    friend SparseMatrix operator*(const Rational& s, SparseMatrix a) { return a *= s; }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    void check(std::size_t r, std::size_t c) const
    {
        if (r >= rows_ || c >= cols_)
            throw Error("matrix index out of range");
    }

    void require_same_shape(const SparseMatrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw Error("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Entries entries_;
};

}  // namespace prophom::exactlin
