#pragma once

#include <prophom/exactlin/sparse_matrix.hpp>

#include <map>
#include <string>
#include <vector>

namespace prophom::exactlin {

/**
 * A finite run of consecutive degrees [lo, hi] of a based complex.
 *
 * step = +1 for cochain complexes (d: p -> p+1) and -1 for chain complexes
 * (d: p -> p-1). The differential out of p is stored when its target is
 * inside the window. `closed_below` / `closed_above` say the complex is zero
 * beyond lo / hi, so the missing differential there is genuinely zero.
 */
class ComplexWindow
{
public:
    ComplexWindow() = default;
    ComplexWindow(std::string name, int lo, int hi, int step, bool closed_below, bool closed_above)
        : name_(std::move(name)), lo_(lo), hi_(hi), step_(step), closed_below_(closed_below),
          closed_above_(closed_above)
    {
        if (hi < lo)
            throw Error("empty window");
        if (step != 1 && step != -1)
            throw Error("step must be +1 or -1");
    }

    const std::string& name() const { return name_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int step() const { return step_; }
    bool closed_below() const { return closed_below_; }
    bool closed_above() const { return closed_above_; }
    bool contains(int p) const { return p >= lo_ && p <= hi_; }

    void set_space(int p, std::vector<std::string> labels)
    {
        require(p);
        spaces_[p] = std::move(labels);
    }

    void set_space(int p, std::size_t dim)
    {
        std::vector<std::string> labels(dim);
        for (std::size_t i = 0; i < dim; ++i)
            labels[i] = std::to_string(i);
        set_space(p, std::move(labels));
    }

    std::size_t dim(int p) const
    {
        auto it = spaces_.find(p);
        return it == spaces_.end() ? 0 : it->second.size();
    }

    const std::vector<std::string>& labels(int p) const
    {
        static const std::vector<std::string> none;
        auto it = spaces_.find(p);
        return it == spaces_.end() ? none : it->second;
    }

    /// Differential out of degree p, into p + step.
    void set_differential(int p, SparseMatrix m)
    {
        require(p);
        require(p + step_);
        if (m.cols() != dim(p) || m.rows() != dim(p + step_))
            throw Error("differential shape does not match basis sizes at degree " + std::to_string(p));
        diffs_[p] = std::move(m);
    }

    bool has_differential(int p) const { return diffs_.count(p) != 0; }

    const SparseMatrix& differential(int p) const
    {
        auto it = diffs_.find(p);
        if (it == diffs_.end())
            throw Error("no differential out of degree " + std::to_string(p));
        return it->second;
    }

    /// True when the differentials into and out of p are both known.
    bool complete(int p) const
    {
        return side_known(p, -step_) && side_known(p, step_);
    }

    /// Every differential whose target is in the window is present with the right shape.
    void validate() const
    {
        for (int p = lo_; p <= hi_; ++p) {
            if (!contains(p + step_))
                continue;
            const SparseMatrix& d = differential(p);
            if (d.cols() != dim(p) || d.rows() != dim(p + step_))
                throw Error("differential shape mismatch at degree " + std::to_string(p));
        }
    }

    friend bool operator==(const ComplexWindow& a, const ComplexWindow& b)
    {
        return a.name_ == b.name_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.step_ == b.step_ &&
               a.closed_below_ == b.closed_below_ && a.closed_above_ == b.closed_above_ &&
               a.spaces_ == b.spaces_ && a.diffs_ == b.diffs_;
    }

private:
    bool side_known(int p, int dir) const
    {
        if (contains(p + dir))
            return true;
        return dir < 0 ? closed_below_ : closed_above_;
    }

    void require(int p) const
    {
        if (!contains(p))
            throw Error("degree " + std::to_string(p) + " outside window");
    }

    std::string name_;
    int lo_ = 0;
    int hi_ = 0;
    int step_ = 1;
    bool closed_below_ = true;
    bool closed_above_ = false;
    std::map<int, std::vector<std::string>> spaces_;
    std::map<int, SparseMatrix> diffs_;
};

}  // namespace prophom::exactlin
