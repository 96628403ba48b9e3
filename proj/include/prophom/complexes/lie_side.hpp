#pragma once

#include <prophom/complexes/orbit.hpp>
#include <prophom/exactlin/homology.hpp>
#include <prophom/symgrp/antisym.hpp>

namespace prophom::complexes {

/// Letter layout shared by the Lie-side and associative-side complexes.
struct LetterLayout
{
    int z = 1;
    int N = 0;
    int p = 0;
    int a_count() const { return z + N; }
    Letter x(int i) const { return a_count() + i; }
    Letter first_x() const { return a_count() + 1; }
};

/**
 * Basis of the S_p-antiinvariant multilinear q-fold Lie tensors in a_1..a_{z+N}, x_1..x_p.
 * For q = 1 with at least one a-letter the anchor is always a_1 and the x-relabeling permutes
 * basis words, so the signed-orbit basis of the tails is used. Otherwise the basis comes from the
 * antiinvariant projector on the full tensor basis, held in reduced echelon form.
 */
class LieSideSpace
{
public:
    LieSideSpace(int z, int N, int q, int p, bool allow_orbits = true) : layout_{z, N, p}, q_(q)
    {
        monomial_ = allow_orbits && q == 1 && layout_.a_count() >= 1;
        if (monomial_)
            build_orbits();
        else
            build_span();
    }

    std::size_t dim() const { return vectors_.size(); }
    const std::vector<exactlin::SparseVec<LieTensorTerm>>& vectors() const { return vectors_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool monomial() const { return monomial_; }
    const LetterLayout& layout() const { return layout_; }

    std::vector<Rational> coordinates(const exactlin::SparseVec<LieTensorTerm>& v) const
    {
        if (!monomial_)
            return span_.coordinates(to_indices(v), true);
        exactlin::SparseVec<Word> tails;
        for (const auto& [t, c] : v) {
            if (t.size() != 1 || t[0].anchor != 1)
                throw Error("vector is not in the subspace");
            tails.emplace(t[0].tail, c);
        }
        return orbits_.coordinates(tails);
    }

private:
    void build_orbits()
    {
        orbits_ = OrbitBasis(letter_range(2, layout_.a_count()), layout_.first_x(), layout_.p);
        for (std::size_t k = 0; k < orbits_.size(); ++k) {
            exactlin::SparseVec<LieTensorTerm> v;
            for (const auto& [tail, c] : orbits_.vector(k))
                v.emplace(LieTensorTerm{LieBasisWord(1, tail)}, c);
            vectors_.push_back(std::move(v));
            labels_.push_back(freealg::to_text(LieBasisWord(1, orbits_.reps()[k])));
        }
    }

    /// Antiinvariant projector on the full basis of q-tuples of Lie basis blocks.
    void build_span()
    {
        const LetterSet letters = letter_range(1, layout_.a_count() + layout_.p);
        for (const auto& partition : symgrp::ordered_set_partitions(letters, q_, false))
            for (auto& t : detail::lie_block_tuples(partition))
                full_.push_back(std::move(t));
        std::sort(full_.begin(), full_.end());
        full_index_ = detail::index_of(full_);
        if (full_.empty())
            return;
        auto action = [this](const symgrp::Permutation& pi) { return action_matrix(pi); };
        for (auto& v : symgrp::antiinvariant_basis(action, full_.size(), layout_.p))
            span_.insert(std::move(v));
        for (const auto& b : span_.basis()) {
            exactlin::SparseVec<LieTensorTerm> v;
            for (const auto& [k, c] : b)
                v.emplace(full_[k], c);
            vectors_.push_back(std::move(v));
        }
        for (std::size_t k : span_.pivots())
            labels_.push_back(blocks_text(full_[k], "#"));
    }

    /// Matrix of relabelling x_k ↦ x_π(k) on the full tensor basis.
    SparseMatrix action_matrix(const symgrp::Permutation& pi) const
    {
        SparseMatrix m(full_.size(), full_.size());
        for (std::size_t col = 0; col < full_.size(); ++col) {
            WordVec image;
            LieTensorTerm t;
            std::vector<LiePoly> blocks;
            for (const auto& b : full_[col]) {
                Word w = b.word();
                for (auto& l : w)
                    if (l > layout_.a_count())
                        l = layout_.x(pi(l - layout_.a_count()));
                blocks.push_back(freealg::left_normed(w));
            }
            std::vector<std::pair<LieTensorTerm, Rational>> acc{{LieTensorTerm{}, Rational(1)}};
            for (const auto& l : blocks) {
                std::vector<std::pair<LieTensorTerm, Rational>> next;
                for (const auto& [prefix, c] : acc)
                    for (const auto& [b, bc] : l.terms()) {
                        LieTensorTerm nt(prefix);
                        nt.push_back(b);
                        next.emplace_back(std::move(nt), c * bc);
                    }
                acc = std::move(next);
            }
            for (const auto& [key, c] : acc)
                m.add(full_index_.at(key), col, c);
        }
        return m;
    }

    exactlin::SparseVec<std::size_t> to_indices(const exactlin::SparseVec<LieTensorTerm>& v) const
    {
        exactlin::SparseVec<std::size_t> out;
        for (const auto& [t, c] : v) {
            auto it = full_index_.find(t);
            if (it == full_index_.end())
                throw Error("vector is not in the subspace");
            out.emplace(it->second, c);
        }
        return out;
    }

    LetterLayout layout_;
    int q_ = 1;
    bool monomial_ = false;
    OrbitBasis orbits_;
    std::vector<LieTensorTerm> full_;
    std::map<LieTensorTerm, std::size_t> full_index_;
    exactlin::Subspace<std::size_t> span_;
    std::vector<exactlin::SparseVec<LieTensorTerm>> vectors_;
    std::vector<std::string> labels_;
};

/**
 * Lie-side differential on a cochain F in degree p, at word level:
 * Σ_{i<j} (-1)^{i+j+1} F([x_i,x_j], rest) + Σ_i Σ_{z'=1..z} (-1)^{i+1} F(a_z' ← [x_i,a_z'], rest).
 */
inline WordVec lie_side_differential(const WordVec& f, int z, int N, int p)
{
    const LetterLayout layout{z, N, p};
    WordVec out;
    detail::bracket_insertion(out, f, layout.first_x(), p);
    for (int i = 1; i <= p + 1; ++i)
        for (int a = 1; a <= z; ++a) {
            std::map<Letter, detail::LetterImage> images;
            images[a] = detail::bracket_image(layout.x(i), a);
            detail::map_remaining_x(images, layout.first_x(), p, {i}, 1);
            detail::substitute_words(out, f, images, Rational(i % 2 == 1 ? 1 : -1));
        }
    return out;
}

inline std::string window_name(const std::string& kind, int z, int N, int q)
{
    std::string s = kind + "(z=" + std::to_string(z) + ",N=" + std::to_string(N);
    if (q > 0)
        s += ",q=" + std::to_string(q);
    return s + ")";
}

/**
 * The Lie-side cochain complex on degrees pmin..pmax. z = 0 is accepted so that the
 * tensor factors of the q-fold decomposition can be built. allow_orbits = false forces the
 * projector basis for q = 1 as well.
 */
inline ComplexWindow build_C(int z, int N, int q, int pmin, int pmax, bool allow_orbits = true)
{
    if (z < 0 || N < 0 || q < 1 || pmin < 0 || pmax < pmin)
        throw Error("invalid parameters for the Lie-side complex");
    ComplexWindow w(window_name("C", z, N, q), pmin, pmax, 1, pmin == 0, false);
    std::vector<LieSideSpace> spaces;
    for (int p = pmin; p <= pmax; ++p) {
        spaces.emplace_back(z, N, q, p, allow_orbits);
        w.set_space(p, spaces.back().labels());
    }
    for (int p = pmin; p < pmax; ++p) {
        const auto& src = spaces[p - pmin];
        const auto& dst = spaces[p + 1 - pmin];
        SparseMatrix d(dst.dim(), src.dim());
        for (std::size_t col = 0; col < src.dim(); ++col) {
            WordVec f;
            for (const auto& [t, c] : src.vectors()[col])
                expand_blocks(f, t, c);
            auto c = dst.coordinates(strip_words(lie_side_differential(f, z, N, p)));
            for (std::size_t r = 0; r < c.size(); ++r)
                d.set(r, col, c[r]);
        }
        w.set_differential(p, std::move(d));
    }
    return w;
}

}  // namespace prophom::complexes
