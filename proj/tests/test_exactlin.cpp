#include <catch_amalgamated.hpp>

#include <prophom/exactlin/homology.hpp>
#include <prophom/exactlin/subspace.hpp>

#include <random>

using namespace prophom;
using namespace prophom::exactlin;

namespace {

SparseMatrix dense(const std::vector<std::vector<long>>& rows)
{
    SparseMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.set(r, c, rows[r][c]);
    return m;
}

// Oracle: textbook Gaussian elimination over Q on a dense copy.
std::size_t dense_rank(const SparseMatrix& m)
{
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (const auto& [rc, v] : m.entries())
        a[rc.first][rc.second] = v;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && sgn(a[piv][c]) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

SparseMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols, int density_pct)
{
    SparseMatrix m(rows, cols);
    std::uniform_int_distribution<int> val(-4, 4);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (static_cast<int>(rng() % 100) < density_pct)
                m.set(r, c, Rational(val(rng), 1 + static_cast<int>(rng() % 3)));
    return m;
}

ComplexWindow two_term(long map_value)
{
    ComplexWindow w("two", 0, 1, 1, true, true);
    w.set_space(0, std::size_t{1});
    w.set_space(1, std::size_t{1});
    w.set_differential(0, dense({{map_value}}));
    return w;
}

}  // namespace

TEST_CASE("rank examples")
{
    CHECK(rank(dense({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(SparseMatrix(3, 5)) == 0);
    CHECK(rank(SparseMatrix::identity(4)) == 4);
}

TEST_CASE("property: rank agrees with dense elimination and transpose", "[property]")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
        SparseMatrix m = random_sparse(rng, r, c, 10 + static_cast<int>(rng() % 60));
        if (trial % 4 == 0 && r > 1) {
            // force a dependent row
            for (std::size_t j = 0; j < c; ++j)
                m.set(r - 1, j, 3 * m.get(0, j) - m.get(r / 2, j));
        }
        std::size_t k = rank(m);
        REQUIRE(k == dense_rank(m));
        REQUIRE(k == rank(m.transpose()));
    }
}

TEST_CASE("homology of two-term windows")
{
    auto iso = homology(two_term(1));
    CHECK(iso.at(0).betti == 0);
    CHECK(iso.at(1).betti == 0);
    CHECK(iso.at(0).complete);
    auto zero = homology(two_term(0));
    CHECK(zero.at(0).betti == 1);
    CHECK(zero.at(1).betti == 1);
}

TEST_CASE("homology of a one-dimensional Koszul slice")
{
    // chain degrees: 1 (S^0 ⊗ V) -> 0 (S^1), x ↦ x
    ComplexWindow w("koszul1", 0, 1, -1, true, true);
    w.set_space(0, std::vector<std::string>{"x"});
    w.set_space(1, std::vector<std::string>{"1⊗x"});
    w.set_differential(1, dense({{1}}));
    auto h = homology(w);
    CHECK(h.at(1).betti == 0);
    CHECK(h.at(1).rank_out == 1);
    CHECK(h.at(0).rank_in == 1);
}

TEST_CASE("d∘d != 0 is rejected with its degree")
{
    ComplexWindow w("bad", 0, 2, 1, true, true);
    for (int p = 0; p <= 2; ++p)
        w.set_space(p, std::size_t{1});
    w.set_differential(0, dense({{1}}));
    w.set_differential(1, dense({{1}}));
    CHECK_THROWS_WITH(homology(w), Catch::Matchers::ContainsSubstring("not a complex") &&
                                       Catch::Matchers::ContainsSubstring("degree 0"));
}

TEST_CASE("edge degrees of an open window are incomplete")
{
    ComplexWindow w("open", 0, 2, 1, true, false);
    for (int p = 0; p <= 2; ++p)
        w.set_space(p, std::size_t{1});
    w.set_differential(0, dense({{1}}));
    w.set_differential(1, dense({{0}}));
    auto h = homology(w);
    CHECK(h.at(0).complete);
    CHECK(h.at(1).complete);
    CHECK_FALSE(h.at(2).complete);
    CHECK(h.complete_betti().count(2) == 0);
}

TEST_CASE("check_chain_map")
{
    ComplexWindow w("w", 0, 1, 1, true, true);
    w.set_space(0, std::size_t{2});
    w.set_space(1, std::size_t{1});
    w.set_differential(0, dense({{1, 0}}));
    ChainMap id{{0, SparseMatrix::identity(2)}, {1, SparseMatrix::identity(1)}};
    CHECK(check_chain_map(id, w, w));
    ChainMap twice{{0, Rational(2) * SparseMatrix::identity(2)}, {1, Rational(2) * SparseMatrix::identity(1)}};
    CHECK(check_chain_map(twice, w, w));
    ChainMap swap{{0, dense({{0, 1}, {1, 0}})}, {1, SparseMatrix::identity(1)}};
    CHECK_FALSE(check_chain_map(swap, w, w));
    ChainMap bad{{0, SparseMatrix::identity(3)}};
    CHECK_THROWS(check_chain_map(bad, w, w));
}

TEST_CASE("cone of an identity map is acyclic", "[property]")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        // 0 -> Q^a -> Q^b -> 0 with a random differential
        std::size_t a = 1 + rng() % 4, b = 2 + rng() % 4;
        SparseMatrix d0 = random_sparse(rng, b, a, 50);
        ComplexWindow w("r", 0, 1, 1, true, true);
        w.set_space(0, a);
        w.set_space(1, b);
        w.set_differential(0, d0);
        ChainMap id{{0, SparseMatrix::identity(a)}, {1, SparseMatrix::identity(b)}};
        REQUIRE(check_chain_map(id, w, w));
        auto c = cone(id, w, w);
        auto h = homology(c);
        for (const auto& d : h.degrees)
            REQUIRE(d.betti == 0);
    }
}

TEST_CASE("subspace coordinates and membership")
{
    Subspace<int> s;
    CHECK(s.insert({{1, 1}, {2, 1}}));
    CHECK(s.insert({{2, 1}, {3, 2}}));
    CHECK_FALSE(s.insert({{1, 1}, {3, -2}}));
    CHECK(s.dim() == 2);
    SparseVec<int> v{{1, 2}, {2, 5}, {3, 6}};
    auto c = s.coordinates(v);
    SparseVec<int> back;
    for (std::size_t k = 0; k < c.size(); ++k)
        axpy(back, c[k], s.basis()[k]);
    CHECK(back == v);
    CHECK_THROWS(s.coordinates({{3, 1}}));
}
