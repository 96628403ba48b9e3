#include <catch_amalgamated.hpp>

#include <prophom/freealg/pbw.hpp>
#include <prophom/freealg/text.hpp>

#include <random>

using namespace prophom;
using namespace prophom::freealg;

namespace {

// Independent oracle: nested commutators on plain word maps.
using WordMap = std::map<Word, long>;

WordMap oracle_commutator(const WordMap& u, const WordMap& v)
{
    WordMap out;
    for (const auto& [a, x] : u)
        for (const auto& [b, y] : v) {
            out[concat(a, b)] += x * y;
            out[concat(b, a)] -= x * y;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

WordMap oracle_left_normed(const Word& w)
{
    WordMap acc{{{w[0]}, 1}};
    for (std::size_t k = 1; k < w.size(); ++k)
        acc = oracle_commutator(acc, WordMap{{{w[k]}, 1}});
    return acc;
}

AssocPoly from_word_map(const WordMap& m)
{
    AssocPoly p;
    for (const auto& [w, c] : m)
        p += AssocPoly::monomial(w, c);
    return p;
}

LiePoly random_lie(std::mt19937& rng, const LetterSet& s)
{
    auto basis = lie_basis(s);
    std::uniform_int_distribution<int> coef(-3, 3);
    LiePoly p(s);
    for (const auto& b : basis)
        if (rng() % 2)
            p.add_term(b, coef(rng));
    return p;
}

LetterSet range(int a, int b)
{
    LetterSet s;
    for (int i = a; i <= b; ++i)
        s.push_back(i);
    return s;
}

LetterMap random_bijection(std::mt19937& rng, const LetterSet& s)
{
    LetterSet img(s);
    std::shuffle(img.begin(), img.end(), rng);
    LetterMap m;
    for (std::size_t i = 0; i < s.size(); ++i)
        m[s[i]] = img[i];
    return m;
}

}  // namespace

TEST_CASE("assoc_mul concatenates and extends bilinearly")
{
    CHECK(to_text(assoc_mul(AssocPoly::letter(1), AssocPoly::letter(2))) == "1*12");
    CHECK(assoc_mul(parse_assoc("1*12+-1*21"), AssocPoly::letter(3)) == parse_assoc("1*123+-1*213"));
    CHECK(assoc_mul(AssocPoly::letter(1), parse_assoc("1*23+1*32")) == parse_assoc("1*123+1*132"));
    CHECK_THROWS_WITH(assoc_mul(AssocPoly::letter(1), parse_assoc("1*12")), "non-multilinear product");
}

TEST_CASE("unit has empty support")
{
    AssocPoly one = AssocPoly::unit();
    CHECK(one.support().empty());
    CHECK(one.coeff({}) == 1);
    CHECK(assoc_mul(one, AssocPoly::letter(4)) == AssocPoly::letter(4));
}

TEST_CASE("lie_bracket on generators")
{
    LiePoly b = lie_bracket(LiePoly::generator(1), LiePoly::generator(2));
    CHECK(to_text(b) == "1*1|2");
    CHECK(lie_bracket(LiePoly::generator(2), LiePoly::generator(1)) == -b);
    auto x = [](int i) { return LiePoly::generator(i); };
    LiePoly jac = lie_bracket(lie_bracket(x(1), x(2)), x(3)) + lie_bracket(lie_bracket(x(2), x(3)), x(1)) +
                  lie_bracket(lie_bracket(x(3), x(1)), x(2));
    CHECK(jac.is_zero());
    CHECK_THROWS(lie_bracket(x(1), lie_bracket(x(1), x(2))));
}

TEST_CASE("expand_lie_to_assoc matches nested commutators")
{
    CHECK(expand_lie_to_assoc(parse_lie("1*1|2")) == parse_assoc("1*12+-1*21"));
    CHECK(expand_lie_to_assoc(parse_lie("1*1|23")) == parse_assoc("1*123+-1*213+-1*312+1*321"));
    CHECK(expand_lie_to_assoc(LiePoly()).is_zero());
    for (const auto& b : lie_basis(range(1, 6)))
        REQUIRE(expand_lie_to_assoc(LiePoly::basis(b)) == from_word_map(oracle_left_normed(b.word())));
}

TEST_CASE("strip_to_lie reads words starting with the anchor")
{
    CHECK(strip_to_lie(parse_assoc("1*12+-1*21"), 1) == parse_lie("1*1|2"));
    CHECK(strip_to_lie(parse_assoc("1*123+-1*213+-1*312+1*321"), 1) == parse_lie("1*1|23"));
    CHECK(strip_to_lie(parse_assoc("1*21"), 1).is_zero());
    CHECK_THROWS(strip_to_lie(parse_assoc("1*12"), 2));
}

TEST_CASE("relabel_lie examples")
{
    LiePoly b12 = parse_lie("1*1|2");
    CHECK(relabel_lie(b12, {{1, 2}, {2, 1}}) == -b12);
    CHECK(relabel_lie(b12, {{1, 1}, {2, 2}}) == b12);
    CHECK(relabel_lie(parse_lie("1*1|23"), {{1, 1}, {2, 3}, {3, 2}}) == parse_lie("1*1|32"));
    CHECK_THROWS(relabel_lie(b12, {{1, 2}, {2, 2}}));
}

TEST_CASE("left_normed of arbitrary words")
{
    // [x2, x1] = -[x1, x2]
    CHECK(left_normed({2, 1}) == -parse_lie("1*1|2"));
    for (const auto& perm : {Word{3, 1, 2}, Word{2, 3, 1, 4}, Word{4, 2, 1, 3}})
        CHECK(expand_lie_to_assoc(left_normed(perm)) == from_word_map(oracle_left_normed(perm)));
}

TEST_CASE("lie basis has (z-1)! elements")
{
    long f = 1;
    for (int z = 1; z <= 7; ++z) {
        if (z > 1)
            f *= z - 1;
        CHECK(static_cast<long>(lie_basis(range(1, z)).size()) == f);
    }
}

TEST_CASE("pbw_decompose examples")
{
    auto d = pbw_decompose(parse_assoc("1*12"));
    CHECK(d.degree() == 2);
    CHECK(to_text(d.component(2)) == "1*{1|}{2|}");
    CHECK(d.component(1).is_zero());

    auto r = pbw_decompose(parse_assoc("1*21"));
    CHECK(to_text(r.component(2)) == "1*{1|}{2|}");
    CHECK(to_text(r.component(1)) == "-1*{1|2}");

    auto l = pbw_decompose(parse_assoc("1*12+-1*21"));
    CHECK(l.degree() == 1);
    CHECK(l.symbol() == SymLiePoly::from_lie(parse_lie("1*1|2")));

    auto u = pbw_decompose(AssocPoly::unit());
    CHECK(u.degree() == 0);
    CHECK(u.component(0) == SymLiePoly::one());
}

TEST_CASE("poisson product and bracket")
{
    auto g = [](int i) { return SymLiePoly::generator(i); };
    CHECK(poisson_bracket(g(1), g(2)) == SymLiePoly::from_lie(parse_lie("1*1|2")));
    CHECK(to_text(poisson_mul(g(1), g(2))) == "1*{1|}{2|}");
    // Leibniz oracle: {x1, x2 x3} = [x1,x2] x3 + x2 [x1,x3]
    SymLiePoly expected = SymLiePoly::term({LieBasisWord(1, {2}), LieBasisWord(3, {})}) +
                          SymLiePoly::term({LieBasisWord(2, {}), LieBasisWord(1, {3})});
    CHECK(poisson_bracket(g(1), poisson_mul(g(2), g(3))) == expected);
    CHECK_THROWS_WITH(poisson_mul(g(1), g(1)), "non-multilinear product");
}

TEST_CASE("text round trip")
{
    LiePoly l = parse_lie("2*1|23+-1/3*1|32");
    CHECK(parse_lie(to_text(l)) == l);
    AssocPoly a = AssocPoly::monomial({12, 3, 10}, Rational(-5, 7));
    CHECK(to_text(a) == "-5/7*(12)3(10)");
    CHECK(parse_assoc(to_text(a)) == a);
}

TEST_CASE("property: round trip, injectivity, antisymmetry, Jacobi", "[property]")
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        LetterSet s = range(1, n);
        LiePoly l = random_lie(rng, s);
        REQUIRE(strip_to_lie(expand_lie_to_assoc(l), 1) == l);
        REQUIRE(expand_lie_to_assoc(l).is_zero() == l.is_zero());
        if (n > 6)
            continue;
        auto pb = pbw_decompose(expand_lie_to_assoc(l));
        if (!l.is_zero()) {
            REQUIRE(pb.degree() == 1);
            REQUIRE(pb.symbol() == SymLiePoly::from_lie(l));
        }
    }
    for (int trial = 0; trial < 40; ++trial) {
        int a = 1 + static_cast<int>(rng() % 2), b = 1 + static_cast<int>(rng() % 2), c = 1 + static_cast<int>(rng() % 2);
        LetterSet all = range(1, a + b + c);
        std::shuffle(all.begin(), all.end(), rng);
        auto take = [&](int from, int len) {
            LetterSet s(all.begin() + from, all.begin() + from + len);
            std::sort(s.begin(), s.end());
            return s;
        };
        LiePoly x = random_lie(rng, take(0, a)), y = random_lie(rng, take(a, b)), z = random_lie(rng, take(a + b, c));
        REQUIRE((lie_bracket(x, y) + lie_bracket(y, x)).is_zero());
        LiePoly jac = lie_bracket(lie_bracket(x, y), z) + lie_bracket(lie_bracket(y, z), x) +
                      lie_bracket(lie_bracket(z, x), y);
        REQUIRE(jac.is_zero());
    }
}

TEST_CASE("property: relabel_lie is a group action", "[property]")
{
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        LetterSet s = range(1, n);
        LiePoly l = random_lie(rng, s);
        LetterMap sigma = random_bijection(rng, s), tau = random_bijection(rng, s);
        REQUIRE(relabel_lie(relabel_lie(l, sigma), tau) == relabel_lie(l, compose(tau, sigma)));
    }
}

TEST_CASE("property: symbol is multiplicative when degrees add", "[property]")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        int split = 1 + static_cast<int>(rng() % (n - 1));
        std::uniform_int_distribution<int> coef(-2, 2);
        auto random_assoc = [&](const LetterSet& s) {
            AssocPoly p(s);
            Word w(s);
            do {
                p.add_unchecked(w, coef(rng));
            } while (std::next_permutation(w.begin(), w.end()));
            return p;
        };
        AssocPoly p = random_assoc(range(1, split)), q = random_assoc(range(split + 1, n));
        auto dp = pbw_decompose(p), dq = pbw_decompose(q), dpq = pbw_decompose(assoc_mul(p, q));
        if (dp.is_zero() || dq.is_zero())
            continue;
        if (dpq.degree() == dp.degree() + dq.degree())
            REQUIRE(dpq.symbol() == poisson_mul(dp.symbol(), dq.symbol()));
        // degrees add generically: the top components multiply to a nonzero symbol
        REQUIRE(dpq.degree() == dp.degree() + dq.degree());
    }
}
