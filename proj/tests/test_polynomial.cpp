#include "ggc/errors.hpp"
#include "ggc/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ggc;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

Polynomial random_poly(std::mt19937& rng, const std::string& blocks, int n, int terms, int maxdeg)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), bl(0, int(blocks.size()) - 1), idx(1, n), deg(0, maxdeg);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        Polynomial m(frac(num(rng), den(rng)));
        int d = deg(rng);
        for (int k = 0; k < d; ++k)
            m *= Polynomial::var(blocks[bl(rng)], idx(rng));
        p += m;
    }
    return p;
}

} // namespace

TEST(Rational, Canonical)
{
    EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
    EXPECT_EQ(to_string(parse_rational("-3/6")), "-1/2");
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("a"), ParseError);
}

TEST(Polynomial, Arithmetic)
{
    EXPECT_EQ((P("x1 + x2") * P("x1 - x2")), P("x1^2 - x2^2"));
    EXPECT_EQ(P("x1 x2") * frac(1, 24), P("1/24 x1 x2"));
    EXPECT_EQ(P("x1 + y1").pow(2), P("x1^2 + 2 x1 y1 + y1^2"));
    EXPECT_TRUE((P("x1") - P("x1")).is_zero());
    EXPECT_EQ(P("x1 + y1").pow(2).to_string(), "x1^2 + 2 x1 y1 + y1^2");
}

TEST(Polynomial, PrintParseRoundTrip)
{
    for (const char* s : {"x3 + y3 + 1/2 x1 y2 - 1/2 x2 y1", "1/2 x3 + 1/24 x1 x2", "-x1", "0", "3", "-1/2 x1^2 z3"}) {
        Polynomial p = P(s);
        EXPECT_EQ(P(p.to_string().c_str()), p) << s;
    }
    EXPECT_EQ(P("x3 + y3 + 1/2 x1 y2 - 1/2 x2 y1").to_string(), "x3 + y3 + 1/2 x1 y2 - 1/2 x2 y1");
    EXPECT_THROW(P("x1 +"), ParseError);
    EXPECT_THROW(P("1/ x1"), ParseError);
    EXPECT_THROW(P("x"), ParseError);
    EXPECT_THROW(P(""), ParseError);
}

TEST(Polynomial, Substitute)
{
    Bindings b;
    b.bind(Var{'x', 3}, P("1/2 x3 + 1/24 x1 x2"));
    EXPECT_EQ(substitute(P("x3"), b), P("1/2 x3 + 1/24 x1 x2"));

    Bindings id;
    id.identity_block('x', 3).identity_block('y', 3);
    Polynomial p = P("x1 y2 - 3 x3^2 + 1/5");
    EXPECT_EQ(substitute(p, id), p);

    Bindings h;
    h.bind(Var{'x', 1}, P("z1")).bind(Var{'x', 2}, P("y2 - z2"));
    EXPECT_EQ(substitute(P("x1 x2"), h), P("z1 y2 - z1 z2"));

    Bindings partial;
    partial.bind(Var{'x', 1}, P("y1"));
    try {
        substitute(P("x1 x2"), partial);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind, "UNBOUND_VARIABLE");
    }
}

TEST(Polynomial, HomogeneousWeight)
{
    std::vector<int> w{1, 1, 2};
    EXPECT_EQ(homogeneous_weight(P("x3"), w), (HomWeight{HomWeight::Homogeneous, 2}));
    EXPECT_EQ(homogeneous_weight(P("x1 x2"), w), (HomWeight{HomWeight::Homogeneous, 2}));
    EXPECT_EQ(homogeneous_weight(P("x1 + x3"), w).kind, HomWeight::NonHomogeneous);
    EXPECT_EQ(homogeneous_weight(Polynomial(), w).kind, HomWeight::Zero);
}

TEST(MultiIndex, MonomialsOfWeight)
{
    std::vector<MultiIndex> expect{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 1}};
    EXPECT_EQ(monomials_of_weight({1, 1, 2}, 2), expect);
    EXPECT_EQ(monomials_of_weight({1, 1, 2}, 0), (std::vector<MultiIndex>{{0, 0, 0}}));
    auto engel = monomials_of_weight({1, 1, 2, 3}, 3);
    EXPECT_EQ(engel.size(), 7u);
    EXPECT_NE(std::find(engel.begin(), engel.end(), MultiIndex{0, 0, 0, 1}), engel.end());
}

TEST(MultiIndex, CountMatchesBoxEnumeration)
{
    for (std::vector<int> w : {std::vector<int>{1, 1, 2}, {1, 1, 2, 3}, {1, 1, 2, 3, 3}, {1, 1, 1, 1, 2}}) {
        for (int M = 0; M <= 6; ++M) {
            std::size_t count = 0;
            MultiIndex g(w.size(), 0);
            while (true) {
                if (weighted_degree(g, w) == M) ++count;
                std::size_t j = 0;
                while (j < g.size() && g[j] == M) g[j++] = 0;
                if (j == g.size()) break;
                ++g[j];
            }
            EXPECT_EQ(monomials_of_weight(w, M).size(), count);
        }
    }
}

TEST(PolynomialProperty, RingAxioms)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_poly(rng, "xy", 3, 5, 3), b = random_poly(rng, "xy", 3, 5, 3), c = random_poly(rng, "xy", 3, 5, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) - b, a);
    }
}

TEST(PolynomialProperty, SubstitutionComposes)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_poly(rng, "x", 3, 5, 3);
        PolyVec s1, s2;
        for (int j = 0; j < 3; ++j) {
            s1.push_back(random_poly(rng, "x", 3, 3, 2));
            s2.push_back(random_poly(rng, "x", 3, 3, 2));
        }
        Bindings b1, b2;
        b1.bind_block('x', s1);
        b2.bind_block('x', s2);
        Bindings composed;
        composed.bind_block('x', substitute(s1, b2));
        EXPECT_EQ(substitute(substitute(p, b1), b2), substitute(p, composed));
    }
}

TEST(PolynomialProperty, WeightIsAdditive)
{
    std::vector<int> w{1, 1, 2, 3};
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int Ma = trial % 4, Mb = (trial / 4) % 4;
        Polynomial a, b;
        for (const auto& g : monomials_of_weight(w, Ma))
            a += Polynomial::power_product('x', g) * Rational(int(rng() % 5) + 1);
        for (const auto& g : monomials_of_weight(w, Mb))
            b += Polynomial::power_product('x', g) * Rational(int(rng() % 5) - 7);
        auto hw = homogeneous_weight(a * b, w);
        EXPECT_EQ(hw.kind, HomWeight::Homogeneous);
        EXPECT_EQ(hw.weight, Ma + Mb);
    }
}
