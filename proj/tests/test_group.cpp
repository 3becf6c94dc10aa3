#include "ggc/errors.hpp"
#include "ggc/group.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

using namespace ggc;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
} // namespace

TEST(Algebra, Validate)
{
    EXPECT_TRUE(validate_algebra(heisenberg_algebra(1)).ok);
    EXPECT_TRUE(validate_algebra(abelian_algebra(3)).ok);
    EXPECT_TRUE(validate_algebra(engel_algebra()).ok);
    EXPECT_TRUE(validate_algebra(free_nilpotent_2_3()).ok);

    auto bad = heisenberg_algebra(1);
    bad.weights = {1, 1, 3};
    auto rep = validate_algebra(bad);
    ASSERT_FALSE(rep.ok);
    EXPECT_EQ(rep.violations[0].kind, "gradation");
    EXPECT_EQ(rep.violations[0].indices, (std::vector<int>{1, 2, 3}));

    GradedLieAlgebra nj;
    nj.dim = 5;
    nj.weights = {1, 1, 1, 2, 3};
    nj.brackets = {{0, 1, 3, Rational(1)}, {2, 3, 4, Rational(1)}};
    rep = validate_algebra(nj);
    ASSERT_FALSE(rep.ok);
    EXPECT_EQ(rep.violations[0].kind, "jacobi");
    EXPECT_EQ(rep.violations[0].indices, (std::vector<int>{1, 2, 3}));
}

TEST(Algebra, Step)
{
    EXPECT_EQ(abelian_algebra(2).nilpotency_step(), 1);
    EXPECT_EQ(heisenberg_algebra(2).nilpotency_step(), 2);
    EXPECT_EQ(engel_algebra().nilpotency_step(), 3);
    EXPECT_EQ(free_nilpotent_2_3().nilpotency_step(), 3);
    EXPECT_EQ(heisenberg_algebra(2).homogeneous_dimension(), 6);
}

TEST(GroupLaw, Heisenberg)
{
    auto l1 = bch_group_law(heisenberg_algebra(1));
    EXPECT_EQ(l1.R[0], P("x1 + y1"));
    EXPECT_EQ(l1.R[1], P("x2 + y2"));
    EXPECT_EQ(l1.R[2], P("x3 + y3 + 1/2 x1 y2 - 1/2 x2 y1"));
    auto l2 = bch_group_law(heisenberg_algebra(2));
    EXPECT_EQ(l2.R[4], P("x5 + y5 + 1/2 x1 y3 - 1/2 x3 y1 + 1/2 x2 y4 - 1/2 x4 y2"));
}

TEST(GroupLaw, Abelian)
{
    auto l = bch_group_law(abelian_algebra(2));
    EXPECT_EQ(l.R[0], P("x1 + y1"));
    EXPECT_EQ(l.R[1], P("x2 + y2"));
}

TEST(GroupLaw, EngelTwelfth)
{
    auto l = bch_group_law(engel_algebra());
    Monomial m = (P("x1^2 y2").terms().begin())->first;
    EXPECT_EQ(l.R[3].coefficient(m), frac(1, 12));
    EXPECT_TRUE(check_associativity(l));
}

TEST(GroupLaw, Multiply)
{
    auto l = bch_group_law(heisenberg_algebra(1));
    auto r = l.multiply(constant_point({1, 0, 0}), constant_point({0, 1, 0}));
    EXPECT_EQ(r, constant_point({1, 1, frac(1, 2)}));
    auto x = symbolic_point('x', 3);
    auto e = l.multiply(x, GroupLaw::inverse(x));
    for (const auto& c : e)
        EXPECT_TRUE(c.is_zero());
    EXPECT_EQ(l.multiply(l.identity(), symbolic_point('y', 3)), symbolic_point('y', 3));
}

TEST(GroupLaw, Invariants)
{
    auto t0 = std::chrono::steady_clock::now();
    for (auto alg : {heisenberg_algebra(1), heisenberg_algebra(2), engel_algebra(), free_nilpotent_2_3(), abelian_algebra(3)}) {
        auto l = bch_group_law(alg);
        int n = l.dim();
        EXPECT_TRUE(check_associativity(l)) << alg.name;
        EXPECT_TRUE(check_law_homogeneity(l)) << alg.name;
        auto x = symbolic_point('x', n);
        EXPECT_EQ(l.multiply(x, l.identity()), x);
        for (int j = 0; j < n; ++j) {
            // triangular dependence and bi-homogeneity
            for (const auto& [m, c] : l.R[j].terms()) {
                for (const auto& f : m.factors)
                    EXPECT_LE(Var::from_key(f.first).index, j + 1);
                EXPECT_EQ(monomial_weight(m, alg.weights), alg.weights[j]);
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_LT(secs, 5.0);
}

TEST(GroupLaw, CorruptedLawFailsHomogeneity)
{
    auto l = bch_group_law(heisenberg_algebra(1));
    l.R[2] = P("x3 + y3 + x1 y2 - 1/2 x2 y1 + x1");
    EXPECT_FALSE(check_law_homogeneity(l));
    EXPECT_TRUE(check_law_homogeneity(bch_group_law(abelian_algebra(2))));
}

TEST(QuasiNorm, Basics)
{
    auto h = heisenberg_algebra(1);
    EXPECT_DOUBLE_EQ(quasi_norm({0, 0, 1}, h, NormKind::Inf), 1.0);
    EXPECT_DOUBLE_EQ(quasi_norm({1, 0, 0}, h, NormKind::Koranyi), 1.0);
    EXPECT_THROW(quasi_norm({1, 0, 0, 0}, engel_algebra(), NormKind::Koranyi), Error);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-2, 2);
    for (auto alg : {h, engel_algebra()}) {
        for (int t = 0; t < 20; ++t) {
            std::vector<double> x(alg.dim), d(alg.dim), inv(alg.dim);
            for (int j = 0; j < alg.dim; ++j) {
                x[j] = u(rng);
                d[j] = x[j] * std::pow(2.0, alg.weights[j]);
                inv[j] = -x[j];
            }
            std::vector<NormKind> kinds{NormKind::Inf, NormKind::P};
            if (alg.is_heisenberg()) kinds.push_back(NormKind::Koranyi);
            for (auto k : kinds) {
                double nx = quasi_norm(x, alg, k, 3.0);
                EXPECT_NEAR(quasi_norm(d, alg, k, 3.0), 2 * nx, 1e-12 * (1 + nx));
                EXPECT_NEAR(quasi_norm(inv, alg, k, 3.0), nx, 1e-12);
                EXPECT_GT(nx, 0.0);
            }
        }
    }
}
