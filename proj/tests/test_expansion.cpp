#include "ggc/errors.hpp"
#include "ggc/expansion.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ggc;

namespace {

QMatrix random_matrix(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    QMatrix c(n, std::vector<Rational>(n));
    for (auto& row : c)
        for (auto& v : row) v = frac(num(rng), den(rng));
    return c;
}

struct Expected {
    Rational c;
    SymbolFactor f1, f2;
};

void expect_terms(const std::vector<FormalSymbolTerm>& got, const std::vector<Expected>& want)
{
    ASSERT_EQ(got.size(), want.size());
    for (const auto& w : want) {
        bool found = false;
        for (const auto& t : got)
            if (t.factors == std::vector<SymbolFactor>{w.f1, w.f2} && t.i_power == 0) {
                EXPECT_EQ(t.coeff, w.c) << render_term(t, true);
                found = true;
            }
        EXPECT_TRUE(found) << to_string(w.c) << " " << index_label(w.f1.delta) << " " << index_label(w.f1.X) << " / "
                           << index_label(w.f2.delta) << " " << index_label(w.f2.X);
    }
}

const MultiIndex z3{0, 0, 0}, e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, e12{1, 1, 0}, e11{2, 0, 0}, e22{0, 2, 0};

SymbolFactor s1(MultiIndex d, MultiIndex x) { return {SymbolId::S1, std::move(d), std::move(x)}; }
SymbolFactor s2(MultiIndex d, MultiIndex x) { return {SymbolId::S2, std::move(d), std::move(x)}; }

} // namespace

TEST(Compose, KohnNirenbergShape)
{
    auto law = make_law(heisenberg_algebra(1));
    CanonicalBasis basis(law, 3);
    auto e = compose_expansion(basis, builtin_tau(*law, BuiltinTau::KN), 3);
    for (int j = 0; j <= 3; ++j) {
        EXPECT_EQ(e.orders[j].size(), basis.indices(j).size());
        for (const auto& t : e.orders[j]) {
            EXPECT_EQ(t.coeff, 1);
            EXPECT_TRUE(is_zero_index(t.factors[0].X));
            EXPECT_TRUE(is_zero_index(t.factors[1].delta));
            EXPECT_EQ(t.factors[0].delta, t.factors[1].X);
        }
    }
}

TEST(Compose, HeisenbergHalfLog)
{
    auto law = make_law(heisenberg_algebra(1));
    CanonicalBasis basis(law, 2);
    auto e = compose_expansion(basis, builtin_tau(*law, BuiltinTau::HalfLog), 2);
    expect_terms(e.orders[0], {{1, s1(z3, z3), s2(z3, z3)}});
    Rational h = frac(1, 2), q = frac(1, 4), o = frac(1, 8);
    expect_terms(e.orders[1], {
        {-h, s1(z3, e1), s2(e1, z3)}, {-h, s1(z3, e2), s2(e2, z3)},
        {h, s1(e1, z3), s2(z3, e1)}, {h, s1(e2, z3), s2(z3, e2)},
    });
    expect_terms(e.orders[2], {
        {q, s1(z3, e11), s2(e11, z3)}, {q, s1(z3, e12), s2(e12, z3)}, {q, s1(z3, e22), s2(e22, z3)},
        {q, s1(e11, z3), s2(z3, e11)}, {q, s1(e12, z3), s2(z3, e12)}, {q, s1(e22, z3), s2(z3, e22)},
        {-q, s1(e1, e1), s2(e1, e1)}, {-q, s1(e1, e2), s2(e2, e1)},
        {-q, s1(e2, e1), s2(e1, e2)}, {-q, s1(e2, e2), s2(e2, e2)},
        {-h, s1(z3, e3), s2(e3, z3)}, {h, s1(e3, z3), s2(z3, e3)},
        {frac(-3, 8), s1(z3, e3), s2(e12, z3)},
        {o, s1(e2, e3), s2(e1, z3)}, {-o, s1(e1, e3), s2(e2, z3)},
        {o, s1(e1, z3), s2(e2, e3)}, {-o, s1(e2, z3), s2(e1, e3)},
        {o, s1(e12, z3), s2(z3, e3)},
    });
}

TEST(Compose, OrderBookkeeping)
{
    std::mt19937 rng(5);
    std::vector<std::pair<std::shared_ptr<const GroupLaw>, QuantizingFunction>> cases;
    auto h1 = make_law(heisenberg_algebra(1));
    cases.push_back({h1, heisenberg_family(1, random_matrix(rng, 2))});
    cases.push_back({h1, builtin_tau(*h1, "right")});
    auto en = make_law(engel_algebra());
    cases.push_back({en, builtin_tau(*en, "half-log")});
    for (const auto& [law, tau] : cases) {
        CanonicalBasis basis(law, 3);
        auto e = compose_expansion(basis, tau, 3);
        ASSERT_EQ(e.orders.size(), 4u);
        for (int j = 0; j <= 3; ++j)
            for (const auto& t : e.orders[j]) ASSERT_EQ(t.order(law->weights()), j);
    }
}

TEST(Compose, DeltaNormalizationSound)
{
    for (auto alg : {heisenberg_algebra(1), engel_algebra()}) {
        auto law = make_law(alg);
        CanonicalBasis basis(law, 4);
        DeltaProducts dp(basis);
        for (const auto& a : basis.indices_up_to(2))
            for (const auto& b : basis.indices_up_to(2)) {
                Polynomial rebuilt;
                for (const auto& [g, d] : dp.product(a, b)) rebuilt += basis.q_tilde(g) * d;
                ASSERT_EQ(rebuilt, basis.q_tilde(a) * basis.q_tilde(b));
            }
    }
}

TEST(Adjoint, SymmetricCollapse)
{
    std::mt19937 rng(3);
    std::vector<std::pair<std::shared_ptr<const GroupLaw>, QuantizingFunction>> cases;
    for (auto alg : {heisenberg_algebra(1), heisenberg_algebra(2), engel_algebra(), free_nilpotent_2_3()}) {
        auto law = make_law(alg);
        cases.push_back({law, builtin_tau(*law, "half-log")});
    }
    auto h1 = make_law(heisenberg_algebra(1));
    cases.push_back({h1, builtin_tau(*h1, "mr")});
    cases.push_back({h1, heisenberg_family(1, random_matrix(rng, 2))});
    for (const auto& [law, tau] : cases) {
        CanonicalBasis basis(law, 3);
        auto e = adjoint_expansion(basis, tau, 3);
        ASSERT_EQ(e.term_count(), 1u) << law->algebra.name;
        const auto& t = e.orders[0][0];
        EXPECT_EQ(t.coeff, 1);
        EXPECT_EQ(t.factors.size(), 1u);
        EXPECT_EQ(t.factors[0].sym, SymbolId::SStar);
        EXPECT_TRUE(is_zero_index(t.factors[0].X));
    }
}

TEST(Adjoint, KohnNirenbergAndRight)
{
    auto law = make_law(heisenberg_algebra(1));
    CanonicalBasis basis(law, 2);
    auto e = adjoint_expansion(basis, builtin_tau(*law, "kn"), 2);
    for (int j = 0; j <= 2; ++j) {
        ASSERT_EQ(e.orders[j].size(), basis.indices(j).size());
        for (const auto& t : e.orders[j]) {
            EXPECT_EQ(t.coeff, 1);
            EXPECT_EQ(t.factors[0].delta, t.factors[0].X);
        }
    }
    auto r1 = make_law(abelian_algebra(1));
    CanonicalBasis b1(r1, 1);
    auto right = builtin_tau(*r1, "right");
    auto ar = adjoint_expansion(b1, right, 1);
    auto table = adjoint_coeffs(b1, right, 1);
    ASSERT_EQ(ar.orders[1].size(), 1u);
    EXPECT_EQ(ar.orders[1][0].coeff, table.get({1}, {{1}}));
    EXPECT_EQ(ar.orders[1][0].coeff, -1);
}

TEST(Change, IdentityAndWeyl)
{
    auto law = make_law(heisenberg_algebra(1));
    CanonicalBasis basis(law, 3);
    auto id = change_expansion(basis, builtin_tau(*law, "kn"), ChangeDirection::TauToKN, 3);
    ASSERT_EQ(id.term_count(), 1u);
    EXPECT_EQ(render_text(id), "omega_0 = (s)\n");

    auto r1 = make_law(abelian_algebra(1));
    CanonicalBasis b1(r1, 2);
    auto w = change_expansion(b1, builtin_tau(*r1, "half-log"), ChangeDirection::TauToKN, 2);
    Rational expect[] = {1, frac(-1, 2), frac(1, 4)};
    for (int j = 0; j <= 2; ++j) {
        ASSERT_EQ(w.orders[j].size(), 1u);
        EXPECT_EQ(w.orders[j][0].coeff, expect[j]);
        EXPECT_EQ(w.orders[j][0].factors[0].delta, MultiIndex{j});
        EXPECT_EQ(w.orders[j][0].factors[0].X, MultiIndex{j});
    }
}

TEST(Change, RoundTripIsIdentity)
{
    std::mt19937 rng(17);
    std::vector<std::pair<std::shared_ptr<const GroupLaw>, QuantizingFunction>> cases;
    auto h1 = make_law(heisenberg_algebra(1));
    cases.push_back({h1, builtin_tau(*h1, "half-log")});
    cases.push_back({h1, builtin_tau(*h1, "right")});
    cases.push_back({h1, heisenberg_family(1, random_matrix(rng, 2))});
    auto en = make_law(engel_algebra());
    cases.push_back({en, builtin_tau(*en, "half-log")});
    for (const auto& [law, tau] : cases) {
        CanonicalBasis basis(law, 3);
        auto to = change_expansion(basis, tau, ChangeDirection::TauToKN, 3);
        auto from = change_expansion(basis, tau, ChangeDirection::KNToTau, 3);
        for (const auto& e : {compose_expansions(basis, from, to, 3), compose_expansions(basis, to, from, 3)}) {
            ASSERT_EQ(e.term_count(), 1u) << render_text(e);
            EXPECT_EQ(e.orders[0][0].coeff, 1);
        }
    }
}

TEST(Poisson, Check)
{
    for (auto alg : {heisenberg_algebra(1), heisenberg_algebra(2), engel_algebra(), abelian_algebra(2)}) {
        auto law = make_law(alg);
        CanonicalBasis basis(law, 1);
        auto r = poisson_check(basis, builtin_tau(*law, "half-log"));
        EXPECT_TRUE(r.ok) << alg.name << ": " << (r.mismatches.empty() ? "" : r.mismatches[0]);
    }
    auto h1 = make_law(heisenberg_algebra(1));
    CanonicalBasis basis(h1, 1);
    EXPECT_TRUE(poisson_check(basis, builtin_tau(*h1, "mr")).ok);
    std::mt19937 rng(23);
    EXPECT_TRUE(poisson_check(basis, heisenberg_family(1, random_matrix(rng, 2))).ok);

    auto kn = poisson_check(basis, builtin_tau(*h1, "kn"));
    EXPECT_FALSE(kn.ok);
    EXPECT_FALSE(kn.mismatches.empty());

    // omega_1 is -(i/2) times the bracket, so +(i/2) times it differs
    auto omega = compose_expansion(basis, builtin_tau(*h1, "half-log"), 1);
    Expansion first{"", "", 1, {{}, omega.orders[1]}};
    auto minus = scaled(poisson_expansion(basis), frac(-1, 2), 1);
    auto plus = scaled(poisson_expansion(basis), frac(1, 2), 1);
    EXPECT_TRUE(first == minus);
    EXPECT_FALSE(first == plus);

    GradedLieAlgebra graded{"graded", 2, {1, 2}, {}};
    CanonicalBasis gb(make_law(graded), 1);
    EXPECT_THROW(poisson_expansion(gb), Error);
}

TEST(Render, Text)
{
    auto law = make_law(heisenberg_algebra(1));
    CanonicalBasis basis(law, 1);
    auto e = compose_expansion(basis, builtin_tau(*law, "half-log"), 1);
    EXPECT_EQ(render_text(e),
        "omega_0 = (s1)(s2)\n"
        "omega_1 = -1/2 (X^{e2} s1)(D^{e2} s2) - 1/2 (X^{e1} s1)(D^{e1} s2) + 1/2 (D^{e2} s1)(X^{e2} s2) + 1/2 (D^{e1} s1)(X^{e1} s2)\n");
    Expansion empty{"compose", "x", 2, {{}, {}, {}}};
    EXPECT_EQ(render_text(empty), "0\n");
    auto p = poisson_expansion(basis);
    EXPECT_EQ(render_text(p),
        "omega_1 = -i (X^{e2} s1)(D^{e2} s2) - i (X^{e1} s1)(D^{e1} s2) + i (D^{e2} s1)(X^{e2} s2) + i (D^{e1} s1)(X^{e1} s2)\n");
}

TEST(Render, JsonRoundTrip)
{
    std::vector<Expansion> all;
    for (auto alg : {heisenberg_algebra(1), engel_algebra()}) {
        auto law = make_law(alg);
        CanonicalBasis basis(law, 3);
        all.push_back(compose_expansion(basis, builtin_tau(*law, "half-log"), 3));
        all.push_back(adjoint_expansion(basis, builtin_tau(*law, "kn"), 3));
        all.push_back(change_expansion(basis, builtin_tau(*law, "right"), ChangeDirection::KNToTau, 3));
        all.push_back(poisson_expansion(basis));
    }
    for (const auto& e : all) {
        auto text = render_json(e);
        auto back = parse_expansion_json(text);
        EXPECT_EQ(back, e);
        EXPECT_EQ(back.kind, e.kind);
        EXPECT_EQ(render_json(back), text);
    }
    EXPECT_THROW(parse_expansion_json("{\"kind\":1}"), ParseError);
    EXPECT_THROW(parse_expansion_json("{\"kind\":\"c\",\"tau\":\"t\",\"max_order\":1,\"orders\":[{\"j\":0,\"terms\":[{\"c\":\"1\",\"i_power\":0,\"factors\":[{\"sym\":\"q\",\"delta\":[0],\"X\":[0]}]}]}]}"), ParseError);
}
