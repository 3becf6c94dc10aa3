#include "ggc/coefficients.hpp"

#include "ggc/errors.hpp"

namespace ggc {

std::string table_kind_name(TableKind k)
{
    switch (k) {
    case TableKind::ChangeToKN: return "change_to_kn";
    case TableKind::ChangeFromKN: return "change_from_kn";
    case TableKind::Adjoint: return "adjoint";
    case TableKind::ComposeP1: return "compose_p1";
    case TableKind::ComposeP2: return "compose_p2";
    }
    return "";
}

TableKind parse_table_kind(const std::string& s)
{
    for (auto k : {TableKind::ChangeToKN, TableKind::ChangeFromKN, TableKind::Adjoint, TableKind::ComposeP1, TableKind::ComposeP2})
        if (table_kind_name(k) == s) return k;
    throw ParseError("unknown table kind '" + s + "'");
}

Rational CoefficientTable::get(const MultiIndex& alpha, const std::vector<MultiIndex>& split) const
{
    for (const auto& e : entries)
        if (e.alpha == alpha && e.split == split) return e.c;
    return 0;
}

std::vector<TableEntry> CoefficientTable::for_alpha(const MultiIndex& alpha) const
{
    std::vector<TableEntry> out;
    for (const auto& e : entries)
        if (e.alpha == alpha) out.push_back(e);
    return out;
}

std::map<MultiIndex, Rational> solve_in_qtilde_basis(const CanonicalBasis& basis, const Polynomial& f, char block)
{
    auto c = basis.expand_qtilde(f, block);
    if (rebuild_qtilde(basis, c, block) != f) throw Error("BASIS_DEFICIENT", "nonzero reconstruction residual");
    return c;
}

std::map<Split, Rational> solve_in_qtilde_basis2(const CanonicalBasis& basis, const Polynomial& f, char first, char second)
{
    const auto& law = basis.law();
    int n = law.dim();
    Bindings b;
    b.bind_block('y', law.multiply(symbolic_point('z', n), symbolic_point('w', n))).identity_block('z', n);
    Polynomial g = substitute(f, b);
    auto c = basis.expand_qtilde2(g, first, second);
    if (rebuild_qtilde2(basis, c, first, second) != g) throw Error("BASIS_DEFICIENT", "nonzero reconstruction residual");
    return c;
}

namespace {

void check_weight(const Polynomial& f, const std::vector<int>& w, int expect)
{
    auto hw = homogeneous_weight(f, w);
    if (hw.kind == HomWeight::NonHomogeneous || (hw.kind == HomWeight::Homogeneous && hw.weight != expect))
        throw Error("STRUCTURE_VIOLATION", "expanded polynomial is not homogeneous of weight " + std::to_string(expect));
}

void require_hp(const GroupLaw& law, const QuantizingFunction& tau)
{
    auto rep = validate_hp(law, tau);
    if (!rep.ok) throw Error("HP_VIOLATION", "quantizing function fails the homogeneity condition");
}

CoefficientTable one_block_table(const CanonicalBasis& basis, const PolyVec& map, TableKind kind, int M)
{
    if (M > basis.max_weight()) throw Error("WEIGHT_EXCEEDED", "max weight " + std::to_string(M) + " exceeds basis");
    CoefficientTable t{kind, M, {}};
    Bindings b;
    b.bind_block('x', map);
    for (const auto& a : basis.indices_up_to(M)) {
        Polynomial f = substitute(basis.q(a), b);
        check_weight(f, basis.weights(), weighted_degree(a, basis.weights()));
        for (const auto& [a2, c] : solve_in_qtilde_basis(basis, f, 'y'))
            t.entries.push_back({a, {a2}, c});
    }
    return t;
}

} // namespace

CoefficientTable change_coeffs(const CanonicalBasis& basis, const QuantizingFunction& tau, ChangeDirection dir, int M)
{
    const auto& law = basis.law();
    require_hp(law, tau);
    PolyVec ty = tau_at(tau, symbolic_point('y', law.dim()));
    if (dir == ChangeDirection::TauToKN) return one_block_table(basis, ty, TableKind::ChangeToKN, M);
    return one_block_table(basis, GroupLaw::inverse(ty), TableKind::ChangeFromKN, M);
}

CoefficientTable adjoint_coeffs(const CanonicalBasis& basis, const QuantizingFunction& tau, int M)
{
    require_hp(basis.law(), tau);
    return one_block_table(basis, adjoint_map(basis.law(), tau), TableKind::Adjoint, M);
}

std::pair<CoefficientTable, CoefficientTable> composition_coeffs(const CanonicalBasis& basis, const QuantizingFunction& tau, int M)
{
    const auto& law = basis.law();
    require_hp(law, tau);
    if (M > basis.max_weight()) throw Error("WEIGHT_EXCEEDED", "max weight " + std::to_string(M) + " exceeds basis");
    PMaps pm = p_maps(law, tau);
    CoefficientTable t1{TableKind::ComposeP1, M, {}}, t2{TableKind::ComposeP2, M, {}};
    Bindings b1, b2;
    b1.bind_block('x', pm.p1);
    b2.bind_block('x', pm.p2);
    for (const auto& a : basis.indices_up_to(M)) {
        int wa = weighted_degree(a, basis.weights());
        Polynomial f1 = substitute(basis.q(a), b1);
        check_weight(f1, basis.weights(), wa);
        // q_a(p1) = sum c q~_{a1}(z) q~_{a2}(z^{-1} y)
        for (const auto& [s, c] : solve_in_qtilde_basis2(basis, f1, 'z', 'w'))
            t1.entries.push_back({a, {s.first, s.second}, c});
        Polynomial f2 = substitute(basis.q(a), b2);
        check_weight(f2, basis.weights(), wa);
        // q_b(p2) = sum c q~_{b1}(z^{-1} y) q~_{b2}(z)
        for (const auto& [s, c] : solve_in_qtilde_basis2(basis, f2, 'w', 'z'))
            t2.entries.push_back({a, {s.first, s.second}, c});
    }
    return {t1, t2};
}

} // namespace ggc
