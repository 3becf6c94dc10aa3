#pragma once

#include "ggc/tau.hpp"

namespace ggc {

enum class TableKind { ChangeToKN, ChangeFromKN, Adjoint, ComposeP1, ComposeP2 };
std::string table_kind_name(TableKind k);
TableKind parse_table_kind(const std::string& s);

struct TableEntry {
    MultiIndex alpha;
    std::vector<MultiIndex> split; // one index (single block) or two
    Rational c;
};

struct CoefficientTable {
    TableKind kind;
    int max_weight = 0;
    std::vector<TableEntry> entries; // ordered by alpha (basis order), then split

    Rational get(const MultiIndex& alpha, const std::vector<MultiIndex>& split) const;
    std::vector<TableEntry> for_alpha(const MultiIndex& alpha) const;
};

// one-block: f(block) = sum c q~_a(block); Error BASIS_DEFICIENT if the rebuild differs
std::map<MultiIndex, Rational> solve_in_qtilde_basis(const CanonicalBasis& basis, const Polynomial& f, char block);
// two-block: f(y, z) with y = z w substituted, expanded as sum c q~_{a1}(first) q~_{a2}(second),
// where first/second name the blocks 'z' and 'w' in the requested order
std::map<Split, Rational> solve_in_qtilde_basis2(const CanonicalBasis& basis, const Polynomial& f, char first, char second);

enum class ChangeDirection { TauToKN, KNToTau };

CoefficientTable change_coeffs(const CanonicalBasis& basis, const QuantizingFunction& tau, ChangeDirection dir, int M);
CoefficientTable adjoint_coeffs(const CanonicalBasis& basis, const QuantizingFunction& tau, int M);
std::pair<CoefficientTable, CoefficientTable> composition_coeffs(const CanonicalBasis& basis, const QuantizingFunction& tau, int M);

} // namespace ggc
