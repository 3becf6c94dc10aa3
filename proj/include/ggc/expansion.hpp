#pragma once

#include "ggc/coefficients.hpp"

#include <functional>

namespace ggc {

enum class SymbolId { S1, S2, SStar, S };
std::string symbol_name(SymbolId s); // s1, s2, s*, s
SymbolId parse_symbol_id(const std::string& s);

// (Delta^delta X^X sym)
struct SymbolFactor {
    SymbolId sym;
    MultiIndex delta;
    MultiIndex X;
    auto operator<=>(const SymbolFactor&) const = default;
};

// coeff * i^i_power * product of factors; i_power is 0 or 1 once normalized
struct FormalSymbolTerm {
    Rational coeff;
    int i_power = 0;
    std::vector<SymbolFactor> factors;

    int order(const std::vector<int>& weights) const; // sum of [X] over factors
};

struct Expansion {
    std::string kind;
    std::string tau;
    int max_order = 0;
    // orders[j]: canonically sorted, like terms merged, zero terms dropped
    std::vector<std::vector<FormalSymbolTerm>> orders;

    bool empty() const;
    std::size_t term_count() const;
    bool operator==(const Expansion& o) const;
};

// collects terms and produces the canonical form
class ExpansionBuilder {
public:
    ExpansionBuilder(std::string kind, std::string tau, int max_order);
    void add(int j, Rational coeff, int i_power, std::vector<SymbolFactor> factors);
    Expansion finish() const;

private:
    struct Key {
        int i_power;
        std::vector<SymbolFactor> factors;
        bool operator<(const Key& o) const;
    };
    std::string kind_, tau_;
    int max_order_;
    std::vector<std::map<Key, Rational>> acc_;
};

// q~_a q~_b = sum_c d_c q~_c over one block, memoized
class DeltaProducts {
public:
    explicit DeltaProducts(const CanonicalBasis& basis) : basis_(basis) {}
    const std::map<MultiIndex, Rational>& product(const MultiIndex& a, const MultiIndex& b);

private:
    const CanonicalBasis& basis_;
    std::map<std::pair<MultiIndex, MultiIndex>, std::map<MultiIndex, Rational>> memo_;
};

Expansion compose_expansion(const CanonicalBasis& basis, const QuantizingFunction& tau, int M);
Expansion adjoint_expansion(const CanonicalBasis& basis, const QuantizingFunction& tau, int M);
Expansion change_expansion(const CanonicalBasis& basis, const QuantizingFunction& tau, ChangeDirection dir, int M);

// outer applied after inner; both single-symbol expansions over s, truncated at M
Expansion compose_expansions(const CanonicalBasis& basis, const Expansion& outer, const Expansion& inner, int M);

// {s1, s2}_hom = (-i) sum_{[a]=1} [(X^a s1)(D^a s2) - (D^a s1)(X^a s2)]
Expansion poisson_expansion(const CanonicalBasis& basis);

// every term multiplied by c i^k
Expansion scaled(const Expansion& e, const Rational& c, int i_power);

struct PoissonCheck {
    bool ok = true;
    std::vector<std::string> mismatches; // rendered terms of omega_1 - expected
};
// omega_1 of compose_expansion against -(i/2) {s1, s2}_hom; Error NOT_STRATIFIED
PoissonCheck poisson_check(const CanonicalBasis& basis, const QuantizingFunction& tau);

std::string render_term(const FormalSymbolTerm& t, bool first);
std::string render_text(const Expansion& e);
std::string render_json(const Expansion& e);
// ParseError on malformed input
Expansion parse_expansion_json(const std::string& text);

} // namespace ggc
