#pragma once

#include "ggc/multi_index.hpp"
#include "ggc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ggc {

// A variable is a (block, index) pair, e.g. x3 = ('x', 3). Indices are 1-based
// as in the printed form.
struct Var {
    char block;
    int index;

    std::uint32_t key() const { return (std::uint32_t(std::uint8_t(block)) << 16) | std::uint32_t(index); }
    static Var from_key(std::uint32_t k) { return {char(k >> 16), int(k & 0xffff)}; }
    std::string name() const { return std::string(1, block) + std::to_string(index); }
    friend bool operator<(const Var& a, const Var& b) { return a.key() < b.key(); }
    friend bool operator==(const Var& a, const Var& b) { return a.key() == b.key(); }
};

// sorted by variable key, exponents > 0
struct Monomial {
    std::vector<std::pair<std::uint32_t, int>> factors;

    int degree() const;
    int exponent(Var v) const;
    bool operator==(const Monomial& o) const { return factors == o.factors; }
};

Monomial operator*(const Monomial& a, const Monomial& b);

// total degree first, then lexicographic with larger exponents of earlier variables first
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(int c) : Polynomial(Rational(c)) {}
    static Polynomial var(Var v);
    static Polynomial var(char block, int index) { return var(Var{block, index}); }
    static Polynomial monomial(const Monomial& m, const Rational& c);
    // x^gamma over one block
    static Polynomial power_product(char block, const MultiIndex& gamma);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(int k) const;
    Polynomial derivative(Var v) const;

    std::vector<Var> variables() const;
    bool uses_block(char block) const;
    // keep only terms whose monomials satisfy pred
    template <class Pred>
    Polynomial filter(Pred pred) const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (pred(m)) r.terms_.emplace(m, c);
        return r;
    }

    // rename block a to block b
    Polynomial rename_block(char from, char to) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

using PolyVec = std::vector<Polynomial>;

// bindings keyed by variable
class Bindings {
public:
    Bindings& bind(Var v, Polynomial p);
    // bind block[1..n] to images[0..n-1]
    Bindings& bind_block(char block, const PolyVec& images);
    // block[j] -> block[j]
    Bindings& identity_block(char block, int n);
    const Polynomial* find(Var v) const;

private:
    std::map<std::uint32_t, Polynomial> map_;
};

// every variable of p must be bound (Error UNBOUND_VARIABLE otherwise)
Polynomial substitute(const Polynomial& p, const Bindings& b);
PolyVec substitute(const PolyVec& ps, const Bindings& b);

// weighted degree of a monomial using weights[index-1], counting only listed
// blocks (all blocks when `blocks` is empty)
int monomial_weight(const Monomial& m, const std::vector<int>& weights, std::string_view blocks = {});

// result of homogeneous_weight
struct HomWeight {
    enum Kind { Zero, Homogeneous, NonHomogeneous } kind;
    int weight = 0;
    bool operator==(const HomWeight& o) const { return kind == o.kind && weight == o.weight; }
};
HomWeight homogeneous_weight(const Polynomial& p, const std::vector<int>& weights, std::string_view blocks = {});

// exponent vector of a monomial restricted to one block of dimension n
MultiIndex block_exponents(const Monomial& m, char block, int n);

// symbolic point (block1, ..., blockn)
PolyVec symbolic_point(char block, int n);
PolyVec constant_point(const std::vector<Rational>& coords);

// evaluate at a rational point for one block (others must be absent)
Rational evaluate(const Polynomial& p, char block, const std::vector<Rational>& point);
// substitute 0 for every variable
inline Rational at_identity(const Polynomial& p) { return p.constant_term(); }

// grammar: expression = term (("+"|"-") term)*, term = rational? (var ("^" uint)?)*
Polynomial parse_polynomial(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

} // namespace ggc
