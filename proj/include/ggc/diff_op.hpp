#pragma once

#include "ggc/group.hpp"

#include <map>

namespace ggc {

// Sum of p_beta(x) d^beta acting on the x-block, coefficients kept on the left.
struct DiffOp {
    int n = 0;
    std::map<MultiIndex, Polynomial> terms;

    DiffOp() = default;
    explicit DiffOp(int dim) : n(dim) {}
    static DiffOp identity(int n);
    static DiffOp partial(const MultiIndex& beta);
    static DiffOp multiplication(int n, const Polynomial& p);

    bool is_zero() const { return terms.empty(); }
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(const Polynomial& p, const DiffOp& d);
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms == b.terms; }

    std::string to_string() const;

private:
    void add(const MultiIndex& beta, const Polynomial& p);
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
Polynomial apply(const DiffOp& a, const Polynomial& p);
// d^beta p on the x-block
Polynomial partial_apply(const MultiIndex& beta, const Polynomial& p);

DiffOp left_vf(const GroupLaw& law, int j);  // j is 0-based
DiffOp right_vf(const GroupLaw& law, int j);

enum class Family { Left, Right, Partial };

// memoized ordered powers F^alpha = F_1^{alpha_1} ... F_n^{alpha_n}
class OperatorPowers {
public:
    OperatorPowers(const GroupLaw& law, Family f);
    const DiffOp& power(const MultiIndex& alpha);
    const DiffOp& field(int j) const { return fields_[j]; }
    // F^alpha applied to p by iterating the first-order fields (innermost F_n)
    Polynomial apply_power(const MultiIndex& alpha, const Polynomial& p) const;
    int dim() const { return n_; }
    const std::vector<int>& weights() const { return weights_; }

private:
    int n_;
    std::vector<int> weights_;
    std::vector<DiffOp> fields_;
    std::map<MultiIndex, DiffOp> cache_;
};

// D = sum_beta c_beta(x) F^beta; Error NOT_INVARIANT if elimination does not terminate
std::map<MultiIndex, Polynomial> expand_in_family(const DiffOp& d, OperatorPowers& family);
DiffOp recombine(const std::map<MultiIndex, Polynomial>& coeffs, OperatorPowers& family);

enum class ConversionKind { P, Q, R, S };
// P: X^a = sum P X~^b;  Q: X~^a = sum Q X^b;  R: X^a = sum R d^b;  S: d^a = sum S X^b
std::map<MultiIndex, Polynomial> conversion_polys(const GroupLaw& law, const MultiIndex& alpha, ConversionKind kind);

// homogeneous degree of an operator term p d^beta is [beta] - weight(p)
std::vector<int> homogeneous_degrees(const DiffOp& d, const std::vector<int>& weights);

} // namespace ggc

namespace ggc {

// reuses the memoized powers across many conversion queries
class Conversions {
public:
    explicit Conversions(const GroupLaw& law);
    std::map<MultiIndex, Polynomial> table(const MultiIndex& alpha, ConversionKind kind);
    OperatorPowers& left() { return left_; }
    OperatorPowers& right() { return right_; }
    OperatorPowers& partial() { return partial_; }

private:
    OperatorPowers left_, right_, partial_;
};

} // namespace ggc
