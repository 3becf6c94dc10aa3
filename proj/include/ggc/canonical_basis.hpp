#pragma once

#include "ggc/diff_op.hpp"

#include <map>
#include <memory>
#include <utility>

namespace ggc {

using Split = std::pair<MultiIndex, MultiIndex>;

// q_alpha for all [alpha] <= max_weight, dual to the ordered left-invariant
// derivatives at the identity: (X^beta q_alpha)(e) = delta.
class CanonicalBasis {
public:
    CanonicalBasis(std::shared_ptr<const GroupLaw> law, int max_weight);

    const GroupLaw& law() const { return *law_; }
    std::shared_ptr<const GroupLaw> law_ptr() const { return law_; }
    int max_weight() const { return max_weight_; }
    int dim() const { return law_->dim(); }
    const std::vector<int>& weights() const { return law_->weights(); }

    const std::vector<MultiIndex>& indices(int M) const;
    std::vector<MultiIndex> indices_up_to(int M) const;

    Polynomial q(const MultiIndex& alpha, char block = 'x') const;
    Polynomial q_tilde(const MultiIndex& alpha, char block = 'x') const;

    // f = sum c_alpha q_alpha(block) (resp. q~); f may only use `block`
    std::map<MultiIndex, Rational> expand_q(const Polynomial& f, char block) const;
    std::map<MultiIndex, Rational> expand_qtilde(const Polynomial& f, char block) const;
    // f(b1, b2) = sum c q_{a1}(b1) q_{a2}(b2) (resp. q~)
    std::map<Split, Rational> expand_q2(const Polynomial& f, char b1, char b2) const;
    std::map<Split, Rational> expand_qtilde2(const Polynomial& f, char b1, char b2) const;

    OperatorPowers& left_powers() const { return *left_; }

private:
    struct Column {
        std::vector<std::pair<MultiIndex, Rational>> entries;
    };
    const Column& column(const MultiIndex& gamma) const;
    std::map<MultiIndex, Rational> expand1(const Polynomial& f, char block, bool tilde) const;
    std::map<Split, Rational> expand2(const Polynomial& f, char b1, char b2, bool tilde) const;

    std::shared_ptr<const GroupLaw> law_;
    int max_weight_;
    std::unique_ptr<OperatorPowers> left_;
    std::vector<std::vector<MultiIndex>> by_weight_;
    std::map<MultiIndex, Polynomial> q_;
    std::map<MultiIndex, Polynomial> q_tilde_;
    // monomial x^gamma = sum_alpha A[alpha][gamma] q_alpha
    std::map<MultiIndex, Column> columns_;
};

// (X^beta f)(e) via iterated vector fields
Rational left_derivative_at_identity(const CanonicalBasis& basis, const MultiIndex& beta, const Polynomial& f);

// coefficients c_gamma with op = sum c_gamma X^gamma; verified exactly, Error NOT_INVARIANT otherwise
std::map<MultiIndex, Rational> pbw_expand(const DiffOp& op, const CanonicalBasis& basis);

// sum_{[alpha] <= M} q_alpha(y) (X^alpha f)(x), f in the x-block
Polynomial taylor_poly(const CanonicalBasis& basis, const Polynomial& f, int M);

// q_alpha(x y) = sum c q_{a1}(x) q_{a2}(y), reconstruction verified
std::map<Split, Rational> q_product_coeffs(const CanonicalBasis& basis, const MultiIndex& alpha);

// rebuild sum c q~_{a}(block)
Polynomial rebuild_qtilde(const CanonicalBasis& basis, const std::map<MultiIndex, Rational>& c, char block);
Polynomial rebuild_qtilde2(const CanonicalBasis& basis, const std::map<Split, Rational>& c, char b1, char b2);

} // namespace ggc
