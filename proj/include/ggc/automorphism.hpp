#pragma once

#include "ggc/tau.hpp"

namespace ggc {

struct Automorphism {
    std::string kind;
    PolyVec phi; // images of x_1..x_n, may contain the symbol r1

    PolyVec operator()(const PolyVec& point) const;
};

// Error NOT_AUTOMORPHISM unless phi(xy) = phi(x) phi(y) exactly
Automorphism make_automorphism(const GroupLaw& law, std::string kind, PolyVec phi);

Automorphism conj_automorphism(const GroupLaw& law, const std::vector<Rational>& y);
// r is a rational or the symbol r1
Automorphism dilation_automorphism(const GroupLaw& law, const Polynomial& r);
// Heisenberg only: (x', -x'', -x_{2n+1})
Automorphism theta_automorphism(const GroupLaw& law);
// Heisenberg only: x -> (S x', x_{2n+1}) for a 2n x 2n matrix S
Automorphism symplectic_automorphism(const GroupLaw& law, const QMatrix& S, std::string kind = "symplectic");
QMatrix symplectic_dilation_block(const QMatrix& A); // diag(A, A^{-T})
QMatrix symplectic_shear_block(const QMatrix& C);    // [[I,0],[C,I]]
QMatrix symplectic_j(int n);                          // [[0,I],[-I,0]]

bool commutes_with(const QuantizingFunction& tau, const Automorphism& phi);

} // namespace ggc
