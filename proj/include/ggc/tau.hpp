#pragma once

#include "ggc/canonical_basis.hpp"
#include "ggc/linalg.hpp"

#include <optional>

namespace ggc {

// coordinate functions of tau over the x-block
struct QuantizingFunction {
    std::string name;
    PolyVec c;
};

// tau evaluated at a (symbolic) point
PolyVec tau_at(const QuantizingFunction& tau, const PolyVec& point);

struct CoordVerdict {
    enum Status { Zero, Valid, Invalid } status = Zero;
    Rational leading;  // C_j
    Polynomial rest;   // d_j
    std::string reason; // non-homogeneous, wrong-weight, zero-leading-coefficient, depends-on-later-vars
};

struct HpReport {
    bool ok = true;
    std::vector<CoordVerdict> coords;
};

HpReport validate_hp(const GroupLaw& law, const QuantizingFunction& tau);

struct SymmetryReport {
    bool symmetric = true;
    int coordinate = -1;  // first failing coordinate, 0-based
    Polynomial residual;  // tau(x^{-1}) x - tau(x) at that coordinate
};

SymmetryReport is_symmetric(const GroupLaw& law, const QuantizingFunction& tau);

enum class BuiltinTau { KN, Right, HalfLog };
QuantizingFunction builtin_tau(const GroupLaw& law, BuiltinTau kind);
// names: kn, right, half-log, mr
QuantizingFunction builtin_tau(const GroupLaw& law, const std::string& name);

// H_n family: tau = (x'/2, x_{2n+1}/2 + sum_{j,k} c_{jk} x_j x_k), c is 2n x 2n
QuantizingFunction heisenberg_family(int n, const QMatrix& c);

// matrices E_j representing the basis X_j
struct MatrixRep {
    int size = 0;
    std::vector<QMatrix> basis;
};

MatrixRep heisenberg_rep(int n);
MatrixRep abelian_rep(int n);
MatrixRep engel_rep();
// built-in representation for catalog algebras where one is available
std::optional<MatrixRep> builtin_rep(const GradedLieAlgebra& alg);

// log of int_0^1 exp(s A(x)) ds read in exponential coordinates; Error REP_NOT_FAITHFUL
QuantizingFunction mr_tau(const GroupLaw& law, const MatrixRep& rep);

// T with tau(x) tau(y) = T tau(xy); Error STRUCTURE_VIOLATION on a non-mixed or non-triangular monomial
PolyVec product_correction(const GroupLaw& law, const QuantizingFunction& tau);

struct PMaps {
    PolyVec p1, p2; // blocks y, z
};
// Error STRUCTURE_VIOLATION if a component is not jointly homogeneous of weight v_j
PMaps p_maps(const GroupLaw& law, const QuantizingFunction& tau);

// tau(y) y^{-1} tau(y^{-1})^{-1} over the y-block
PolyVec adjoint_map(const GroupLaw& law, const QuantizingFunction& tau);

// first-stratum data of the homogeneous Poisson bracket
struct PoissonSpec {
    std::vector<int> first_stratum; // 0-based indices with weight 1
};
// Error NOT_STRATIFIED
PoissonSpec poisson_bracket_spec(const GradedLieAlgebra& alg);

} // namespace ggc
