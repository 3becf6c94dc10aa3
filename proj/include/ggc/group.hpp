#pragma once

#include "ggc/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ggc {

struct BracketEntry {
    int i, j, k; // 0-based
    Rational c;
};

struct GradedLieAlgebra {
    std::string name;
    int dim = 0;
    std::vector<int> weights;
    std::vector<BracketEntry> brackets; // as supplied

    // dense antisymmetrized table c[i][j][k]
    Rational structure_constant(int i, int j, int k) const;
    int homogeneous_dimension() const;
    // smallest s with the (s+1)-th lower central term zero
    int nilpotency_step() const;
    bool is_heisenberg(int* n = nullptr) const;

    std::vector<std::vector<std::vector<Rational>>> table() const;
};

struct Violation {
    std::string kind; // antisymmetry, jacobi, gradation, weights
    std::vector<int> indices; // 1-based
    std::string detail;
};

struct AlgebraReport {
    bool ok = true;
    std::vector<Violation> violations;
};

AlgebraReport validate_algebra(const GradedLieAlgebra& alg);

GradedLieAlgebra heisenberg_algebra(int n);
GradedLieAlgebra abelian_algebra(int n);
GradedLieAlgebra engel_algebra();
GradedLieAlgebra free_nilpotent_2_3();
// names: heisenberg<n>, abelian<n>, engel, free23
GradedLieAlgebra catalog_algebra(const std::string& name);

struct GroupLaw {
    GradedLieAlgebra algebra;
    PolyVec R; // in blocks x, y

    int dim() const { return algebra.dim; }
    const std::vector<int>& weights() const { return algebra.weights; }

    // R(a, b) for symbolic or numeric points
    PolyVec multiply(const PolyVec& a, const PolyVec& b) const;
    static PolyVec inverse(const PolyVec& a);
    PolyVec identity() const { return PolyVec(dim()); }
};

// Error with kind "VIOLATION" if the algebra does not validate
GroupLaw bch_group_law(const GradedLieAlgebra& alg);
std::shared_ptr<const GroupLaw> make_law(const GradedLieAlgebra& alg);

PolyVec dilate(const std::vector<int>& weights, const Polynomial& r, const PolyVec& x);
// R_j(D_r x, D_r y) = r^{v_j} R_j(x, y) with symbolic r
bool check_law_homogeneity(const GroupLaw& law);
bool check_associativity(const GroupLaw& law);

enum class NormKind { Inf, P, Koranyi };
// Error KIND_UNSUPPORTED for Koranyi outside Heisenberg groups
double quasi_norm(const std::vector<double>& x, const GradedLieAlgebra& alg, NormKind kind, double p = 2.0);

} // namespace ggc
