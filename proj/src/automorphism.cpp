#include "ggc/automorphism.hpp"

#include "ggc/errors.hpp"

namespace ggc {

PolyVec Automorphism::operator()(const PolyVec& point) const
{
    Bindings b;
    b.bind_block('x', point);
    b.bind(Var{'r', 1}, Polynomial::var('r', 1));
    return substitute(phi, b);
}

Automorphism make_automorphism(const GroupLaw& law, std::string kind, PolyVec phi)
{
    int n = law.dim();
    if (int(phi.size()) != n) throw Error("NOT_AUTOMORPHISM", "wrong number of components");
    Automorphism a{std::move(kind), std::move(phi)};
    PolyVec x = symbolic_point('x', n), y = symbolic_point('y', n);
    if (a(law.multiply(x, y)) != law.multiply(a(x), a(y))) throw Error("NOT_AUTOMORPHISM", a.kind + " is not a homomorphism");
    return a;
}

Automorphism conj_automorphism(const GroupLaw& law, const std::vector<Rational>& y)
{
    PolyVec a = constant_point(y);
    return make_automorphism(law, "conj", law.multiply(law.multiply(a, symbolic_point('x', law.dim())), GroupLaw::inverse(a)));
}

Automorphism dilation_automorphism(const GroupLaw& law, const Polynomial& r)
{
    return make_automorphism(law, "dilation", dilate(law.weights(), r, symbolic_point('x', law.dim())));
}

Automorphism theta_automorphism(const GroupLaw& law)
{
    int n;
    if (!law.algebra.is_heisenberg(&n)) throw Error("KIND_UNSUPPORTED", "theta needs a Heisenberg group");
    PolyVec phi = symbolic_point('x', 2 * n + 1);
    for (int j = n; j <= 2 * n; ++j)
        phi[j] = -phi[j];
    return make_automorphism(law, "theta", phi);
}

Automorphism symplectic_automorphism(const GroupLaw& law, const QMatrix& S, std::string kind)
{
    int n;
    if (!law.algebra.is_heisenberg(&n)) throw Error("KIND_UNSUPPORTED", "symplectic maps need a Heisenberg group");
    if (int(S.size()) != 2 * n) throw Error("NOT_AUTOMORPHISM", "matrix has wrong size");
    PolyVec x = symbolic_point('x', 2 * n + 1), phi(2 * n + 1);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j)
            if (sgn(S[i][j]) != 0) phi[i] += x[j] * S[i][j];
    phi[2 * n] = x[2 * n];
    return make_automorphism(law, std::move(kind), phi);
}

QMatrix symplectic_dilation_block(const QMatrix& A)
{
    int n = int(A.size());
    QMatrix S(2 * n, std::vector<Rational>(2 * n, 0));
    QMatrix invT = transpose(inverse(A));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            S[i][j] = A[i][j];
            S[n + i][n + j] = invT[i][j];
        }
    return S;
}

QMatrix symplectic_shear_block(const QMatrix& C)
{
    int n = int(C.size());
    QMatrix S = identity_matrix(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            S[n + i][j] = C[i][j];
    return S;
}

QMatrix symplectic_j(int n)
{
    QMatrix S(2 * n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        S[i][n + i] = 1;
        S[n + i][i] = -1;
    }
    return S;
}

bool commutes_with(const QuantizingFunction& tau, const Automorphism& phi)
{
    PolyVec x = symbolic_point('x', int(tau.c.size()));
    return phi(tau.c) == tau_at(tau, phi(x));
}

} // namespace ggc
