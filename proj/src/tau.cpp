#include "ggc/tau.hpp"

#include "ggc/errors.hpp"

namespace ggc {

PolyVec tau_at(const QuantizingFunction& tau, const PolyVec& point)
{
    Bindings b;
    b.bind_block('x', point);
    return substitute(tau.c, b);
}

HpReport validate_hp(const GroupLaw& law, const QuantizingFunction& tau)
{
    HpReport rep;
    int n = law.dim();
    if (int(tau.c.size()) != n) throw Error("BLOCK_MISMATCH", "tau has " + std::to_string(tau.c.size()) + " coordinates, group has " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
        const Polynomial& c = tau.c[j];
        CoordVerdict v;
        auto invalid = [&](const char* why) {
            v.status = CoordVerdict::Invalid;
            v.reason = why;
            rep.ok = false;
        };
        for (const auto& var : c.variables())
            if (var.block != 'x') throw Error("BLOCK_MISMATCH", "tau uses " + var.name());
        auto hw = homogeneous_weight(c, law.weights());
        if (hw.kind == HomWeight::Zero) {
            v.status = CoordVerdict::Zero;
        } else if (hw.kind == HomWeight::NonHomogeneous) {
            invalid("non-homogeneous");
        } else if (hw.weight != law.weights()[j]) {
            invalid("wrong-weight");
        } else {
            bool later = false;
            for (const auto& var : c.variables())
                if (var.index > j + 1) later = true;
            if (later) {
                invalid("depends-on-later-vars");
            } else {
                Polynomial xj = Polynomial::var('x', j + 1);
                v.leading = c.coefficient(xj.terms().begin()->first);
                v.rest = c - xj * v.leading;
                if (sgn(v.leading) == 0)
                    invalid("zero-leading-coefficient");
                else
                    v.status = CoordVerdict::Valid;
            }
        }
        rep.coords.push_back(std::move(v));
    }
    return rep;
}

SymmetryReport is_symmetric(const GroupLaw& law, const QuantizingFunction& tau)
{
    int n = law.dim();
    PolyVec x = symbolic_point('x', n);
    PolyVec rhs = law.multiply(tau_at(tau, GroupLaw::inverse(x)), x);
    SymmetryReport rep;
    for (int j = 0; j < n; ++j) {
        Polynomial r = rhs[j] - tau.c[j];
        if (!r.is_zero()) {
            rep.symmetric = false;
            rep.coordinate = j;
            rep.residual = r;
            break;
        }
    }
    return rep;
}

QuantizingFunction builtin_tau(const GroupLaw& law, BuiltinTau kind)
{
    int n = law.dim();
    QuantizingFunction t;
    switch (kind) {
    case BuiltinTau::KN:
        t.name = "kn";
        t.c.assign(n, Polynomial());
        break;
    case BuiltinTau::Right:
        t.name = "right";
        t.c = symbolic_point('x', n);
        break;
    case BuiltinTau::HalfLog:
        t.name = "half-log";
        for (int j = 1; j <= n; ++j)
            t.c.push_back(Polynomial::var('x', j) * frac(1, 2));
        break;
    }
    return t;
}

QuantizingFunction builtin_tau(const GroupLaw& law, const std::string& name)
{
    if (name == "kn") return builtin_tau(law, BuiltinTau::KN);
    if (name == "right") return builtin_tau(law, BuiltinTau::Right);
    if (name == "half-log" || name == "half_log" || name == "weyl") return builtin_tau(law, BuiltinTau::HalfLog);
    if (name == "mr") {
        auto rep = builtin_rep(law.algebra);
        if (!rep) throw Error("KIND_UNSUPPORTED", "no built-in matrix representation for " + law.algebra.name);
        return mr_tau(law, *rep);
    }
    throw Error("UNKNOWN_TAU", name);
}

QuantizingFunction heisenberg_family(int n, const QMatrix& c)
{
    QuantizingFunction t;
    t.name = "family";
    for (int j = 1; j <= 2 * n; ++j)
        t.c.push_back(Polynomial::var('x', j) * frac(1, 2));
    Polynomial last = Polynomial::var('x', 2 * n + 1) * frac(1, 2);
    for (int j = 0; j < 2 * n; ++j)
        for (int k = 0; k < 2 * n; ++k)
            if (sgn(c[j][k]) != 0) last += Polynomial::var('x', j + 1) * Polynomial::var('x', k + 1) * c[j][k];
    t.c.push_back(last);
    return t;
}

namespace {

QMatrix unit_matrix(int size, int r, int c)
{
    QMatrix m(size, std::vector<Rational>(size, 0));
    m[r][c] = 1;
    return m;
}

QMatrix add(QMatrix a, const QMatrix& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            a[i][j] += b[i][j];
    return a;
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix pm_zero(int s) { return PolyMatrix(s, std::vector<Polynomial>(s)); }

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b)
{
    int s = int(a.size());
    PolyMatrix c = pm_zero(s);
    for (int i = 0; i < s; ++i)
        for (int k = 0; k < s; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < s; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

bool pm_is_zero(const PolyMatrix& a)
{
    for (const auto& row : a)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

void pm_add_scaled(PolyMatrix& a, const PolyMatrix& b, const Rational& c)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!b[i][j].is_zero()) a[i][j] += b[i][j] * c;
}

} // namespace

MatrixRep heisenberg_rep(int n)
{
    MatrixRep r;
    r.size = n + 2;
    for (int j = 0; j < n; ++j)
        r.basis.push_back(unit_matrix(r.size, 0, j + 1));
    for (int j = 0; j < n; ++j)
        r.basis.push_back(unit_matrix(r.size, j + 1, n + 1));
    r.basis.push_back(unit_matrix(r.size, 0, n + 1));
    return r;
}

MatrixRep abelian_rep(int n)
{
    MatrixRep r;
    r.size = n + 1;
    for (int j = 0; j < n; ++j)
        r.basis.push_back(unit_matrix(r.size, 0, j + 1));
    return r;
}

MatrixRep engel_rep()
{
    MatrixRep r;
    r.size = 4;
    r.basis = {add(unit_matrix(4, 0, 1), unit_matrix(4, 1, 2)), unit_matrix(4, 2, 3), unit_matrix(4, 1, 3), unit_matrix(4, 0, 3)};
    return r;
}

std::optional<MatrixRep> builtin_rep(const GradedLieAlgebra& alg)
{
    int n;
    if (alg.is_heisenberg(&n)) return heisenberg_rep(n);
    if (alg.brackets.empty() && !alg.weights.empty() && alg.weights.back() == 1) return abelian_rep(alg.dim);
    auto e = engel_algebra();
    if (alg.dim == e.dim && alg.weights == e.weights && alg.table() == e.table()) return engel_rep();
    return std::nullopt;
}

QuantizingFunction mr_tau(const GroupLaw& law, const MatrixRep& rep)
{
    int n = law.dim(), s = rep.size;
    if (int(rep.basis.size()) != n) throw Error("REP_NOT_FAITHFUL", "representation has wrong number of generators");
    // must represent the brackets
    auto table = law.algebra.table();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            QMatrix ba = multiply(rep.basis[j], rep.basis[i]);
            QMatrix comm = multiply(rep.basis[i], rep.basis[j]);
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b) {
                    Rational expect = 0;
                    for (int k = 0; k < n; ++k)
                        expect += table[i][j][k] * rep.basis[k][a][b];
                    if (comm[a][b] - ba[a][b] != expect)
                        throw Error("REP_NOT_FAITHFUL", "matrices do not satisfy the bracket relations");
                }
        }
    // A(x) = sum x_j E_j
    PolyMatrix A = pm_zero(s);
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                if (sgn(rep.basis[j][a][b]) != 0) A[a][b] += Polynomial::var('x', j + 1) * rep.basis[j][a][b];
    // N = sum_{k>=1} A^k/(k+1)!, so that the integral is I + N
    PolyMatrix N = pm_zero(s), Ak = A;
    for (int k = 1; !pm_is_zero(Ak); ++k) {
        if (k > s + 1) throw Error("REP_NOT_FAITHFUL", "representation is not nilpotent");
        pm_add_scaled(N, Ak, Rational(1) / factorial(k + 1));
        Ak = pm_mul(Ak, A);
    }
    // log(I + N) = sum (-1)^{k+1} N^k / k
    PolyMatrix L = pm_zero(s), Nk = N;
    for (int k = 1; !pm_is_zero(Nk); ++k) {
        if (k > s + 1) throw Error("REP_NOT_FAITHFUL", "logarithm series does not terminate");
        pm_add_scaled(L, Nk, Rational(k % 2 ? 1 : -1) / Rational(k));
        Nk = pm_mul(Nk, N);
    }
    // read off coordinates: pick n independent matrix positions
    std::vector<std::pair<int, int>> pos;
    QMatrix rows;
    for (int a = 0; a < s && int(pos.size()) < n; ++a)
        for (int b = 0; b < s && int(pos.size()) < n; ++b) {
            std::vector<Rational> row(n);
            for (int j = 0; j < n; ++j)
                row[j] = rep.basis[j][a][b];
            auto trial = rows;
            trial.push_back(row);
            if (rank(trial) > int(rows.size())) {
                rows = std::move(trial);
                pos.emplace_back(a, b);
            }
        }
    if (int(pos.size()) < n) throw Error("REP_NOT_FAITHFUL", "basis matrices are linearly dependent");
    QMatrix inv = inverse(rows);
    QuantizingFunction t;
    t.name = "mr";
    for (int j = 0; j < n; ++j) {
        Polynomial y;
        for (int k = 0; k < n; ++k)
            if (sgn(inv[j][k]) != 0) y += L[pos[k].first][pos[k].second] * inv[j][k];
        t.c.push_back(y);
    }
    PolyMatrix check = pm_zero(s);
    for (int j = 0; j < n; ++j)
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                if (sgn(rep.basis[j][a][b]) != 0) check[a][b] += t.c[j] * rep.basis[j][a][b];
    if (check != L) throw Error("REP_NOT_FAITHFUL", "logarithm is not in the span of the representation");
    return t;
}

PolyVec product_correction(const GroupLaw& law, const QuantizingFunction& tau)
{
    int n = law.dim();
    PolyVec x = symbolic_point('x', n), y = symbolic_point('y', n);
    PolyVec txy = tau_at(tau, law.multiply(x, y));
    PolyVec T = law.multiply(law.multiply(tau_at(tau, x), tau_at(tau, y)), GroupLaw::inverse(txy));
    for (int j = 0; j < n; ++j)
        for (const auto& [m, c] : T[j].terms()) {
            bool hx = false, hy = false;
            for (const auto& f : m.factors) {
                Var v = Var::from_key(f.first);
                hx |= v.block == 'x';
                hy |= v.block == 'y';
                if (v.index > j + 1) throw Error("STRUCTURE_VIOLATION", "T_" + std::to_string(j + 1) + " uses " + v.name());
            }
            if (!hx || !hy) throw Error("STRUCTURE_VIOLATION", "T_" + std::to_string(j + 1) + " has a non-mixed monomial");
        }
    return T;
}

namespace {

void require_homogeneous(const PolyVec& p, const std::vector<int>& w, const char* what)
{
    for (std::size_t j = 0; j < p.size(); ++j) {
        auto hw = homogeneous_weight(p[j], w);
        if (hw.kind == HomWeight::NonHomogeneous || (hw.kind == HomWeight::Homogeneous && hw.weight != w[j]))
            throw Error("STRUCTURE_VIOLATION", std::string(what) + " component " + std::to_string(j + 1) + " is not homogeneous of weight v_j");
    }
}

} // namespace

PMaps p_maps(const GroupLaw& law, const QuantizingFunction& tau)
{
    int n = law.dim();
    PolyVec y = symbolic_point('y', n), z = symbolic_point('z', n);
    PolyVec ty = tau_at(tau, y);
    PMaps m;
    m.p1 = law.multiply(ty, GroupLaw::inverse(tau_at(tau, law.multiply(GroupLaw::inverse(z), y))));
    m.p2 = law.multiply(law.multiply(law.multiply(ty, GroupLaw::inverse(y)), z), GroupLaw::inverse(tau_at(tau, z)));
    require_homogeneous(m.p1, law.weights(), "p1");
    require_homogeneous(m.p2, law.weights(), "p2");
    return m;
}

PolyVec adjoint_map(const GroupLaw& law, const QuantizingFunction& tau)
{
    int n = law.dim();
    PolyVec y = symbolic_point('y', n);
    PolyVec a = law.multiply(law.multiply(tau_at(tau, y), GroupLaw::inverse(y)), GroupLaw::inverse(tau_at(tau, GroupLaw::inverse(y))));
    require_homogeneous(a, law.weights(), "adjoint map");
    return a;
}

PoissonSpec poisson_bracket_spec(const GradedLieAlgebra& alg)
{
    auto table = alg.table();
    int n = alg.dim;
    PoissonSpec spec;
    for (int j = 0; j < n; ++j)
        if (alg.weights[j] == 1) spec.first_stratum.push_back(j);
    if (spec.first_stratum.empty()) throw Error("NOT_STRATIFIED", "no weight-one generators");
    // layer k+1 must be spanned by [layer 1, layer k]
    std::vector<std::vector<Rational>> layer;
    for (int j : spec.first_stratum) {
        std::vector<Rational> e(n, 0);
        e[j] = 1;
        layer.push_back(e);
    }
    int maxw = alg.weights.back();
    for (int k = 1; k < maxw; ++k) {
        int expected = 0;
        for (int w : alg.weights)
            expected += w == k + 1;
        QMatrix next;
        for (int i : spec.first_stratum)
            for (const auto& v : layer) {
                std::vector<Rational> r(n, 0);
                for (int j = 0; j < n; ++j)
                    for (int l = 0; l < n; ++l)
                        if (sgn(v[j]) != 0 && sgn(table[i][j][l]) != 0) r[l] += v[j] * table[i][j][l];
                next.push_back(r);
            }
        int rk = next.empty() ? 0 : rank(next);
        if (rk != expected)
            throw Error("NOT_STRATIFIED", "weight-" + std::to_string(k + 1) + " layer is not generated by the first layer");
        layer = next;
    }
    return spec;
}

} // namespace ggc
