#include "ggc/group.hpp"

#include "ggc/errors.hpp"
#include "ggc/linalg.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <map>

namespace ggc {

using Table = std::vector<std::vector<std::vector<Rational>>>;

Table GradedLieAlgebra::table() const
{
    Table t(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, 0)));
    for (const auto& b : brackets) {
        if (b.i < 0 || b.j < 0 || b.k < 0 || b.i >= dim || b.j >= dim || b.k >= dim) continue;
        t[b.i][b.j][b.k] = b.c;
        if (b.i != b.j) t[b.j][b.i][b.k] = -b.c;
    }
    return t;
}

Rational GradedLieAlgebra::structure_constant(int i, int j, int k) const
{
    for (const auto& b : brackets) {
        if (b.k != k) continue;
        if (b.i == i && b.j == j) return b.c;
        if (b.i == j && b.j == i) return -b.c;
    }
    return 0;
}

int GradedLieAlgebra::homogeneous_dimension() const
{
    int q = 0;
    for (int v : weights)
        q += v;
    return q;
}

namespace {

// independent rows spanning the given vectors
std::vector<std::vector<Rational>> row_basis(const std::vector<std::vector<Rational>>& vs)
{
    std::vector<std::vector<Rational>> basis;
    for (const auto& v : vs) {
        auto trial = basis;
        trial.push_back(v);
        if (rank(trial) > int(basis.size())) basis.push_back(v);
    }
    return basis;
}

} // namespace

int GradedLieAlgebra::nilpotency_step() const
{
    if (dim == 0) return 0;
    Table t = table();
    std::vector<std::vector<Rational>> layer;
    for (int i = 0; i < dim; ++i) {
        std::vector<Rational> e(dim, 0);
        e[i] = 1;
        layer.push_back(e);
    }
    int step = 0;
    while (!layer.empty() && step <= dim) {
        ++step;
        std::vector<std::vector<Rational>> next;
        for (int i = 0; i < dim; ++i)
            for (const auto& v : layer) {
                std::vector<Rational> w(dim, 0);
                bool nz = false;
                for (int j = 0; j < dim; ++j) {
                    if (sgn(v[j]) == 0) continue;
                    for (int k = 0; k < dim; ++k)
                        if (sgn(t[i][j][k]) != 0) {
                            w[k] += v[j] * t[i][j][k];
                            nz = true;
                        }
                }
                if (nz) next.push_back(w);
            }
        layer = row_basis(next);
    }
    return step;
}

bool GradedLieAlgebra::is_heisenberg(int* n_out) const
{
    if (dim < 3 || dim % 2 == 0) return false;
    int n = (dim - 1) / 2;
    GradedLieAlgebra h = heisenberg_algebra(n);
    if (weights != h.weights) return false;
    Table a = table(), b = h.table();
    if (a != b) return false;
    if (n_out) *n_out = n;
    return true;
}

AlgebraReport validate_algebra(const GradedLieAlgebra& alg)
{
    AlgebraReport rep;
    auto add = [&](std::string kind, std::vector<int> idx, std::string detail) {
        rep.ok = false;
        rep.violations.push_back({std::move(kind), std::move(idx), std::move(detail)});
    };
    int n = alg.dim;
    if (int(alg.weights.size()) != n) {
        add("weights", {}, "weight vector length differs from dim");
        return rep;
    }
    for (int j = 0; j < n; ++j) {
        if (alg.weights[j] < 1) add("weights", {j + 1}, "weight must be a positive integer");
        if (j > 0 && alg.weights[j] < alg.weights[j - 1]) add("weights", {j, j + 1}, "weights must be non-decreasing");
    }
    if (n > 0 && alg.weights[0] != 1) add("weights", {1}, "first weight must be 1");
    for (const auto& b : alg.brackets) {
        if (b.i < 0 || b.j < 0 || b.k < 0 || b.i >= n || b.j >= n || b.k >= n)
            add("index", {b.i + 1, b.j + 1, b.k + 1}, "bracket index out of range");
    }
    if (!rep.ok) return rep;

    // antisymmetry of the supplied entries
    std::map<std::tuple<int, int, int>, Rational> given;
    for (const auto& b : alg.brackets) {
        if (b.i == b.j && sgn(b.c) != 0) add("antisymmetry", {b.i + 1, b.j + 1, b.k + 1}, "[X_i, X_i] must vanish");
        auto key = std::make_tuple(b.i, b.j, b.k);
        auto it = given.find(key);
        if (it != given.end() && it->second != b.c) add("antisymmetry", {b.i + 1, b.j + 1, b.k + 1}, "conflicting duplicate entry");
        given[key] = b.c;
    }
    for (const auto& [key, c] : given) {
        auto [i, j, k] = key;
        auto it = given.find({j, i, k});
        if (i < j && it != given.end() && it->second != -c) add("antisymmetry", {i + 1, j + 1, k + 1}, "c_ij^k != -c_ji^k");
    }

    Table t = alg.table();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (i < j && sgn(t[i][j][k]) != 0 && alg.weights[k] != alg.weights[i] + alg.weights[j])
                    add("gradation", {i + 1, j + 1, k + 1}, "v_k != v_i + v_j");

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational s = 0;
                    for (int m = 0; m < n; ++m)
                        s += t[j][k][m] * t[i][m][l] + t[k][i][m] * t[j][m][l] + t[i][j][m] * t[k][m][l];
                    if (sgn(s) != 0) {
                        add("jacobi", {i + 1, j + 1, k + 1}, "component " + std::to_string(l + 1) + " = " + to_string(s));
                        break;
                    }
                }
    return rep;
}

GradedLieAlgebra heisenberg_algebra(int n)
{
    GradedLieAlgebra a;
    a.name = "heisenberg" + std::to_string(n);
    a.dim = 2 * n + 1;
    a.weights.assign(2 * n, 1);
    a.weights.push_back(2);
    for (int j = 0; j < n; ++j)
        a.brackets.push_back({j, n + j, 2 * n, Rational(1)});
    return a;
}

GradedLieAlgebra abelian_algebra(int n)
{
    GradedLieAlgebra a;
    a.name = "abelian" + std::to_string(n);
    a.dim = n;
    a.weights.assign(n, 1);
    return a;
}

GradedLieAlgebra engel_algebra()
{
    GradedLieAlgebra a;
    a.name = "engel";
    a.dim = 4;
    a.weights = {1, 1, 2, 3};
    a.brackets = {{0, 1, 2, Rational(1)}, {0, 2, 3, Rational(1)}};
    return a;
}

GradedLieAlgebra free_nilpotent_2_3()
{
    GradedLieAlgebra a;
    a.name = "free23";
    a.dim = 5;
    a.weights = {1, 1, 2, 3, 3};
    a.brackets = {{0, 1, 2, Rational(1)}, {0, 2, 3, Rational(1)}, {1, 2, 4, Rational(1)}};
    return a;
}

GradedLieAlgebra catalog_algebra(const std::string& name)
{
    auto suffix = [&](const std::string& prefix) -> int {
        if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return -1;
        for (std::size_t i = prefix.size(); i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
        return std::stoi(name.substr(prefix.size()));
    };
    if (int n = suffix("heisenberg"); n > 0) return heisenberg_algebra(n);
    if (int n = suffix("abelian"); n > 0) return abelian_algebra(n);
    if (name == "engel") return engel_algebra();
    if (name == "free23") return free_nilpotent_2_3();
    throw Error("UNKNOWN_GROUP", name);
}

namespace {

using Element = PolyVec;

struct Bracketer {
    int n;
    std::vector<BracketEntry> nonzero; // full antisymmetric list

    explicit Bracketer(const GradedLieAlgebra& alg) : n(alg.dim)
    {
        Table t = alg.table();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (sgn(t[i][j][k]) != 0) nonzero.push_back({i, j, k, t[i][j][k]});
    }

    Element operator()(const Element& a, const Element& b) const
    {
        Element r(n);
        for (const auto& e : nonzero) {
            if (a[e.i].is_zero() || b[e.j].is_zero()) continue;
            r[e.k] += (a[e.i] * b[e.j]) * e.c;
        }
        return r;
    }
};

// Dynkin coefficients of right-nested words in letters 'x','y' up to length s
std::map<std::string, Rational> dynkin_words(int s)
{
    std::map<std::string, Rational> words;
    std::vector<std::pair<int, int>> seq;
    std::function<void(int, int)> rec = [&](int k, int used) {
        if (int(seq.size()) == k) {
            std::string w;
            Rational denom = Rational(k) * used;
            for (auto [r, q] : seq) {
                w += std::string(r, 'x') + std::string(q, 'y');
                denom *= factorial(r) * factorial(q);
            }
            Rational c = Rational(k % 2 == 1 ? 1 : -1) / denom;
            words[w] += c;
            return;
        }
        for (int r = 0; used + r <= s; ++r)
            for (int q = 0; used + r + q <= s; ++q) {
                if (r + q == 0) continue;
                seq.emplace_back(r, q);
                rec(k, used + r + q);
                seq.pop_back();
            }
    };
    for (int k = 1; k <= s; ++k)
        rec(k, 0);
    return words;
}

} // namespace

GroupLaw bch_group_law(const GradedLieAlgebra& alg)
{
    auto rep = validate_algebra(alg);
    if (!rep.ok) {
        const auto& v = rep.violations.front();
        throw Error("VIOLATION", v.kind + " " + v.detail);
    }
    int n = alg.dim;
    int s = std::max(1, alg.nilpotency_step());
    Bracketer br(alg);
    Element X = symbolic_point('x', n), Y = symbolic_point('y', n);
    Element Z(n);
    for (const auto& [w, c] : dynkin_words(s)) {
        if (sgn(c) == 0) continue;
        Element v = w.back() == 'x' ? X : Y;
        for (int i = int(w.size()) - 2; i >= 0; --i)
            v = br(w[i] == 'x' ? X : Y, v);
        for (int k = 0; k < n; ++k)
            if (!v[k].is_zero()) Z[k] += v[k] * c;
    }
    return GroupLaw{alg, std::move(Z)};
}

std::shared_ptr<const GroupLaw> make_law(const GradedLieAlgebra& alg)
{
    return std::make_shared<const GroupLaw>(bch_group_law(alg));
}

PolyVec GroupLaw::multiply(const PolyVec& a, const PolyVec& b) const
{
    if (int(a.size()) != dim() || int(b.size()) != dim()) throw Error("BLOCK_MISMATCH", "point dimension");
    Bindings bind;
    bind.bind_block('x', a).bind_block('y', b);
    return substitute(R, bind);
}

PolyVec GroupLaw::inverse(const PolyVec& a)
{
    PolyVec r;
    for (const auto& p : a)
        r.push_back(-p);
    return r;
}

PolyVec dilate(const std::vector<int>& weights, const Polynomial& r, const PolyVec& x)
{
    PolyVec out;
    for (std::size_t j = 0; j < x.size(); ++j)
        out.push_back(x[j] * r.pow(weights[j]));
    return out;
}

bool check_law_homogeneity(const GroupLaw& law)
{
    Polynomial r = Polynomial::var('r', 1);
    int n = law.dim();
    PolyVec lhs = law.multiply(dilate(law.weights(), r, symbolic_point('x', n)), dilate(law.weights(), r, symbolic_point('y', n)));
    for (int j = 0; j < n; ++j)
        if (lhs[j] != law.R[j] * r.pow(law.weights()[j])) return false;
    return true;
}

bool check_associativity(const GroupLaw& law)
{
    int n = law.dim();
    PolyVec x = symbolic_point('x', n), y = symbolic_point('y', n), z = symbolic_point('z', n);
    return law.multiply(law.multiply(x, y), z) == law.multiply(x, law.multiply(y, z));
}

double quasi_norm(const std::vector<double>& x, const GradedLieAlgebra& alg, NormKind kind, double p)
{
    const auto& w = alg.weights;
    switch (kind) {
    case NormKind::Inf: {
        double m = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            m = std::max(m, std::pow(std::abs(x[j]), 1.0 / w[j]));
        return m;
    }
    case NormKind::P: {
        double s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += std::pow(std::abs(x[j]), p / w[j]);
        return std::pow(s, 1.0 / p);
    }
    case NormKind::Koranyi: {
        int n;
        if (!alg.is_heisenberg(&n)) throw Error("KIND_UNSUPPORTED", "Koranyi norm needs a Heisenberg group");
        double h = 0;
        for (int j = 0; j < 2 * n; ++j)
            h += x[j] * x[j];
        return std::pow(h * h + x[2 * n] * x[2 * n] / 16.0, 0.25);
    }
    }
    return 0;
}

} // namespace ggc
