#include "ggc/canonical_basis.hpp"

#include "ggc/errors.hpp"
#include "ggc/linalg.hpp"

namespace ggc {

CanonicalBasis::CanonicalBasis(std::shared_ptr<const GroupLaw> law, int max_weight)
    : law_(std::move(law)), max_weight_(max_weight)
{
    left_ = std::make_unique<OperatorPowers>(*law_, Family::Left);
    const auto& w = law_->weights();
    int n = law_->dim();
    Bindings neg;
    for (int j = 1; j <= n; ++j)
        neg.bind(Var{'x', j}, -Polynomial::var('x', j));
    for (int M = 0; M <= max_weight_; ++M) {
        auto idx = monomials_of_weight(w, M);
        by_weight_.push_back(idx);
        std::size_t k = idx.size();
        QMatrix A(k, std::vector<Rational>(k, 0));
        for (std::size_t a = 0; a < k; ++a) {
            const DiffOp& xa = left_->power(idx[a]);
            for (std::size_t g = 0; g < k; ++g) {
                auto it = xa.terms.find(idx[g]);
                if (it == xa.terms.end()) continue;
                Rational c = it->second.constant_term();
                if (sgn(c) == 0) continue;
                for (int e : idx[g])
                    c *= factorial(e);
                A[a][g] = c;
            }
        }
        QMatrix inv = inverse(A);
        for (std::size_t a = 0; a < k; ++a) {
            Polynomial qa;
            for (std::size_t g = 0; g < k; ++g)
                if (sgn(inv[g][a]) != 0) qa += Polynomial::power_product('x', idx[g]) * inv[g][a];
            q_tilde_[idx[a]] = substitute(qa, neg);
            q_[idx[a]] = std::move(qa);
        }
        for (std::size_t g = 0; g < k; ++g) {
            Column col;
            for (std::size_t a = 0; a < k; ++a)
                if (sgn(A[a][g]) != 0) col.entries.emplace_back(idx[a], A[a][g]);
            columns_[idx[g]] = std::move(col);
        }
    }
}

const std::vector<MultiIndex>& CanonicalBasis::indices(int M) const
{
    static const std::vector<MultiIndex> empty;
    if (M < 0 || M > max_weight_) return empty;
    return by_weight_[M];
}

std::vector<MultiIndex> CanonicalBasis::indices_up_to(int M) const
{
    std::vector<MultiIndex> out;
    for (int m = 0; m <= std::min(M, max_weight_); ++m)
        out.insert(out.end(), by_weight_[m].begin(), by_weight_[m].end());
    return out;
}

Polynomial CanonicalBasis::q(const MultiIndex& alpha, char block) const
{
    auto it = q_.find(alpha);
    if (it == q_.end()) throw Error("WEIGHT_EXCEEDED", "q" + index_label(alpha) + " beyond max weight");
    return block == 'x' ? it->second : it->second.rename_block('x', block);
}

Polynomial CanonicalBasis::q_tilde(const MultiIndex& alpha, char block) const
{
    auto it = q_tilde_.find(alpha);
    if (it == q_tilde_.end()) throw Error("WEIGHT_EXCEEDED", "q~" + index_label(alpha) + " beyond max weight");
    return block == 'x' ? it->second : it->second.rename_block('x', block);
}

const CanonicalBasis::Column& CanonicalBasis::column(const MultiIndex& gamma) const
{
    auto it = columns_.find(gamma);
    if (it == columns_.end()) throw Error("WEIGHT_EXCEEDED", "monomial " + index_tuple(gamma) + " beyond max weight");
    return it->second;
}

std::map<MultiIndex, Rational> CanonicalBasis::expand1(const Polynomial& f, char block, bool tilde) const
{
    int n = dim();
    std::map<MultiIndex, Rational> out;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& fac : m.factors)
            if (Var::from_key(fac.first).block != block) throw Error("BLOCK_MISMATCH", "unexpected variable " + Var::from_key(fac.first).name());
        MultiIndex g = block_exponents(m, block, n);
        Rational sign = (tilde && iso_length(g) % 2) ? -1 : 1;
        for (const auto& [a, v] : column(g).entries)
            out[a] += c * v * sign;
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

std::map<Split, Rational> CanonicalBasis::expand2(const Polynomial& f, char b1, char b2, bool tilde) const
{
    int n = dim();
    std::map<Split, Rational> out;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& fac : m.factors) {
            char b = Var::from_key(fac.first).block;
            if (b != b1 && b != b2) throw Error("BLOCK_MISMATCH", "unexpected variable " + Var::from_key(fac.first).name());
        }
        MultiIndex g1 = block_exponents(m, b1, n), g2 = block_exponents(m, b2, n);
        Rational sign = (tilde && (iso_length(g1) + iso_length(g2)) % 2) ? -1 : 1;
        const auto& c1 = column(g1);
        const auto& c2 = column(g2);
        for (const auto& [a1, v1] : c1.entries)
            for (const auto& [a2, v2] : c2.entries)
                out[{a1, a2}] += c * v1 * v2 * sign;
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

std::map<MultiIndex, Rational> CanonicalBasis::expand_q(const Polynomial& f, char block) const { return expand1(f, block, false); }
std::map<MultiIndex, Rational> CanonicalBasis::expand_qtilde(const Polynomial& f, char block) const { return expand1(f, block, true); }
std::map<Split, Rational> CanonicalBasis::expand_q2(const Polynomial& f, char b1, char b2) const { return expand2(f, b1, b2, false); }
std::map<Split, Rational> CanonicalBasis::expand_qtilde2(const Polynomial& f, char b1, char b2) const { return expand2(f, b1, b2, true); }

Rational left_derivative_at_identity(const CanonicalBasis& basis, const MultiIndex& beta, const Polynomial& f)
{
    return basis.left_powers().apply_power(beta, f).constant_term();
}

std::map<MultiIndex, Rational> pbw_expand(const DiffOp& op, const CanonicalBasis& basis)
{
    std::map<MultiIndex, Rational> out;
    for (int d : homogeneous_degrees(op, basis.weights())) {
        if (d < 0 || d > basis.max_weight()) throw Error("NOT_INVARIANT", "degree " + std::to_string(d) + " outside basis range");
        for (const auto& g : basis.indices(d)) {
            Rational c = apply(op, basis.q(g)).constant_term();
            if (sgn(c) != 0) out[g] = c;
        }
    }
    DiffOp re(basis.dim());
    for (const auto& [g, c] : out)
        re += Polynomial(c) * basis.left_powers().power(g);
    if (!(re == op)) throw Error("NOT_INVARIANT", "operator is not a combination of X^gamma");
    return out;
}

Polynomial taylor_poly(const CanonicalBasis& basis, const Polynomial& f, int M)
{
    Polynomial r;
    for (const auto& a : basis.indices_up_to(M)) {
        Polynomial d = basis.left_powers().apply_power(a, f);
        if (!d.is_zero()) r += basis.q(a, 'y') * d;
    }
    return r;
}

Polynomial rebuild_qtilde(const CanonicalBasis& basis, const std::map<MultiIndex, Rational>& c, char block)
{
    Polynomial r;
    for (const auto& [a, v] : c)
        r += basis.q_tilde(a, block) * v;
    return r;
}

Polynomial rebuild_qtilde2(const CanonicalBasis& basis, const std::map<Split, Rational>& c, char b1, char b2)
{
    Polynomial r;
    for (const auto& [s, v] : c)
        r += basis.q_tilde(s.first, b1) * basis.q_tilde(s.second, b2) * v;
    return r;
}

std::map<Split, Rational> q_product_coeffs(const CanonicalBasis& basis, const MultiIndex& alpha)
{
    const auto& law = basis.law();
    Bindings b;
    b.bind_block('x', law.R);
    Polynomial f = substitute(basis.q(alpha), b);
    auto table = basis.expand_q2(f, 'x', 'y');
    Polynomial re;
    for (const auto& [s, v] : table)
        re += basis.q(s.first, 'x') * basis.q(s.second, 'y') * v;
    if (re != f) throw Error("BASIS_DEFICIENT", "q product reconstruction failed");
    return table;
}

} // namespace ggc
