#include "ggc/diff_op.hpp"

#include "ggc/errors.hpp"

#include <algorithm>
#include <set>

namespace ggc {

DiffOp DiffOp::identity(int n) { return multiplication(n, Polynomial(1)); }

DiffOp DiffOp::partial(const MultiIndex& beta)
{
    DiffOp d(int(beta.size()));
    d.terms.emplace(beta, Polynomial(1));
    return d;
}

DiffOp DiffOp::multiplication(int n, const Polynomial& p)
{
    DiffOp d(n);
    d.add(zero_index(n), p);
    return d;
}

void DiffOp::add(const MultiIndex& beta, const Polynomial& p)
{
    if (p.is_zero()) return;
    auto [it, inserted] = terms.emplace(beta, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DiffOp& DiffOp::operator+=(const DiffOp& o)
{
    if (!n) n = o.n;
    for (const auto& [b, p] : o.terms)
        add(b, p);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o)
{
    if (!n) n = o.n;
    for (const auto& [b, p] : o.terms)
        add(b, -p);
    return *this;
}

DiffOp operator*(const Polynomial& p, const DiffOp& d)
{
    DiffOp r(d.n);
    for (const auto& [b, c] : d.terms)
        r.add(b, p * c);
    return r;
}

std::string DiffOp::to_string() const
{
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [b, p] : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + p.to_string() + ") d^" + index_label(b);
    }
    return s;
}

Polynomial partial_apply(const MultiIndex& beta, const Polynomial& p)
{
    Polynomial r = p;
    for (std::size_t j = 0; j < beta.size() && !r.is_zero(); ++j)
        for (int k = 0; k < beta[j] && !r.is_zero(); ++k)
            r = r.derivative(Var{'x', int(j) + 1});
    return r;
}

Polynomial apply(const DiffOp& a, const Polynomial& p)
{
    Polynomial r;
    for (const auto& [b, c] : a.terms) {
        Polynomial d = partial_apply(b, p);
        if (!d.is_zero()) r += c * d;
    }
    return r;
}

namespace {

// all delta <= beta with multinomial weight prod C(beta_j, delta_j)
void sub_indices(const MultiIndex& beta, std::size_t j, MultiIndex& cur, Rational w, std::vector<std::pair<MultiIndex, Rational>>& out)
{
    if (j == beta.size()) {
        out.emplace_back(cur, w);
        return;
    }
    for (int k = 0; k <= beta[j]; ++k) {
        cur[j] = k;
        sub_indices(beta, j + 1, cur, w * binomial(beta[j], k), out);
    }
    cur[j] = 0;
}

} // namespace

DiffOp compose(const DiffOp& a, const DiffOp& b)
{
    int n = std::max(a.n, b.n);
    DiffOp r(n);
    for (const auto& [beta, p] : a.terms) {
        std::vector<std::pair<MultiIndex, Rational>> subs;
        MultiIndex cur(beta.size(), 0);
        sub_indices(beta, 0, cur, Rational(1), subs);
        for (const auto& [gamma, q] : b.terms) {
            for (const auto& [delta, w] : subs) {
                Polynomial dq = partial_apply(delta, q);
                if (dq.is_zero()) continue;
                MultiIndex rest(beta.size());
                for (std::size_t j = 0; j < beta.size(); ++j)
                    rest[j] = beta[j] - delta[j] + gamma[j];
                r += (p * dq * w) * DiffOp::partial(rest);
            }
        }
    }
    return r;
}

namespace {

DiffOp vf_from_law(const GroupLaw& law, int j, bool left)
{
    int n = law.dim();
    DiffOp d(n);
    Bindings b;
    b.identity_block('x', n);
    for (int k = 1; k <= n; ++k)
        b.bind(Var{'y', k}, Polynomial());
    for (int k = 0; k < n; ++k) {
        Polynomial rk = law.R[k];
        if (!left) {
            // R_k(y, x): swap the blocks
            rk = rk.rename_block('x', 'u').rename_block('y', 'x').rename_block('u', 'y');
        }
        Polynomial c = substitute(rk.derivative(Var{'y', j + 1}), b);
        if (!c.is_zero()) d += c * DiffOp::partial(unit_index(n, k));
    }
    return d;
}

} // namespace

DiffOp left_vf(const GroupLaw& law, int j) { return vf_from_law(law, j, true); }
DiffOp right_vf(const GroupLaw& law, int j) { return vf_from_law(law, j, false); }

OperatorPowers::OperatorPowers(const GroupLaw& law, Family f) : n_(law.dim()), weights_(law.weights())
{
    for (int j = 0; j < n_; ++j) {
        switch (f) {
        case Family::Left: fields_.push_back(left_vf(law, j)); break;
        case Family::Right: fields_.push_back(right_vf(law, j)); break;
        case Family::Partial: fields_.push_back(DiffOp::partial(unit_index(n_, j))); break;
        }
    }
}

const DiffOp& OperatorPowers::power(const MultiIndex& alpha)
{
    auto it = cache_.find(alpha);
    if (it != cache_.end()) return it->second;
    DiffOp r;
    int k = -1;
    for (int j = 0; j < n_; ++j)
        if (alpha[j] > 0) {
            k = j;
            break;
        }
    if (k < 0) {
        r = DiffOp::identity(n_);
    } else {
        MultiIndex rest = alpha;
        --rest[k];
        r = compose(fields_[k], power(rest));
    }
    return cache_.emplace(alpha, std::move(r)).first->second;
}

Polynomial OperatorPowers::apply_power(const MultiIndex& alpha, const Polynomial& p) const
{
    Polynomial r = p;
    for (int j = n_ - 1; j >= 0 && !r.is_zero(); --j)
        for (int k = 0; k < alpha[j] && !r.is_zero(); ++k)
            r = apply(fields_[j], r);
    return r;
}

std::map<MultiIndex, Polynomial> expand_in_family(const DiffOp& d, OperatorPowers& family)
{
    const auto& w = family.weights();
    std::map<MultiIndex, Polynomial> out;
    DiffOp rest = d;
    std::size_t guard = 0;
    while (!rest.is_zero()) {
        if (++guard > 100000) throw Error("NOT_INVARIANT", "elimination did not terminate");
        // leading term: largest order, then smallest weight, then first in index order
        auto lead = rest.terms.begin();
        for (auto it = rest.terms.begin(); it != rest.terms.end(); ++it) {
            int la = iso_length(it->first), lb = iso_length(lead->first);
            if (la > lb || (la == lb && weighted_degree(it->first, w) < weighted_degree(lead->first, w))) lead = it;
        }
        MultiIndex beta = lead->first;
        Polynomial c = lead->second;
        const DiffOp& fb = family.power(beta);
        auto lc = fb.terms.find(beta);
        if (lc == fb.terms.end() || lc->second != Polynomial(1))
            throw Error("NOT_INVARIANT", "family power lacks unit leading term");
        out[beta] += c;
        if (out[beta].is_zero()) out.erase(beta);
        rest -= c * fb;
    }
    return out;
}

DiffOp recombine(const std::map<MultiIndex, Polynomial>& coeffs, OperatorPowers& family)
{
    DiffOp r(family.dim());
    for (const auto& [beta, c] : coeffs)
        r += c * family.power(beta);
    return r;
}

Conversions::Conversions(const GroupLaw& law)
    : left_(law, Family::Left), right_(law, Family::Right), partial_(law, Family::Partial)
{
}

std::map<MultiIndex, Polynomial> Conversions::table(const MultiIndex& alpha, ConversionKind kind)
{
    switch (kind) {
    case ConversionKind::P: return expand_in_family(left_.power(alpha), right_);
    case ConversionKind::Q: return expand_in_family(right_.power(alpha), left_);
    case ConversionKind::R: {
        std::map<MultiIndex, Polynomial> out;
        for (const auto& [b, p] : left_.power(alpha).terms)
            out.emplace(b, p);
        return out;
    }
    case ConversionKind::S: return expand_in_family(DiffOp::partial(alpha), left_);
    }
    return {};
}

std::map<MultiIndex, Polynomial> conversion_polys(const GroupLaw& law, const MultiIndex& alpha, ConversionKind kind)
{
    Conversions c(law);
    return c.table(alpha, kind);
}

std::vector<int> homogeneous_degrees(const DiffOp& d, const std::vector<int>& weights)
{
    std::set<int> ds;
    for (const auto& [b, p] : d.terms)
        for (const auto& t : p.terms())
            ds.insert(weighted_degree(b, weights) - monomial_weight(t.first, weights));
    return {ds.begin(), ds.end()};
}

} // namespace ggc
