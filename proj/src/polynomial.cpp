#include "ggc/polynomial.hpp"

#include "ggc/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace ggc {

int Monomial::degree() const
{
    int d = 0;
    for (const auto& f : factors)
        d += f.second;
    return d;
}

int Monomial::exponent(Var v) const
{
    for (const auto& f : factors)
        if (f.first == v.key()) return f.second;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    auto i = a.factors.begin(), j = b.factors.begin();
    while (i != a.factors.end() || j != b.factors.end()) {
        if (j == b.factors.end() || (i != a.factors.end() && i->first < j->first)) {
            r.factors.push_back(*i++);
        } else if (i == a.factors.end() || j->first < i->first) {
            r.factors.push_back(*j++);
        } else {
            r.factors.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::size_t n = std::min(a.factors.size(), b.factors.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& fa = a.factors[k];
        const auto& fb = b.factors[k];
        if (fa.first != fb.first) return fa.first < fb.first;
        if (fa.second != fb.second) return fa.second > fb.second;
    }
    return a.factors.size() < b.factors.size();
}

Polynomial::Polynomial(const Rational& c)
{
    if (!ggc::is_zero(c)) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::var(Var v)
{
    Polynomial p;
    Monomial m;
    m.factors.emplace_back(v.key(), 1);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c)
{
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::power_product(char block, const MultiIndex& gamma)
{
    Monomial m;
    for (std::size_t j = 0; j < gamma.size(); ++j)
        if (gamma[j] > 0) m.factors.emplace_back(Var{block, int(j) + 1}.key(), gamma[j]);
    return monomial(m, 1);
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial{}); }

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (ggc::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (ggc::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (ggc::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

Polynomial Polynomial::pow(int k) const
{
    Polynomial r(1), base(*this);
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(Var v) const
{
    Polynomial r;
    auto key = v.key();
    for (const auto& [m, c] : terms_) {
        for (std::size_t k = 0; k < m.factors.size(); ++k) {
            if (m.factors[k].first != key) continue;
            Monomial d = m;
            int e = d.factors[k].second;
            if (e == 1)
                d.factors.erase(d.factors.begin() + k);
            else
                d.factors[k].second = e - 1;
            r.add_term(d, c * e);
            break;
        }
    }
    return r;
}

std::vector<Var> Polynomial::variables() const
{
    std::vector<std::uint32_t> keys;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors)
            keys.push_back(f.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Var> vs;
    for (auto k : keys)
        vs.push_back(Var::from_key(k));
    return vs;
}

bool Polynomial::uses_block(char block) const
{
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors)
            if (Var::from_key(f.first).block == block) return true;
    return false;
}

Polynomial Polynomial::rename_block(char from, char to) const
{
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial n;
        for (const auto& f : m.factors) {
            Var v = Var::from_key(f.first);
            if (v.block == from) v.block = to;
            n = n * Monomial{{{v.key(), f.second}}};
        }
        r.add_term(n, c);
    }
    return r;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = abs(c);
        if (first)
            s += sgn(c) < 0 ? "-" : "";
        else
            s += sgn(c) < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (const auto& f : m.factors) {
            if (!mono.empty()) mono += " ";
            mono += Var::from_key(f.first).name();
            if (f.second > 1) mono += "^" + std::to_string(f.second);
        }
        if (mono.empty())
            s += ggc::to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += ggc::to_string(a) + " " + mono;
    }
    return s;
}

Bindings& Bindings::bind(Var v, Polynomial p)
{
    map_[v.key()] = std::move(p);
    return *this;
}

Bindings& Bindings::bind_block(char block, const PolyVec& images)
{
    for (std::size_t j = 0; j < images.size(); ++j)
        bind(Var{block, int(j) + 1}, images[j]);
    return *this;
}

Bindings& Bindings::identity_block(char block, int n)
{
    for (int j = 1; j <= n; ++j)
        bind(Var{block, j}, Polynomial::var(block, j));
    return *this;
}

const Polynomial* Bindings::find(Var v) const
{
    auto it = map_.find(v.key());
    return it == map_.end() ? nullptr : &it->second;
}

Polynomial substitute(const Polynomial& p, const Bindings& b)
{
    std::unordered_map<std::uint64_t, Polynomial> powers;
    auto power = [&](std::uint32_t key, int e) -> const Polynomial& {
        std::uint64_t id = (std::uint64_t(key) << 16) | std::uint64_t(e);
        auto it = powers.find(id);
        if (it != powers.end()) return it->second;
        const Polynomial* img = b.find(Var::from_key(key));
        if (!img) throw Error("UNBOUND_VARIABLE", Var::from_key(key).name());
        return powers.emplace(id, img->pow(e)).first->second;
    };
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        Polynomial t(c);
        for (const auto& f : m.factors)
            t = t * power(f.first, f.second);
        r += t;
    }
    return r;
}

PolyVec substitute(const PolyVec& ps, const Bindings& b)
{
    PolyVec out;
    out.reserve(ps.size());
    for (const auto& p : ps)
        out.push_back(substitute(p, b));
    return out;
}

int monomial_weight(const Monomial& m, const std::vector<int>& weights, std::string_view blocks)
{
    int w = 0;
    for (const auto& f : m.factors) {
        Var v = Var::from_key(f.first);
        if (!blocks.empty() && blocks.find(v.block) == std::string_view::npos) continue;
        if (v.index < 1 || v.index > int(weights.size()))
            throw Error("BLOCK_MISMATCH", "variable " + v.name() + " outside dimension");
        w += f.second * weights[v.index - 1];
    }
    return w;
}

HomWeight homogeneous_weight(const Polynomial& p, const std::vector<int>& weights, std::string_view blocks)
{
    if (p.is_zero()) return {HomWeight::Zero, 0};
    std::optional<int> w;
    for (const auto& t : p.terms()) {
        int k = monomial_weight(t.first, weights, blocks);
        if (w && *w != k) return {HomWeight::NonHomogeneous, 0};
        w = k;
    }
    return {HomWeight::Homogeneous, *w};
}

MultiIndex block_exponents(const Monomial& m, char block, int n)
{
    MultiIndex a(n, 0);
    for (const auto& f : m.factors) {
        Var v = Var::from_key(f.first);
        if (v.block != block) continue;
        if (v.index < 1 || v.index > n) throw Error("BLOCK_MISMATCH", "variable " + v.name() + " outside dimension");
        a[v.index - 1] = f.second;
    }
    return a;
}

PolyVec symbolic_point(char block, int n)
{
    PolyVec v;
    for (int j = 1; j <= n; ++j)
        v.push_back(Polynomial::var(block, j));
    return v;
}

PolyVec constant_point(const std::vector<Rational>& coords)
{
    PolyVec v;
    for (const auto& c : coords)
        v.emplace_back(c);
    return v;
}

Rational evaluate(const Polynomial& p, char block, const std::vector<Rational>& point)
{
    Bindings b;
    b.bind_block(block, constant_point(point));
    Polynomial r = substitute(p, b);
    if (r.size() > 1 || (r.size() == 1 && !r.terms().begin()->first.factors.empty()))
        throw Error("UNBOUND_VARIABLE", "evaluation left free variables");
    return r.constant_term();
}

} // namespace ggc
