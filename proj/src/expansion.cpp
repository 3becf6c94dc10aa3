#include "ggc/expansion.hpp"
#include "ggc/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace ggc {

std::string symbol_name(SymbolId s)
{
    switch (s) {
    case SymbolId::S1: return "s1";
    case SymbolId::S2: return "s2";
    case SymbolId::SStar: return "s*";
    case SymbolId::S: return "s";
    }
    return "?";
}

SymbolId parse_symbol_id(const std::string& s)
{
    for (auto id : {SymbolId::S1, SymbolId::S2, SymbolId::SStar, SymbolId::S})
        if (symbol_name(id) == s) return id;
    throw ParseError("unknown symbol id '" + s + "'");
}

int FormalSymbolTerm::order(const std::vector<int>& weights) const
{
    int j = 0;
    for (const auto& f : factors) j += weighted_degree(f.X, weights);
    return j;
}

bool Expansion::empty() const { return term_count() == 0; }

std::size_t Expansion::term_count() const
{
    std::size_t n = 0;
    for (const auto& o : orders) n += o.size();
    return n;
}

bool Expansion::operator==(const Expansion& o) const
{
    auto same_terms = [](const std::vector<FormalSymbolTerm>& a, const std::vector<FormalSymbolTerm>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].coeff != b[i].coeff || a[i].i_power != b[i].i_power || a[i].factors != b[i].factors) return false;
        return true;
    };
    std::size_t n = std::max(orders.size(), o.orders.size());
    for (std::size_t j = 0; j < n; ++j) {
        static const std::vector<FormalSymbolTerm> none;
        const auto& a = j < orders.size() ? orders[j] : none;
        const auto& b = j < o.orders.size() ? o.orders[j] : none;
        if (!same_terms(a, b)) return false;
    }
    return true;
}

bool ExpansionBuilder::Key::operator<(const Key& o) const
{
    if (factors != o.factors) return factors < o.factors;
    return i_power < o.i_power;
}

ExpansionBuilder::ExpansionBuilder(std::string kind, std::string tau, int max_order)
    : kind_(std::move(kind)), tau_(std::move(tau)), max_order_(max_order), acc_(max_order + 1)
{
}

void ExpansionBuilder::add(int j, Rational coeff, int i_power, std::vector<SymbolFactor> factors)
{
    if (j < 0 || j > max_order_ || is_zero(coeff)) return;
    i_power = ((i_power % 4) + 4) % 4;
    if (i_power >= 2) {
        coeff = -coeff;
        i_power -= 2;
    }
    acc_[j][Key{i_power, std::move(factors)}] += coeff;
}

Expansion ExpansionBuilder::finish() const
{
    Expansion e{kind_, tau_, max_order_, {}};
    e.orders.resize(max_order_ + 1);
    for (int j = 0; j <= max_order_; ++j)
        for (const auto& [k, c] : acc_[j])
            if (!is_zero(c)) e.orders[j].push_back({c, k.i_power, k.factors});
    return e;
}

const std::map<MultiIndex, Rational>& DeltaProducts::product(const MultiIndex& a, const MultiIndex& b)
{
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::map<MultiIndex, Rational> r;
    if (is_zero_index(a))
        r[b] = 1;
    else if (is_zero_index(b))
        r[a] = 1;
    else
        r = basis_.expand_qtilde(basis_.q_tilde(a) * basis_.q_tilde(b), 'x');
    return memo_.emplace(key, std::move(r)).first->second;
}

Expansion compose_expansion(const CanonicalBasis& basis, const QuantizingFunction& tau, int M)
{
    auto [t1, t2] = composition_coeffs(basis, tau, M);
    const auto& w = basis.weights();
    DeltaProducts dp(basis);
    ExpansionBuilder b("compose", tau.name, M);
    for (const auto& alpha : basis.indices_up_to(M)) {
        int wa = weighted_degree(alpha, w);
        for (const auto& beta : basis.indices_up_to(M - wa)) {
            int j = wa + weighted_degree(beta, w);
            for (const auto& x : t1.for_alpha(alpha)) {
                const auto& a1 = x.split[0];
                const auto& a2 = x.split[1];
                for (const auto& y : t2.for_alpha(beta)) {
                    const auto& b1 = y.split[0];
                    const auto& b2 = y.split[1];
                    Rational c = x.c * y.c;
                    for (const auto& [g1, d1] : dp.product(a2, b1))
                        for (const auto& [g2, d2] : dp.product(b2, a1))
                            b.add(j, c * d1 * d2, 0, {{SymbolId::S1, g1, alpha}, {SymbolId::S2, g2, beta}});
                }
            }
        }
    }
    return b.finish();
}

namespace {

Expansion single_symbol(const CoefficientTable& t, const CanonicalBasis& basis, const std::string& kind,
    const std::string& tau, SymbolId sym, int M)
{
    ExpansionBuilder b(kind, tau, M);
    for (const auto& e : t.entries)
        b.add(weighted_degree(e.alpha, basis.weights()), e.c, 0, {{sym, e.split[0], e.alpha}});
    return b.finish();
}

} // namespace

Expansion adjoint_expansion(const CanonicalBasis& basis, const QuantizingFunction& tau, int M)
{
    return single_symbol(adjoint_coeffs(basis, tau, M), basis, "adjoint", tau.name, SymbolId::SStar, M);
}

Expansion change_expansion(const CanonicalBasis& basis, const QuantizingFunction& tau, ChangeDirection dir, int M)
{
    auto t = change_coeffs(basis, tau, dir, M);
    return single_symbol(t, basis, table_kind_name(t.kind), tau.name, SymbolId::S, M);
}

Expansion compose_expansions(const CanonicalBasis& basis, const Expansion& outer, const Expansion& inner, int M)
{
    DeltaProducts dp(basis);
    auto& powers = basis.left_powers();
    std::map<std::pair<MultiIndex, MultiIndex>, std::map<MultiIndex, Rational>> xprod;
    ExpansionBuilder b(outer.kind + "*" + inner.kind, outer.tau, M);
    for (std::size_t jo = 0; jo < outer.orders.size(); ++jo)
        for (const auto& to : outer.orders[jo])
            for (std::size_t ji = 0; ji < inner.orders.size(); ++ji) {
                int j = int(jo + ji);
                if (j > M) continue;
                for (const auto& ti : inner.orders[ji]) {
                    if (to.factors.size() != 1 || ti.factors.size() != 1)
                        throw Error("KIND_UNSUPPORTED", "only single-symbol expansions compose");
                    const auto& fo = to.factors[0];
                    const auto& fi = ti.factors[0];
                    auto key = std::make_pair(fo.X, fi.X);
                    auto it = xprod.find(key);
                    if (it == xprod.end())
                        it = xprod.emplace(key, pbw_expand(compose(powers.power(fo.X), powers.power(fi.X)), basis)).first;
                    for (const auto& [g, d] : dp.product(fo.delta, fi.delta))
                        for (const auto& [x, e] : it->second)
                            b.add(j, to.coeff * ti.coeff * d * e, to.i_power + ti.i_power, {{fi.sym, g, x}});
                }
            }
    return b.finish();
}

Expansion poisson_expansion(const CanonicalBasis& basis)
{
    auto spec = poisson_bracket_spec(basis.law().algebra);
    int n = basis.dim();
    ExpansionBuilder b("poisson", "", 1);
    auto zero = zero_index(n);
    for (int k : spec.first_stratum) {
        auto e = unit_index(n, k);
        b.add(1, -1, 1, {{SymbolId::S1, zero, e}, {SymbolId::S2, e, zero}});
        b.add(1, 1, 1, {{SymbolId::S1, e, zero}, {SymbolId::S2, zero, e}});
    }
    return b.finish();
}

Expansion scaled(const Expansion& e, const Rational& c, int i_power)
{
    ExpansionBuilder b(e.kind, e.tau, e.max_order);
    for (std::size_t j = 0; j < e.orders.size(); ++j)
        for (const auto& t : e.orders[j]) b.add(int(j), t.coeff * c, t.i_power + i_power, t.factors);
    return b.finish();
}

PoissonCheck poisson_check(const CanonicalBasis& basis, const QuantizingFunction& tau)
{
    auto omega = compose_expansion(basis, tau, 1);
    auto expected = scaled(poisson_expansion(basis), frac(-1, 2), 1);
    ExpansionBuilder diff("difference", tau.name, 1);
    for (const auto& t : omega.orders[1]) diff.add(1, t.coeff, t.i_power, t.factors);
    for (const auto& t : expected.orders[1]) diff.add(1, -t.coeff, t.i_power, t.factors);
    auto d = diff.finish();
    PoissonCheck r;
    for (const auto& t : d.orders[1]) r.mismatches.push_back(render_term(t, true));
    r.ok = r.mismatches.empty();
    return r;
}

namespace {

std::string render_factor(const SymbolFactor& f)
{
    std::string s = "(";
    if (!is_zero_index(f.delta)) s += "D^{" + index_label(f.delta) + "} ";
    if (!is_zero_index(f.X)) s += "X^{" + index_label(f.X) + "} ";
    return s + symbol_name(f.sym) + ")";
}

} // namespace

std::string render_term(const FormalSymbolTerm& t, bool first)
{
    std::string s;
    Rational c = t.coeff;
    if (c < 0) {
        s += first ? "-" : " - ";
        c = -c;
    } else if (!first) {
        s += " + ";
    }
    bool unit = c == 1;
    if (!unit) s += to_string(c) + " ";
    if (t.i_power == 1) s += "i ";
    for (const auto& f : t.factors) s += render_factor(f);
    return s;
}

std::string render_text(const Expansion& e)
{
    if (e.empty()) return "0\n";
    std::ostringstream os;
    for (std::size_t j = 0; j < e.orders.size(); ++j) {
        if (e.orders[j].empty()) continue;
        os << "omega_" << j << " = ";
        bool first = true;
        for (const auto& t : e.orders[j]) {
            os << render_term(t, first);
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string render_json(const Expansion& e)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["kind"] = e.kind;
    j["tau"] = e.tau;
    j["max_order"] = e.max_order;
    j["orders"] = ordered_json::array();
    for (std::size_t k = 0; k < e.orders.size(); ++k) {
        ordered_json o;
        o["j"] = k;
        o["terms"] = ordered_json::array();
        for (const auto& t : e.orders[k]) {
            ordered_json tj;
            tj["c"] = to_string(t.coeff);
            tj["i_power"] = t.i_power;
            tj["factors"] = ordered_json::array();
            for (const auto& f : t.factors)
                tj["factors"].push_back({{"sym", symbol_name(f.sym)}, {"delta", f.delta}, {"X", f.X}});
            o["terms"].push_back(tj);
        }
        j["orders"].push_back(o);
    }
    return j.dump(2) + "\n";
}

Expansion parse_expansion_json(const std::string& text)
{
    try {
        auto j = nlohmann::json::parse(text);
        int M = j.at("max_order").get<int>();
        ExpansionBuilder b(j.at("kind").get<std::string>(), j.at("tau").get<std::string>(), M);
        for (const auto& o : j.at("orders")) {
            int k = o.at("j").get<int>();
            if (k < 0 || k > M) throw ParseError("order out of range");
            for (const auto& t : o.at("terms")) {
                std::vector<SymbolFactor> fs;
                for (const auto& f : t.at("factors"))
                    fs.push_back({parse_symbol_id(f.at("sym").get<std::string>()), f.at("delta").get<MultiIndex>(),
                        f.at("X").get<MultiIndex>()});
                b.add(k, parse_rational(t.at("c").get<std::string>()), t.at("i_power").get<int>(), std::move(fs));
            }
        }
        return b.finish();
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("expansion json: ") + ex.what());
    }
}

} // namespace ggc
