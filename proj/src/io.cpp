#include "ggc/io.hpp"
#include "ggc/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ggc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <class F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const json::exception& ex) {
        throw ParseError(std::string(what) + ": " + ex.what());
    }
}

Rational rational_field(const json& v)
{
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("expected a rational as \"p/q\" or an integer");
}

} // namespace

GradedLieAlgebra parse_group_json(const std::string& text)
{
    return guarded("group json", [&] {
        auto j = json::parse(text);
        GradedLieAlgebra a;
        a.name = j.value("name", std::string("group"));
        a.dim = j.at("dim").get<int>();
        a.weights = j.at("weights").get<std::vector<int>>();
        if (a.dim <= 0) throw ParseError("group json: dim must be positive");
        if (int(a.weights.size()) != a.dim) throw ParseError("group json: weights must have dim entries");
        for (const auto& b : j.value("brackets", json::array())) {
            BracketEntry e{b.at("i").get<int>() - 1, b.at("j").get<int>() - 1, b.at("k").get<int>() - 1,
                rational_field(b.at("c"))};
            if (e.i >= e.j) throw ParseError("group json: bracket entries need i < j");
            a.brackets.push_back(e);
        }
        return a;
    });
}

std::string group_to_json(const GradedLieAlgebra& alg)
{
    ordered_json j;
    j["name"] = alg.name;
    j["dim"] = alg.dim;
    j["weights"] = alg.weights;
    j["brackets"] = ordered_json::array();
    for (const auto& b : alg.brackets)
        j["brackets"].push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"k", b.k + 1}, {"c", to_string(b.c)}});
    return j.dump(2) + "\n";
}

std::string law_to_json(const GroupLaw& law)
{
    ordered_json j;
    j["name"] = law.algebra.name;
    j["law"] = ordered_json::array();
    for (const auto& r : law.R) j["law"].push_back(r.to_string());
    return j.dump(2) + "\n";
}

QuantizingFunction parse_tau_json(const std::string& text, std::string name)
{
    return guarded("tau json", [&] {
        auto j = json::parse(text);
        QuantizingFunction t;
        t.name = j.contains("name") ? j["name"].get<std::string>() : std::move(name);
        for (const auto& s : j.at("tau")) t.c.push_back(parse_polynomial(s.get<std::string>()));
        return t;
    });
}

std::string tau_to_json(const QuantizingFunction& tau)
{
    ordered_json j;
    j["name"] = tau.name;
    j["tau"] = ordered_json::array();
    for (const auto& c : tau.c) j["tau"].push_back(c.to_string());
    return j.dump(2) + "\n";
}

std::string table_to_json(const CoefficientTable& t)
{
    ordered_json j;
    j["kind"] = table_kind_name(t.kind);
    j["max_weight"] = t.max_weight;
    j["entries"] = ordered_json::array();
    for (const auto& e : t.entries)
        j["entries"].push_back({{"alpha", e.alpha}, {"split", e.split}, {"c", to_string(e.c)}});
    return j.dump(2) + "\n";
}

CoefficientTable parse_table_json(const std::string& text)
{
    return guarded("table json", [&] {
        auto j = json::parse(text);
        CoefficientTable t{parse_table_kind(j.at("kind").get<std::string>()), j.at("max_weight").get<int>(), {}};
        for (const auto& e : j.at("entries"))
            t.entries.push_back({e.at("alpha").get<MultiIndex>(), e.at("split").get<std::vector<MultiIndex>>(),
                rational_field(e.at("c"))});
        return t;
    });
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace ggc
