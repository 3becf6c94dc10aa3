#include "ggc/errors.hpp"
#include "ggc/expansion.hpp"
#include "ggc/io.hpp"
#include "ggc/numeric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ggc;
namespace num = ggc::numeric;

namespace {

enum Exit { Ok = 0, Failure = 1, Usage = 2, OverTolerance = 3 };

struct Options {
    std::string group, tau, out;
    int max_weight = 2;
    int orders = 2;
    int grid = 128;
    double lambda = 1.0;
    double tol = 0;
    bool json = false;
    std::string direction = "to-kn";
    std::string symbol = "x1 p1";
    std::string s1 = "p1", s2 = "x1";
    double t = 0.5;
    std::string generator = "J";
    double param = 1.0;
};

int max_weight_limit()
{
    if (const char* env = std::getenv("GGC_MAX_WEIGHT")) {
        try {
            std::size_t used = 0;
            int v = std::stoi(env, &used);
            if (used == std::string(env).size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        throw ParseError("GGC_MAX_WEIGHT must be a non-negative integer");
    }
    return 6;
}

void check_weight(int M)
{
    int limit = max_weight_limit();
    if (M < 0) throw ParseError("max weight must be non-negative");
    if (M > limit)
        throw ParseError("max weight " + std::to_string(M) + " exceeds the limit " + std::to_string(limit) +
            " (set GGC_MAX_WEIGHT to raise it)");
}

GradedLieAlgebra load_group(const std::string& arg)
{
    if (std::filesystem::is_regular_file(arg)) return parse_group_json(read_text_file(arg));
    try {
        return catalog_algebra(arg);
    } catch (const Error&) {
        throw ParseError("'" + arg + "' is neither a group file nor a catalog name");
    }
}

QuantizingFunction load_tau(const GroupLaw& law, const std::string& arg)
{
    if (std::filesystem::is_regular_file(arg)) {
        auto t = parse_tau_json(read_text_file(arg), std::filesystem::path(arg).stem().string());
        if (int(t.c.size()) != law.dim())
            throw ParseError("tau has " + std::to_string(t.c.size()) + " coordinates, group has dimension " +
                std::to_string(law.dim()));
        return t;
    }
    try {
        return builtin_tau(law, arg);
    } catch (const Error& e) {
        if (e.kind == "UNKNOWN_TAU") throw ParseError("'" + arg + "' is neither a tau file nor a builtin name");
        throw;
    }
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ParseError("cannot write " + o.out);
    f << text;
}

std::string indices_text(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

int cmd_group_validate(const Options& o)
{
    auto alg = load_group(o.group);
    auto report = validate_algebra(alg);
    std::ostringstream os;
    if (report.ok) {
        os << "ok: " << alg.name << "; dim " << alg.dim << "; homogeneous dimension " << alg.homogeneous_dimension()
           << "; step " << alg.nilpotency_step() << "\n";
    } else {
        for (const auto& v : report.violations)
            os << "violation: " << v.kind << " (" << indices_text(v.indices) << ")"
               << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
    }
    emit(o, os.str());
    return report.ok ? Ok : Failure;
}

int cmd_group_law(const Options& o)
{
    auto law = bch_group_law(load_group(o.group));
    if (o.json) {
        emit(o, law_to_json(law));
    } else {
        std::string s;
        for (const auto& r : law.R) s += r.to_string() + "\n";
        emit(o, s);
    }
    return Ok;
}

int cmd_tau_validate(const Options& o)
{
    auto law = bch_group_law(load_group(o.group));
    auto tau = load_tau(law, o.tau);
    auto hp = validate_hp(law, tau);
    std::ostringstream os;
    if (!hp.ok) {
        os << "HP: failed";
        for (std::size_t j = 0; j < hp.coords.size(); ++j)
            if (hp.coords[j].status == CoordVerdict::Invalid) os << "; coordinate " << j + 1 << ": " << hp.coords[j].reason;
        os << "\n";
        emit(o, os.str());
        return Failure;
    }
    auto sym = is_symmetric(law, tau);
    os << "HP: ok; symmetric: ";
    if (sym.symmetric)
        os << "yes\n";
    else
        os << "no; residual: " << sym.residual.to_string() << " (coordinate " << sym.coordinate + 1 << ")\n";
    emit(o, os.str());
    return Ok;
}

int cmd_tau_builtin(const Options& o)
{
    auto law = bch_group_law(load_group(o.group));
    emit(o, tau_to_json(builtin_tau(law, o.tau)));
    return Ok;
}

ChangeDirection parse_direction(const std::string& s)
{
    if (s == "to-kn") return ChangeDirection::TauToKN;
    if (s == "from-kn") return ChangeDirection::KNToTau;
    throw ParseError("direction must be to-kn or from-kn");
}

struct Setup {
    std::shared_ptr<const GroupLaw> law;
    QuantizingFunction tau;
};

Setup setup(const Options& o)
{
    auto law = make_law(load_group(o.group));
    auto tau = load_tau(*law, o.tau);
    if (!validate_hp(*law, tau).ok) throw Error("NOT_HP", "tau fails the homogeneity conditions");
    return {law, tau};
}

int cmd_coeffs(const std::string& kind, const Options& o)
{
    check_weight(o.max_weight);
    auto [law, tau] = setup(o);
    CanonicalBasis basis(law, o.max_weight);
    if (kind == "change") {
        emit(o, table_to_json(change_coeffs(basis, tau, parse_direction(o.direction), o.max_weight)));
    } else if (kind == "adjoint") {
        emit(o, table_to_json(adjoint_coeffs(basis, tau, o.max_weight)));
    } else {
        auto [p1, p2] = composition_coeffs(basis, tau, o.max_weight);
        nlohmann::ordered_json j;
        j["p1"] = nlohmann::ordered_json::parse(table_to_json(p1));
        j["p2"] = nlohmann::ordered_json::parse(table_to_json(p2));
        emit(o, j.dump(2) + "\n");
    }
    return Ok;
}

int cmd_expand(const std::string& kind, const Options& o)
{
    check_weight(o.orders);
    auto [law, tau] = setup(o);
    CanonicalBasis basis(law, std::max(o.orders, 1));
    Expansion e;
    if (kind == "compose")
        e = compose_expansion(basis, tau, o.orders);
    else if (kind == "adjoint")
        e = adjoint_expansion(basis, tau, o.orders);
    else
        e = change_expansion(basis, tau, parse_direction(o.direction), o.orders);
    emit(o, o.json ? render_json(e) : render_text(e));
    return Ok;
}

int cmd_poisson(const Options& o)
{
    auto law = make_law(load_group(o.group));
    CanonicalBasis basis(law, 1);
    auto spec = poisson_bracket_spec(law->algebra);
    auto bracket = poisson_expansion(basis);
    std::optional<PoissonCheck> check;
    if (!o.tau.empty()) check = poisson_check(basis, load_tau(*law, o.tau));
    std::vector<int> stratum;
    for (int k : spec.first_stratum) stratum.push_back(k + 1);
    std::ostringstream os;
    if (o.json) {
        nlohmann::ordered_json j;
        j["group"] = law->algebra.name;
        j["first_stratum"] = stratum;
        j["bracket"] = nlohmann::ordered_json::parse(render_json(bracket));
        if (check) j["check"] = {{"tau", o.tau}, {"ok", check->ok}, {"mismatches", check->mismatches}};
        os << j.dump(2) << "\n";
    } else {
        os << "first stratum: " << indices_text(stratum) << "\n";
        os << "{s1, s2} = " << render_text(bracket).substr(std::string("omega_1 = ").size());
        if (check) {
            os << "omega_1 = -1/2 i {s1, s2}: " << (check->ok ? "ok" : "failed") << "\n";
            for (const auto& m : check->mismatches) os << "  excess: " << m << "\n";
        }
    }
    emit(o, os.str());
    return !check || check->ok ? Ok : Failure;
}

int finish_reports(const Options& o, const std::vector<num::ResidualReport>& reports)
{
    std::string s;
    bool pass = true;
    for (const auto& r : reports) {
        s += num::report_json(r) + "\n";
        for (const auto& a : r.advisories) std::cerr << "advisory: " << a << "\n";
        pass = pass && r.pass;
    }
    emit(o, s);
    return pass ? Ok : OverTolerance;
}

double tolerance(const Options& o, double fallback)
{
    if (o.tol == 0) return fallback;
    if (!(o.tol > 0)) throw ParseError("tolerance must be positive");
    return o.tol;
}

num::ComplexPoly symbol_poly(const std::string& text) { return num::ComplexPoly(parse_polynomial(text)); }

int cmd_numeric(const std::string& check, const Options& o)
{
    if (o.grid < 8 || (o.grid & (o.grid - 1)) != 0) throw ParseError("grid size must be a power of two >= 8");
    auto grid = num::Grid::make(o.grid, num::Grid::default_period());
    std::vector<num::ResidualReport> reports;
    if (check == "adjoint-check") {
        if (o.t < 0 || o.t > 1) throw ParseError("t must lie in [0, 1]");
        auto sigma = num::EuclidSymbol::parse(o.symbol);
        auto r = num::make_report(check, grid, {{"t", o.t}}, num::adjoint_residual(sigma, o.t, grid), tolerance(o, 1e-8));
        r.advisories = num::grid_advisories(sigma, grid);
        reports.push_back(r);
    } else if (check == "moyal-check") {
        check_weight(o.orders);
        auto s1 = symbol_poly(o.s1), s2 = symbol_poly(o.s2);
        double res = num::moyal_exactness_residual(s1, s2, grid, o.orders);
        reports.push_back(num::make_report(check, grid, {{"M", double(o.orders)}}, res, tolerance(o, 1e-6)));
    } else if (check == "rep-check") {
        double tol = tolerance(o, 1e-8);
        auto r = num::rep_residuals(o.lambda, grid);
        std::vector<std::pair<std::string, double>> p{{"lambda", o.lambda}};
        reports.push_back(num::make_report("rep-homomorphism", grid, p, r.homomorphism, tol));
        reports.push_back(num::make_report("rep-central", grid, p, r.central, tol));
        reports.push_back(num::make_report("rep-unitarity", grid, p, r.unitarity, tol));
        reports.push_back(num::make_report("rep-center-generator", grid, p, num::center_generator_residual(o.lambda, grid), tol));
        reports.push_back(num::make_report("sublaplacian", grid, p, num::sublaplacian_residual(o.lambda, grid),
            o.tol == 0 ? 1e-5 : tol));
    } else {
        auto kind = num::parse_metaplectic_kind(o.generator);
        auto op = num::metaplectic_operator(kind, o.param, o.lambda, grid);
        auto r = num::make_report(check, grid,
            {{"lambda", o.lambda}, {num::metaplectic_kind_name(kind) == "chirp" ? "c" : "a", o.param}},
            num::metaplectic_residual(kind, o.param, o.lambda, grid), tolerance(o, 1e-6));
        if (kind == num::MetaplecticKind::J) r.params.pop_back();
        r.advisories = op.advisories;
        reports.push_back(r);
    }
    return finish_reports(o, reports);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symbolic calculus on graded nilpotent groups"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_group = [&](CLI::App* c) { c->add_option("group", o.group, "group JSON file or catalog name")->required(); };
    auto add_tau = [&](CLI::App* c, bool required = true) {
        auto opt = c->add_option("tau", o.tau, "tau JSON file or builtin name (kn, right, half-log, mr)");
        if (required) opt->required();
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", o.out, "write output to a file");
        c->add_flag("--json", o.json, "machine-readable output");
    };

    auto group = app.add_subcommand("group", "validate a graded algebra or print its group law");
    group->require_subcommand(1);
    for (std::string name : {"validate", "law"}) {
        auto c = group->add_subcommand(name);
        add_group(c);
        add_common(c);
        c->callback([&, name] { action = [&, name] { return name == "validate" ? cmd_group_validate(o) : cmd_group_law(o); }; });
    }

    auto tau = app.add_subcommand("tau", "check or emit quantizing functions");
    tau->require_subcommand(1);
    {
        auto c = tau->add_subcommand("validate");
        add_group(c);
        add_tau(c);
        add_common(c);
        c->callback([&] { action = [&] { return cmd_tau_validate(o); }; });
        c = tau->add_subcommand("builtin");
        add_group(c);
        add_tau(c);
        add_common(c);
        c->callback([&] { action = [&] { return cmd_tau_builtin(o); }; });
    }

    auto coeffs = app.add_subcommand("coeffs", "coefficient tables");
    coeffs->require_subcommand(1);
    for (std::string name : {"change", "adjoint", "compose"}) {
        auto c = coeffs->add_subcommand(name);
        add_group(c);
        add_tau(c);
        add_common(c);
        c->add_option("--max-weight", o.max_weight, "largest weight [alpha]");
        c->add_option("--direction", o.direction, "to-kn or from-kn")->check(CLI::IsMember({"to-kn", "from-kn"}));
        c->callback([&, name] { action = [&, name] { return cmd_coeffs(name, o); }; });
    }

    auto expand = app.add_subcommand("expand", "symbolic expansions");
    expand->require_subcommand(1);
    for (std::string name : {"compose", "adjoint", "change"}) {
        auto c = expand->add_subcommand(name);
        add_group(c);
        add_tau(c);
        add_common(c);
        c->add_option("--orders", o.orders, "largest order j");
        c->add_option("--direction", o.direction, "to-kn or from-kn")->check(CLI::IsMember({"to-kn", "from-kn"}));
        c->callback([&, name] { action = [&, name] { return cmd_expand(name, o); }; });
    }

    {
        auto c = app.add_subcommand("poisson", "first-stratum Poisson bracket, optionally checked against omega_1");
        add_group(c);
        add_tau(c, false);
        add_common(c);
        c->callback([&] { action = [&] { return cmd_poisson(o); }; });
    }

    auto numeric = app.add_subcommand("numeric", "grid-based residual checks");
    numeric->require_subcommand(1);
    for (std::string name : {"adjoint-check", "moyal-check", "rep-check", "metaplectic-check"}) {
        auto c = numeric->add_subcommand(name);
        c->add_option("--grid", o.grid, "grid size N");
        c->add_option("--tol", o.tol, "residual tolerance");
        c->add_option("--out", o.out, "write output to a file");
        c->add_flag("--json", o.json, "accepted for symmetry; reports are always JSON");
        if (name == "adjoint-check") {
            c->add_option("--symbol", o.symbol, "polynomial in x1, p1");
            c->add_option("--t", o.t, "quantization parameter in [0, 1]");
        } else if (name == "moyal-check") {
            c->add_option("--s1", o.s1, "first symbol");
            c->add_option("--s2", o.s2, "second symbol");
            c->add_option("--orders", o.orders, "truncation order M");
        } else {
            c->add_option("--lambda", o.lambda, "central character parameter");
        }
        if (name == "metaplectic-check") {
            c->add_option("--generator", o.generator, "dilation, chirp or J");
            c->add_option("--param", o.param, "a for dilation, c for chirp");
        }
        c->callback([&, name] { action = [&, name] { return cmd_numeric(name, o); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    }
}
