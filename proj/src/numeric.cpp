#include "ggc/numeric.hpp"
#include "ggc/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace ggc::numeric {

namespace {

constexpr Var kX{'x', 1};
constexpr Var kXi{'p', 1};
constexpr cplx kI{0.0, 1.0};

// monomial list with double coefficients for fast evaluation
struct CompiledPoly {
    struct Term {
        cplx c;
        int ex, ep;
    };
    std::vector<Term> terms;

    explicit CompiledPoly(const ComplexPoly& p)
    {
        auto add = [&](const Polynomial& q, cplx unit) {
            for (const auto& [m, c] : q.terms()) {
                for (const auto& [k, e] : m.factors) {
                    Var v = Var::from_key(k);
                    if (!(v == kX) && !(v == kXi))
                        throw Error("BLOCK_MISMATCH", "symbols use only x1 and p1, found " + v.name());
                }
                terms.push_back({unit * c.get_d(), m.exponent(kX), m.exponent(kXi)});
            }
        };
        add(p.re, 1.0);
        add(p.im, kI);
    }

    cplx operator()(double x, double xi) const
    {
        cplx s = 0;
        for (const auto& t : terms) s += t.c * std::pow(x, t.ex) * std::pow(xi, t.ep);
        return s;
    }
};

Polynomial nth_derivative(Polynomial p, Var v, int k)
{
    for (int i = 0; i < k; ++i) p = p.derivative(v);
    return p;
}

CMatrix diagonal(const std::vector<cplx>& d)
{
    CMatrix m = CMatrix::Zero(Eigen::Index(d.size()), Eigen::Index(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(Eigen::Index(i), Eigen::Index(i)) = d[i];
    return m;
}

// trigonometric interpolation of grid samples at the points `at`; zero outside the period
CMatrix interpolation_matrix(const std::vector<double>& at, const Grid& g)
{
    CMatrix m = CMatrix::Zero(g.N, g.N);
    for (int a = 0; a < g.N; ++a) {
        if (std::abs(at[a]) >= g.L / 2) continue;
        for (int b = 0; b < g.N; ++b) {
            cplx s = 0;
            for (std::size_t k = 0; k < g.xi.size(); ++k) s += g.weight[k] * std::exp(kI * ((at[a] - g.x[b]) * g.xi[k]));
            m(a, b) = s / double(g.N);
        }
    }
    return m;
}

std::array<double, 3> h1_product(const std::array<double, 3>& x, const std::array<double, 3>& y)
{
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2] + 0.5 * (x[0] * y[1] - x[1] * y[0])};
}

const std::vector<std::array<double, 3>>& sample_points()
{
    static const std::vector<std::array<double, 3>> pts = {
        {0.5, -0.3, 0.3}, {-0.7, 0.4, -0.8}, {0.3, 0.6, 0.5}, {0.6, -0.5, 0.2}, {-0.4, -0.6, 1.1}, {0.4, 0.5, -0.3}};
    return pts;
}

} // namespace

Grid Grid::make(int N, double L)
{
    if (N < 8 || (N & (N - 1)) != 0) throw Error("GRID_INVALID", "grid size must be a power of two >= 8");
    if (!(L > 0)) throw Error("GRID_INVALID", "period must be positive");
    Grid g;
    g.N = N;
    g.L = L;
    g.h = L / N;
    for (int a = 0; a < N; ++a) g.x.push_back(-L / 2 + a * g.h);
    for (int k = -N / 2; k <= N / 2; ++k) {
        g.xi.push_back(2 * std::numbers::pi * k / L);
        g.weight.push_back(std::abs(k) == N / 2 ? 0.5 : 1.0);
    }
    return g;
}

double Grid::default_period() { return 16 * std::numbers::pi; }

ComplexPoly ComplexPoly::times_i_power(int k) const
{
    switch (((k % 4) + 4) % 4) {
    case 0: return *this;
    case 1: return {-im, re};
    case 2: return {-re, -im};
    default: return {im, -re};
    }
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::string ComplexPoly::to_string() const
{
    if (im.is_zero()) return re.to_string();
    if (re.is_zero()) return "i (" + im.to_string() + ")";
    return re.to_string() + " + i (" + im.to_string() + ")";
}

EuclidSymbol EuclidSymbol::from_poly(ComplexPoly p)
{
    CompiledPoly c(p);
    EuclidSymbol s([c](double x, double xi) { return c(x, xi); });
    s.poly_ = std::move(p);
    return s;
}

EuclidSymbol EuclidSymbol::parse(std::string_view text) { return from_poly(ComplexPoly(parse_polynomial(text))); }

EuclidSymbol EuclidSymbol::conj() const
{
    if (poly_) return from_poly(poly_->conj());
    auto f = eval_;
    return EuclidSymbol([f](double x, double xi) { return std::conj(f(x, xi)); });
}

CMatrix quantize_tau_rn(const EuclidSymbol& sigma, double t, const Grid& g)
{
    const int N = g.N;
    const int K = int(g.xi.size());
    Eigen::MatrixXcd E(N, K);
    for (int a = 0; a < N; ++a)
        for (int k = 0; k < K; ++k) E(a, k) = std::exp(kI * (g.x[a] * g.xi[k]));
    CMatrix A(N, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            double xm = (1 - t) * g.x[a] + t * g.x[b];
            cplx s = 0;
            for (int k = 0; k < K; ++k) s += g.weight[k] * E(a, k) * std::conj(E(b, k)) * sigma(xm, g.xi[k]);
            A(a, b) = s / double(N);
        }
    return A;
}

std::vector<std::string> grid_advisories(const EuclidSymbol& sigma, const Grid& g)
{
    std::vector<std::string> out;
    if (!sigma.poly()) return out;
    const auto& p = *sigma.poly();
    int deg = 0;
    for (const auto* q : {&p.re, &p.im})
        for (const auto& [m, c] : q->terms()) deg = std::max(deg, m.degree());
    if (deg * g.L / (2 * std::numbers::pi) > g.N / 2.0)
        out.push_back("GRID_TOO_COARSE: symbol degree " + std::to_string(deg) + " exceeds the grid bandwidth");
    return out;
}

ComplexPoly delta_x_operators(const ComplexPoly& sigma, int alpha, int beta)
{
    static const auto line = make_law(abelian_algebra(1));
    ComplexPoly d{nth_derivative(sigma.re, kX, beta), nth_derivative(sigma.im, kX, beta)};
    if (alpha == 0) return d;
    CanonicalBasis basis(line, alpha);
    ComplexPoly out;
    // q~_alpha(y) = sum c_m y^m, and y acts as i d/dxi
    Polynomial q = basis.q_tilde({alpha}, 'y');
    for (const auto& [m, c] : q.terms()) {
        int k = m.exponent(Var{'y', 1});
        ComplexPoly part{nth_derivative(d.re, kXi, k), nth_derivative(d.im, kXi, k)};
        out = out + c * part.times_i_power(k);
    }
    return out;
}

ComplexPoly delta_x_operators(const EuclidSymbol& sigma, int alpha, int beta)
{
    if (!sigma.poly()) throw Error("NEEDS_POLYNOMIAL", "difference operators need an exact polynomial symbol");
    return delta_x_operators(*sigma.poly(), alpha, beta);
}

ComplexPoly evaluate_expansion(const Expansion& e, const std::map<SymbolId, ComplexPoly>& symbols, int M)
{
    ComplexPoly sum;
    for (int j = 0; j <= M && j < int(e.orders.size()); ++j)
        for (const auto& t : e.orders[j]) {
            ComplexPoly prod(Polynomial(t.coeff));
            for (const auto& f : t.factors) {
                auto it = symbols.find(f.sym);
                if (it == symbols.end()) throw Error("UNBOUND_VARIABLE", "no symbol bound to " + symbol_name(f.sym));
                if (f.delta.size() != 1 || f.X.size() != 1)
                    throw Error("KIND_UNSUPPORTED", "numeric evaluation is limited to one dimension");
                prod = prod * delta_x_operators(it->second, f.delta[0], f.X[0]);
            }
            sum = sum + prod.times_i_power(t.i_power);
        }
    return sum;
}

CMatrix gaussian_test_vectors(const Grid& g)
{
    const double centers[] = {-1.5, 0.0, 1.0};
    const double freqs[] = {0.0, 0.5, -0.5};
    CMatrix V(g.N, 9);
    int col = 0;
    for (double c : centers)
        for (double k : freqs) {
            for (int a = 0; a < g.N; ++a) {
                double u = g.x[a] - c;
                V(a, col) = std::exp(-u * u / 2) * std::exp(kI * (k * g.x[a]));
            }
            V.col(col).normalize();
            ++col;
        }
    return V;
}

double relative_residual(const CMatrix& A, const CMatrix& B, const CMatrix& V)
{
    CMatrix av = A * V, bv = B * V;
    double scale = std::max(av.norm(), bv.norm());
    return scale == 0 ? 0 : (av - bv).norm() / scale;
}

double relative_residual(const CMatrix& A, const CMatrix& B)
{
    double scale = std::max(A.norm(), B.norm());
    return scale == 0 ? 0 : (A - B).norm() / scale;
}

double adjoint_residual(const EuclidSymbol& sigma, double t, const Grid& g)
{
    CMatrix a = quantize_tau_rn(sigma, t, g);
    CMatrix b = quantize_tau_rn(sigma.conj(), t, g);
    return relative_residual(a.adjoint(), b);
}

double moyal_exactness_residual(const ComplexPoly& s1, const ComplexPoly& s2, const Grid& g, int M)
{
    auto line = make_law(abelian_algebra(1));
    CanonicalBasis basis(line, std::max(M, 1));
    auto e = compose_expansion(basis, builtin_tau(*line, BuiltinTau::HalfLog), M);
    ComplexPoly sum = evaluate_expansion(e, {{SymbolId::S1, s1}, {SymbolId::S2, s2}}, M);
    CMatrix a = quantize_tau_rn(EuclidSymbol::from_poly(s1), 0.5, g) * quantize_tau_rn(EuclidSymbol::from_poly(s2), 0.5, g);
    CMatrix b = quantize_tau_rn(EuclidSymbol::from_poly(sum), 0.5, g);
    return relative_residual(a, b, gaussian_test_vectors(g));
}

CMatrix schrodinger_rep(double lambda, const std::array<double, 3>& x, const Grid& g)
{
    if (lambda == 0) throw Error("KIND_UNSUPPORTED", "lambda must be nonzero");
    double s = std::sqrt(std::abs(lambda));
    double shift = s * x[0];
    if (std::abs(shift) > g.L / 4) throw Error("SHIFT_OUT_OF_RANGE", "shift exceeds a quarter period");
    CMatrix T = quantize_tau_rn(EuclidSymbol([shift](double, double xi) { return std::exp(kI * (shift * xi)); }), 0.0, g);
    std::vector<cplx> phase(g.N);
    for (int a = 0; a < g.N; ++a) phase[a] = std::exp(kI * (lambda * (x[2] + 0.5 * x[0] * x[1]) + s * x[1] * g.x[a]));
    return diagonal(phase) * T;
}

RepResiduals rep_residuals(double lambda, const Grid& g)
{
    RepResiduals r;
    CMatrix V = gaussian_test_vectors(g);
    const auto& pts = sample_points();
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        CMatrix px = schrodinger_rep(lambda, pts[i], g), py = schrodinger_rep(lambda, pts[i + 1], g);
        r.homomorphism = std::max(r.homomorphism, relative_residual(px * py, schrodinger_rep(lambda, h1_product(pts[i], pts[i + 1]), g), V));
        CMatrix pv = px * V;
        for (int c = 0; c < V.cols(); ++c)
            r.unitarity = std::max(r.unitarity, std::abs(pv.col(c).norm() - V.col(c).norm()) / V.col(c).norm());
    }
    for (double t : {0.3, -1.7, 2.5}) {
        CMatrix pc = schrodinger_rep(lambda, {0, 0, t}, g);
        CMatrix expect = CMatrix::Identity(g.N, g.N) * std::exp(kI * (lambda * t));
        r.central = std::max(r.central, (pc - expect).cwiseAbs().maxCoeff());
    }
    return r;
}

double sublaplacian_residual(double lambda, const Grid& g, double step)
{
    if (step <= 0) step = 1e-4 / std::sqrt(std::abs(lambda));
    auto generator = [&](int j) {
        std::array<double, 3> plus{0, 0, 0}, minus{0, 0, 0};
        plus[j] = step;
        minus[j] = -step;
        return CMatrix((schrodinger_rep(lambda, plus, g) - schrodinger_rep(lambda, minus, g)) / (2 * step));
    };
    CMatrix x1 = generator(0), x2 = generator(1);
    CMatrix lap = x1 * x1 + x2 * x2;
    CMatrix D = kI * quantize_tau_rn(EuclidSymbol([](double, double xi) { return cplx(xi); }), 0.0, g);
    std::vector<cplx> u2(g.N);
    for (int a = 0; a < g.N; ++a) u2[a] = g.x[a] * g.x[a];
    CMatrix target = std::abs(lambda) * (D * D - diagonal(u2));
    return relative_residual(lap, target, gaussian_test_vectors(g));
}

double center_generator_residual(double lambda, const Grid& g, double step)
{
    if (step <= 0) step = 1e-4 / std::abs(lambda);
    CMatrix x3 = (schrodinger_rep(lambda, {0, 0, step}, g) - schrodinger_rep(lambda, {0, 0, -step}, g)) / (2 * step);
    CMatrix target = kI * lambda * CMatrix::Identity(g.N, g.N);
    return relative_residual(x3, target);
}

MetaplecticKind parse_metaplectic_kind(const std::string& s)
{
    for (auto k : {MetaplecticKind::Dilation, MetaplecticKind::Chirp, MetaplecticKind::J})
        if (metaplectic_kind_name(k) == s) return k;
    throw ParseError("unknown metaplectic generator '" + s + "'");
}

std::string metaplectic_kind_name(MetaplecticKind k)
{
    switch (k) {
    case MetaplecticKind::Dilation: return "dilation";
    case MetaplecticKind::Chirp: return "chirp";
    case MetaplecticKind::J: return "J";
    }
    return "?";
}

MetaplecticOp metaplectic_operator(MetaplecticKind kind, double param, double lambda, const Grid& g)
{
    if (!(lambda > 0)) throw Error("KIND_UNSUPPORTED", "metaplectic operators are built for lambda > 0 only");
    MetaplecticOp op;
    switch (kind) {
    case MetaplecticKind::Dilation: {
        double a = param;
        if (a == 0) throw Error("KIND_UNSUPPORTED", "dilation parameter must be nonzero");
        if (std::abs(a) > 2 || std::abs(a) < 0.5) op.advisories.push_back("RESAMPLING_LOSS: |a| is far from 1");
        std::vector<double> fwd(g.N), inv(g.N);
        for (int i = 0; i < g.N; ++i) {
            fwd[i] = g.x[i] / a;
            inv[i] = g.x[i] * a;
        }
        op.forward = interpolation_matrix(fwd, g) / std::sqrt(std::abs(a));
        op.inverse = interpolation_matrix(inv, g) * std::sqrt(std::abs(a));
        op.symplectic = {a, 0, 0, 1 / a};
        break;
    }
    case MetaplecticKind::Chirp: {
        double c = param;
        std::vector<cplx> f(g.N), b(g.N);
        for (int i = 0; i < g.N; ++i) {
            f[i] = std::exp(-kI * (c * g.x[i] * g.x[i] / 2));
            b[i] = std::conj(f[i]);
        }
        op.forward = diagonal(f);
        op.inverse = diagonal(b);
        op.symplectic = {1, 0, c, 1};
        break;
    }
    case MetaplecticKind::J: {
        // the Fourier transform is e^{-i pi/4} e^{i (pi/2) H} with H = (P^2 + U^2) / 2,
        // evaluated in the eigenbasis of the grid oscillator
        CMatrix P = quantize_tau_rn(EuclidSymbol([](double, double xi) { return cplx(xi); }), 0.0, g);
        CMatrix H = 0.5 * (P * P);
        for (int a = 0; a < g.N; ++a) H(a, a) += 0.5 * g.x[a] * g.x[a];
        H = 0.5 * (H + H.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
        Eigen::VectorXcd phase(g.N);
        for (int a = 0; a < g.N; ++a) phase(a) = std::exp(kI * (std::numbers::pi / 2 * es.eigenvalues()(a) - std::numbers::pi / 4));
        op.forward = es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
        op.inverse = op.forward.adjoint();
        op.symplectic = {0, 1, -1, 0};
        break;
    }
    }
    return op;
}

double metaplectic_residual(MetaplecticKind kind, double param, double lambda, const Grid& g)
{
    auto op = metaplectic_operator(kind, param, lambda, g);
    CMatrix V = gaussian_test_vectors(g);
    const auto& S = op.symplectic;
    double worst = 0;
    for (const auto& x : sample_points()) {
        std::array<double, 3> sx{S[0] * x[0] + S[1] * x[1], S[2] * x[0] + S[3] * x[1], x[2]};
        CMatrix lhs = schrodinger_rep(lambda, sx, g) * V;
        CMatrix rhs = op.forward * (schrodinger_rep(lambda, x, g) * (op.inverse * V));
        worst = std::max(worst, (lhs - rhs).norm() / lhs.norm());
    }
    return worst;
}

ResidualReport make_report(std::string check, const Grid& grid, std::vector<std::pair<std::string, double>> params,
    double residual, double tolerance)
{
    ResidualReport r;
    r.check = std::move(check);
    r.grid = grid.N;
    r.params = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = std::isfinite(residual) && residual <= tolerance;
    return r;
}

std::string format_double(double v)
{
    if (!std::isfinite(v)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string report_json(const ResidualReport& r)
{
    std::string s = "{\"check\": \"" + r.check + "\", \"grid\": " + std::to_string(r.grid) + ", \"params\": {";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) s += ", ";
        s += "\"" + r.params[i].first + "\": " + format_double(r.params[i].second);
    }
    s += "}, \"residual\": " + format_double(r.residual) + ", \"tolerance\": " + format_double(r.tolerance) +
        ", \"pass\": " + (r.pass ? "true" : "false") + "}";
    return s;
}

} // namespace ggc::numeric
