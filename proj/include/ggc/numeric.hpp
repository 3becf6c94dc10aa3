#pragma once

#include "ggc/expansion.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <functional>
#include <optional>

namespace ggc::numeric {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// periodic grid on [-L/2, L/2) with frequencies 2 pi k / L, k = -N/2..N/2;
// the two Nyquist frequencies carry weight 1/2 so the frequency set is symmetric
struct Grid {
    int N = 0;
    double L = 0;
    double h = 0;
    std::vector<double> x;
    std::vector<double> xi;
    std::vector<double> weight;

    // Error GRID_INVALID unless N is a power of two >= 8 and L > 0
    static Grid make(int N, double L);
    static double default_period();
};

// exact complex polynomial in x1 (block 'x') and xi1 (block 'p')
struct ComplexPoly {
    Polynomial re, im;

    ComplexPoly() = default;
    ComplexPoly(Polynomial r, Polynomial i = {}) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    ComplexPoly conj() const { return {re, -im}; }
    ComplexPoly times_i_power(int k) const;
    ComplexPoly derivative(Var v) const { return {re.derivative(v), im.derivative(v)}; }
    friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return {a.re - b.re, a.im - b.im}; }
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
    friend ComplexPoly operator*(const Rational& c, const ComplexPoly& a) { return {a.re * c, a.im * c}; }
    friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) { return a.re == b.re && a.im == b.im; }
    std::string to_string() const;
};

// symbol sigma(x, xi) on R^1
class EuclidSymbol {
public:
    using Fn = std::function<cplx(double, double)>;

    explicit EuclidSymbol(Fn f) : eval_(std::move(f)) {}
    static EuclidSymbol from_poly(ComplexPoly p);
    // "x1 p1" style text over blocks x and p, real coefficients
    static EuclidSymbol parse(std::string_view text);

    cplx operator()(double x, double xi) const { return eval_(x, xi); }
    const std::optional<ComplexPoly>& poly() const { return poly_; }
    EuclidSymbol conj() const;

private:
    Fn eval_;
    std::optional<ComplexPoly> poly_;
};

// K(a, b) = (1/L) sum_k w_k e^{i (x_a - x_b) xi_k} sigma((1 - t) x_a + t x_b, xi_k),
// returned as the matrix h K acting on samples
CMatrix quantize_tau_rn(const EuclidSymbol& sigma, double t, const Grid& grid);

// GRID_TOO_COARSE when the polynomial degree times the period outgrows the grid
std::vector<std::string> grid_advisories(const EuclidSymbol& sigma, const Grid& grid);

// X^beta = d/dx^beta, Delta^alpha = q~_alpha(i d/dxi); Error NEEDS_POLYNOMIAL
ComplexPoly delta_x_operators(const EuclidSymbol& sigma, int alpha, int beta);
ComplexPoly delta_x_operators(const ComplexPoly& sigma, int alpha, int beta);

// sum of the orders j <= M with each symbol id bound to a polynomial
ComplexPoly evaluate_expansion(const Expansion& e, const std::map<SymbolId, ComplexPoly>& symbols, int M);

// deterministic Gaussian wave packets concentrated in the central half period
CMatrix gaussian_test_vectors(const Grid& grid);

// ||(A - B) V||_F / max(||A V||_F, ||B V||_F)
double relative_residual(const CMatrix& A, const CMatrix& B, const CMatrix& V);
// ||A - B||_F / max(||A||_F, ||B||_F)
double relative_residual(const CMatrix& A, const CMatrix& B);

// Op^t(sigma)* against Op^t(conj sigma), adjoint for the h-weighted inner product
double adjoint_residual(const EuclidSymbol& sigma, double t, const Grid& grid);

// Weyl product of two polynomial symbols against the expansion truncated at order M
double moyal_exactness_residual(const ComplexPoly& s1, const ComplexPoly& s2, const Grid& grid, int M);

// Schroedinger representation of H_1 with central character e^{i lambda t};
// Error SHIFT_OUT_OF_RANGE when |sqrt|lambda| x1| > L/4
CMatrix schrodinger_rep(double lambda, const std::array<double, 3>& x, const Grid& grid);

struct RepResiduals {
    double homomorphism = 0; // pi(x) pi(y) against pi(x y)
    double central = 0;      // pi(0, 0, t) against e^{i lambda t}
    double unitarity = 0;    // | ||pi(x) v|| - ||v|| | / ||v||
};
RepResiduals rep_residuals(double lambda, const Grid& grid);

// pi(X_1)^2 + pi(X_2)^2 by central differences, against |lambda| (D^2 - U^2);
// step <= 0 picks 1e-4 / sqrt|lambda|
double sublaplacian_residual(double lambda, const Grid& grid, double step = 0);
// pi(X_3) by central differences against i lambda Id; step <= 0 picks 1e-4 / |lambda|
double center_generator_residual(double lambda, const Grid& grid, double step = 0);

enum class MetaplecticKind { Dilation, Chirp, J };
MetaplecticKind parse_metaplectic_kind(const std::string& s);
std::string metaplectic_kind_name(MetaplecticKind k);

struct MetaplecticOp {
    CMatrix forward, inverse;
    std::array<double, 4> symplectic; // row-major 2x2 S acting on (x1, x2)
    std::vector<std::string> advisories;
};
// eta(S) for lambda > 0; param is a for dilation and c for chirp
MetaplecticOp metaplectic_operator(MetaplecticKind kind, double param, double lambda, const Grid& grid);
// max over sample points of ||(pi(S~x) - eta pi(x) eta^{-1}) V|| / ||pi(S~x) V||
double metaplectic_residual(MetaplecticKind kind, double param, double lambda, const Grid& grid);

struct ResidualReport {
    std::string check;
    int grid = 0;
    std::vector<std::pair<std::string, double>> params;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    std::vector<std::string> advisories;
};
ResidualReport make_report(std::string check, const Grid& grid, std::vector<std::pair<std::string, double>> params,
    double residual, double tolerance);
// floats printed with 15 significant digits
std::string report_json(const ResidualReport& r);
std::string format_double(double v);

} // namespace ggc::numeric
