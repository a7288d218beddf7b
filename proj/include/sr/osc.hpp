#pragma once
// Oscillatory integrals int e^{i lambda phi} a in one and two variables, and
// log-log decay fits over dyadic lambda grids.
//
// 1-D: Gauss-Legendre panels sized so that every wavelength of the local
// frequency lambda*|phi'| carries at least nodes_per_wavelength nodes, then
// recomputed at twice the resolution as a self-check.
//
// 2-D: three routes.
//   separable : phi = f(x1) + g(x2) with product amplitude -> product of 1-D values
//   deformed  : gaussian amplitudes; the plane is pushed into C^2 along
//               x + i*theta*w(x)*grad(phi), which turns oscillation into decay
//   direct    : adaptive cubature on the real plane (moderate lambda only)

#include "sr/cutoff.hpp"
#include "sr/puiseux.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sr {

using cplx = std::complex<double>;

// Thrown instead of returning a value the resolution checks do not support.
class QuadratureFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuadConfig {
    double rel_tol = 1e-8;
    double nodes_per_wavelength = 10;
    std::size_t max_nodes = 40'000'000;
    bool self_check = true;
};

struct QuadResult {
    cplx value;
    double error = 0;         // resolution-check difference
    double abs_integral = 0;  // int |a|, the trivial bound on |value|
    std::size_t nodes = 0;
};

struct Phase1d {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::string name;
};

Phase1d monomial_phase(int B, double coeff = 1.0);
Phase1d airy_phase(double B1, double B3 = 1.0);  // B3 x^3 - B1 x
Phase1d poly_phase_1d(std::vector<double> ascending);

// Negative lambda conjugates; lambda = 0 gives int a.
QuadResult integrate_osc_1d(const Phase1d& phase, const CutoffSpec& amp, double lambda, const QuadConfig& cfg = {});

// Real polynomial in two variables with complex evaluation.
class Poly2 {
public:
    struct Term {
        int i, j;
        double c;
    };
    Poly2() = default;
    explicit Poly2(std::vector<Term> terms);
    static Poly2 from(const PuiseuxPoly& p);  // integer exponents only

    const std::vector<Term>& terms() const { return terms_; }
    cplx value(cplx x1, cplx x2) const;
    double value(double x1, double x2) const;
    // value, gradient, Hessian in one pass
    void eval2(cplx x1, cplx x2, cplx& v, std::array<cplx, 2>& g, std::array<cplx, 3>& h) const;
    // sup of |third derivatives| over a box, by coefficient bounds
    double third_derivative_bound(double r1, double r2) const;
    int degree() const;
    // (f, g) with phi = f(x1) + g(x2), if no mixed term
    std::optional<std::pair<std::vector<double>, std::vector<double>>> split() const;

private:
    std::vector<Term> terms_;
};

enum class Route2d { automatic, separable, deformed, direct };
std::string to_string(Route2d r);

struct Quad2dConfig {
    QuadConfig base;
    Route2d route = Route2d::automatic;
    double eta = 0.1;         // maximal imaginary shift
    double G = 0.5;           // gradient size above which the shift saturates
    int initial_panels = 16;  // per axis
    double box_sigmas = 8.0;  // gaussian truncation in units of sigma
};

struct QuadResult2d : QuadResult {
    Route2d route = Route2d::direct;
};

QuadResult2d integrate_osc_2d(const Poly2& phase, const CutoffSpec& a1, const CutoffSpec& a2, double lambda,
                              const Quad2dConfig& cfg = {});

// Phases of the model integrals.
enum class PhaseKind { monomial, airy, full_sharp, d4_counterexample, custom_poly };
std::string to_string(PhaseKind k);
PhaseKind phase_kind_from_string(const std::string& s);

// x1^3 B3 - x1 B1 + B0 + phi_sharp with constant model functions.
// omega is fixed by -2 omega(0) / (n (n-1) alpha(0)) = 1.
struct FullSharpParams {
    long long B = 4;
    long long n = 11;
    double alpha = 1.0;
    double s1 = 1.0, s2 = 1.0;
    double b = 1.0;
    double d30 = 0, a1 = 1.0;   // delta_{3,0} x2 alpha~_1
    double d0 = 0, a11 = 1.0;   // delta_0 x1 x2 alpha_{1,1} (Case D)
    std::vector<double> dj;     // delta_{j+2} for j = 2..B-2
    std::vector<double> aj;     // alpha~_j, default 1
};

struct FullSharp {
    Poly2 phase;
    double G1, G2, G3, G4, G5;
    double x1c, B0, B1, B3;
};

FullSharp full_sharp(const FullSharpParams& p);
// s1 putting B1 = target for the given s2, n, alpha.
double s1_for_B1(const FullSharpParams& p, double B1_target);

// x1^3 + y^4 + 4 delta y^3 - 3 (4 delta^2)^{1/3} x1 y^2 + C(delta), y = x2 - delta,
// C(delta) = 3 delta^4 so that the phase vanishes at x = 0.
Poly2 d4_counterexample(double delta);

struct PhaseDescriptor {
    PhaseKind kind = PhaseKind::monomial;
    std::vector<std::pair<std::string, double>> coefficients;
    std::string poly;  // custom_poly

    double get(const std::string& key, double fallback) const;
    bool has(const std::string& key) const;
    bool is_1d() const { return kind == PhaseKind::monomial || kind == PhaseKind::airy; }
    // "B1_cone" = s sets B1 = s lambda^{-2/3}, which keeps the airy phase
    // at a fixed position relative to the cone |B1| ~ lambda^{-2/3}.
    Phase1d phase_1d(double lambda = 0) const;
    Poly2 phase_2d() const;
};

struct DecayPoint {
    double lambda;
    cplx value;
};

struct DecayFit {
    double slope = 0, intercept = 0, max_residual = 0;
    std::pair<double, double> lambda_range;
    std::vector<DecayPoint> points;
};

// 2^kmin, 2^{kmin+step}, ..., 2^kmax
std::vector<double> dyadic_grid(int kmin, int kmax, int step = 1);

// Least squares of log2|I| against log2 lambda; needs >= 6 points.
DecayFit fit_decay(std::vector<DecayPoint> pts);

struct OscIntegralSpec {
    PhaseDescriptor phase;
    CutoffSpec a1 = CutoffSpec::bump(0, 1), a2 = CutoffSpec::bump(0, 1);
    std::vector<double> lambda_grid;
};

DecayFit decay_fit(const OscIntegralSpec& spec, const Quad2dConfig& cfg = {});

// CSV header "lambda,re,im,abs,log2_abs" and one row per point.
std::string decay_csv(const DecayFit& fit);

// Nonnegative integrands.

// Adaptive Gauss-Kronrod on [a,b] split at the breakpoints.
double integrate_abs_1d(const std::function<double(double)>& f, double a, double b, std::vector<double> breaks,
                        double tol, double* error = nullptr);

// center +- scale*2^j inside (lo,hi): resolves peaks of width ~scale.
std::vector<double> graded_breaks(double center, double scale, double lo, double hi);

struct Rect {
    double x0, x1, y0, y1;
};

struct AbsIntegrand2d {
    std::function<double(double, double)> f;  // f(y1, y2)
    // breakpoints of y1 -> f(y1, y2) for fixed y2
    std::function<std::vector<double>(double)> inner_breaks;
    std::vector<double> outer_breaks;  // in y2
};

// Iterated adaptive integration, inner over y1 in [x0,x1], outer over y2 in [y0,y1].
double integrate_abs_2d(const AbsIntegrand2d& g, const Rect& dom, double tol);

// R with int_{|t|>R} (1+|t|)^{-N} dt < tol.
double power_tail_radius(double N, double tol);

// Real roots of sum c_k x^k (companion eigenvalues, Newton-polished).
std::vector<double> real_poly_roots(const std::vector<double>& ascending);

}  // namespace sr
