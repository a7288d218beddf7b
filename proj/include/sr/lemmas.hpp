#pragma once
// Desk-scale checks of the quantitative lemmas. A "constant C independent of
// the parameters" claim becomes a measured ratio |quantity| / bound over a
// grid; the verdict compares the sup over the top dyadic block of the grid
// with the sup over the block below it.

#include "sr/osc.hpp"
#include "sr/restriction.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sr {

enum class Verdict { stable, growing, inconclusive };
std::string to_string(Verdict v);

enum class PointStatus { ok, skipped, failed };
std::string to_string(PointStatus s);

using Params = std::vector<std::pair<std::string, double>>;

struct GridPoint {
    Params params;
    int level = 0;  // dyadic level used for the block verdict
    double quantity = 0, bound = 0, ratio = 0;
    PointStatus status = PointStatus::ok;
    std::string note;  // skip reason or failure message
};

struct BoundCheck {
    std::string lemma_id;
    std::vector<GridPoint> grid;
    double ratio_sup = 0;
    Params ratio_argmax;
    // "blocks": top block sup <= factor * previous block sup.
    // "explicit": ratio_sup <= 1 against a bound with explicit constant.
    std::string verdict_rule = "blocks";
    int block_levels = 2;
    double stability_factor = 1.2;
    double top_block_sup = 0, previous_block_sup = 0;
    Verdict verdict = Verdict::inconclusive;
    std::vector<NamedCheck> assertions;  // hard assertions, if any
    std::vector<std::string> notes;

    std::size_t count(PointStatus s) const;
    bool assertions_ok() const;
    bool passed() const { return verdict == Verdict::stable && assertions_ok(); }
};

// Fills ratio_sup, ratio_argmax, block sups and verdict from the grid.
void finalize(BoundCheck& c);

// One row per grid point: status,level,<params...>,quantity,bound,ratio,note
std::string bound_check_csv(const BoundCheck& c);

struct CommonOptions {
    double L = 16;        // admissibility: large parameters
    double M = 8;         // rho~ >= M delta0^3 for B = 3
    double delta0 = 0.1;  // small parameter bound
    double tol = 1e-8;    // quadrature tolerance
    unsigned threads = 0; // 0: hardware concurrency
};

// I_eps(A,B,T) = int_{-T}^{T} int_R (1+|A-(B+Q(y2/T))y2-b(y1,y2/T)y2^3+r1(y1)+(y2/T)r2(y1)|)^{-N}
//                (1+|y1|)^{-N} |y2|^eps dy1 dy2
// Model data: "degenerate" b = 1, Q = 0, r = 0;
//             "perturbed"  b = 1 + u/10, Q(u) = u/2, r1 = y1/2, r2 = y1/4.
enum class As1Model { degenerate, perturbed };
std::string to_string(As1Model m);

struct As1Point {
    double A, B, T, eps;
};

struct As1Options {
    CommonOptions common;
    std::vector<int> T_exps{4, 5, 6, 7, 8};
    std::vector<double> eps{0.0, 0.25};
    std::vector<As1Model> models{As1Model::degenerate, As1Model::perturbed};
    int N = 4;
    std::vector<As1Point> points;  // replaces the default grid when nonempty
    int block_levels = 2;
};

double as1_integral(const As1Point& p, As1Model model, int N, double tol);
std::vector<As1Point> as1_default_points(const As1Options& o);
BoundCheck check_as1(const As1Options& o = {});

// I(A,B) = int |rho(A + B y + b(delta y) y^3)| chi0(y/T) dy, rho gaussian,
// chi0 the bump of radius 1; b = 1 or b(u) = 1 + u/2.
enum class As2Model { constant, perturbed };
std::string to_string(As2Model m);

struct As2Point {
    double A, B, T, delta;
};

struct As2Options {
    CommonOptions common;
    std::vector<int> T_exps{4, 5, 6, 7, 8};
    std::vector<As2Model> models{As2Model::constant, As2Model::perturbed};
    std::vector<As2Point> points;
    int block_levels = 2;
};

double as2_integral(const As2Point& p, As2Model model, double tol);
std::vector<As2Point> as2_default_points(const As2Options& o);
BoundCheck check_as2(const As2Options& o = {});

// |J(lambda)| for the phase x1^3 B3 - x1 B1 + phi_sharp with B3 = b = 1 and
// constant model functions, against C / (rho~^{1/12} lambda^{2/3}) for B = 4
// and C / (rho~^{1/6} lambda^{5/6}) for B = 3.
struct DuistermaatCoeffs {
    double B1 = 0, d30 = 0, d4 = 0, d0 = 0;  // d4 only for B = 4
};

struct DuistermaatOptions {
    CommonOptions common;
    long long B = 4;
    int lambda_min_exp = 10, lambda_max_exp = 17;
    std::vector<int> r_exps{0, -2, -4, -6, -8, -10, -12, -14, -16};  // rho~ = 2^r
    // Directions (B1', d30', d4', d0') before normalization to rho~ = 1.
    std::vector<DuistermaatCoeffs> directions;
    std::vector<DuistermaatCoeffs> points;  // explicit coefficients, replace the grid
    double sigma = 0.25;                    // gaussian amplitude width in x1 and x2
    int block_levels = 2;
};

std::vector<DuistermaatCoeffs> duistermaat_default_directions(long long B);
double rho_tilde(long long B, const DuistermaatCoeffs& c);
Poly2 duistermaat_phase(long long B, const DuistermaatCoeffs& c);
BoundCheck check_duistermaat_uniform(const DuistermaatOptions& o = {});

struct CounterexampleOptions {
    std::vector<double> deltas{0.1};
    int lambda_min_exp = 8, lambda_max_exp = 18;
    double sigma = 0.3;
    double target_slope = -0.625, slope_tol = 0.05;
    double lemma_slope = -2.0 / 3, margin = 0.02;
    double tol = 1e-8;
};

struct CounterexampleFit {
    double delta;
    DecayFit fit;
    bool matches_target;      // |slope + 5/8| <= slope_tol
    bool violates_lemma;      // slope > -2/3 + margin
};

std::vector<CounterexampleFit> check_counterexample(const CounterexampleOptions& o = {});

// F(t) = sum_{l=0}^{M} 2^{i alpha l t} (H chi_Q)(2^{beta_1 l} a_1, ..., 2^{beta_n l} a_n)
struct OscSumProblem {
    std::string name;
    std::function<double(const std::vector<double>&)> H;
    std::vector<double> R;  // Q = prod [-R_k, R_k]
    double alpha = 1;
    std::vector<double> beta, a;
    std::vector<double> C;  // constants C_k of the derivative condition
};

cplx osc_sum_value(const OscSumProblem& p, long long M, double t);

struct OscSumOptions {
    std::vector<long long> M_list{8, 16, 32, 64, 128, 256};
    std::vector<double> t_grid;  // default: 97 points across one period
    double min_gap = 1e-3;       // skip t with |2^{i alpha t} - 1| < min_gap
    int block_levels = 1;
};

std::vector<OscSumProblem> osc_sum_default_problems();
BoundCheck check_osc_sum(const OscSumProblem& p, const OscSumOptions& o = {});

struct DyadicSumOptions {
    std::vector<double> beta{1.0, 2.0 / 3, 1.0 / 3};
    int trials = 500;
    std::uint64_t seed = 42;
    int j_min = -60, j_max = 60;
    std::vector<std::vector<double>> alphas;  // extra (adversarial) alpha vectors
};

struct DyadicSumTrial {
    std::vector<double> alpha;
    std::size_t lambda_size = 0, exceptional = 0;
    double min_abs_outside = 0;  // min |sum| over Lambda \ Lambda_e
    double inverse_sum = 0;      // sum of 1/|sum| over Lambda \ Lambda_e
};

double dyadic_C1(const std::vector<double>& beta);
double dyadic_C2(const std::vector<double>& beta);
DyadicSumTrial dyadic_sum_trial(const std::vector<double>& alpha, const std::vector<double>& beta, int j_min,
                                int j_max);
BoundCheck check_dyadic_sum_lemma(const DyadicSumOptions& o = {});

// J(A,B,D,E) = int (1 + max{|A+Bv|, |D+Ev|})^{-eps} chi0(v) dv against
// max{1, |A|, |B|, |D|, |E|}^{-eps}.
struct SimpleIntPoint {
    double A, B, D, E, eps;
};

struct SimpleIntOptions {
    CommonOptions common;
    int level_min = -4, level_max = 24;
    std::vector<double> eps{1.0 / 6, 0.5};
    std::vector<SimpleIntPoint> directions;  // scaled by 2^level; eps ignored
    int block_levels = 2;
};

double simple_int_value(const SimpleIntPoint& p, double tol);
std::vector<SimpleIntPoint> simple_int_default_directions();
BoundCheck check_simple_int(const SimpleIntOptions& o = {});

}  // namespace sr
