#pragma once
// Restriction exponents: linear height, the (A,B,n) classifier, r-height and
// critical exponents, the delta-vector and the rho functional.

#include "sr/newton.hpp"
#include "sr/puiseux.hpp"
#include "sr/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sr {

struct LinearHeight {
    Rational h_lin;
    Rational shear;  // x2 -> x2 + shear*x1 realizes h_lin
    bool lower_bound_only = false;  // irrational real roots were not searched
};

// Maximal Newton distance over the shears x2 -> x2 + c*x1 with c = 0 or a
// rational root of the lowest-degree part at (1,y).
LinearHeight linear_height(const PuiseuxPoly& p);

enum class CaseAB { a, b };
enum class Branch { ND, D, na };
std::string to_string(CaseAB c);
std::string to_string(Branch b);

struct ClassifyOptions {
    Rational m = 2;
    // Type n1 of the coefficient b1; nullopt means flat. n1 = n-2 gives Case D.
    std::optional<long long> n1;
};

struct RestrictionReport {
    std::string input;
    // Always present for a nonzero input with finite Newton distance.
    Rational d, h_lin, m;
    bool h_lin_lower_bound_only = false;
    std::optional<CaseAB> case_ab;
    // Shear x2 -> x2 + shear_c * x1^shear_a taking the input to phi~.
    Rational shear_c = 0, shear_a = 1;
    std::string phi_tilde;
    std::optional<Weight> kappa_tilde, kappa_L;
    std::optional<long long> B, A;
    std::optional<Rational> H, n, hr, p_c_prime, theta_c;
    Branch nd_or_d = Branch::na;
    std::vector<std::string> gaps;  // why a field is missing

    bool complete() const { return gaps.empty(); }
    // Names of violated invariants; empty when all hold.
    std::vector<std::string> invariant_violations() const;
};

// Classifies x1^A (x2 + c0 x1^a)^B + c1 x1^n + higher terms. Inputs outside
// this family give a partial report with gaps filled in.
RestrictionReport classify(const PuiseuxPoly& p, const ClassifyOptions& opt = {});
RestrictionReport classify(const std::string& text, const ClassifyOptions& opt = {});

// h^r + 1 = (n+3)B/(n+B-A) for the family with m = 2.
Rational family_hr_plus_one(long long A, long long B, long long n);

// Exact exponent arithmetic.
Rational p_tilde_c_prime(const Rational& m, const Rational& H);  // 2(mH/(m+1) + 1)
Rational p_H_prime(const Rational& H);                           // 12H/(3+H)
Rational theta_B(const Rational& B);                             // 1/(2B) + 1/6
Rational theta_tilde_B(const Rational& m, const Rational& B);    // (m+1)/(mB+m+1)
Rational M_poly(const Rational& m, const Rational& B);           // mB^2 - (3m+6)B + 3(m+1)
Rational H_threshold(const Rational& B);                         // 21B/(2(B+3)) - 3/2
Rational H_of_B(long long B);                                    // 9/2 or 81/16
Rational bak_seeger_p0(const Rational& a, const Rational& b);    // 2(a+b)/(2a+b)

struct NamedCheck {
    std::string name;
    bool ok;
    std::string detail;
};

// The exponent lemmas evaluated on a complete report. Checks that do not
// apply to the report's (m,H,B) are omitted.
std::vector<NamedCheck> exponent_lemmas(const RestrictionReport& r);
// Report-independent identities (Case-1 identity for B = 2..12, the
// H(B) thresholds, the boundary equality at (m,H) = (2,3)).
std::vector<NamedCheck> exponent_identities();

// delta_j = 2^{-k q_j}. Slots 0..B; slot j+2 for j = 1..B-2 carries the
// coefficient of x2^j. q30 belongs to delta_{3,0}.
struct DeltaVector {
    long long k;
    long long B;
    std::vector<Rational> q;
    Rational q30;
    Branch branch;

    double value(std::size_t slot) const;
    double value30() const;
};

struct DeltaOptions {
    // n_j for j = 1..B-2; nullopt marks a flat coefficient.
    std::vector<std::optional<long long>> n_list;
    Rational flat_exponent = 64;
    long long taylor_order_N = 1;  // delta_{3,0} = delta0 * delta1^N in Case D
};

// Throws std::domain_error on a nonpositive exponent and std::invalid_argument
// when the report lacks kappa~ or B.
DeltaVector delta_vector(const RestrictionReport& r, long long k, const DeltaOptions& opt);

// Scaled coefficients entering rho: delta_{3,0}, delta_{j+2} for j = 2..B-2
// (index j-2 of rest), and delta0 (Case D only).
struct RhoCoefficients {
    long long B;
    double d30 = 0;
    std::vector<double> rest;
    double d0 = 0;
};

RhoCoefficients rho_coefficients(const DeltaVector& dv);

struct RhoValue {
    double value;
    Branch branch;
};

RhoValue rho(const RhoCoefficients& c, Branch branch);

// Componentwise scaling under which rho is homogeneous of degree one.
RhoCoefficients duistermaat_scale(const RhoCoefficients& c, double r, Branch branch);

// Exact variants; nullopt when a power is irrational.
struct RhoCoefficientsExact {
    long long B;
    Rational d30 = 0;
    std::vector<Rational> rest;
    Rational d0 = 0;
};
std::optional<Rational> rho_exact(const RhoCoefficientsExact& c, Branch branch);
std::optional<RhoCoefficientsExact> duistermaat_scale_exact(const RhoCoefficientsExact& c, const Rational& r,
                                                            Branch branch);

}  // namespace sr
