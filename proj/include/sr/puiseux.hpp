#pragma once
// Bivariate polynomials with nonnegative rational exponents and rational coefficients.

#include "sr/rational.hpp"
#include "sr/upoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sr {

struct Exponent2 {
    Rational e1, e2;

    Exponent2() = default;
    Exponent2(Rational a, Rational b);

    friend bool operator==(const Exponent2&, const Exponent2&) = default;
    friend std::strong_ordering operator<=>(const Exponent2& a, const Exponent2& b) {
        if (auto c = a.e1 <=> b.e1; c != 0) return c;
        return a.e2 <=> b.e2;
    }
    std::string str() const { return "(" + e1.str() + "," + e2.str() + ")"; }
};

class PuiseuxPoly {
public:
    using TermMap = std::map<Exponent2, Rational>;

    PuiseuxPoly() = default;
    static PuiseuxPoly monomial(const Rational& c, const Rational& e1, const Rational& e2);
    static PuiseuxPoly constant(const Rational& c) { return monomial(c, 0, 0); }
    static PuiseuxPoly x1() { return monomial(1, 1, 0); }
    static PuiseuxPoly x2() { return monomial(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Exponent2& e) const;
    std::vector<Exponent2> support() const;

    // Adds c*x^e, dropping the entry if it cancels.
    void add_term(const Exponent2& e, const Rational& c);

    bool has_integer_exponents() const;
    bool has_integer_x2_exponents() const;
    Rational x2_degree() const;  // max e2, zero for the zero polynomial

    PuiseuxPoly operator-() const;
    PuiseuxPoly& operator+=(const PuiseuxPoly& o);
    PuiseuxPoly& operator-=(const PuiseuxPoly& o);
    friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
    friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
    friend PuiseuxPoly operator*(const Rational& c, const PuiseuxPoly& p);
    friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

    PuiseuxPoly pow(unsigned k) const;

private:
    TermMap terms_;
};

// Floating evaluation. Throws std::domain_error for a negative base under a fractional power.
double evaluate(const PuiseuxPoly& p, double x1, double x2);

// Exact evaluation at rational points; nullopt when a fractional power is irrational.
std::optional<Rational> evaluate_exact(const PuiseuxPoly& p, const Rational& x1, const Rational& x2);

// Replaces x2 by x2 + c*x1^a. Requires integer x2-exponents.
PuiseuxPoly substitute_shear(const PuiseuxPoly& p, const Rational& c, const Rational& a);

// j-th partial derivative in x2 (exact, integer x2-exponents only).
PuiseuxPoly partial_x2(const PuiseuxPoly& p, unsigned j);

// y -> p(1, y) as a dense polynomial. Requires integer x2-exponents.
UPoly restrict_x1_to_one(const PuiseuxPoly& p);

// Lowest total-degree part, i.e. the terms minimizing e1 + e2.
PuiseuxPoly lowest_degree_part(const PuiseuxPoly& p);

std::string render_poly(const PuiseuxPoly& p);

}  // namespace sr
