#pragma once
// Dense univariate polynomials over Q. Used for critical-point and shear searches.

#include "sr/rational.hpp"

#include <utility>
#include <vector>

namespace sr {

class UPoly {
public:
    UPoly() = default;
    // coeffs[i] multiplies y^i; trailing zeros are trimmed.
    explicit UPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& y) const;
    double eval(double y) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    static UPoly gcd(UPoly a, UPoly b);  // monic, zero if both zero

private:
    std::vector<Rational> c_;
};

struct RationalRoot {
    Rational value;
    int multiplicity = 0;
};

// Distinct rational roots with multiplicities, ascending.
std::vector<RationalRoot> rational_roots(const UPoly& p);

// Number of distinct real roots (Sturm), p nonzero.
int count_real_roots(const UPoly& p);

// p with all rational roots divided out (each to full multiplicity).
UPoly strip_rational_roots(const UPoly& p);

}  // namespace sr
