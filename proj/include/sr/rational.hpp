#pragma once
// Exact rational scalars backed by boost::multiprecision big integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sr {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(long long v) : v_(v) {}  // NOLINT: implicit on purpose, 3 * r reads naturally
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25" (taken exactly).
    static Rational parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Throws std::range_error unless integral and inside long long.
    long long to_int() const;
    double to_double() const;
    std::string str() const;

    // Integer power; negative k inverts (throws on zero base).
    Rational pow(long long k) const;
    // this^e when the result is again rational (perfect roots), nullopt otherwise.
    // Requires this > 0 unless e is a nonnegative integer.
    std::optional<Rational> exact_pow(const Rational& e) const;

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// floor(n^(1/k)) for n >= 0, k >= 1.
BigInt iroot(const BigInt& n, unsigned k);
BigInt binomial(unsigned n, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sr
