#include "sr/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace sr {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = boost::multiprecision::cpp_rational(num);
    v_ /= boost::multiprecision::cpp_rational(den);
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) throw std::invalid_argument("malformed rational literal '" + s + "'");
        for (std::size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw std::invalid_argument("malformed rational literal '" + s + "'");
        return BigInt(s.substr(from, to - from));
    };
    Rational out;
    auto slash = s.find('/', i);
    auto dot = s.find('.', i);
    if (slash != std::string::npos) {
        out = Rational(digits(i, slash), digits(slash + 1, s.size()));
    } else if (dot != std::string::npos) {
        BigInt whole = dot > i ? digits(i, dot) : BigInt(0);
        std::size_t nfrac = s.size() - dot - 1;
        BigInt frac = nfrac ? digits(dot + 1, s.size()) : BigInt(0);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(nfrac));
        out = Rational(whole * scale + frac, scale);
    } else {
        out = Rational(digits(i, s.size()), BigInt(1));
    }
    return neg ? -out : out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

long long Rational::to_int() const {
    if (!is_integer()) throw std::range_error("rational " + str() + " is not an integer");
    BigInt n = num();
    if (n > BigInt(std::numeric_limits<long long>::max()) ||
        n < BigInt(std::numeric_limits<long long>::min()))
        throw std::range_error("integer " + str() + " out of range");
    return n.convert_to<long long>();
}

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

Rational Rational::pow(long long k) const {
    if (k < 0) {
        if (is_zero()) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow(-k);
    }
    unsigned e = static_cast<unsigned>(k);
    return Rational(boost::multiprecision::pow(num(), e), boost::multiprecision::pow(den(), e));
}

BigInt iroot(const BigInt& n, unsigned k) {
    if (n < 0) throw std::domain_error("iroot of negative number");
    if (k == 0) throw std::domain_error("iroot of order zero");
    if (n < 2 || k == 1) return n;
    // Newton from above; the starting point 2^(ceil(bits/k)) exceeds the root.
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    BigInt x = BigInt(1) << ((bits + k - 1) / k);
    while (true) {
        BigInt y = ((k - 1) * x + n / boost::multiprecision::pow(x, k - 1)) / k;
        if (y >= x) break;
        x = y;
    }
    while (boost::multiprecision::pow(x, k) > n) --x;
    while (boost::multiprecision::pow(x + 1, k) <= n) ++x;
    return x;
}

std::optional<Rational> Rational::exact_pow(const Rational& e) const {
    if (e.is_integer() && e.sign() >= 0) return pow(e.to_int());
    if (sign() <= 0) {
        if (is_zero() && e.sign() > 0) return Rational(0);
        return std::nullopt;
    }
    if (e.den() > 64) return std::nullopt;  // roots of that order are never needed here
    unsigned q = e.den().convert_to<unsigned>();
    auto root = [q](const BigInt& v) -> std::optional<BigInt> {
        BigInt r = iroot(v, q);
        if (boost::multiprecision::pow(r, q) != v) return std::nullopt;
        return r;
    };
    auto rn = root(num());
    auto rd = root(den());
    if (!rn || !rd) return std::nullopt;
    BigInt p = e.num();
    if (boost::multiprecision::abs(p) > 4096) return std::nullopt;
    return Rational(*rn, *rd).pow(p.convert_to<long long>());
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sr
