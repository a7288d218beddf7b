#include "sr/puiseux.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sr {

Exponent2::Exponent2(Rational a, Rational b) : e1(std::move(a)), e2(std::move(b)) {
    if (e1.sign() < 0 || e2.sign() < 0)
        throw std::domain_error("negative exponent " + str());
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& c, const Rational& e1, const Rational& e2) {
    PuiseuxPoly p;
    p.add_term(Exponent2(e1, e2), c);
    return p;
}

Rational PuiseuxPoly::coefficient(const Exponent2& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent2> PuiseuxPoly::support() const {
    std::vector<Exponent2> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

void PuiseuxPoly::add_term(const Exponent2& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool PuiseuxPoly::has_integer_exponents() const {
    for (const auto& [e, c] : terms_)
        if (!e.e1.is_integer() || !e.e2.is_integer()) return false;
    return true;
}

bool PuiseuxPoly::has_integer_x2_exponents() const {
    for (const auto& [e, c] : terms_)
        if (!e.e2.is_integer()) return false;
    return true;
}

Rational PuiseuxPoly::x2_degree() const {
    Rational d = 0;
    for (const auto& [e, c] : terms_) d = max(d, e.e2);
    return d;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    PuiseuxPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(Exponent2(ea.e1 + eb.e1, ea.e2 + eb.e2), ca * cb);
    return r;
}

PuiseuxPoly operator*(const Rational& c, const PuiseuxPoly& p) {
    PuiseuxPoly r;
    for (const auto& [e, v] : p.terms_) r.add_term(e, c * v);
    return r;
}

PuiseuxPoly PuiseuxPoly::pow(unsigned k) const {
    PuiseuxPoly r = constant(1), base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

namespace {
double power(double x, const Rational& e, const char* var) {
    if (e.is_zero()) return 1.0;
    if (e.is_integer()) return std::pow(x, static_cast<int>(e.to_int()));
    if (x < 0) throw std::domain_error(std::string("negative ") + var + " under fractional power " + e.str());
    return std::pow(x, e.to_double());
}
}  // namespace

double evaluate(const PuiseuxPoly& p, double x1, double x2) {
    double acc = 0;
    for (const auto& [e, c] : p.terms()) acc += c.to_double() * power(x1, e.e1, "x1") * power(x2, e.e2, "x2");
    return acc;
}

std::optional<Rational> evaluate_exact(const PuiseuxPoly& p, const Rational& x1, const Rational& x2) {
    Rational acc = 0;
    for (const auto& [e, c] : p.terms()) {
        auto a = x1.exact_pow(e.e1);
        auto b = x2.exact_pow(e.e2);
        if (!a || !b) return std::nullopt;
        acc += c * *a * *b;
    }
    return acc;
}

PuiseuxPoly substitute_shear(const PuiseuxPoly& p, const Rational& c, const Rational& a) {
    if (a.sign() <= 0) throw std::domain_error("shear exponent must be positive");
    if (!p.has_integer_x2_exponents())
        throw std::domain_error("shear needs integer x2-exponents");
    PuiseuxPoly r;
    for (const auto& [e, coef] : p.terms()) {
        unsigned k = static_cast<unsigned>(e.e2.to_int());
        for (unsigned j = 0; j <= k; ++j) {
            Rational w = coef * Rational(binomial(k, j), 1) * c.pow(k - j);
            r.add_term(Exponent2(e.e1 + a * Rational(k - j), Rational(j)), w);
        }
    }
    return r;
}

PuiseuxPoly partial_x2(const PuiseuxPoly& p, unsigned j) {
    if (!p.has_integer_x2_exponents()) throw std::domain_error("partial_x2 needs integer x2-exponents");
    PuiseuxPoly r;
    for (const auto& [e, c] : p.terms()) {
        long long k = e.e2.to_int();
        if (k < static_cast<long long>(j)) continue;
        Rational f = c;
        for (unsigned i = 0; i < j; ++i) f *= Rational(k - i);
        r.add_term(Exponent2(e.e1, Rational(k - j)), f);
    }
    return r;
}

UPoly restrict_x1_to_one(const PuiseuxPoly& p) {
    if (!p.has_integer_x2_exponents()) throw std::domain_error("restriction needs integer x2-exponents");
    std::vector<Rational> c(static_cast<std::size_t>(p.x2_degree().to_int()) + 1);
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e.e2.to_int())] += v;
    return UPoly(std::move(c));
}

PuiseuxPoly lowest_degree_part(const PuiseuxPoly& p) {
    PuiseuxPoly r;
    if (p.is_zero()) return r;
    std::optional<Rational> low;
    for (const auto& [e, c] : p.terms()) {
        Rational d = e.e1 + e.e2;
        if (!low || d < *low) low = d;
    }
    for (const auto& [e, c] : p.terms())
        if (e.e1 + e.e2 == *low) r.add_term(e, c);
    return r;
}

namespace {
std::string render_factor(const char* var, const Rational& e) {
    if (e.is_zero()) return {};
    std::string s = var;
    if (e == Rational(1)) return s;
    if (e.is_integer()) return s + "^" + e.str();
    return s + "^(" + e.str() + ")";
}
}  // namespace

std::string render_poly(const PuiseuxPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        std::string f1 = render_factor("x1", e.e1), f2 = render_factor("x2", e.e2);
        std::string mono = f1.empty() ? f2 : (f2.empty() ? f1 : f1 + "*" + f2);
        if (mono.empty()) {
            os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
        } else if (mag == Rational(1)) {
            os << mono;
        } else {
            os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")") << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace sr
