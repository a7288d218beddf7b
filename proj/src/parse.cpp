#include "sr/parse.hpp"

#include <cctype>

namespace sr {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    PuiseuxPoly run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError(pos_, "empty input");
        PuiseuxPoly p = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
    }

    PuiseuxPoly expr() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        PuiseuxPoly acc = product();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc += product();
            else if (accept('-')) acc -= product();
            else break;
        }
        return acc;
    }

    PuiseuxPoly product() {
        PuiseuxPoly acc = power();
        while (true) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                std::size_t at = pos_;
                PuiseuxPoly d = power();
                auto c = as_constant(d);
                if (!c) throw ParseError(at, "division by a non-constant");
                if (c->is_zero()) throw ParseError(at, "division by zero");
                acc = (Rational(1) / *c) * acc;
            } else {
                break;
            }
        }
        return acc;
    }

    static std::optional<Rational> as_constant(const PuiseuxPoly& p) {
        if (p.is_zero()) return Rational(0);
        if (p.size() == 1 && p.terms().begin()->first == Exponent2(0, 0)) return p.terms().begin()->second;
        return std::nullopt;
    }

    PuiseuxPoly power() {
        PuiseuxPoly base = atom();
        skip();
        if (!accept('^')) return base;
        std::size_t at = pos_;
        Rational e = exponent();
        if (e.sign() < 0) throw ParseError(at, "negative exponent " + e.str() + " rejected");
        // A bare monomial with unit coefficient takes any rational power.
        if (base.size() == 1 && base.terms().begin()->second == Rational(1)) {
            const Exponent2& b = base.terms().begin()->first;
            return PuiseuxPoly::monomial(1, b.e1 * e, b.e2 * e);
        }
        if (!e.is_integer()) throw ParseError(at, "fractional power of a compound expression");
        if (e > Rational(4096)) throw ParseError(at, "exponent too large");
        return base.pow(static_cast<unsigned>(e.to_int()));
    }

    Rational exponent() {
        skip();
        if (accept('(')) {
            skip();
            bool neg = false;
            if (accept('-')) neg = true;
            else accept('+');
            Rational r = integer();
            if (accept('/')) {
                std::size_t at = pos_;
                Rational d = integer();
                if (d.is_zero()) throw ParseError(at, "zero denominator");
                r /= d;
            }
            expect(')');
            return neg ? -r : r;
        }
        if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError(pos_, "negative exponent rejected");
        return integer();
    }

    Rational integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected integer");
        return Rational::parse(s_.substr(start, pos_ - start));
    }

    PuiseuxPoly atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            PuiseuxPoly inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'x') {
            std::size_t at = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '1' || s_[pos_] == '2')) {
                char v = s_[pos_++];
                if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError(at, "unknown variable");
                return v == '1' ? PuiseuxPoly::x1() : PuiseuxPoly::x2();
            }
            throw ParseError(at, "unknown variable (expected x1 or x2)");
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            try {
                return PuiseuxPoly::constant(Rational::parse(s_.substr(start, pos_ - start)));
            } catch (const std::invalid_argument&) {
                throw ParseError(start, "malformed number");
            }
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }
};

}  // namespace

PuiseuxPoly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace sr
