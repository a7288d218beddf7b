#pragma once
// Text grammar for PuiseuxPoly:
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := power ('*' power)*
//   power   := atom ['^' exponent]
//   atom    := number | 'x1' | 'x2' | '(' expr ')'
//   exponent:= integer | '(' ['+'|'-'] rational ')'
//
// Variables take any nonnegative rational exponent. Parenthesised sums take
// nonnegative integer exponents only, so "(x2 - x1)^2" expands exactly.

#include "sr/puiseux.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace sr {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

PuiseuxPoly parse_poly(std::string_view text);

}  // namespace sr
