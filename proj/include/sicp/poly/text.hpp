#pragma once

// Text form of polynomials: sums of terms like "-27/4*p^2*q", "9", "x*y".
// "**" is accepted as a synonym for "^" when reading.

#include "sicp/poly/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sicp {

class PolyParseError : public std::invalid_argument {
public:
    PolyParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Terms in descending lex order; parse_poly(to_text(p), p.vars()) == p.
std::string to_text(const MultiPoly& p);

/// One monomial with coefficient, e.g. "-126*p^2*q".
std::string term_text(const MultiPoly::Exponents& e, const BigRational& c, const std::vector<std::string>& vars);

}  // namespace sicp
