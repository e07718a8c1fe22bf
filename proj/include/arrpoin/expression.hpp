#pragma once

#include "arrpoin/polynomial.hpp"

#include <stdexcept>
#include <string_view>

namespace arrpoin {

class ExpressionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses a polynomial over x1..x_ell. Grammar: integer literals, variables
/// x1..x_ell, binary + - * /, unary -, ^ with a nonnegative integer exponent,
/// and parentheses. Division is only allowed by a nonzero constant.
MultiPoly parse_polynomial(std::string_view text, std::size_t ell);

} // namespace arrpoin
