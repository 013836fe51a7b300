#pragma once

#include <string>

#include "mono/poly.hpp"

namespace mono {

/// Names accepted for the two variable slots of a parsed expression.
/// Family coefficients use {param="t"}; hyperelliptic data uses
/// {main="x", param="t"}; plane quartics use {main="x", param="y"}.
struct ExprVars {
  std::string main;   // maps to the x slot; empty = not allowed
  std::string param;  // maps to the t slot; empty = not allowed
};

/// Parse an expression over + - * / ^ ( ) with integer literals (rationals
/// are spelled a/b via division). Whitespace-insensitive. `^` takes a
/// nonnegative integer exponent. Division is exact and only by
/// main-variable-free subexpressions.
BivarPoly parse_expression(const std::string& text, const ExprVars& vars);

/// Convenience: a univariate rational function of the parameter.
RationalFunction parse_rational_function(const std::string& text, const std::string& var = "t");

}  // namespace mono
