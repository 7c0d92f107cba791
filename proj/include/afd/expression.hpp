#pragma once

#include <string>
#include <string_view>

#include "afd/scalar.hpp"

namespace afd {

/// Parses the expression grammar
///
///   expr   := term { ("+" | "-") term }
///   term   := factor { ("*" | "/") factor }
///   factor := "-" factor | base [ "^" ["-"] integer ]
///   base   := integer | identifier | "(" expr ")"
///
/// into a canonical scalar of `ctx`. Unary minus binds looser than "^", so
/// "-x^2" is -(x^2). Negative exponents require a field context or an
/// invertible base. Throws SyntaxError (with position and expected tokens),
/// UnknownIdentifier, NotDivisible or DivisionByZero.
ScalarValue parse_scalar(std::string_view text, const ContextPtr& ctx);

/// Deterministic canonical text: grlex term order, explicit " * " and "^",
/// monic denominator. Extension elements print as N(x, y) / D(x) with
/// deg_y N < d. parse_scalar(render_scalar(a)) == a.
std::string render_scalar(const ScalarValue& a);

/// Renders a polynomial over the given variable names.
std::string render_poly(const MultiPoly& p);

}  // namespace afd
