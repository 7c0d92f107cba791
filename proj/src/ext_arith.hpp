#pragma once

#include <vector>

#include "afd/context.hpp"

namespace afd::detail {

using Coeffs = std::vector<RatFunc>;

/// Remainder of poly modulo the minimal relation, padded to length d.
Coeffs ext_reduce(const UniPoly<RatFunc>& poly, const Extension& ext);
Coeffs ext_add(const Coeffs& a, const Coeffs& b);
Coeffs ext_sub(const Coeffs& a, const Coeffs& b);
Coeffs ext_mul(const Coeffs& a, const Coeffs& b, const Extension& ext);
/// Throws DivisionByZero for zero (or a zero divisor).
Coeffs ext_inverse(const Coeffs& a, const Extension& ext);
/// Reduces a polynomial in the context variables (generator included).
Coeffs ext_from_poly(const MultiPoly& p, const Extension& ext);
bool ext_is_zero(const Coeffs& a);

}  // namespace afd::detail
