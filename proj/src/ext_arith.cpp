#include "ext_arith.hpp"

#include "afd/error.hpp"

namespace afd::detail {

Coeffs ext_reduce(const UniPoly<RatFunc>& poly, const Extension& ext) {
  const auto& zero = ext.modulus.zero_element();
  UniPoly<RatFunc> r = poly.degree() >= static_cast<long>(ext.degree) ? poly.divmod(ext.modulus).second : poly;
  Coeffs out(ext.degree, zero);
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) out[k] = r.coeffs()[k];
  return out;
}

Coeffs ext_add(const Coeffs& a, const Coeffs& b) {
  Coeffs out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

Coeffs ext_sub(const Coeffs& a, const Coeffs& b) {
  Coeffs out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
  return out;
}

Coeffs ext_mul(const Coeffs& a, const Coeffs& b, const Extension& ext) {
  const auto& zero = ext.modulus.zero_element();
  return ext_reduce(UniPoly<RatFunc>(zero, a) * UniPoly<RatFunc>(zero, b), ext);
}

Coeffs ext_inverse(const Coeffs& a, const Extension& ext) {
  const auto& zero = ext.modulus.zero_element();
  const UniPoly<RatFunc> pa(zero, a);
  if (pa.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  const auto eg = uni_extended_gcd(pa, ext.modulus);
  if (eg.g.degree() != 0)
    throw Error(ErrorCode::DivisionByZero, "element is a zero divisor modulo the minimal relation");
  return ext_reduce(eg.s, ext);
}

Coeffs ext_from_poly(const MultiPoly& p, const Extension& ext) {
  const auto& zero = ext.modulus.zero_element();
  std::vector<RatFunc> cs;
  for (auto& c : p.coefficients_in(ext.generator_index)) cs.emplace_back(std::move(c));
  return ext_reduce(UniPoly<RatFunc>(zero, std::move(cs)), ext);
}

bool ext_is_zero(const Coeffs& a) {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace afd::detail
