#include "afd/ratfunc.hpp"

#include "afd/error.hpp"

namespace afd {

namespace {

MultiPoly quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::NotDivisible, "internal: gcd does not divide operand");
  return *std::move(q);
}

}  // namespace

RatFunc::RatFunc(VariablesPtr vars)
    : num_(vars), den_(MultiPoly::constant(vars, Rational(1))) {}

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.variables(), Rational(1))) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (!same_variables(num_.variables(), den_.variables()))
    throw Error(ErrorCode::ContextMismatch, "numerator and denominator over different variables");
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.variables(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = quotient(num_, g);
      den_ = quotient(den_, g);
    }
  }
  const Rational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    const Rational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::constant(VariablesPtr vars, const Rational& c) {
  return RatFunc(MultiPoly::constant(vars, c));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc RatFunc::add(const RatFunc& a, const RatFunc& b, bool subtract) {
  const MultiPoly bn = subtract ? -b.num_ : b.num_;
  if (a.is_zero()) return RatFunc(bn, b.den_, Canonical{});
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + bn, a.den_, Canonical{});
    return RatFunc(a.num_ + bn, a.den_);
  }
  // Henrici: only factors of gcd(den_a, den_b) can cancel.
  const MultiPoly g = poly_gcd(a.den_, b.den_);
  if (g.is_one()) {
    MultiPoly num = a.num_ * b.den_ + bn * a.den_;
    if (num.is_zero()) return RatFunc(a.variables());
    return RatFunc(std::move(num), a.den_ * b.den_, Canonical{});
  }
  const MultiPoly ad = quotient(a.den_, g);
  const MultiPoly bd = quotient(b.den_, g);
  MultiPoly num = a.num_ * bd + bn * ad;
  if (num.is_zero()) return RatFunc(a.variables());
  MultiPoly den = a.den_ * bd;
  const MultiPoly h = poly_gcd(num, g);
  if (!h.is_one()) {
    num = quotient(num, h);
    den = quotient(den, h);
  }
  return RatFunc(std::move(num), std::move(den), Canonical{});
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) { return RatFunc::add(a, b, false); }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return RatFunc::add(a, b, true); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.variables());
  if (a.is_polynomial() && b.is_polynomial())
    return RatFunc(a.num_ * b.num_, a.den_, RatFunc::Canonical{});
  const MultiPoly g1 = poly_gcd(a.num_, b.den_);
  const MultiPoly g2 = poly_gcd(b.num_, a.den_);
  MultiPoly num = quotient(a.num_, g1) * quotient(b.num_, g2);
  MultiPoly den = quotient(a.den_, g2) * quotient(b.den_, g1);
  return RatFunc(std::move(num), std::move(den), RatFunc::Canonical{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  const Rational inv = num_.leading_coeff().inverse();
  return RatFunc(den_.scaled(inv), num_.scaled(inv), Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return RatFunc(num_.pow(e), den_.pow(e), Canonical{});
}

RatFunc RatFunc::partial(std::size_t var) const {
  if (den_.is_one()) return RatFunc(num_.partial(var), den_, Canonical{});
  if (!den_.uses_variable(var)) return RatFunc(num_.partial(var), den_);
  // (n/d)' = (n' d - n d') / d^2; cancel the common factor d first.
  const MultiPoly dd = den_.partial(var);
  const MultiPoly g = poly_gcd(den_, dd);
  const MultiPoly d_over_g = quotient(den_, g);
  MultiPoly num = num_.partial(var) * d_over_g - num_ * quotient(dd, g);
  return RatFunc(std::move(num), den_ * d_over_g);
}

}  // namespace afd
