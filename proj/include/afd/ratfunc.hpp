#pragma once

#include "afd/multipoly.hpp"

namespace afd {

/// Rational function num/den over Q in canonical form: gcd(num, den) = 1,
/// den monic under grlex; zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(VariablesPtr vars);
  explicit RatFunc(MultiPoly num);
  /// Reduces to canonical form; throws DivisionByZero for den = 0.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(VariablesPtr vars, const Rational& c);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VariablesPtr& variables() const { return num_.variables(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool uses_variable(std::size_t var) const {
    return num_.uses_variable(var) || den_.uses_variable(var);
  }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc scaled(const Rational& c) const {
    return c.is_zero() ? RatFunc(variables()) : RatFunc(num_.scaled(c), den_, Canonical{});
  }
  RatFunc inverse() const;
  RatFunc pow(long exponent) const;
  RatFunc partial(std::size_t var) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFunc(MultiPoly num, MultiPoly den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract);

  MultiPoly num_;
  MultiPoly den_;
};

inline RatFunc unit_like(const RatFunc& z) { return RatFunc::constant(z.variables(), Rational(1)); }

}  // namespace afd
