#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "afd/rational.hpp"

namespace afd {

using VariableList = std::vector<std::string>;
using VariablesPtr = std::shared_ptr<const VariableList>;
using Exponents = std::vector<std::uint32_t>;

VariablesPtr make_variables(VariableList names);

/// Graded lexicographic comparison: larger total degree first, ties broken
/// lexicographically with the first declared variable most significant.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exponents;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept in strictly
/// descending grlex order with no zero coefficients; zero is the empty list.
/// All operands of a binary operation must share the same variable list.
class MultiPoly {
 public:
  explicit MultiPoly(VariablesPtr vars);

  static MultiPoly constant(VariablesPtr vars, const Rational& c);
  static MultiPoly variable(VariablesPtr vars, std::size_t index);
  static MultiPoly monomial(VariablesPtr vars, Exponents exps, const Rational& c);
  /// Combines like terms, drops zeros and sorts.
  static MultiPoly from_terms(VariablesPtr vars, std::vector<Term> terms);

  const VariablesPtr& variables() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term (zero when absent).
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;
  bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const Rational& c) const;
  /// Multiplies by the monomial c * x^exps.
  MultiPoly times_monomial(const Exponents& exps, const Rational& c) const;
  MultiPoly pow(unsigned exponent) const;
  MultiPoly partial(std::size_t var) const;
  /// Divides by the leading coefficient; zero stays zero.
  MultiPoly monic() const;
  /// Scales to coprime integer coefficients with positive leading coefficient.
  MultiPoly integer_primitive() const;

  /// result[k] is the coefficient of var^k, a polynomial free of var.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients_in(VariablesPtr vars, std::size_t var,
                                        const std::vector<MultiPoly>& coeffs);

  /// Variables given by a substitution table of rationals.
  Rational evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_same(const MultiPoly& o) const;

  VariablesPtr vars_;
  std::vector<Term> terms_;
};

bool same_variables(const VariablesPtr& a, const VariablesPtr& b);

/// Exact quotient a / b, or nullopt when b does not divide a.
/// Throws DivisionByZero for b = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Square root when p is a perfect square in Q[vars], else nullopt.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

}  // namespace afd
