#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "afd/context.hpp"
#include "afd/rational.hpp"

namespace afd {

/// Element c_0 + c_1 y + ... + c_{d-1} y^{d-1} of K[y]/(p), K the
/// transcendental subfield. The sequence always has length d.
struct ExtElem {
  std::vector<RatFunc> coeffs;
  std::shared_ptr<const Extension> extension;

  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.coeffs == b.coeffs; }
};

enum class ScalarLevel { rational, polynomial, rational_function, extension };

/// Exact element of a context's coordinate algebra, stored at the lowest
/// tower level able to represent it.
class ScalarValue {
 public:
  using Repr = std::variant<Rational, MultiPoly, RatFunc, ExtElem>;

  ScalarValue(ContextPtr ctx, const Rational& q);
  ScalarValue(ContextPtr ctx, const MultiPoly& p);
  ScalarValue(ContextPtr ctx, const RatFunc& f);
  ScalarValue(ContextPtr ctx, const ExtElem& e);

  static ScalarValue zero(ContextPtr ctx) { return ScalarValue(std::move(ctx), Rational(0)); }
  static ScalarValue one(ContextPtr ctx) { return ScalarValue(std::move(ctx), Rational(1)); }
  /// The named constant, transcendental or generator. Throws UnknownIdentifier.
  static ScalarValue variable(ContextPtr ctx, const std::string& name);

  const ContextPtr& context() const { return ctx_; }
  const Repr& repr() const { return repr_; }
  ScalarLevel level() const { return static_cast<ScalarLevel>(repr_.index()); }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;
  /// Value as a rational function in the context variables (the generator,
  /// if present, appears as an ordinary variable of degree < d).
  RatFunc to_ratfunc() const;
  /// Reduced coefficient sequence in the generator; requires an extension.
  std::vector<RatFunc> extension_coeffs() const;

  /// Same value viewed in another context with an identical variable list.
  ScalarValue rebased(ContextPtr target) const;

  ScalarValue operator-() const;
  friend ScalarValue operator+(const ScalarValue& a, const ScalarValue& b);
  friend ScalarValue operator-(const ScalarValue& a, const ScalarValue& b);
  friend ScalarValue operator*(const ScalarValue& a, const ScalarValue& b);
  friend ScalarValue operator/(const ScalarValue& a, const ScalarValue& b);
  ScalarValue& operator+=(const ScalarValue& o) { return *this = *this + o; }
  ScalarValue& operator-=(const ScalarValue& o) { return *this = *this - o; }
  ScalarValue& operator*=(const ScalarValue& o) { return *this = *this * o; }

  ScalarValue pow(long exponent) const;
  ScalarValue scaled(const Rational& c) const;

  /// Structural equality; values over different contexts compare unequal.
  friend bool operator==(const ScalarValue& a, const ScalarValue& b);

 private:
  void demote();

  ContextPtr ctx_;
  Repr repr_;
};

ScalarValue scalar_add(const ScalarValue& a, const ScalarValue& b);
ScalarValue scalar_mul(const ScalarValue& a, const ScalarValue& b);
/// Field contexts: a * b^{-1}. Polynomial contexts: exact division, else NotDivisible.
ScalarValue scalar_div(const ScalarValue& a, const ScalarValue& b);
/// Partial derivative with respect to a transcendental; generators are
/// differentiated implicitly through the minimal relation.
ScalarValue scalar_partial(const ScalarValue& a, const std::string& var);
ScalarValue scalar_partial(const ScalarValue& a, std::size_t transcendental_position);

/// True when a lies in the coordinate algebra proper (always for fields; for
/// polynomial contexts the denominator may only involve base constants).
bool in_algebra(const ScalarValue& a);

using Bindings = std::map<std::string, ScalarValue>;

/// Image of a under the ring homomorphism fixing base constants and sending
/// each bound identifier to its image in `target`.
ScalarValue substitute(const ScalarValue& a, const Bindings& bindings, const ContextPtr& target);
/// As above with the target context taken from the bindings.
ScalarValue substitute(const ScalarValue& a, const Bindings& bindings);

}  // namespace afd
