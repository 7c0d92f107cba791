#pragma once

#include <memory>
#include <string>
#include <vector>

#include "afd/scalar.hpp"

namespace afd {

class AlgebraifoldDescriptor;
using AlgebraifoldPtr = std::shared_ptr<const AlgebraifoldDescriptor>;

/// Coordinate algebra with a free commuting derivation basis u_i = d/dx_i and
/// dual coordinates a_i = x_i. The table M[i][j] records u_i(a_j).
class AlgebraifoldDescriptor {
 public:
  const ContextPtr& context() const { return ctx_; }
  std::size_t rank() const { return coords_.size(); }
  const std::vector<ScalarValue>& dual_coordinates() const { return coords_; }
  const std::vector<std::vector<ScalarValue>>& basis_action() const { return action_; }

  /// u_i(a), computed by (implicit) partial differentiation.
  ScalarValue apply_basis(std::size_t i, const ScalarValue& a) const;

  ScalarValue zero() const { return ScalarValue::zero(ctx_); }
  ScalarValue one() const { return ScalarValue::one(ctx_); }
  ScalarValue parse(std::string_view text) const;

  bool same_as(const AlgebraifoldDescriptor& other) const;

  /// Descriptor whose recorded table M is taken verbatim, without the
  /// invertibility check. Used to exercise dual_basis_verify diagnostics.
  static AlgebraifoldPtr with_recorded_action(ContextPtr ctx, std::vector<std::vector<ScalarValue>> action);

 private:
  friend AlgebraifoldPtr build_algebraifold(ContextPtr ctx);
  AlgebraifoldDescriptor() = default;

  ContextPtr ctx_;
  std::vector<ScalarValue> coords_;
  std::vector<std::vector<ScalarValue>> action_;
};

void require_same_algebra(const AlgebraifoldPtr& a, const AlgebraifoldPtr& b);

/// Components against u_1..u_n.
struct Derivation {
  AlgebraifoldPtr algebra;
  std::vector<ScalarValue> coeffs;

  static Derivation zero(const AlgebraifoldPtr& algebra);
  static Derivation basis(const AlgebraifoldPtr& algebra, std::size_t i);
  /// Parses one component expression per basis derivation.
  static Derivation parse(const AlgebraifoldPtr& algebra, const std::vector<std::string>& components);

  bool is_zero() const;
  friend Derivation operator+(const Derivation& a, const Derivation& b);
  friend Derivation operator-(const Derivation& a, const Derivation& b);
  friend Derivation operator*(const ScalarValue& s, const Derivation& v);
  friend bool operator==(const Derivation& a, const Derivation& b) { return a.coeffs == b.coeffs; }
};

/// Components against da_1..da_n.
struct OneForm {
  AlgebraifoldPtr algebra;
  std::vector<ScalarValue> coeffs;

  static OneForm zero(const AlgebraifoldPtr& algebra);
  static OneForm basis(const AlgebraifoldPtr& algebra, std::size_t i);

  bool is_zero() const;
  friend OneForm operator+(const OneForm& a, const OneForm& b);
  friend OneForm operator-(const OneForm& a, const OneForm& b);
  friend OneForm operator*(const ScalarValue& s, const OneForm& f);
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.coeffs == b.coeffs; }
};

/// eta(v) for the dual bases.
ScalarValue pair(const OneForm& eta, const Derivation& v);

/// Throws NotSeparable / UnsupportedTower (already enforced by the context).
AlgebraifoldPtr build_algebraifold(ContextPtr ctx);

ScalarValue apply_derivation(const AlgebraifoldPtr& algebra, const Derivation& v, const ScalarValue& a);
OneForm differential_d(const AlgebraifoldPtr& algebra, const ScalarValue& a);
Derivation lie_bracket(const AlgebraifoldPtr& algebra, const Derivation& u, const Derivation& v);

struct DualBasisReport {
  /// derivation_residuals[j][g] = sum_i M[j][i] u_i(g) - u_j(g) for each
  /// non-constant generator g (transcendentals, then the algebraic generator).
  std::vector<std::vector<ScalarValue>> derivation_residuals;
  /// one_form_residuals[j][k] = (sum_i M[i][j] da_i - da_j)(u_k).
  std::vector<std::vector<ScalarValue>> one_form_residuals;
  /// action_residuals[i][j] = u_i(a_j) - M[i][j].
  std::vector<std::vector<ScalarValue>> action_residuals;

  bool all_zero() const;
};

DualBasisReport dual_basis_verify(const AlgebraifoldPtr& algebra);

/// Trace of M, i.e. the contraction of the Kronecker tensor.
ScalarValue dimension(const AlgebraifoldPtr& algebra);

/// True iff every basis derivation kills a.
bool constants_check(const AlgebraifoldPtr& algebra, const ScalarValue& a);

}  // namespace afd
