#pragma once

#include "afd/tensor.hpp"

namespace afd {

/// Difference tensor from the standard connection: components Γ^k_ij with
/// index {k, i, j}, i the direction slot and j the argument slot.
struct ConnectionCoeffs {
  Tensor gamma;

  explicit ConnectionCoeffs(Tensor g);
  const AlgebraifoldPtr& algebra() const { return gamma.algebra(); }
};

ConnectionCoeffs standard_connection(const AlgebraifoldPtr& algebra);

/// nabla_u v = sum_k (u(v^k) + u^i Γ^k_ij v^j) u_k.
Derivation covariant_derivative(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c, const Derivation& u,
                                const Derivation& v);
/// Slot-by-slot extension: +Γ on contravariant slots, -Γ on covariant slots.
Tensor covariant_derivative(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c, const Derivation& u,
                            const Tensor& t);
/// The Γ correction terms of covariant_derivative on their own.
Tensor connection_action(const AlgebraifoldPtr& algebra, const Tensor& gamma, const Derivation& u, const Tensor& t);

/// T^k_ij = Γ^k_ij - Γ^k_ji.
Tensor torsion(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c);

/// Components {p, i, j, l} of R(u_i, u_j) u_l along u_p.
Tensor curvature_tensor(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c);
/// R(u, v) w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w, for arbitrary fields.
Derivation curvature_apply(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c, const Derivation& u,
                           const Derivation& v, const Derivation& w);

/// Γ^k_ij = 1/2 g^kl (u_j g_il + u_i g_jl - u_l g_ij).
ConnectionCoeffs levi_civita(const AlgebraifoldPtr& algebra, const Metric& m);

/// Right side of Koszul's formula divided by two, so that it equals
/// g(nabla_u v, w) for the Levi-Civita connection.
ScalarValue koszul_rhs(const AlgebraifoldPtr& algebra, const Metric& m, const Derivation& u, const Derivation& v,
                       const Derivation& w);

/// (nabla_{u_i} g)_jk as a rank-(0,3) tensor indexed {i, j, k}.
Tensor metric_compatibility(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c, const Tensor& g);

/// Ric(v, w) = sum_i R(u_i, v) w evaluated at a_i.
Tensor ricci(const AlgebraifoldPtr& algebra, const Tensor& riemann);
ScalarValue ricci_scalar(const AlgebraifoldPtr& algebra, const Metric& m, const Tensor& ric);

struct CurvatureReport {
  ConnectionCoeffs connection;
  Tensor riemann;
  Tensor ricci;
  ScalarValue scalar;
  Tensor einstein;
};

CurvatureReport curvature_report(const AlgebraifoldPtr& algebra, const Metric& m);
Tensor einstein_tensor(const AlgebraifoldPtr& algebra, const Metric& m);

/// Ric - S g / 2 + lambda g - kappa T. Throws NonConstantCoupling when lambda
/// or kappa is not killed by every basis derivation, or kappa is zero.
Tensor efe_residual(const AlgebraifoldPtr& algebra, const Metric& m, const ScalarValue& lambda,
                    const ScalarValue& kappa, const Tensor& stress_energy);
/// Same, reusing an Einstein tensor that has already been computed.
Tensor efe_residual(const AlgebraifoldPtr& algebra, const Metric& m, const Tensor& einstein, const ScalarValue& lambda,
                    const ScalarValue& kappa, const Tensor& stress_energy);

}  // namespace afd
