#pragma once

#include <map>
#include <string>
#include <vector>

#include "afd/connection.hpp"

namespace afd {

/// phi: A -> B given by the images of A's transcendentals and algebraic
/// generator. Base constants map to the same-named constants of B.
class AlgebraifoldHom {
 public:
  const AlgebraifoldPtr& source() const { return source_; }
  const AlgebraifoldPtr& target() const { return target_; }
  const Bindings& images() const { return images_; }

  ScalarValue apply(const ScalarValue& a) const;

 private:
  friend AlgebraifoldHom build_hom(AlgebraifoldPtr source, AlgebraifoldPtr target, Bindings images);
  AlgebraifoldHom() = default;

  AlgebraifoldPtr source_;
  AlgebraifoldPtr target_;
  Bindings images_;
};

/// Throws MissingImage, UnknownIdentifier, ContextMismatch or
/// RelationNotPreserved (naming the relation and its image).
AlgebraifoldHom build_hom(AlgebraifoldPtr source, AlgebraifoldPtr target, Bindings images);
/// Parses image expressions in the target context.
AlgebraifoldHom build_hom(AlgebraifoldPtr source, AlgebraifoldPtr target,
                          const std::map<std::string, std::string>& images);
/// psi after phi.
AlgebraifoldHom compose(const AlgebraifoldHom& phi, const AlgebraifoldHom& psi);

/// Element of B (x) D_A in the basis 1 (x) u_i.
struct PulledModuleElem {
  AlgebraifoldPtr source;
  AlgebraifoldPtr target;
  std::vector<ScalarValue> coeffs;

  bool is_zero() const;
  friend bool operator==(const PulledModuleElem& a, const PulledModuleElem& b) { return a.coeffs == b.coeffs; }
};

/// Omega_phi(xi) = sum_i phi(xi(u_i)) d(phi(a_i)) on the target. The
/// requirement Omega_phi(da) = d(phi(a)) is checked on every source
/// generator first; a failure throws PullbackVerificationFailed.
OneForm pullback_one_form(const AlgebraifoldHom& phi, const OneForm& xi);
/// Residuals Omega_phi(dg) - d(phi(g)) for each non-constant source generator g.
std::vector<OneForm> pullback_residuals(const AlgebraifoldHom& phi);

/// D_phi(w) = (w(phi(a_1)), ..., w(phi(a_n))).
PulledModuleElem differential(const AlgebraifoldHom& phi, const Derivation& w);
/// Pairing of (1 (x) xi) with s: sum_i phi(xi_i) s_i.
ScalarValue pair_pulled(const AlgebraifoldHom& phi, const OneForm& xi, const PulledModuleElem& s);

/// (phi_* nabla)_w s, with components w(s_k) + sum_ij c_i s_j phi(Γ^k_ij) for c = D_phi(w).
PulledModuleElem pushforward_connection(const AlgebraifoldHom& phi, const ConnectionCoeffs& c, const Derivation& w,
                                        const PulledModuleElem& s);

/// Q(constants)[t] with d/dt, or the diagnostic Q(constants)(t) variant that is
/// not a formal line.
struct FormalLine {
  AlgebraifoldPtr algebra;
  Derivation del;
  ScalarValue t;
  bool is_formal_line = true;
};

FormalLine make_formal_line(const std::vector<std::string>& constants = {}, const std::string& var = "t");
FormalLine make_differential_line(const std::vector<std::string>& constants = {}, const std::string& var = "t");

/// b with del(b) = a and zero constant term. On the Q(t) variant a rational
/// antiderivative is returned when one exists, otherwise NoAntiderivative.
ScalarValue antiderivative(const FormalLine& line, const ScalarValue& a);

/// (phi_* nabla)_del (D_phi del); zero iff the curve is a geodesic.
PulledModuleElem geodesic_residual(const AlgebraifoldHom& phi, const ConnectionCoeffs& c);

/// The line endomorphism t -> alpha t + beta.
AlgebraifoldHom affine_reparametrization(const FormalLine& line, const Rational& alpha, const Rational& beta);

}  // namespace afd
