#include "afd/connection.hpp"

#include "afd/error.hpp"

namespace afd {

namespace {

void require_rank(const Tensor& t, std::size_t r, std::size_t s, const char* what) {
  if (t.contravariant_rank() != r || t.covariant_rank() != s)
    throw Error(ErrorCode::ArityMismatch, std::string(what) + " must have rank (" + std::to_string(r) + "," +
                                              std::to_string(s) + ")");
}

Tensor componentwise_derivative(const AlgebraifoldPtr& algebra, const Derivation& u, const Tensor& t) {
  return map_components(t, [&](const ScalarValue& c) { return apply_derivation(algebra, u, c); });
}

// Γ(u)^k_j = u^i Γ^k_ij as a dense n x n array.
std::vector<std::vector<ScalarValue>> directional_gamma(const AlgebraifoldPtr& algebra, const Tensor& gamma,
                                                        const Derivation& u) {
  const std::size_t n = algebra->rank();
  std::vector<std::vector<ScalarValue>> out(n, std::vector<ScalarValue>(n, algebra->zero()));
  for (const auto& [idx, c] : gamma.components())
    if (!u.coeffs[idx[1]].is_zero()) out[idx[0]][idx[2]] += u.coeffs[idx[1]] * c;
  return out;
}

}  // namespace

ConnectionCoeffs::ConnectionCoeffs(Tensor g) : gamma(std::move(g)) { require_rank(gamma, 1, 2, "connection"); }

ConnectionCoeffs standard_connection(const AlgebraifoldPtr& algebra) { return ConnectionCoeffs(Tensor(algebra, 1, 2)); }

Derivation covariant_derivative(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c, const Derivation& u,
                                const Derivation& v) {
  return covariant_derivative(algebra, c, u, Tensor::from_derivation(v)).as_derivation();
}

Tensor connection_action(const AlgebraifoldPtr& algebra, const Tensor& gamma, const Derivation& u, const Tensor& t) {
  require_same_algebra(algebra, gamma.algebra());
  require_same_algebra(algebra, u.algebra);
  require_same_algebra(algebra, t.algebra());
  const std::size_t n = algebra->rank(), r = t.contravariant_rank();
  const auto gu = directional_gamma(algebra, gamma, u);
  Tensor out(algebra, r, t.covariant_rank());
  for (const auto& [idx, c] : t.components()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::uint32_t m = idx[k];
      Index moved = idx;
      for (std::uint32_t a = 0; a < n; ++a) {
        moved[k] = a;
        if (k < r) {
          // + Γ(u)^a_m T^{..m..}
          if (!gu[a][m].is_zero()) out.add_to(moved, gu[a][m] * c);
        } else if (!gu[m][a].is_zero()) {
          // - Γ(u)^m_a T_{..m..}
          out.add_to(moved, -(gu[m][a] * c));
        }
      }
    }
  }
  return out;
}

Tensor covariant_derivative(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c, const Derivation& u,
                            const Tensor& t) {
  require_same_algebra(algebra, c.algebra());
  return componentwise_derivative(algebra, u, t) + connection_action(algebra, c.gamma, u, t);
}

Tensor torsion(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c) {
  require_same_algebra(algebra, c.algebra());
  Tensor out(algebra, 1, 2);
  for (const auto& [idx, v] : c.gamma.components()) {
    out.add_to(idx, v);
    out.add_to({idx[0], idx[2], idx[1]}, -v);
  }
  return out;
}

Tensor curvature_tensor(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c) {
  require_same_algebra(algebra, c.algebra());
  const std::uint32_t n = static_cast<std::uint32_t>(algebra->rank());
  const Tensor& g = c.gamma;
  Tensor out(algebra, 1, 3);
  // derivative terms u_i Γ^p_jl - u_j Γ^p_il
  for (const auto& [idx, v] : g.components()) {
    const std::uint32_t p = idx[0], j = idx[1], l = idx[2];
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == j) continue;
      const ScalarValue d = algebra->apply_basis(i, v);
      if (d.is_zero()) continue;
      out.add_to({p, i, j, l}, d);
      out.add_to({p, j, i, l}, -d);
    }
  }
  // quadratic terms Γ^m_jl Γ^p_im - Γ^m_il Γ^p_jm
  for (const auto& [a, va] : g.components()) {
    const std::uint32_t m = a[0], j = a[1], l = a[2];
    for (const auto& [b, vb] : g.components()) {
      if (b[2] != m) continue;
      const std::uint32_t p = b[0], i = b[1];
      if (i == j) continue;
      const ScalarValue prod = va * vb;
      out.add_to({p, i, j, l}, prod);
      out.add_to({p, j, i, l}, -prod);
    }
  }
  return out;
}

Derivation curvature_apply(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c, const Derivation& u,
                           const Derivation& v, const Derivation& w) {
  const Derivation uvw = covariant_derivative(algebra, c, u, covariant_derivative(algebra, c, v, w));
  const Derivation vuw = covariant_derivative(algebra, c, v, covariant_derivative(algebra, c, u, w));
  return uvw - vuw - covariant_derivative(algebra, c, lie_bracket(algebra, u, v), w);
}

ConnectionCoeffs levi_civita(const AlgebraifoldPtr& algebra, const Metric& m) {
  require_same_algebra(algebra, m.g.algebra());
  const std::uint32_t n = static_cast<std::uint32_t>(algebra->rank());
  // dg[l][i][j] = u_l g_ij
  std::vector<std::vector<std::vector<ScalarValue>>> dg(
      n, std::vector<std::vector<ScalarValue>>(n, std::vector<ScalarValue>(n, algebra->zero())));
  for (const auto& [idx, v] : m.g.components())
    for (std::uint32_t l = 0; l < n; ++l) dg[l][idx[0]][idx[1]] = algebra->apply_basis(l, v);

  const Rational half(1, 2);
  Tensor gamma(algebra, 1, 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      // first-kind symbols [ij, l]
      std::vector<ScalarValue> first(n, algebra->zero());
      bool any = false;
      for (std::uint32_t l = 0; l < n; ++l) {
        first[l] = (dg[j][i][l] + dg[i][j][l] - dg[l][i][j]).scaled(half);
        any = any || !first[l].is_zero();
      }
      if (!any) continue;
      for (const auto& [kl, ginv] : m.g_inv.components()) {
        if (first[kl[1]].is_zero()) continue;
        const ScalarValue term = ginv * first[kl[1]];
        gamma.add_to({kl[0], i, j}, term);
        if (i != j) gamma.add_to({kl[0], j, i}, term);
      }
    }
  }
  return ConnectionCoeffs(std::move(gamma));
}

ScalarValue koszul_rhs(const AlgebraifoldPtr& algebra, const Metric& m, const Derivation& u, const Derivation& v,
                       const Derivation& w) {
  auto g = [&](const Derivation& a, const Derivation& b) { return evaluate_tensor(m.g, {}, {a, b}); };
  auto d = [&](const Derivation& a, const ScalarValue& s) { return apply_derivation(algebra, a, s); };
  const ScalarValue sum = d(u, g(v, w)) + d(v, g(u, w)) - d(w, g(u, v)) + g(lie_bracket(algebra, u, v), w) -
                          g(lie_bracket(algebra, u, w), v) - g(lie_bracket(algebra, v, w), u);
  return sum.scaled(Rational(1, 2));
}

Tensor metric_compatibility(const AlgebraifoldPtr& algebra, const ConnectionCoeffs& c, const Tensor& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(algebra->rank());
  Tensor out(algebra, 0, 3);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Tensor d = covariant_derivative(algebra, c, Derivation::basis(algebra, i), g);
    for (const auto& [idx, v] : d.components()) out.set({i, idx[0], idx[1]}, v);
  }
  return out;
}

Tensor ricci(const AlgebraifoldPtr& algebra, const Tensor& riemann) {
  require_same_algebra(algebra, riemann.algebra());
  require_rank(riemann, 1, 3, "Riemann tensor");
  return contract(riemann, 1, 1);
}

ScalarValue ricci_scalar(const AlgebraifoldPtr& algebra, const Metric& m, const Tensor& ric) {
  require_same_algebra(algebra, ric.algebra());
  require_rank(ric, 0, 2, "Ricci tensor");
  ScalarValue acc = algebra->zero();
  for (const auto& [idx, ginv] : m.g_inv.components()) {
    const auto it = ric.components().find(idx);
    if (it != ric.components().end()) acc += ginv * it->second;
  }
  return acc;
}

CurvatureReport curvature_report(const AlgebraifoldPtr& algebra, const Metric& m) {
  ConnectionCoeffs lc = levi_civita(algebra, m);
  Tensor riem = curvature_tensor(algebra, lc);
  Tensor ric = ricci(algebra, riem);
  ScalarValue s = ricci_scalar(algebra, m, ric);
  Tensor ein = ric - s.scaled(Rational(1, 2)) * m.g;
  return {std::move(lc), std::move(riem), std::move(ric), std::move(s), std::move(ein)};
}

Tensor einstein_tensor(const AlgebraifoldPtr& algebra, const Metric& m) { return curvature_report(algebra, m).einstein; }

Tensor efe_residual(const AlgebraifoldPtr& algebra, const Metric& m, const ScalarValue& lambda,
                    const ScalarValue& kappa, const Tensor& stress_energy) {
  return efe_residual(algebra, m, einstein_tensor(algebra, m), lambda, kappa, stress_energy);
}

Tensor efe_residual(const AlgebraifoldPtr& algebra, const Metric& m, const Tensor& einstein, const ScalarValue& lambda,
                    const ScalarValue& kappa, const Tensor& stress_energy) {
  require_rank(stress_energy, 0, 2, "stress-energy tensor");
  require_same_algebra(algebra, stress_energy.algebra());
  if (!constants_check(algebra, lambda))
    throw Error(ErrorCode::NonConstantCoupling, "cosmological constant is not a constant of the algebra");
  if (!constants_check(algebra, kappa))
    throw Error(ErrorCode::NonConstantCoupling, "coupling constant kappa is not a constant of the algebra");
  if (kappa.is_zero()) throw Error(ErrorCode::NonConstantCoupling, "coupling constant kappa must be nonzero");
  return einstein + lambda * m.g - kappa * stress_energy;
}

}  // namespace afd
