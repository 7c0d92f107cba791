#include "doctest.h"

#include "afd/connection.hpp"
#include "afd/error.hpp"
#include "support.hpp"

using namespace afd;
using afd::testing::ScalarSampler;

namespace {

AlgebraifoldPtr plane() { return build_algebraifold(ScalarContext::make(AlgebraKind::polynomial, {}, {"x", "y"})); }

Metric diag_metric(const AlgebraifoldPtr& A, const std::vector<std::string>& entries) {
  std::vector<std::vector<ScalarValue>> rows(entries.size(), std::vector<ScalarValue>(entries.size(), A->zero()));
  for (std::size_t i = 0; i < entries.size(); ++i) rows[i][i] = A->parse(entries[i]);
  return metric_inverse(A, Tensor::from_matrix(A, rows));
}

Metric poly_metric(const AlgebraifoldPtr& A) {
  return metric_inverse(A, Tensor::from_matrix(A, {{A->parse("1"), A->parse("x")}, {A->parse("x"), A->parse("1 + x^2")}}));
}

Tensor symmetric_in_lower(const Tensor& t) {
  Tensor out = t;
  for (const auto& [idx, v] : t.components()) out.add_to({idx[0], idx[2], idx[1]}, v);
  return out;
}

}  // namespace

TEST_CASE("standard connection") {
  auto A = plane();
  auto c = standard_connection(A);
  CHECK(c.gamma.is_zero());
  auto dx = Derivation::basis(A, 0);
  CHECK(covariant_derivative(A, c, dx, Derivation::parse(A, {"0", "y"})).is_zero());
  CHECK(covariant_derivative(A, c, dx, Derivation::parse(A, {"0", "x"})) == Derivation::basis(A, 1));
  CHECK(curvature_tensor(A, c).is_zero());
  auto a = A->parse("x^2*y");
  CHECK(covariant_derivative(A, c, dx, Tensor::scalar(A, a)).as_scalar() == A->parse("2*x*y"));
}

TEST_CASE("torsion") {
  auto A = plane();
  Tensor g(A, 1, 2);
  g.set({0, 0, 1}, A->parse("x"));
  auto t = torsion(A, ConnectionCoeffs(g));
  CHECK(t.at({0, 0, 1}) == A->parse("x"));
  CHECK(t.at({0, 1, 0}) == A->parse("-x"));
  CHECK(t.components().size() == 2);
  CHECK(torsion(A, ConnectionCoeffs(symmetric_in_lower(g))).is_zero());
  CHECK(torsion(A, levi_civita(A, poly_metric(A))).is_zero());
}

TEST_CASE("Levi-Civita connection of the polynomial metric") {
  auto A = plane();
  auto m = poly_metric(A);
  auto lc = levi_civita(A, m);
  // values from the independent Koszul-solve oracle
  const std::vector<std::pair<Index, const char*>> expected{
      {{0, 0, 0}, "-x"},        {{0, 0, 1}, "-x^2"}, {{0, 1, 0}, "-x^2"}, {{0, 1, 1}, "-x^3 - x"},
      {{1, 0, 0}, "1"},         {{1, 0, 1}, "x"},    {{1, 1, 0}, "x"},    {{1, 1, 1}, "x^2"}};
  for (const auto& [idx, text] : expected) CHECK(lc.gamma.at(idx) == A->parse(text));
  CHECK(lc.gamma.components().size() == expected.size());

  for (std::uint32_t i = 0; i < 2; ++i) {
    auto u = Derivation::basis(A, i);
    CHECK(covariant_derivative(A, lc, u, m.g).is_zero());
    CHECK(covariant_derivative(A, lc, u, kronecker(A)).is_zero());
  }
  CHECK(metric_compatibility(A, lc, m.g).is_zero());
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      for (std::uint32_t k = 0; k < 2; ++k) {
        auto u = Derivation::basis(A, i), v = Derivation::basis(A, j), w = Derivation::basis(A, k);
        CHECK(evaluate_tensor(m.g, {}, {covariant_derivative(A, lc, u, v), w}) == koszul_rhs(A, m, u, v, w));
      }
  CHECK(levi_civita(A, diag_metric(A, {"1", "1"})).gamma.is_zero());
}

TEST_CASE("curvature of the polynomial metric") {
  auto A = plane();
  auto m = poly_metric(A);
  auto rep = curvature_report(A, m);
  // Gaussian curvature K = -1 from the orthonormal-frame oracle:
  // R^p_ijl = K (g_jl delta^p_i - g_il delta^p_j)
  const ScalarValue K = A->parse("-1");
  for (std::uint32_t p = 0; p < 2; ++p)
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j)
        for (std::uint32_t l = 0; l < 2; ++l) {
          ScalarValue want = A->zero();
          if (p == i) want += K * m.g.at({j, l});
          if (p == j) want -= K * m.g.at({i, l});
          CHECK(rep.riemann.at({p, i, j, l}) == want);
        }
  CHECK(rep.ricci == -m.g);
  CHECK(*rep.scalar.as_rational() == Rational(-2));
  CHECK(rep.einstein.is_zero());
  CHECK(curvature_tensor(A, levi_civita(A, diag_metric(A, {"1", "1"}))).is_zero());
}

TEST_CASE("Koszul formula with bracket terms") {
  auto A = plane();
  auto id = diag_metric(A, {"1", "1"});
  auto dx = Derivation::basis(A, 0), xdx = Derivation::parse(A, {"x", "0"});
  CHECK(koszul_rhs(A, id, dx, dx, dx).is_zero());
  CHECK(koszul_rhs(A, id, xdx, dx, dx).is_zero());
  CHECK(koszul_rhs(A, id, dx, xdx, dx).is_one());
  auto m = poly_metric(A);
  auto lc = levi_civita(A, m);
  auto dy = Derivation::basis(A, 1);
  CHECK(koszul_rhs(A, m, dx, dx, dy) == evaluate_tensor(m.g, {}, {covariant_derivative(A, lc, dx, dx), dy}));
  CHECK(koszul_rhs(A, m, dx, dx, dy) == A->one());
}

TEST_CASE("Minkowski and Friedmann spacetimes") {
  auto M = build_algebraifold(ScalarContext::make(AlgebraKind::polynomial, {}, {"t", "x", "y", "z"}));
  auto mink = diag_metric(M, {"1", "-1", "-1", "-1"});
  auto zero_t = Tensor(M, 0, 2);
  CHECK(efe_residual(M, mink, M->zero(), M->one(), zero_t).is_zero());
  CHECK(efe_residual(M, mink, M->one(), M->one(), zero_t) == mink.g);
  try {
    (void)efe_residual(M, mink, M->parse("t"), M->one(), zero_t);
    FAIL("expected NonConstantCoupling");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonConstantCoupling);
  }

  auto F = build_algebraifold(ScalarContext::make(AlgebraKind::field, {}, {"s", "x", "y", "z"}));
  auto fr = diag_metric(F, {"9*s^4", "-s^4", "-s^4", "-s^4"});
  auto rep = curvature_report(F, fr);
  // chain-ruled textbook FLRW values (a = t^(2/3), t = s^3)
  CHECK(rep.connection.gamma.at({0, 0, 0}) == F->parse("2/s"));
  CHECK(rep.connection.gamma.at({0, 1, 1}) == F->parse("2/(9*s)"));
  CHECK(rep.connection.gamma.at({1, 0, 1}) == F->parse("2/s"));
  CHECK(rep.ricci.at({0, 0}) == F->parse("6/s^2"));
  CHECK(rep.ricci.at({1, 1}) == F->parse("2/(3*s^2)"));
  CHECK(rep.ricci.components().size() == 4);
  CHECK(rep.scalar == F->parse("-4/(3*s^6)"));
  CHECK(rep.einstein.components().size() == 1);
  CHECK(rep.einstein.at({0, 0}) == F->parse("12/s^2"));
  Tensor dust(F, 0, 2);
  dust.set({0, 0}, F->parse("12/s^2"));
  CHECK(efe_residual(F, fr, F->zero(), F->one(), dust).is_zero());
}

TEST_CASE("curvature identities on random connections") {
  auto A = build_algebraifold(ScalarContext::make(AlgebraKind::field, {}, {"x", "y"}));
  ScalarSampler s(A->context(), {"x", "y"}, 211);
  auto rand_gamma = [&] {
    Tensor g(A, 1, 2);
    for (std::uint32_t k = 0; k < 2; ++k)
      for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j) g.set({k, i, j}, s.poly());
    return g;
  };
  auto rand_field = [&] { return Derivation{A, {s.poly(), s.poly()}}; };
  for (int it = 0; it < 5; ++it) {
    ConnectionCoeffs c(rand_gamma());
    auto r = curvature_tensor(A, c);
    for (const auto& [idx, v] : r.components()) CHECK(r.at({idx[0], idx[2], idx[1], idx[3]}) == -v);
    auto u = rand_field(), v = rand_field(), w = rand_field();
    // component array agrees with the operator definition on non-coordinate fields
    Derivation from_array = Derivation::zero(A);
    for (const auto& [idx, val] : r.components())
      from_array.coeffs[idx[0]] += val * u.coeffs[idx[1]] * v.coeffs[idx[2]] * w.coeffs[idx[3]];
    CHECK(curvature_apply(A, c, u, v, w) == from_array);

    ConnectionCoeffs sym(symmetric_in_lower(rand_gamma()));
    auto rs = curvature_tensor(A, sym);
    for (std::uint32_t p = 0; p < 2; ++p)
      for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j)
          for (std::uint32_t l = 0; l < 2; ++l)
            CHECK((rs.at({p, i, j, l}) + rs.at({p, j, l, i}) + rs.at({p, l, i, j})).is_zero());

    // difference of two connections acts through the difference tensor
    ConnectionCoeffs c2(rand_gamma());
    Tensor t(A, 1, 1);
    t.set({0, 1}, s.poly());
    t.set({1, 0}, s.poly());
    CHECK(covariant_derivative(A, c, u, t) - covariant_derivative(A, c2, u, t) ==
          connection_action(A, c.gamma - c2.gamma, u, t));
  }
}

TEST_CASE("Levi-Civita properties on random metrics") {
  auto A = build_algebraifold(ScalarContext::make(AlgebraKind::field, {}, {"x", "y"}));
  ScalarSampler s(A->context(), {"x", "y"}, 307);
  int done = 0;
  while (done < 4) {
    auto p = s.poly(), q = s.poly(), r = s.poly();
    if ((p * r - q * q).is_zero()) continue;
    ++done;
    auto m = metric_inverse(A, Tensor::from_matrix(A, {{p, q}, {q, r}}));
    auto rep = curvature_report(A, m);
    CHECK(torsion(A, rep.connection).is_zero());
    CHECK(metric_compatibility(A, rep.connection, m.g).is_zero());
    CHECK(rep.einstein.is_zero());
    CHECK(rep.ricci.at({0, 1}) == rep.ricci.at({1, 0}));
    auto u = Derivation{A, {s.poly(), s.poly()}}, v = Derivation{A, {s.poly(), s.poly()}},
         w = Derivation{A, {s.poly(), s.poly()}};
    CHECK(evaluate_tensor(m.g, {}, {covariant_derivative(A, rep.connection, u, v), w}) == koszul_rhs(A, m, u, v, w));
    // a symmetric perturbation breaks compatibility
    Tensor bump(A, 1, 2);
    bump.set({0, 1, 1}, A->parse("x"));
    ConnectionCoeffs perturbed(rep.connection.gamma + bump);
    CHECK(torsion(A, perturbed).is_zero());
    CHECK_FALSE(metric_compatibility(A, perturbed, m.g).is_zero());
  }
}
