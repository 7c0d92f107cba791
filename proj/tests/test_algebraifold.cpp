#include "doctest.h"

#include "afd/algebraifold.hpp"
#include "afd/error.hpp"
#include "support.hpp"

using namespace afd;
using afd::testing::ScalarSampler;

namespace {

AlgebraifoldPtr plane() { return build_algebraifold(ScalarContext::make(AlgebraKind::polynomial, {}, {"x", "y"})); }
AlgebraifoldPtr elliptic() {
  return build_algebraifold(ScalarContext::make(AlgebraKind::field, {}, {"x"}, {{"y", "y^2 - x^3 - 1"}}));
}

Derivation field(const AlgebraifoldPtr& A, std::vector<std::string> comps) { return Derivation::parse(A, comps); }

}  // namespace

TEST_CASE("coordinate descriptors") {
  auto A = plane();
  CHECK(A->rank() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(A->basis_action()[i][j] == (i == j ? A->one() : A->zero()));
  CHECK(*dimension(A).as_rational() == Rational(2));

  auto E = elliptic();
  CHECK(E->rank() == 1);
  CHECK(E->basis_action()[0][0].is_one());
  CHECK(*dimension(E).as_rational() == Rational(1));

  auto F = build_algebraifold(ScalarContext::make(AlgebraKind::field, {"m", "j"}, {"s", "x", "y", "z"}));
  auto d = dimension(F);
  CHECK(*d.as_rational() == Rational(4));
  CHECK(constants_check(F, d));

  try {
    (void)build_algebraifold(ScalarContext::make(AlgebraKind::field, {}, {"x"}, {{"y", "y^2"}}));
    FAIL("expected NotSeparable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSeparable);
  }
}

TEST_CASE("applying derivations") {
  auto A = plane();
  CHECK(apply_derivation(A, Derivation::basis(A, 0), A->parse("x^2*y")) == A->parse("2*x*y"));

  auto E = elliptic();
  auto y = E->parse("y");
  CHECK(apply_derivation(E, Derivation::basis(E, 0), y) == E->parse("3*x^2 / (2*y)"));
  // d/dy expressed through d/dx on the presentation x = x(y)
  auto v = field(E, {"2*y / (3*x^2)"});
  CHECK(apply_derivation(E, v, E->parse("x")) == E->parse("2*y/(3*x^2)"));
  CHECK(apply_derivation(E, v, y).is_one());

  auto other = build_algebraifold(ScalarContext::make(AlgebraKind::polynomial, {}, {"u", "w"}));
  try {
    (void)apply_derivation(A, Derivation::basis(A, 0), other->parse("u"));
    FAIL("expected ContextMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ContextMismatch);
  }
}

TEST_CASE("differentials") {
  auto A = plane();
  CHECK(differential_d(A, A->parse("x^2")).coeffs == std::vector{A->parse("2*x"), A->zero()});
  CHECK(differential_d(A, A->parse("x*y")).coeffs == std::vector{A->parse("y"), A->parse("x")});
  auto E = elliptic();
  CHECK(differential_d(E, E->parse("y")).coeffs == std::vector{E->parse("3*x^2/(2*y)")});
}

TEST_CASE("Lie brackets") {
  auto A = plane();
  auto dx = Derivation::basis(A, 0), dy = Derivation::basis(A, 1);
  CHECK(lie_bracket(A, dx, dy).is_zero());
  auto xdx = field(A, {"x", "0"});
  auto br = lie_bracket(A, xdx, dx);
  CHECK(br == field(A, {"-1", "0"}));
  // as operators on test scalars
  for (const char* t : {"x", "x^2"}) {
    auto a = A->parse(t);
    auto lhs = apply_derivation(A, xdx, apply_derivation(A, dx, a)) - apply_derivation(A, dx, apply_derivation(A, xdx, a));
    CHECK(apply_derivation(A, br, a) == lhs);
  }
  auto x = A->parse("x");
  auto lr = lie_bracket(A, dx, x * dy) - x * lie_bracket(A, dx, dy) - apply_derivation(A, dx, x) * dy;
  CHECK(lr.is_zero());
}

TEST_CASE("dual basis verification") {
  CHECK(dual_basis_verify(plane()).all_zero());
  CHECK(dual_basis_verify(elliptic()).all_zero());

  auto ctx = ScalarContext::make(AlgebraKind::polynomial, {}, {"x", "y"});
  auto zero = ScalarValue::zero(ctx), one = ScalarValue::one(ctx);
  auto bad = AlgebraifoldDescriptor::with_recorded_action(ctx, {{one, zero}, {zero, zero}});
  auto report = dual_basis_verify(bad);
  CHECK_FALSE(report.all_zero());
  CHECK(report.derivation_residuals[1][1] == -one);
  CHECK(*dimension(bad).as_rational() == Rational(1));
}

TEST_CASE("constants") {
  auto A = plane();
  CHECK(constants_check(A, A->parse("7/3")));
  CHECK_FALSE(constants_check(A, A->parse("x")));
  auto P = build_algebraifold(ScalarContext::make(AlgebraKind::field, {"m", "j"}, {"s"}));
  CHECK(constants_check(P, P->parse("m*j")));
  CHECK_FALSE(constants_check(P, P->parse("m*s")));
}

TEST_CASE("derivation properties on random data") {
  auto A = build_algebraifold(ScalarContext::make(AlgebraKind::field, {}, {"x", "y"}));
  ScalarSampler s(A->context(), {"x", "y"}, 29);
  auto rand_field = [&] { return Derivation{A, {s.fraction(), s.fraction()}}; };
  for (int i = 0; i < 12; ++i) {
    auto a = s.fraction(), b = s.fraction();
    auto u = rand_field(), v = rand_field(), w = rand_field();
    CHECK(apply_derivation(A, v, a * b) == apply_derivation(A, v, a) * b + a * apply_derivation(A, v, b));
    CHECK(differential_d(A, a * b) == b * differential_d(A, a) + a * differential_d(A, b));
    CHECK(pair(differential_d(A, a), v) == apply_derivation(A, v, a));
    auto jacobi = lie_bracket(A, lie_bracket(A, u, v), w) + lie_bracket(A, lie_bracket(A, v, w), u) +
                  lie_bracket(A, lie_bracket(A, w, u), v);
    CHECK(jacobi.is_zero());
    CHECK(lie_bracket(A, u, a * v) == a * lie_bracket(A, u, v) + apply_derivation(A, u, a) * v);
  }
}
