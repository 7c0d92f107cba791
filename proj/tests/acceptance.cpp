// Acceptance runner: one PASS/FAIL line per criterion with its runtime and limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "afd/expression.hpp"
#include "afd/report.hpp"
#include "support.hpp"

using namespace afd;
using afd::testing::ScalarSampler;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> run;  // empty string on success, else the first failure
};

#define EXPECT(cond)                                  \
  do {                                                \
    if (!(cond)) return std::string("failed: " #cond); \
  } while (0)

AlgebraifoldPtr polynomial(std::vector<std::string> vars) {
  return build_algebraifold(ScalarContext::make(AlgebraKind::polynomial, {}, std::move(vars)));
}

AlgebraifoldPtr elliptic() {
  return build_algebraifold(ScalarContext::make(AlgebraKind::field, {}, {"x"}, {{"y", "y^2 - x^3 - 1"}}));
}

/// g = P^T D P with P unit upper triangular (degree <= 1 entries) and D a
/// nonzero rational diagonal, so det g is a nonzero constant and g^-1 is
/// polynomial. Entries have degree <= 2.
struct RandomMetrics {
  std::vector<std::pair<AlgebraifoldPtr, Metric>> cases;

  RandomMetrics() {
    const auto A2 = polynomial({"x", "y"});
    const auto A3 = polynomial({"x", "y", "z"});
    ScalarSampler s2(A2->context(), {"x", "y"}, 4001), s3(A3->context(), {"x", "y", "z"}, 4003);
    for (int k = 0; k < 25; ++k) {
      const bool three = k % 2 == 1;
      const auto& A = three ? A3 : A2;
      auto& s = three ? s3 : s2;
      const std::size_t n = A->rank();
      std::vector<std::vector<ScalarValue>> P(n, std::vector<ScalarValue>(n, A->zero()));
      for (std::size_t i = 0; i < n; ++i) {
        P[i][i] = A->one();
        for (std::size_t j = i + 1; j < n; ++j) P[i][j] = A->parse(s.poly_text(2, 1));
      }
      std::uniform_int_distribution<int> d(-3, 3);
      std::vector<ScalarValue> D;
      for (std::size_t i = 0; i < n; ++i) {
        int v = d(s.rng());
        D.push_back(A->parse(std::to_string(v == 0 ? 1 : v)));
      }
      std::vector<std::vector<ScalarValue>> g(n, std::vector<ScalarValue>(n, A->zero()));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < n; ++l) g[i][j] += P[l][i] * D[l] * P[l][j];
      cases.emplace_back(A, metric_inverse(A, Tensor::from_matrix(A, g)));
    }
  }
};

const RandomMetrics& random_metrics() {
  static const RandomMetrics m;
  return m;
}

std::string criterion_inverse() {
  const auto A = polynomial({"x", "y"});
  const Metric m = metric_inverse(A, Tensor::from_matrix(A, {{A->parse("1"), A->parse("x")},
                                                             {A->parse("x"), A->parse("1 + x^2")}}));
  const std::vector<std::vector<std::string>> expected{{"1 + x^2", "-x"}, {"-x", "1"}};
  EXPECT(m.g_inv.contravariant_rank() == 2 && m.g_inv.components().size() == 4);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) EXPECT(m.g_inv.at({i, j}) == A->parse(expected[i][j]));
  return {};
}

std::string criterion_derivations() {
  const auto A = elliptic();
  const auto y = A->parse("y");
  EXPECT(apply_derivation(A, Derivation::basis(A, 0), y) == A->parse("3*x^2/(2*y)"));
  const Derivation d_dy{A, {A->parse("2*y/(3*x^2)")}};
  EXPECT(apply_derivation(A, d_dy, y) == A->one());
  return {};
}

std::string criterion_dimensions() {
  const std::vector<std::string> names{"x1", "x2", "x3", "x4"};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto A = polynomial({names.begin(), names.begin() + n});
    EXPECT(dimension(A) == A->parse(std::to_string(n)));
  }
  const auto E = elliptic();
  EXPECT(dimension(E) == E->one());
  const auto F = build_algebraifold(ScalarContext::make(AlgebraKind::field, {"m", "j"}, {"s", "x", "y", "z"}));
  EXPECT(dimension(F) == F->parse("4"));
  return {};
}

std::string criterion_levi_civita() {
  for (const auto& [A, m] : random_metrics().cases) {
    const std::size_t n = A->rank();
    const ConnectionCoeffs c = levi_civita(A, m);
    EXPECT(torsion(A, c).is_zero());
    EXPECT(metric_compatibility(A, c, m.g).is_zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto ui = Derivation::basis(A, i), uj = Derivation::basis(A, j), uk = Derivation::basis(A, k);
          EXPECT(evaluate_tensor(m.g, {}, {covariant_derivative(A, c, ui, uj), uk}) == koszul_rhs(A, m, ui, uj, uk));
        }
  }
  return {};
}

std::string criterion_curvature() {
  int curved = 0;
  for (const auto& [A, m] : random_metrics().cases) {
    const auto n = static_cast<std::uint32_t>(A->rank());
    const CurvatureReport r = curvature_report(A, m);
    for (std::uint32_t p = 0; p < n; ++p)
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          for (std::uint32_t l = 0; l < n; ++l) {
            EXPECT(r.riemann.at({p, i, j, l}) == -r.riemann.at({p, j, i, l}));
            EXPECT((r.riemann.at({p, i, j, l}) + r.riemann.at({p, j, l, i}) + r.riemann.at({p, l, i, j})).is_zero());
          }
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) EXPECT(r.ricci.at({i, j}) == r.ricci.at({j, i}));
    if (n == 2) EXPECT(r.einstein.is_zero());
    curved += !r.riemann.is_zero();
  }
  EXPECT(curved >= 20);  // the sample must not be dominated by flat metrics
  return {};
}

std::string criterion_friedmann() {
  const Manifest fm = load_manifest(AFD_MANIFEST_DIR "/friedmann.json");
  const auto& A = fm.algebra;
  const Metric m = metric_inverse(A, *fm.metric);
  const Tensor G = einstein_tensor(A, m);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j)
      if (i != 0 || j != 0) EXPECT(G.at({i, j}).is_zero());
  EXPECT(G.at({0, 0}) == A->parse("12/s^2"));
  EXPECT(efe_residual(A, m, G, A->zero(), A->one(), *fm.stress_energy).is_zero());
  return {};
}

std::string criterion_lie() {
  const auto A = build_algebraifold(ScalarContext::make(AlgebraKind::field, {}, {"x", "y"}));
  ScalarSampler s(A->context(), {"x", "y"}, 5003);
  auto field = [&] { return Derivation{A, {s.fraction(), s.fraction()}}; };
  const Tensor delta = kronecker(A);
  for (int k = 0; k < 10; ++k) {
    const Derivation u = field();
    EXPECT(lie_derivative(A, u, delta).is_zero());
    Tensor t(A, 1, 1);
    for (std::uint32_t i = 0; i < 2; ++i)
      for (std::uint32_t j = 0; j < 2; ++j) t.set({i, j}, s.poly());
    EXPECT(contract(lie_derivative(A, u, t), 1, 1).as_scalar() ==
           apply_derivation(A, u, contract(t, 1, 1).as_scalar()));
  }
  for (int k = 0; k < 50; ++k) {
    const Derivation u = field(), v = field();
    const ScalarValue a = s.fraction();
    EXPECT(lie_bracket(A, u, a * v) == a * lie_bracket(A, u, v) + apply_derivation(A, u, a) * v);
  }
  return {};
}

std::string criterion_duality() {
  const auto A = polynomial({"x", "y"});
  const FormalLine line = make_formal_line();
  const AlgebraifoldHom phi = build_hom(A, line.algebra, std::map<std::string, std::string>{{"x", "t^2"}, {"y", "t^3"}});
  const PulledModuleElem D = differential(phi, line.del);
  EXPECT(D.coeffs[0] == line.algebra->parse("2*t"));
  EXPECT(D.coeffs[1] == line.algebra->parse("3*t^2"));
  for (std::size_t i = 0; i < 2; ++i) {
    const OneForm xi = OneForm::basis(A, i);
    EXPECT(pair(pullback_one_form(phi, xi), line.del) == pair_pulled(phi, xi, D));
  }
  return {};
}

std::string criterion_geodesics() {
  const auto A = polynomial({"x", "y"});
  const ConnectionCoeffs flat = standard_connection(A);
  const FormalLine line = make_formal_line();
  const auto& B = line.algebra;
  auto curve = [&](const std::string& x, const std::string& y) {
    return build_hom(A, B, std::map<std::string, std::string>{{"x", x}, {"y", y}});
  };
  std::vector<AlgebraifoldHom> lines{curve("t", "0"), curve("2 + 3*t", "5*t"), curve("-1/2*t + 7", "1/3"),
                                     curve("0", "t")};
  for (const auto& c : lines) EXPECT(geodesic_residual(c, flat).is_zero());
  const PulledModuleElem bent = geodesic_residual(curve("t^2", "0"), flat);
  EXPECT(bent.coeffs[0] == B->parse("2") && bent.coeffs[1].is_zero());

  ScalarSampler s(B->context(), {"t"}, 6007);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int k = 0; k < 5; ++k) {
    int a = num(s.rng());
    if (a == 0) a = 1;
    const AlgebraifoldHom rho =
        affine_reparametrization(line, Rational(a, den(s.rng())), Rational(num(s.rng()), den(s.rng())));
    for (const auto& c : lines) EXPECT(geodesic_residual(compose(c, rho), flat).is_zero());
  }
  return {};
}

std::string criterion_round_trip() {
  const std::vector<std::pair<ContextPtr, std::vector<std::string>>> contexts{
      {ScalarContext::make(AlgebraKind::polynomial, {"m"}, {"x", "y"}), {"m", "x", "y"}},
      {ScalarContext::make(AlgebraKind::field, {}, {"x", "y", "z"}), {"x", "y", "z"}},
      {elliptic()->context(), {"x"}},
      {ScalarContext::make(AlgebraKind::field, {}, {"x"}, {{"y", "y^3 - x*y - 1"}}), {"x"}},
  };
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    const auto& [ctx, vars] = contexts[c];
    ScalarSampler s(ctx, vars, 7001 + static_cast<unsigned>(c));
    const bool ext = ctx->extension() != nullptr;
    for (int k = 0; k < 50; ++k) {
      const ScalarValue a = ctx->is_field() ? s.fraction(ext ? "y" : "") : s.poly();
      EXPECT(parse_scalar(render_scalar(a), ctx) == a);
    }
  }
  for (const auto& name : {"euclidean", "minkowski", "poly_metric", "elliptic_field", "friedmann", "kerr_family"}) {
    const std::string path = std::string(AFD_MANIFEST_DIR) + "/" + name + ".json";
    const auto first = emit_report(run_file(path, "check"), "json");
    EXPECT(first == emit_report(run_file(path, "check"), "json"));
    EXPECT(emit_report(run_file(path, "check"), "text") == emit_report(run_file(path, "check"), "text"));
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "metric inverse of [[1,x],[x,1+x^2]] is [[1+x^2,-x],[-x,1]]", 1, criterion_inverse},
      {2, "elliptic field derivations d/dx(y) = 3x^2/(2y), d/dy(y) = 1", 1, criterion_derivations},
      {3, "dimensions of Q[x1..xn], the elliptic field and Q(m,j)(s,x,y,z)", 1, criterion_dimensions},
      {4, "Levi-Civita on 25 random metrics: Koszul, torsion-free, compatible", 60, criterion_levi_civita},
      {5, "curvature identities on 25 random metrics, 2D Einstein = 0", 60, criterion_curvature},
      {6, "Friedmann Einstein tensor G_ss = 12/s^2 and dust EFE residual 0", 30, criterion_friedmann},
      {7, "Lie derivative: L_u(delta) = 0, commutes with contraction, Leibniz on 50 triples", 30, criterion_lie},
      {8, "x -> t^2, y -> t^3: D(d/dt) = (2t, 3t^2) and adjointness", 1, criterion_duality},
      {9, "geodesics: lines, x -> t^2 residual (2,0), affine reparametrization", 10, criterion_geodesics},
      {10, "200 render/parse round trips and byte-identical reports", 30, criterion_round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.empty() && elapsed > c.limit_seconds) outcome = "over time limit";
    const bool ok = outcome.empty();
    failed += !ok;
    std::printf("[%s] %2d  %-84s %8.3f s (limit %g s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), elapsed,
                c.limit_seconds, ok ? "" : "  ", outcome.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
