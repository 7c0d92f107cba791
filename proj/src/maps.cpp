#include "afd/maps.hpp"

#include <algorithm>

#include "afd/error.hpp"
#include "afd/expression.hpp"
#include "afd/unipoly.hpp"

namespace afd {

namespace {

std::vector<std::string> generator_names(const ContextPtr& ctx) {
  std::vector<std::string> out = ctx->transcendentals();
  if (ctx->extension()) out.push_back(ctx->extension()->generator);
  return out;
}

}  // namespace

ScalarValue AlgebraifoldHom::apply(const ScalarValue& a) const {
  if (!same_context(a.context(), source_->context()))
    throw Error(ErrorCode::ContextMismatch, "scalar does not belong to the homomorphism's source");
  return substitute(a, images_, target_->context());
}

AlgebraifoldHom build_hom(AlgebraifoldPtr source, AlgebraifoldPtr target, Bindings images) {
  const auto& sctx = source->context();
  const auto names = generator_names(sctx);
  for (const auto& [name, value] : images) {
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw Error(ErrorCode::UnknownIdentifier, "'" + name + "' is not a generator of the source algebra");
    if (!same_context(value.context(), target->context()))
      throw Error(ErrorCode::ContextMismatch, "image of '" + name + "' lies outside the target algebra");
  }
  for (const auto& name : names)
    if (!images.contains(name)) throw Error(ErrorCode::MissingImage, "no image given for generator '" + name + "'");
  for (const auto& c : sctx->constants())
    if (!target->context()->variable_index(c) || !target->context()->is_constant_variable(*target->context()->variable_index(c)))
      throw Error(ErrorCode::ContextMismatch, "base constant '" + c + "' is not a constant of the target");

  AlgebraifoldHom phi;
  phi.source_ = std::move(source);
  phi.target_ = std::move(target);
  phi.images_ = std::move(images);

  if (const auto& ext = sctx->extension()) {
    // The relation is zero in the source, so push it through a plain
    // polynomial presentation of the same variables.
    auto free_ctx = ScalarContext::make(AlgebraKind::polynomial, sctx->constants(), names);
    const ScalarValue rel(free_ctx, MultiPoly::from_terms(free_ctx->variables(), ext->relation.terms()));
    const ScalarValue residual = substitute(rel, phi.images_, phi.target_->context());
    if (!residual.is_zero())
      throw Error(ErrorCode::RelationNotPreserved, "relation " + render_poly(ext->relation) + " = 0 maps to " +
                                                       render_scalar(residual));
  }
  return phi;
}

AlgebraifoldHom build_hom(AlgebraifoldPtr source, AlgebraifoldPtr target,
                          const std::map<std::string, std::string>& images) {
  Bindings parsed;
  for (const auto& [name, text] : images) parsed.emplace(name, target->parse(text));
  return build_hom(std::move(source), std::move(target), std::move(parsed));
}

AlgebraifoldHom compose(const AlgebraifoldHom& phi, const AlgebraifoldHom& psi) {
  require_same_algebra(phi.target(), psi.source());
  Bindings images;
  for (const auto& [name, value] : phi.images()) images.emplace(name, psi.apply(value));
  return build_hom(phi.source(), psi.target(), std::move(images));
}

bool PulledModuleElem::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

OneForm pullback_unchecked(const AlgebraifoldHom& phi, const OneForm& xi) {
  const auto& B = phi.target();
  OneForm out = OneForm::zero(B);
  const auto& coords = phi.source()->dual_coordinates();
  for (std::size_t i = 0; i < xi.coeffs.size(); ++i) {
    if (xi.coeffs[i].is_zero()) continue;
    out = out + phi.apply(xi.coeffs[i]) * differential_d(B, phi.apply(coords[i]));
  }
  return out;
}

}  // namespace

std::vector<OneForm> pullback_residuals(const AlgebraifoldHom& phi) {
  const auto& A = phi.source();
  std::vector<OneForm> out;
  for (const auto& name : generator_names(A->context())) {
    const ScalarValue g = ScalarValue::variable(A->context(), name);
    out.push_back(pullback_unchecked(phi, differential_d(A, g)) - differential_d(phi.target(), phi.apply(g)));
  }
  return out;
}

OneForm pullback_one_form(const AlgebraifoldHom& phi, const OneForm& xi) {
  require_same_algebra(phi.source(), xi.algebra);
  const auto residuals = pullback_residuals(phi);
  const auto names = generator_names(phi.source()->context());
  for (std::size_t k = 0; k < residuals.size(); ++k)
    if (!residuals[k].is_zero())
      throw Error(ErrorCode::PullbackVerificationFailed, "pulled-back differential of '" + names[k] +
                                                             "' differs from the differential of its image");
  return pullback_unchecked(phi, xi);
}

PulledModuleElem differential(const AlgebraifoldHom& phi, const Derivation& w) {
  require_same_algebra(phi.target(), w.algebra);
  PulledModuleElem out{phi.source(), phi.target(), {}};
  for (const auto& a : phi.source()->dual_coordinates())
    out.coeffs.push_back(apply_derivation(phi.target(), w, phi.apply(a)));
  return out;
}

ScalarValue pair_pulled(const AlgebraifoldHom& phi, const OneForm& xi, const PulledModuleElem& s) {
  require_same_algebra(phi.source(), xi.algebra);
  ScalarValue acc = phi.target()->zero();
  for (std::size_t i = 0; i < xi.coeffs.size(); ++i)
    if (!xi.coeffs[i].is_zero()) acc += phi.apply(xi.coeffs[i]) * s.coeffs[i];
  return acc;
}

PulledModuleElem pushforward_connection(const AlgebraifoldHom& phi, const ConnectionCoeffs& c, const Derivation& w,
                                        const PulledModuleElem& s) {
  require_same_algebra(phi.source(), c.algebra());
  require_same_algebra(phi.target(), w.algebra);
  if (s.coeffs.size() != phi.source()->rank())
    throw Error(ErrorCode::ArityMismatch, "pulled module element has the wrong length");
  const auto& B = phi.target();
  const PulledModuleElem dw = differential(phi, w);
  PulledModuleElem out{phi.source(), B, {}};
  for (const auto& b : s.coeffs) out.coeffs.push_back(apply_derivation(B, w, b));
  for (const auto& [idx, gamma] : c.gamma.components()) {
    const auto& ci = dw.coeffs[idx[1]];
    const auto& sj = s.coeffs[idx[2]];
    if (ci.is_zero() || sj.is_zero()) continue;
    out.coeffs[idx[0]] += ci * sj * phi.apply(gamma);
  }
  return out;
}

FormalLine make_formal_line(const std::vector<std::string>& constants, const std::string& var) {
  auto A = build_algebraifold(ScalarContext::make(AlgebraKind::polynomial, constants, {var}));
  return {A, Derivation::basis(A, 0), ScalarValue::variable(A->context(), var), true};
}

FormalLine make_differential_line(const std::vector<std::string>& constants, const std::string& var) {
  auto A = build_algebraifold(ScalarContext::make(AlgebraKind::field, constants, {var}));
  return {A, Derivation::basis(A, 0), ScalarValue::variable(A->context(), var), false};
}

namespace {

using UPoly = UniPoly<RatFunc>;

// Coefficients in the line variable; each coefficient is free of it.
UPoly to_upoly(const MultiPoly& p, std::size_t var) {
  const RatFunc zero(p.variables());
  std::vector<RatFunc> coeffs;
  for (const auto& c : p.coefficients_in(var)) coeffs.emplace_back(c);
  return UPoly(zero, std::move(coeffs));
}

ScalarValue from_upoly(const UPoly& p, const ContextPtr& ctx, const ScalarValue& t) {
  ScalarValue acc = ScalarValue::zero(ctx);
  ScalarValue power = ScalarValue::one(ctx);
  for (const auto& c : p.coeffs()) {
    if (!c.is_zero()) acc += ScalarValue(ctx, c) * power;
    power *= t;
  }
  return acc;
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw Error(ErrorCode::NotDivisible, "internal: inexact polynomial quotient");
  return q;
}

// Antiderivative of a polynomial with zero constant term.
UPoly integrate_poly(const UPoly& p) {
  std::vector<RatFunc> out{p.zero_element()};
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    out.push_back(p.coeffs()[k].scaled(Rational(1, static_cast<long>(k) + 1)));
  return UPoly(p.zero_element(), std::move(out));
}

// B, C with B a + C b = c and deg B < deg b, for coprime a, b.
std::pair<UPoly, UPoly> solve_bezout(const UPoly& a, const UPoly& b, const UPoly& c) {
  const auto eg = uni_extended_gcd(a, b);
  const UPoly bb = (eg.s * c).divmod(b).second;
  const UPoly cc = exact_quotient(c - bb * a, b);
  return {bb, cc};
}

}  // namespace

ScalarValue antiderivative(const FormalLine& line, const ScalarValue& a) {
  const auto& A = line.algebra;
  if (!same_context(a.context(), A->context()))
    throw Error(ErrorCode::ContextMismatch, "scalar does not belong to the line");
  const auto& ctx = A->context();
  const std::size_t var = ctx->transcendental_variable(0);
  const RatFunc f = a.to_ratfunc();

  const UPoly num = to_upoly(f.num(), var);
  const UPoly den = to_upoly(f.den(), var);
  auto [poly_part, rest] = num.divmod(den);
  ScalarValue result = from_upoly(integrate_poly(poly_part), ctx, line.t);

  if (!rest.is_zero()) {
    // Hermite reduction (Mack's linear variant) of rest / den.
    UPoly A_ = rest;
    UPoly d_minus = uni_gcd(den, den.derivative());
    const UPoly d_star = exact_quotient(den, d_minus);
    ScalarValue g = ScalarValue::zero(ctx);
    while (d_minus.degree() > 0) {
      const UPoly d_minus2 = uni_gcd(d_minus, d_minus.derivative());
      const UPoly d_minus_star = exact_quotient(d_minus, d_minus2);
      const UPoly lhs = exact_quotient(d_star * d_minus.derivative(), d_minus);
      const UPoly neg_lhs = UPoly(lhs.zero_element()) - lhs;
      auto [b, c] = solve_bezout(neg_lhs, d_minus_star, A_);
      A_ = c - exact_quotient(b.derivative() * d_star, d_minus_star);
      g += from_upoly(b, ctx, line.t) / from_upoly(d_minus, ctx, line.t);
      d_minus = d_minus2;
    }
    auto [q, r] = A_.divmod(d_star);
    if (!r.is_zero())
      throw Error(ErrorCode::NoAntiderivative, render_scalar(a) + " has no antiderivative in the line algebra");
    result += g + from_upoly(integrate_poly(q), ctx, line.t);
  }
  if (!(apply_derivation(A, line.del, result) == a))
    throw Error(ErrorCode::NoAntiderivative, "internal: antiderivative check failed for " + render_scalar(a));
  return result;
}

PulledModuleElem geodesic_residual(const AlgebraifoldHom& phi, const ConnectionCoeffs& c) {
  const auto& line = phi.target();
  if (line->rank() != 1) throw Error(ErrorCode::ArityMismatch, "geodesic target must be a line");
  const Derivation del = Derivation::basis(line, 0);
  return pushforward_connection(phi, c, del, differential(phi, del));
}

AlgebraifoldHom affine_reparametrization(const FormalLine& line, const Rational& alpha, const Rational& beta) {
  const auto& ctx = line.algebra->context();
  Bindings images;
  images.emplace(ctx->transcendentals()[0], line.t.scaled(alpha) + ScalarValue(ctx, beta));
  return build_hom(line.algebra, line.algebra, std::move(images));
}

}  // namespace afd
