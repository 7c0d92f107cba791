#include "afd/algebraifold.hpp"

#include "afd/error.hpp"
#include "afd/expression.hpp"

namespace afd {

namespace {

void require_in(const AlgebraifoldPtr& algebra, const ScalarValue& a) {
  if (!same_context(algebra->context(), a.context()))
    throw Error(ErrorCode::ContextMismatch, "scalar does not belong to the algebraifold");
}

void require_rank(const AlgebraifoldPtr& algebra, std::size_t size) {
  if (size != algebra->rank())
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(algebra->rank()) + " components, got " +
                                              std::to_string(size));
}

// Determinant by fraction-free elimination over the fraction field.
ScalarValue determinant(std::vector<std::vector<ScalarValue>> m, const ContextPtr& field) {
  const std::size_t n = m.size();
  ScalarValue det = ScalarValue::one(field);
  for (auto& row : m)
    for (auto& e : row) e = e.rebased(field);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return ScalarValue::zero(field);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const ScalarValue f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

ScalarValue AlgebraifoldDescriptor::apply_basis(std::size_t i, const ScalarValue& a) const {
  return scalar_partial(a, i);
}

ScalarValue AlgebraifoldDescriptor::parse(std::string_view text) const { return parse_scalar(text, ctx_); }

bool AlgebraifoldDescriptor::same_as(const AlgebraifoldDescriptor& other) const {
  return this == &other || (ctx_->same_as(*other.ctx_) && action_ == other.action_);
}

AlgebraifoldPtr AlgebraifoldDescriptor::with_recorded_action(ContextPtr ctx,
                                                             std::vector<std::vector<ScalarValue>> action) {
  auto base = build_algebraifold(std::move(ctx));
  require_rank(base, action.size());
  for (const auto& row : action) require_rank(base, row.size());
  auto out = std::shared_ptr<AlgebraifoldDescriptor>(new AlgebraifoldDescriptor(*base));
  out->action_ = std::move(action);
  return out;
}

void require_same_algebra(const AlgebraifoldPtr& a, const AlgebraifoldPtr& b) {
  if (a != b && !a->same_as(*b))
    throw Error(ErrorCode::DescriptorMismatch, "operands belong to different algebraifolds");
}

AlgebraifoldPtr build_algebraifold(ContextPtr ctx) {
  // Separability and the single-generator restriction are enforced when the
  // context is made; the coordinate basis is d/dx_i with a_i = x_i.
  auto out = std::shared_ptr<AlgebraifoldDescriptor>(new AlgebraifoldDescriptor());
  out->ctx_ = ctx;
  for (const auto& x : ctx->transcendentals()) out->coords_.push_back(ScalarValue::variable(ctx, x));
  const std::size_t n = out->coords_.size();
  out->action_.assign(n, std::vector<ScalarValue>(n, ScalarValue::zero(ctx)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out->action_[i][j] = out->apply_basis(i, out->coords_[j]);
  if (n > 0 && determinant(out->action_, ctx->fraction_field()).is_zero())
    throw Error(ErrorCode::SingularBasis, "derivation basis action is not invertible");
  return out;
}

Derivation Derivation::zero(const AlgebraifoldPtr& algebra) {
  return {algebra, std::vector<ScalarValue>(algebra->rank(), algebra->zero())};
}

Derivation Derivation::basis(const AlgebraifoldPtr& algebra, std::size_t i) {
  Derivation d = zero(algebra);
  d.coeffs.at(i) = algebra->one();
  return d;
}

Derivation Derivation::parse(const AlgebraifoldPtr& algebra, const std::vector<std::string>& components) {
  require_rank(algebra, components.size());
  Derivation d{algebra, {}};
  for (const auto& c : components) d.coeffs.push_back(algebra->parse(c));
  return d;
}

bool Derivation::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  require_same_algebra(a.algebra, b.algebra);
  Derivation out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Derivation operator-(const Derivation& a, const Derivation& b) {
  require_same_algebra(a.algebra, b.algebra);
  Derivation out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

Derivation operator*(const ScalarValue& s, const Derivation& v) {
  Derivation out = v;
  for (auto& c : out.coeffs) c = s * c;
  return out;
}

OneForm OneForm::zero(const AlgebraifoldPtr& algebra) {
  return {algebra, std::vector<ScalarValue>(algebra->rank(), algebra->zero())};
}

OneForm OneForm::basis(const AlgebraifoldPtr& algebra, std::size_t i) {
  OneForm f = zero(algebra);
  f.coeffs.at(i) = algebra->one();
  return f;
}

bool OneForm::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  require_same_algebra(a.algebra, b.algebra);
  OneForm out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

OneForm operator-(const OneForm& a, const OneForm& b) {
  require_same_algebra(a.algebra, b.algebra);
  OneForm out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

OneForm operator*(const ScalarValue& s, const OneForm& f) {
  OneForm out = f;
  for (auto& c : out.coeffs) c = s * c;
  return out;
}

ScalarValue pair(const OneForm& eta, const Derivation& v) {
  require_same_algebra(eta.algebra, v.algebra);
  ScalarValue acc = eta.algebra->zero();
  for (std::size_t i = 0; i < eta.coeffs.size(); ++i) acc += eta.coeffs[i] * v.coeffs[i];
  return acc;
}

ScalarValue apply_derivation(const AlgebraifoldPtr& algebra, const Derivation& v, const ScalarValue& a) {
  require_same_algebra(algebra, v.algebra);
  require_in(algebra, a);
  ScalarValue acc = algebra->zero();
  for (std::size_t i = 0; i < algebra->rank(); ++i)
    if (!v.coeffs[i].is_zero()) acc += v.coeffs[i] * algebra->apply_basis(i, a);
  return acc;
}

OneForm differential_d(const AlgebraifoldPtr& algebra, const ScalarValue& a) {
  require_in(algebra, a);
  OneForm out = OneForm::zero(algebra);
  for (std::size_t i = 0; i < algebra->rank(); ++i) out.coeffs[i] = algebra->apply_basis(i, a);
  return out;
}

Derivation lie_bracket(const AlgebraifoldPtr& algebra, const Derivation& u, const Derivation& v) {
  require_same_algebra(algebra, u.algebra);
  require_same_algebra(algebra, v.algebra);
  Derivation out = Derivation::zero(algebra);
  for (std::size_t j = 0; j < algebra->rank(); ++j)
    out.coeffs[j] = apply_derivation(algebra, u, v.coeffs[j]) - apply_derivation(algebra, v, u.coeffs[j]);
  return out;
}

bool DualBasisReport::all_zero() const {
  for (const auto* table : {&derivation_residuals, &one_form_residuals, &action_residuals})
    for (const auto& row : *table)
      for (const auto& r : row)
        if (!r.is_zero()) return false;
  return true;
}

DualBasisReport dual_basis_verify(const AlgebraifoldPtr& algebra) {
  const auto& ctx = algebra->context();
  const auto& m = algebra->basis_action();
  const auto& coords = algebra->dual_coordinates();
  const std::size_t n = algebra->rank();

  std::vector<ScalarValue> generators;
  for (std::size_t v = ctx->constants().size(); v < ctx->variables()->size(); ++v)
    generators.push_back(ScalarValue::variable(ctx, (*ctx->variables())[v]));

  DualBasisReport report;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<ScalarValue> row;
    for (const auto& g : generators) {
      ScalarValue r = -algebra->apply_basis(j, g);
      for (std::size_t i = 0; i < n; ++i) r += m[j][i] * algebra->apply_basis(i, g);
      row.push_back(std::move(r));
    }
    report.derivation_residuals.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<ScalarValue> row;
    for (std::size_t k = 0; k < n; ++k) {
      ScalarValue r = -algebra->apply_basis(k, coords[j]);
      for (std::size_t i = 0; i < n; ++i) r += m[i][j] * algebra->apply_basis(k, coords[i]);
      row.push_back(std::move(r));
    }
    report.one_form_residuals.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ScalarValue> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(algebra->apply_basis(i, coords[j]) - m[i][j]);
    report.action_residuals.push_back(std::move(row));
  }
  return report;
}

ScalarValue dimension(const AlgebraifoldPtr& algebra) {
  ScalarValue acc = algebra->zero();
  for (std::size_t i = 0; i < algebra->rank(); ++i) acc += algebra->basis_action()[i][i];
  return acc;
}

bool constants_check(const AlgebraifoldPtr& algebra, const ScalarValue& a) {
  require_in(algebra, a);
  for (std::size_t i = 0; i < algebra->rank(); ++i)
    if (!algebra->apply_basis(i, a).is_zero()) return false;
  return true;
}

}  // namespace afd
