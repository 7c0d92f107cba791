#include "afd/scalar.hpp"

#include "afd/error.hpp"
#include "ext_arith.hpp"

namespace afd {

namespace {

void require_same(const ScalarValue& a, const ScalarValue& b) {
  if (!same_context(a.context(), b.context()))
    throw Error(ErrorCode::ContextMismatch, "scalars belong to different contexts");
}

RatFunc ext_to_ratfunc(const ExtElem& e) {
  const auto& vars = e.coeffs.front().variables();
  RatFunc acc(vars);
  const RatFunc y(MultiPoly::variable(vars, e.extension->generator_index));
  RatFunc power = RatFunc::constant(vars, Rational(1));
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    if (!e.coeffs[k].is_zero()) acc += e.coeffs[k] * power;
    if (k + 1 < e.coeffs.size()) power *= y;
  }
  return acc;
}

bool ratfunc_in_polynomial_algebra(const RatFunc& f, const ScalarContext& ctx) {
  for (std::size_t v = ctx.constants().size(); v < f.variables()->size(); ++v)
    if (f.den().uses_variable(v)) return false;
  return true;
}

}  // namespace

ScalarValue::ScalarValue(ContextPtr ctx, const Rational& q) : ctx_(std::move(ctx)), repr_(q) {}

ScalarValue::ScalarValue(ContextPtr ctx, const MultiPoly& p) : ctx_(std::move(ctx)), repr_(p) {
  if (!same_variables(p.variables(), ctx_->variables()))
    throw Error(ErrorCode::ContextMismatch, "polynomial over foreign variables");
  demote();
}

ScalarValue::ScalarValue(ContextPtr ctx, const RatFunc& f) : ctx_(std::move(ctx)), repr_(f) {
  if (!same_variables(f.variables(), ctx_->variables()))
    throw Error(ErrorCode::ContextMismatch, "rational function over foreign variables");
  const auto& ext = ctx_->extension();
  if (ext && f.uses_variable(ext->generator_index)) {
    // Reduce modulo the minimal relation: num(y) * den(y)^{-1}.
    const auto num = detail::ext_from_poly(f.num(), *ext);
    const auto den = detail::ext_from_poly(f.den(), *ext);
    repr_ = ExtElem{detail::ext_mul(num, detail::ext_inverse(den, *ext), *ext), ext};
  }
  demote();
}

ScalarValue::ScalarValue(ContextPtr ctx, const ExtElem& e) : ctx_(std::move(ctx)), repr_(e) { demote(); }

void ScalarValue::demote() {
  if (auto* e = std::get_if<ExtElem>(&repr_)) {
    for (std::size_t k = 1; k < e->coeffs.size(); ++k)
      if (!e->coeffs[k].is_zero()) return;
    RatFunc base = std::move(e->coeffs.front());
    repr_ = std::move(base);
  }
  if (auto* f = std::get_if<RatFunc>(&repr_)) {
    if (!f->is_polynomial()) return;
    MultiPoly p = f->num();
    repr_ = std::move(p);
  }
  if (auto* p = std::get_if<MultiPoly>(&repr_)) {
    if (!p->is_constant()) return;
    Rational q = p->constant_value();
    repr_ = std::move(q);
  }
}

ScalarValue ScalarValue::variable(ContextPtr ctx, const std::string& name) {
  const auto idx = ctx->variable_index(name);
  if (!idx) throw Error(ErrorCode::UnknownIdentifier, "unknown identifier '" + name + "'");
  const auto vars = ctx->variables();
  return ScalarValue(std::move(ctx), RatFunc(MultiPoly::variable(vars, *idx)));
}

bool ScalarValue::is_zero() const {
  const auto* q = std::get_if<Rational>(&repr_);
  return q && q->is_zero();
}

bool ScalarValue::is_one() const {
  const auto* q = std::get_if<Rational>(&repr_);
  return q && q->is_one();
}

std::optional<Rational> ScalarValue::as_rational() const {
  if (const auto* q = std::get_if<Rational>(&repr_)) return *q;
  return std::nullopt;
}

RatFunc ScalarValue::to_ratfunc() const {
  const auto& vars = ctx_->variables();
  return std::visit(
      [&](const auto& v) -> RatFunc {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) return RatFunc::constant(vars, v);
        else if constexpr (std::is_same_v<T, MultiPoly>) return RatFunc(v);
        else if constexpr (std::is_same_v<T, RatFunc>) return v;
        else return ext_to_ratfunc(v);
      },
      repr_);
}

std::vector<RatFunc> ScalarValue::extension_coeffs() const {
  const auto& ext = ctx_->extension();
  if (!ext) throw Error(ErrorCode::ContextMismatch, "context has no algebraic generator");
  if (const auto* e = std::get_if<ExtElem>(&repr_)) return e->coeffs;
  std::vector<RatFunc> out(ext->degree, RatFunc(ctx_->variables()));
  out[0] = to_ratfunc();
  return out;
}

ScalarValue ScalarValue::rebased(ContextPtr target) const {
  if (!same_variables(ctx_->variables(), target->variables()))
    throw Error(ErrorCode::ContextMismatch, "cannot rebase between different variable lists");
  if (const auto* e = std::get_if<ExtElem>(&repr_)) {
    if (!target->extension()) throw Error(ErrorCode::ContextMismatch, "target has no algebraic generator");
    return ScalarValue(std::move(target), ExtElem{e->coeffs, target->extension()});
  }
  ScalarValue out = *this;
  out.ctx_ = std::move(target);
  return out;
}

ScalarValue ScalarValue::operator-() const {
  ScalarValue out = *this;
  std::visit(
      [](auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ExtElem>) {
          for (auto& c : v.coeffs) c = -c;
        } else {
          v = -v;
        }
      },
      out.repr_);
  return out;
}

ScalarValue operator+(const ScalarValue& a, const ScalarValue& b) {
  require_same(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto la = a.level();
  const auto lb = b.level();
  if (la == ScalarLevel::rational && lb == ScalarLevel::rational)
    return ScalarValue(a.ctx_, std::get<Rational>(a.repr_) + std::get<Rational>(b.repr_));
  if (la == ScalarLevel::extension || lb == ScalarLevel::extension)
    return ScalarValue(a.ctx_, ExtElem{detail::ext_add(a.extension_coeffs(), b.extension_coeffs()),
                                       a.ctx_->extension()});
  if (la <= ScalarLevel::polynomial && lb <= ScalarLevel::polynomial)
    return ScalarValue(a.ctx_, a.to_ratfunc().num() + b.to_ratfunc().num());
  return ScalarValue(a.ctx_, a.to_ratfunc() + b.to_ratfunc());
}

ScalarValue operator-(const ScalarValue& a, const ScalarValue& b) { return a + (-b); }

ScalarValue operator*(const ScalarValue& a, const ScalarValue& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return ScalarValue::zero(a.ctx_);
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const auto la = a.level();
  const auto lb = b.level();
  if (la == ScalarLevel::rational) return b.scaled(std::get<Rational>(a.repr_));
  if (lb == ScalarLevel::rational) return a.scaled(std::get<Rational>(b.repr_));
  if (la == ScalarLevel::extension || lb == ScalarLevel::extension) {
    const auto& ext = *a.ctx_->extension();
    return ScalarValue(a.ctx_, ExtElem{detail::ext_mul(a.extension_coeffs(), b.extension_coeffs(), ext),
                                       a.ctx_->extension()});
  }
  if (la == ScalarLevel::polynomial && lb == ScalarLevel::polynomial)
    return ScalarValue(a.ctx_, std::get<MultiPoly>(a.repr_) * std::get<MultiPoly>(b.repr_));
  return ScalarValue(a.ctx_, a.to_ratfunc() * b.to_ratfunc());
}

ScalarValue operator/(const ScalarValue& a, const ScalarValue& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (const auto q = b.as_rational()) return a.scaled(q->inverse());
  if (a.is_zero()) return a;
  if (!a.ctx_->is_field()) {
    const RatFunc f = a.to_ratfunc() / b.to_ratfunc();
    if (!ratfunc_in_polynomial_algebra(f, *a.ctx_))
      throw Error(ErrorCode::NotDivisible, "divisor does not divide dividend in the polynomial algebra");
    return ScalarValue(a.ctx_, f);
  }
  if (a.level() == ScalarLevel::extension || b.level() == ScalarLevel::extension) {
    const auto& ext = *a.ctx_->extension();
    const auto inv = detail::ext_inverse(b.extension_coeffs(), ext);
    return ScalarValue(a.ctx_, ExtElem{detail::ext_mul(a.extension_coeffs(), inv, ext), a.ctx_->extension()});
  }
  return ScalarValue(a.ctx_, a.to_ratfunc() / b.to_ratfunc());
}

ScalarValue ScalarValue::pow(long exponent) const {
  if (exponent < 0) return (one(ctx_) / *this).pow(-exponent);
  ScalarValue result = one(ctx_);
  ScalarValue base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return result;
}

ScalarValue ScalarValue::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(ctx_);
  if (c.is_one()) return *this;
  ScalarValue out = *this;
  std::visit(
      [&](auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          v *= c;
        } else if constexpr (std::is_same_v<T, MultiPoly>) {
          v = v.scaled(c);
        } else if constexpr (std::is_same_v<T, RatFunc>) {
          v = v.scaled(c);
        } else {
          for (auto& k : v.coeffs)
            k = k.scaled(c);
        }
      },
      out.repr_);
  return out;
}

bool operator==(const ScalarValue& a, const ScalarValue& b) {
  return same_context(a.ctx_, b.ctx_) && a.repr_ == b.repr_;
}

ScalarValue scalar_add(const ScalarValue& a, const ScalarValue& b) { return a + b; }
ScalarValue scalar_mul(const ScalarValue& a, const ScalarValue& b) { return a * b; }
ScalarValue scalar_div(const ScalarValue& a, const ScalarValue& b) { return a / b; }

ScalarValue scalar_partial(const ScalarValue& a, const std::string& var) {
  const auto pos = a.context()->transcendental_position(var);
  if (!pos) throw Error(ErrorCode::UnknownVariable, "'" + var + "' is not a transcendental of the context");
  return scalar_partial(a, *pos);
}

ScalarValue scalar_partial(const ScalarValue& a, std::size_t position) {
  const auto& ctx = a.context();
  if (position >= ctx->dimension())
    throw Error(ErrorCode::UnknownVariable, "transcendental index out of range");
  const std::size_t var = ctx->transcendental_variable(position);
  switch (a.level()) {
    case ScalarLevel::rational:
      return ScalarValue::zero(ctx);
    case ScalarLevel::polynomial:
      return ScalarValue(ctx, std::get<MultiPoly>(a.repr()).partial(var));
    case ScalarLevel::rational_function:
      return ScalarValue(ctx, std::get<RatFunc>(a.repr()).partial(var));
    case ScalarLevel::extension:
      break;
  }
  // d/dx sum c_k y^k = sum c_k' y^k + (sum k c_k y^{k-1}) dy/dx
  const auto& e = std::get<ExtElem>(a.repr());
  const auto& ext = *e.extension;
  const auto& vars = ctx->variables();
  detail::Coeffs direct(ext.degree, RatFunc(vars));
  detail::Coeffs along_y(ext.degree, RatFunc(vars));
  for (std::size_t k = 0; k < ext.degree; ++k) {
    direct[k] = e.coeffs[k].partial(var);
    if (k > 0) along_y[k - 1] = e.coeffs[k].scaled(Rational(static_cast<long>(k)));
  }
  const auto chain = detail::ext_mul(along_y, ext.generator_partials[position], ext);
  return ScalarValue(ctx, ExtElem{detail::ext_add(direct, chain), e.extension});
}

bool in_algebra(const ScalarValue& a) {
  if (a.context()->is_field() || a.level() <= ScalarLevel::polynomial) return true;
  return ratfunc_in_polynomial_algebra(a.to_ratfunc(), *a.context());
}

namespace {

class Substituter {
 public:
  Substituter(const ContextPtr& source, const Bindings& bindings, const ContextPtr& target)
      : target_(target), images_(source->variables()->size(), std::nullopt) {
    const auto& names = *source->variables();
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (const auto it = bindings.find(names[v]); it != bindings.end()) {
        if (!same_context(it->second.context(), target))
          throw Error(ErrorCode::ContextMismatch, "binding for '" + names[v] + "' lies outside the target context");
        images_[v] = it->second;
      } else if (source->is_constant_variable(v) && target->variable_index(names[v])) {
        images_[v] = ScalarValue::variable(target, names[v]);
      }
    }
    for (const auto& [name, value] : bindings)
      if (!source->variable_index(name))
        throw Error(ErrorCode::UnknownIdentifier, "binding for unknown identifier '" + name + "'");
  }

  ScalarValue poly(const MultiPoly& p) {
    ScalarValue acc = ScalarValue::zero(target_);
    for (const auto& t : p.terms()) {
      ScalarValue term(target_, t.coeff);
      for (std::size_t v = 0; v < t.exponents.size(); ++v)
        if (t.exponents[v] > 0) term *= power(v, t.exponents[v]);
      acc += term;
    }
    return acc;
  }

  ScalarValue ratfunc(const RatFunc& f) {
    const ScalarValue num = poly(f.num());
    if (f.den().is_one()) return num;
    const ScalarValue den = poly(f.den());
    if (den.is_zero()) throw Error(ErrorCode::TargetDivisionByZero, "a denominator maps to zero");
    return num / den;
  }

 private:
  ScalarValue power(std::size_t v, std::uint32_t e) {
    if (!images_[v]) throw Error(ErrorCode::IncompleteBindings, "no image bound for a variable in use");
    auto& cache = powers_[v];
    if (cache.empty()) cache.push_back(ScalarValue::one(target_));
    while (cache.size() <= e) cache.push_back(cache.back() * *images_[v]);
    return cache[e];
  }

  ContextPtr target_;
  std::vector<std::optional<ScalarValue>> images_;
  std::map<std::size_t, std::vector<ScalarValue>> powers_;
};

}  // namespace

ScalarValue substitute(const ScalarValue& a, const Bindings& bindings, const ContextPtr& target) {
  Substituter sub(a.context(), bindings, target);
  switch (a.level()) {
    case ScalarLevel::rational:
      return ScalarValue(target, *a.as_rational());
    case ScalarLevel::polynomial:
      return sub.poly(std::get<MultiPoly>(a.repr()));
    case ScalarLevel::rational_function:
      return sub.ratfunc(std::get<RatFunc>(a.repr()));
    case ScalarLevel::extension:
      break;
  }
  const auto& e = std::get<ExtElem>(a.repr());
  const auto y = sub.poly(MultiPoly::variable(a.context()->variables(), e.extension->generator_index));
  ScalarValue acc = ScalarValue::zero(target);
  ScalarValue power = ScalarValue::one(target);
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    if (!e.coeffs[k].is_zero()) acc += sub.ratfunc(e.coeffs[k]) * power;
    if (k + 1 < e.coeffs.size()) power *= y;
  }
  return acc;
}

ScalarValue substitute(const ScalarValue& a, const Bindings& bindings) {
  if (bindings.empty()) {
    if (const auto q = a.as_rational()) return a;
    throw Error(ErrorCode::IncompleteBindings, "no bindings given for a non-constant scalar");
  }
  return substitute(a, bindings, bindings.begin()->second.context());
}

}  // namespace afd
