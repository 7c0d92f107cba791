#include "afd/context.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "afd/error.hpp"
#include "afd/expression.hpp"
#include "afd/scalar.hpp"
#include "ext_arith.hpp"

namespace afd {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

MultiPoly parse_relation(const std::string& text, const std::vector<std::string>& names,
                         const VariablesPtr& vars) {
  std::string lhs = text;
  std::string rhs = "0";
  if (const auto eq = text.find('='); eq != std::string::npos) {
    lhs = text.substr(0, eq);
    rhs = text.substr(eq + 1);
  }
  // Relations live in the polynomial ring over every generator.
  const ContextPtr ring = ScalarContext::make(AlgebraKind::polynomial, {}, names);
  const RatFunc f = (parse_scalar(lhs, ring) - parse_scalar(rhs, ring)).to_ratfunc();
  if (!f.is_polynomial())
    throw Error(ErrorCode::InvalidContext, "minimal relation must be a polynomial: " + text);
  return MultiPoly::from_terms(vars, f.num().terms());
}

// Rational root test for an integer-clearable cubic (coefficients low to high).
// Returns true when a rational root exists or the test is inconclusive.
bool may_have_rational_root(const std::vector<Rational>& c) {
  mpz_class den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.raw().get_den_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& q : c) a.push_back(mpz_class(q.raw().get_num() * (den / q.raw().get_den())));
  if (a.front() == 0) return true;
  const mpz_class limit("1000000000000");
  if (abs(a.front()) > limit || abs(a.back()) > limit) return true;
  auto divisors = [](mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    }
    return out;
  };
  for (const auto& p : divisors(a.front())) {
    for (const auto& q : divisors(a.back())) {
      for (int sign : {1, -1}) {
        const Rational r(mpz_class(p * sign), q);
        Rational v(0);
        for (std::size_t k = c.size(); k-- > 0;) v = v * r + c[k];
        if (v.is_zero()) return true;
      }
    }
  }
  return false;
}

bool verify_irreducible(const Extension& ext, std::size_t nvars) {
  const auto& m = ext.modulus;
  if (ext.degree == 1) return true;
  if (ext.degree == 2) {
    // y^2 + b y + c is reducible iff b^2 - 4c is a square in K.
    const RatFunc disc = m.coeff(1) * m.coeff(1) - RatFunc::constant(m.coeff(0).variables(), Rational(4)) * m.coeff(0);
    if (disc.is_zero()) return false;
    if (poly_sqrt(disc.num()) && poly_sqrt(disc.den())) throw Error(ErrorCode::Reducible, "minimal relation factors: discriminant is a square");
    return true;
  }
  if (ext.degree == 3) {
    // A root in K of the monic cubic would specialize to a rational root of
    // the integral form z^3 + c2 L z^2 + c1 L^2 z + c0 L^3 (y = z / L).
    MultiPoly lcm = MultiPoly::constant(m.coeff(0).variables(), Rational(1));
    for (std::size_t k = 0; k < 3; ++k) {
      const MultiPoly& d = m.coeff(k).den();
      lcm = *divide_exact(lcm * d, poly_gcd(lcm, d));
    }
    const RatFunc l(lcm);
    const std::vector<RatFunc> integral = {m.coeff(0) * l.pow(3), m.coeff(1) * l.pow(2), m.coeff(2) * l,
                                           RatFunc::constant(lcm.variables(), Rational(1))};
    for (long j = 0; j < 12; ++j) {
      std::vector<Rational> point(nvars);
      for (std::size_t k = 0; k < nvars; ++k)
        point[k] = Rational(((j * 5 + static_cast<long>(k) * 3) % 17 + 2) * (j % 2 == 0 ? 1 : -1));
      std::vector<Rational> c;
      for (const auto& f : integral) c.push_back(f.num().evaluate(point));
      if (!may_have_rational_root(c)) return true;
    }
    return false;
  }
  return false;
}

std::shared_ptr<const Extension> build_extension(const ExtensionDecl& decl, const std::vector<std::string>& names,
                                                 const VariablesPtr& vars, std::size_t first_transcendental,
                                                 std::size_t n_transcendental) {
  auto ext = std::make_shared<Extension>(Extension{decl.generator, names.size() - 1,
                                                   parse_relation(decl.relation, names, vars),
                                                   UniPoly<RatFunc>(RatFunc(vars)), 0, false, {}});
  const auto coeffs = ext->relation.coefficients_in(ext->generator_index);
  if (coeffs.size() < 2)
    throw Error(ErrorCode::InvalidContext, "minimal relation does not involve generator " + decl.generator);
  std::vector<RatFunc> rc;
  for (const auto& c : coeffs) rc.emplace_back(c);
  ext->modulus = UniPoly<RatFunc>(RatFunc(vars), std::move(rc)).monic();
  ext->degree = static_cast<std::size_t>(ext->modulus.degree());

  const auto derivative = ext->modulus.derivative();
  if (derivative.is_zero() || uni_gcd(ext->modulus, derivative).degree() > 0)
    throw Error(ErrorCode::NotSeparable, "minimal relation " + decl.relation + " is not separable");

  ext->irreducibility_verified = verify_irreducible(*ext, vars->size());

  const auto dp_dy = detail::ext_inverse(detail::ext_from_poly(ext->relation.partial(ext->generator_index), *ext), *ext);
  for (std::size_t i = 0; i < n_transcendental; ++i) {
    auto dp_dx = detail::ext_from_poly(ext->relation.partial(first_transcendental + i), *ext);
    auto dy_dx = detail::ext_mul(dp_dx, dp_dy, *ext);
    for (auto& c : dy_dx) c = -c;
    ext->generator_partials.push_back(std::move(dy_dx));
  }
  return ext;
}

}  // namespace

ContextPtr ScalarContext::make(AlgebraKind kind, std::vector<std::string> constants,
                               std::vector<std::string> transcendentals, std::vector<ExtensionDecl> extensions,
                               unsigned characteristic) {
  if (characteristic != 0)
    throw Error(ErrorCode::InvalidContext, "only characteristic zero is supported");
  if (extensions.size() > 1)
    throw Error(ErrorCode::UnsupportedTower, "at most one algebraic generator per context");
  if (!extensions.empty() && kind != AlgebraKind::field)
    throw Error(ErrorCode::InvalidContext, "algebraic relations require a field context");

  std::vector<std::string> names = constants;
  names.insert(names.end(), transcendentals.begin(), transcendentals.end());
  for (const auto& e : extensions) names.push_back(e.generator);
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw Error(ErrorCode::InvalidContext, "invalid identifier '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidContext, "duplicate identifier '" + n + "'");
  }

  auto ctx = std::shared_ptr<ScalarContext>(new ScalarContext());
  ctx->kind_ = kind;
  ctx->constants_ = std::move(constants);
  ctx->transcendentals_ = std::move(transcendentals);
  ctx->extension_decls_ = extensions;
  ctx->vars_ = make_variables(names);
  if (!extensions.empty())
    ctx->extension_ = build_extension(extensions.front(), names, ctx->vars_, ctx->constants_.size(),
                                      ctx->transcendentals_.size());
  return ctx;
}

std::optional<std::size_t> ScalarContext::variable_index(const std::string& name) const {
  const auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_->begin());
}

std::optional<std::size_t> ScalarContext::transcendental_position(const std::string& name) const {
  const auto it = std::find(transcendentals_.begin(), transcendentals_.end(), name);
  if (it == transcendentals_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - transcendentals_.begin());
}

ContextPtr ScalarContext::fraction_field() const {
  return make(AlgebraKind::field, constants_, transcendentals_, extension_decls_);
}

bool ScalarContext::same_as(const ScalarContext& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || constants_ != other.constants_ || transcendentals_ != other.transcendentals_)
    return false;
  if (static_cast<bool>(extension_) != static_cast<bool>(other.extension_)) return false;
  if (extension_ && !(extension_->generator == other.extension_->generator &&
                      extension_->relation == other.extension_->relation))
    return false;
  return true;
}

std::vector<std::string> ScalarContext::warnings() const {
  std::vector<std::string> out;
  if (extension_ && !extension_->irreducibility_verified)
    out.push_back("irreducibility of the minimal relation for " + extension_->generator +
                  " (degree " + std::to_string(extension_->degree) + ") is declared, not verified");
  return out;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace afd
