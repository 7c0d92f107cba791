#include "afd/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "afd/error.hpp"

namespace afd {

namespace {

struct GrlexGreaterCmp {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

std::uint32_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Exponents sub_exponents(const Exponents& e, const Exponents& d) {
  Exponents r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r[i] = e[i] - d[i];
  return r;
}

}  // namespace

VariablesPtr make_variables(VariableList names) {
  return std::make_shared<const VariableList>(std::move(names));
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool same_variables(const VariablesPtr& a, const VariablesPtr& b) {
  return a == b || *a == *b;
}

MultiPoly::MultiPoly(VariablesPtr vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(VariablesPtr vars, const Rational& c) {
  MultiPoly p(vars);
  if (!c.is_zero()) p.terms_.push_back({Exponents(vars->size(), 0), c});
  return p;
}

MultiPoly MultiPoly::variable(VariablesPtr vars, std::size_t index) {
  Exponents e(vars->size(), 0);
  e.at(index) = 1;
  return monomial(std::move(vars), std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(VariablesPtr vars, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.push_back({std::move(exps), c});
  return p;
}

MultiPoly MultiPoly::from_terms(VariablesPtr vars, std::vector<Term> terms) {
  std::map<Exponents, Rational, GrlexGreaterCmp> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.exponents), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  MultiPoly p(std::move(vars));
  for (auto& [e, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exponents) == 0);
}

bool MultiPoly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff.is_one(); }

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  const auto& last = terms_.back();
  return degree_of(last.exponents) == 0 ? last.coeff : Rational(0);
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.front().exponents);
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (!same_variables(vars_, o.vars_))
    throw Error(ErrorCode::ContextMismatch, "polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exponents, b[j].exponents))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exponents, a[i].exponents)) {
      out.push_back({b[j].exponents, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.vars_);
  if (a.is_constant()) return b.scaled(a.leading_coeff());
  if (b.is_constant()) return a.scaled(b.leading_coeff());
  if (b.is_monomial()) return a.times_monomial(b.terms_[0].exponents, b.terms_[0].coeff);
  if (a.is_monomial()) return b.times_monomial(a.terms_[0].exponents, a.terms_[0].coeff);
  std::map<Exponents, Rational, GrlexGreaterCmp> acc;
  const std::size_t n = a.nvars();
  Exponents e(n);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (std::size_t k = 0; k < n; ++k) e[k] = ta.exponents[k] + tb.exponents[k];
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, ta.coeff * tb.coeff);
      else
        it->second += ta.coeff * tb.coeff;
    }
  }
  MultiPoly r(a.vars_);
  r.terms_.reserve(acc.size());
  for (auto& [ex, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({ex, c});
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return MultiPoly(vars_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(const Exponents& exps, const Rational& c) const {
  if (c.is_zero()) return MultiPoly(vars_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    for (std::size_t k = 0; k < exps.size(); ++k) t.exponents[k] += exps[k];
    t.coeff *= c;
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d{t.exponents, t.coeff * Rational(static_cast<long>(t.exponents[var]))};
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  // Differentiating one variable preserves the relative grlex order.
  MultiPoly r(vars_);
  r.terms_ = std::move(out);
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

MultiPoly MultiPoly::integer_primitive() const {
  if (is_zero()) return *this;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.raw().get_den_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  if (leading_coeff().sign() < 0) factor = -factor;
  if (factor.is_one()) return *this;
  return scaled(factor);
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    c.exponents[var] = 0;
    buckets[t.exponents[var]].push_back(std::move(c));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Zeroing one exponent can reorder terms; restore canonical order.
    std::sort(b.begin(), b.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.exponents, y.exponents); });
    MultiPoly p(vars_);
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients_in(VariablesPtr vars, std::size_t var,
                                          const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term c = t;
      c.exponents[var] += static_cast<std::uint32_t>(k);
      terms.push_back(std::move(c));
    }
  }
  return from_terms(std::move(vars), std::move(terms));
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t k = 0; k < t.exponents.size(); ++k)
      if (t.exponents[k] > 0) v *= point[k].pow(t.exponents[k]);
    acc += v;
  }
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_variables(a.vars_, b.vars_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents) return false;
    if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (!same_variables(a.variables(), b.variables()))
    throw Error(ErrorCode::ContextMismatch, "polynomials over different variable lists");
  if (a.is_zero()) return a;
  if (b.is_constant()) return a.scaled(b.leading_coeff().inverse());
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;
  if (b.total_degree() > a.total_degree()) return std::nullopt;

  const Term& lb = b.leading_term();
  const Rational inv_lc = lb.coeff.inverse();
  std::vector<Term> quotient;
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!divides(lb.exponents, lr.exponents)) return std::nullopt;
    Term q{sub_exponents(lr.exponents, lb.exponents), lr.coeff * inv_lc};
    rem -= b.times_monomial(q.exponents, q.coeff);
    quotient.push_back(std::move(q));
  }
  return MultiPoly::from_terms(a.variables(), std::move(quotient));
}

namespace {

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::NotDivisible, "internal: expected exact polynomial division");
  return *q;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& p) {
  Exponents e = mono.leading_term().exponents;
  for (const auto& t : p.terms())
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::min(e[k], t.exponents[k]);
  return MultiPoly::monomial(mono.variables(), std::move(e), Rational(1));
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.variables());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) return MultiPoly::constant(p.variables(), Rational(1));
  }
  return g.integer_primitive();
}

MultiPoly leading_coeff_in(const MultiPoly& p, std::size_t var) {
  return p.coefficients_in(var).back();
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const std::uint32_t n = b.degree_in(var);
  const MultiPoly lcb = leading_coeff_in(b, var);
  Exponents shift(a.nvars(), 0);
  while (!a.is_zero() && a.degree_in(var) >= n) {
    const std::uint32_t m = a.degree_in(var);
    const MultiPoly lca = leading_coeff_in(a, var);
    shift.assign(a.nvars(), 0);
    shift[var] = m - n;
    a = lcb * a - (lca * b).times_monomial(shift, Rational(1));
    a = a.integer_primitive();
  }
  return a;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
  const auto& vars = a.variables();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(vars, Rational(1));
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);

  const std::size_t n = a.nvars();
  std::size_t main_var = n;
  std::uint32_t best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto da = a.degree_in(v);
    const auto db = b.degree_in(v);
    if (da > 0 && db == 0) return gcd_rec(content_in(a, v), b);
    if (db > 0 && da == 0) return gcd_rec(a, content_in(b, v));
    if (da > 0 && (main_var == n || std::max(da, db) < best)) {
      main_var = v;
      best = std::max(da, db);
    }
  }

  if (b.terms().size() <= a.terms().size()) {
    if (divide_exact(a, b)) return b.integer_primitive();
  } else if (divide_exact(b, a)) {
    return a.integer_primitive();
  }

  const MultiPoly ca = content_in(a, main_var);
  const MultiPoly cb = content_in(b, main_var);
  MultiPoly pa = exact(a, ca).integer_primitive();
  MultiPoly pb = exact(b, cb).integer_primitive();
  const MultiPoly c = gcd_rec(ca, cb);
  if (pa.degree_in(main_var) < pb.degree_in(main_var)) std::swap(pa, pb);
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, main_var);
    if (r.is_zero()) break;
    if (r.degree_in(main_var) == 0) {
      pb = MultiPoly::constant(vars, Rational(1));
      break;
    }
    pa = std::move(pb);
    pb = exact(r, content_in(r, main_var)).integer_primitive();
  }
  return (c * pb).integer_primitive();
}

// Heuristic gcd over Z: evaluate the main variable at a large integer,
// recurse, lift the image back by xi-adic expansion and confirm by trial
// division. Inputs must have integer coefficients.
struct HeuGcd {
  MultiPoly h, cf, cg;
};

mpz_class max_norm(const MultiPoly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    mpz_class a = abs(t.coeff.numerator());
    if (a > m) m = a;
  }
  return m;
}

mpz_class int_content(const MultiPoly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.raw().get_num_mpz_t());
  return g;
}

bool is_integral(const MultiPoly& p) {
  for (const auto& t : p.terms())
    if (t.coeff.raw().get_den() != 1) return false;
  return true;
}

// Exact division over Z.
std::optional<MultiPoly> divide_integral(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (q && !is_integral(*q)) return std::nullopt;
  return q;
}

std::optional<std::size_t> main_variable(const MultiPoly& f, const MultiPoly& g) {
  for (std::size_t v = f.nvars(); v-- > 0;)
    if (f.uses_variable(v) || g.uses_variable(v)) return v;
  return std::nullopt;
}

MultiPoly evaluate_at(const MultiPoly& p, std::size_t var, const mpz_class& xi) {
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), xi.get_mpz_t(), t.exponents[var]);
    Term c{t.exponents, t.coeff * Rational(power, mpz_class(1))};
    c.exponents[var] = 0;
    terms.push_back(std::move(c));
  }
  return MultiPoly::from_terms(p.variables(), std::move(terms));
}

MultiPoly interpolate_at(MultiPoly h, std::size_t var, const mpz_class& xi) {
  std::vector<Term> out;
  const mpz_class half = xi / 2;
  const Rational inv_xi(mpz_class(1), xi);
  for (std::uint32_t i = 0; !h.is_zero(); ++i) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.raw().get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r == 0) continue;
      digit.push_back({t.exponents, Rational(r, mpz_class(1))});
    }
    const MultiPoly g = MultiPoly::from_terms(h.variables(), digit);
    for (auto& t : digit) {
      t.exponents[var] = i;
      out.push_back(std::move(t));
    }
    h = (h - g).scaled(inv_xi);
  }
  return MultiPoly::from_terms(h.variables(), std::move(out));
}

std::optional<HeuGcd> heu_gcd(const MultiPoly& f0, const MultiPoly& g0) {
  const auto& vars = f0.variables();
  const mpz_class cf0 = int_content(f0), cg0 = int_content(g0);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cf0.get_mpz_t(), cg0.get_mpz_t());
  const auto var = main_variable(f0, g0);
  if (!var) {
    const MultiPoly h = MultiPoly::constant(vars, Rational(c, mpz_class(1)));
    return HeuGcd{h, f0.scaled(Rational(mpz_class(1), c)), g0.scaled(Rational(mpz_class(1), c))};
  }
  const Rational inv_c(mpz_class(1), c);
  const MultiPoly f = f0.scaled(inv_c), g = g0.scaled(inv_c);
  const MultiPoly cpoly = MultiPoly::constant(vars, Rational(c, mpz_class(1)));

  const mpz_class nf = max_norm(f), ng = max_norm(g);
  const mpz_class b = 2 * std::min(nf, ng) + 29;
  mpz_class xi = std::min(b, mpz_class(99 * sqrt(b)));
  const mpz_class lf = abs(f.leading_coeff().numerator()), lg = abs(g.leading_coeff().numerator());
  xi = std::max(xi, mpz_class(2 * std::min(mpz_class(nf / lf), mpz_class(ng / lg)) + 2));

  for (int attempt = 0; attempt < 6; ++attempt) {
    const MultiPoly ff = evaluate_at(f, *var, xi), gg = evaluate_at(g, *var, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      if (auto img = heu_gcd(ff, gg)) {
        MultiPoly h = interpolate_at(img->h, *var, xi).integer_primitive();
        if (!h.is_zero()) {
          if (auto qf = divide_integral(f, h)) {
            if (auto qg = divide_integral(g, h)) return HeuGcd{h * cpoly, *qf, *qg};
          }
        }
        const MultiPoly cff = interpolate_at(img->cf, *var, xi);
        if (!cff.is_zero()) {
          if (auto hf = divide_integral(f, cff)) {
            if (auto qg = divide_integral(g, *hf)) return HeuGcd{*hf * cpoly, cff, *qg};
          }
        }
        const MultiPoly cfg = interpolate_at(img->cg, *var, xi);
        if (!cfg.is_zero()) {
          if (auto hg = divide_integral(g, cfg)) {
            if (auto qf = divide_integral(f, *hg)) return HeuGcd{*hg * cpoly, *qf, cfg};
          }
        }
      }
    }
    xi = mpz_class(73794 * xi * sqrt(sqrt(xi))) / 27011;
  }
  return std::nullopt;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (!same_variables(a.variables(), b.variables()))
    throw Error(ErrorCode::ContextMismatch, "polynomials over different variable lists");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.variables(), Rational(1));
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (auto h = heu_gcd(a.integer_primitive(), b.integer_primitive())) return h->h.monic();
  return gcd_rec(a, b).monic();
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  const mpz_class n = q.numerator();
  const mpz_class d = q.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const Term& lt = p.leading_term();
  Exponents half(lt.exponents.size());
  for (std::size_t k = 0; k < half.size(); ++k) {
    if (lt.exponents[k] % 2 != 0) return std::nullopt;
    half[k] = lt.exponents[k] / 2;
  }
  auto c = rational_sqrt(lt.coeff);
  if (!c) return std::nullopt;
  const Term lead{half, *c};
  MultiPoly root = MultiPoly::monomial(p.variables(), half, *c);
  MultiPoly rem = p - root * root;
  const Rational twice_inv = (Rational(2) * *c).inverse();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!divides(lead.exponents, lr.exponents)) return std::nullopt;
    Exponents e = sub_exponents(lr.exponents, lead.exponents);
    if (!grlex_greater(lead.exponents, e)) return std::nullopt;
    const MultiPoly t = MultiPoly::monomial(p.variables(), e, lr.coeff * twice_inv);
    rem -= (root + root + t) * t;
    root += t;
  }
  return root;
}

}  // namespace afd
