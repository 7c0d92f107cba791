#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace afd {

/// Dense univariate polynomial over a field F, coefficients low to high.
/// F must provide +, -, *, /, is_zero(), == and a free unit_like(F). The zero element is
/// carried explicitly because F may need context to build one.
template <typename F>
class UniPoly {
 public:
  explicit UniPoly(F zero) : zero_(std::move(zero)) {}
  UniPoly(F zero, std::vector<F> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  const F& zero_element() const { return zero_; }
  const std::vector<F>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const F& lead() const { return c_.back(); }
  const F& coeff(std::size_t k) const { return k < c_.size() ? c_[k] : zero_; }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> out(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return UniPoly(a.zero_, std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<F> out(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return UniPoly(a.zero_, std::move(out));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.zero_);
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(a.zero_, std::move(out));
  }
  UniPoly scaled(const F& s) const {
    std::vector<F> out = c_;
    for (auto& x : out) x = x * s;
    return UniPoly(zero_, std::move(out));
  }
  UniPoly derivative() const {
    std::vector<F> out;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      F m = zero_;
      for (std::size_t i = 0; i < k; ++i) m = m + c_[k];
      out.push_back(std::move(m));
    }
    return UniPoly(zero_, std::move(out));
  }
  UniPoly monic() const { return is_zero() ? *this : scaled(one() / lead()); }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    UniPoly r = *this;
    std::vector<F> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, zero_);
    const F inv = one() / d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
      const F f = r.lead() * inv;
      q[shift] = f;
      for (std::size_t k = 0; k < d.c_.size(); ++k) r.c_[k + shift] = r.c_[k + shift] - f * d.c_[k];
      r.c_.pop_back();
      r.trim();
    }
    return {UniPoly(zero_, std::move(q)), std::move(r)};
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Multiplicative identity, found through ADL as unit_like(F).
  F one() const { return unit_like(zero_); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F zero_;
  std::vector<F> c_;
};

/// Monic gcd of a and b.
template <typename F>
UniPoly<F> uni_gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
template <typename F>
struct ExtendedGcd {
  UniPoly<F> g, s, t;
};

template <typename F>
ExtendedGcd<F> uni_extended_gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F zero = a.zero_element();
  UniPoly<F> r0 = a, r1 = b;
  UniPoly<F> s0(zero, {a.one()}), s1(zero);
  UniPoly<F> t0(zero), t1(zero, {a.one()});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const F inv = a.one() / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace afd
