#pragma once

#include <random>
#include <string>
#include <vector>

#include "afd/expression.hpp"

namespace afd::testing {

/// Seeded generator of small random scalars, built as expression text so the
/// parser is exercised along the way.
class ScalarSampler {
 public:
  ScalarSampler(ContextPtr ctx, std::vector<std::string> vars, unsigned seed = 20261016)
      : ctx_(std::move(ctx)), vars_(std::move(vars)), rng_(seed) {}

  std::string poly_text(int max_terms = 3, int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(1, max_terms), num(-4, 4), den(1, 3), ex(0, max_exp);
    std::string out;
    const int n = nterms(rng_);
    for (int t = 0; t < n; ++t) {
      int c = num(rng_);
      if (c == 0) c = 1;
      out += (t ? " + " : "") + std::string("(") + std::to_string(c) + "/" + std::to_string(den(rng_)) + ")";
      for (const auto& v : vars_) {
        const int e = ex(rng_);
        if (e > 0) out += " * " + v + "^" + std::to_string(e);
      }
    }
    return out;
  }

  ScalarValue poly() { return parse_scalar(poly_text(), ctx_); }

  ScalarValue nonzero_poly() {
    for (;;) {
      auto p = poly();
      if (!p.is_zero()) return p;
    }
  }

  /// Quotient of random polynomials; extra is appended as a multiplier of a
  /// second numerator term (used for the algebraic generator).
  ScalarValue fraction(const std::string& extra = "") {
    std::string text = "(" + poly_text() + ")";
    if (!extra.empty()) text += " + (" + poly_text() + ") * " + extra;
    auto num = parse_scalar(text, ctx_);
    return num / nonzero_poly();
  }

  std::mt19937& rng() { return rng_; }

 private:
  ContextPtr ctx_;
  std::vector<std::string> vars_;
  std::mt19937 rng_;
};

}  // namespace afd::testing
