#include "afd/expression.hpp"

#include <cctype>

#include "afd/error.hpp"

namespace afd {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

  ScalarValue parse() {
    ScalarValue v = expr();
    skip_space();
    if (pos_ < text_.size()) fail("'+', '-', '*', '/', '^' or end of input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(ErrorCode::SyntaxError, "syntax error at position " + std::to_string(pos_ + 1) + ": expected " +
                                            expected + "; found " + found);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ScalarValue expr() {
    ScalarValue acc = term();
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  ScalarValue term() {
    ScalarValue acc = factor();
    while (true) {
      if (accept('*')) acc = acc * factor();
      else if (accept('/')) acc = acc / factor();
      else return acc;
    }
  }

  ScalarValue factor() {
    if (accept('-')) return -factor();
    ScalarValue b = base();
    if (accept('^')) {
      const bool negative = accept('-');
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("integer exponent");
      const Rational e = Rational::from_integer_string(text_.substr(start, pos_ - start));
      if (!e.raw().get_num().fits_slong_p()) fail("exponent of reasonable size");
      const long n = e.raw().get_num().get_si();
      return b.pow(negative ? -n : n);
    }
    return b;
  }

  ScalarValue base() {
    skip_space();
    if (pos_ >= text_.size()) fail("integer, identifier, '(' or '-'");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ScalarValue(ctx_, Rational::from_integer_string(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ScalarValue::variable(ctx_, std::string(text_.substr(start, pos_ - start)));
    }
    if (accept('(')) {
      ScalarValue v = expr();
      if (!accept(')')) fail("')'");
      return v;
    }
    fail("integer, identifier, '(' or '-'");
  }

  std::string_view text_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;
};

std::string render_monomial(const Exponents& e, const VariableList& names) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += " * ";
    out += names[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

bool is_single_power(const MultiPoly& p) {
  if (!p.is_monomial() || !p.leading_coeff().is_one()) return false;
  int used = 0;
  for (auto e : p.leading_term().exponents) used += e > 0 ? 1 : 0;
  return used == 1;
}

}  // namespace

ScalarValue parse_scalar(std::string_view text, const ContextPtr& ctx) { return Parser(text, ctx).parse(); }

std::string render_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const auto& names = *p.variables();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff.sign() < 0;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    const Rational c = t.coeff.abs();
    const std::string mono = render_monomial(t.exponents, names);
    if (mono.empty()) out += c.to_string();
    else if (c.is_one()) out += mono;
    else out += c.to_string() + " * " + mono;
  }
  return out;
}

std::string render_scalar(const ScalarValue& a) {
  if (const auto q = a.as_rational()) return q->to_string();
  const RatFunc f = a.to_ratfunc();
  if (f.is_polynomial()) return render_poly(f.num());
  std::string num = render_poly(f.num());
  if (f.num().terms().size() > 1) num = "(" + num + ")";
  std::string den = render_poly(f.den());
  if (!is_single_power(f.den())) den = "(" + den + ")";
  return num + " / " + den;
}

}  // namespace afd
