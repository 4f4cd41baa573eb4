#include "germcalc/parse.hpp"

#include <cctype>
#include <sstream>

namespace germcalc {

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial parse_expr() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = parse_term();
    if (neg) acc.negate();
    for (;;) {
      skip_ws();
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_power();
    while (eat('*')) acc = acc * parse_power();
    return acc;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (!eat('^')) return base;
    skip_ws();
    std::size_t exp_pos = pos_;
    unsigned long long e = parse_natural();
    if (e > kMaxExponent) {
      pos_ = exp_pos;
      fail("exponent exceeds the representable range");
    }
    if (peek() == '^') fail("'^' is not associative, use parentheses");
    return base.pow(static_cast<std::uint32_t>(e));
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long long v = parse_natural();
      return Polynomial::constant(ring_, static_cast<long long>(
                                             v % ring_->field().p()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int v = ring_->var_index(name);
      if (v < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, v);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  unsigned long long parse_natural() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    unsigned long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
      if (v > (1ull << 62)) fail("numeric literal too large");
      ++pos_;
    }
    return v;
  }
};

}  // namespace

Polynomial parse_polynomial(RingPtr ring, std::string_view text) {
  return Parser(std::move(ring), text).run();
}

std::string format_monomial(const PolyRing& ring, const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  for (int v = 0; v < ring.nvars(); ++v) {
    std::uint32_t e = m.exp(v);
    if (e == 0) continue;
    if (!first) out << '*';
    out << ring.var_names()[static_cast<std::size_t>(v)];
    if (e > 1) out << '^' << e;
    first = false;
  }
  if (first) out << '1';
  return out.str();
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolyRing& ring = *f.ring();
  std::ostringstream out;
  bool first = true;
  for (const Term& t : f.terms()) {
    if (!first) out << " + ";
    bool unit = t.coeff == 1 % ring.field().p();
    bool constant = t.mono.is_one();
    if (!unit || constant) {
      out << t.coeff;
      if (!constant) out << '*';
    }
    if (!constant) out << format_monomial(ring, t.mono);
    first = false;
  }
  return out.str();
}

}  // namespace germcalc
