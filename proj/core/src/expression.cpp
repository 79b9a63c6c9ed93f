#include "demival/expression.hpp"

#include <cctype>
#include <charconv>

#include "demival/error.hpp"

namespace demival {

Ring Ring::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rational();
  if (spec.starts_with("quad:")) {
    std::string_view digits = spec.substr(5);
    std::int64_t d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return quadratic(d);
  }
  throw Error("usage", "unknown ring '" + std::string(spec) + "' (expected q or quad:<d>)");
}

const QuadContext& Ring::quad() const {
  if (!quad_) throw Error("usage", "ring Q has no sqrt(d)");
  return *quad_;
}

std::string Ring::name() const { return quad_ ? "quad:" + std::to_string(quad_->d()) : "q"; }

namespace {

class Parser {
 public:
  Parser(std::string_view input, const Ring& ring) : in_(input), ring_(ring) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ < in_.size()) fail(std::string("unexpected '") + in_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse", std::to_string(line_) + ":" + std::to_string(column_) + ": " + what);
  }

  void advance() {
    if (in_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) advance();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < in_.size() && in_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr node(Expr::Kind kind, int line, int column) {
    Expr e;
    e.kind = kind;
    e.line = line;
    e.column = column;
    return e;
  }

  Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e = node(kind, lhs.line, lhs.column);
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = binary(Expr::Kind::add, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = binary(Expr::Kind::mul, std::move(lhs), factor());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::div, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_space();
    const int line = line_;
    const int column = column_;
    if (accept('-')) {
      Expr e = node(Expr::Kind::neg, line, column);
      e.children.push_back(factor());
      return e;
    }
    Expr b = base();
    // Chains such as 2^3^2 associate to the right: 2^(3^2).
    std::vector<BigInt> exponents;
    while (accept('^')) {
      skip_space();
      if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
        fail("expected a nonnegative integer exponent");
      }
      exponents.push_back(digits());
    }
    if (!exponents.empty()) {
      BigInt n = exponents.back();
      for (std::size_t i = exponents.size() - 1; i-- > 0;) {
        if (n > 4096) break;
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), exponents[i].get_mpz_t(), n.get_ui());
        n = power;
      }
      if (!mpz_fits_uint_p(n.get_mpz_t()) || n > 4096) fail("exponent too large");
      Expr e = node(Expr::Kind::pow, line, column);
      e.exponent = static_cast<unsigned>(n.get_ui());
      e.children.push_back(std::move(b));
      return e;
    }
    return b;
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) advance();
    return BigInt(std::string(in_.substr(start, pos_ - start)));
  }

  Expr base() {
    skip_space();
    const int line = line_;
    const int column = column_;
    if (pos_ >= in_.size()) fail("unexpected end of input");
    const char c = in_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::integer, line, column);
      e.value = digits();
      return e;
    }
    if (c == '(') {
      advance();
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < in_.size() && std::isalnum(static_cast<unsigned char>(in_[pos_]))) advance();
      const std::string_view ident = in_.substr(start, pos_ - start);
      if (ident == "X") return node(Expr::Kind::variable, line, column);
      if (ident == "sqrt") return sqrt_atom(line, column);
      column_ = column;  // report at the identifier
      fail("unknown identifier '" + std::string(ident) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Expr sqrt_atom(int line, int column) {
    expect('(');
    skip_space();
    const bool negative = accept('-');
    skip_space();
    if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_]))) fail("expected integer radicand");
    BigInt d = digits();
    if (negative) d = -d;
    expect(')');
    if (!ring_.is_quadratic()) fail("sqrt(" + d.get_str() + ") is not available over ring q");
    if (d != ring_.quad().d()) {
      fail("sqrt(" + d.get_str() + ") does not match ring " + ring_.name());
    }
    Expr e = node(Expr::Kind::sqrt, line, column);
    e.radicand = d.get_si();
    return e;
  }

  std::string_view in_;
  const Ring& ring_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

template <class F, class SqrtFn>
RationalFunction<F> evaluate_as(const Expr& e, SqrtFn&& sqrt_value) {
  using RF = RationalFunction<F>;
  auto child = [&](std::size_t i) { return evaluate_as<F>(e.children[i], sqrt_value); };
  switch (e.kind) {
    case Expr::Kind::integer: return RF(F(Rational(e.value)));
    case Expr::Kind::variable: return RF(Polynomial<F>::x());
    case Expr::Kind::sqrt: return RF(sqrt_value(e.radicand));
    case Expr::Kind::neg: return -child(0);
    case Expr::Kind::add: return child(0) + child(1);
    case Expr::Kind::sub: return child(0) - child(1);
    case Expr::Kind::mul: return child(0) * child(1);
    case Expr::Kind::div: {
      RF denominator = child(1);
      if (is_zero(denominator)) throw Error("division_by_zero", "division by zero in expression");
      return child(0) / denominator;
    }
    case Expr::Kind::pow: {
      RF b = child(0);
      RF acc(1);
      for (unsigned k = 0; k < e.exponent; ++k) acc = acc * b;
      return acc;
    }
  }
  throw Error("internal", "unknown expression node");
}

}  // namespace

Expr parse_expression(std::string_view input, const Ring& ring) { return Parser(input, ring).parse(); }

std::string serialize(const Expr& e) {
  auto bin = [&](const char* op) { return "(" + serialize(e.children[0]) + " " + op + " " + serialize(e.children[1]) + ")"; };
  switch (e.kind) {
    case Expr::Kind::integer: return e.value.get_str();
    case Expr::Kind::variable: return "X";
    case Expr::Kind::sqrt: return "sqrt(" + std::to_string(e.radicand) + ")";
    case Expr::Kind::neg: return "(-" + serialize(e.children[0]) + ")";
    case Expr::Kind::add: return bin("+");
    case Expr::Kind::sub: return bin("-");
    case Expr::Kind::mul: return bin("*");
    case Expr::Kind::div: return bin("/");
    case Expr::Kind::pow: return "(" + serialize(e.children[0]) + "^" + std::to_string(e.exponent) + ")";
  }
  return "?";
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.radicand != b.radicand || a.exponent != b.exponent ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

RationalFunction<Rational> evaluate_rational(const Expr& e) {
  return evaluate_as<Rational>(e, [](std::int64_t) -> Rational {
    throw Error("parse", "sqrt is not available over Q");
  });
}

RationalFunction<QuadElement> evaluate_quadratic(const Expr& e, const QuadContext& ctx) {
  return evaluate_as<QuadElement>(e, [&ctx](std::int64_t d) {
    if (d != ctx.d()) throw Error("parse", "sqrt(" + std::to_string(d) + ") does not match the ring");
    return QuadElement::sqrt_d(d);
  });
}

QPoly parse_polynomial_q(std::string_view input) {
  auto f = evaluate_rational(parse_expression(input, Ring::rational()));
  if (!f.is_polynomial()) throw Error("parse", "'" + std::string(input) + "' is not a polynomial");
  return f.num();
}

}  // namespace demival
