#pragma once

// Expression language for field elements, polynomials and rational
// functions:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | base ('^' uint)?
//   base   := uint | 'X' | 'sqrt' '(' int ')' | '(' expr ')'
//
// Whitespace is insignificant. `sqrt(d)` is only accepted when the selected
// ring is Q(sqrt d).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demival/kronecker_factor.hpp"
#include "demival/polynomial.hpp"
#include "demival/quadratic.hpp"

namespace demival {

/// `q` or `quad:<d>`.
class Ring {
 public:
  static Ring rational() { return Ring(); }
  static Ring quadratic(std::int64_t d) { return Ring(QuadContext(d)); }
  static Ring parse(std::string_view spec);

  bool is_quadratic() const noexcept { return quad_.has_value(); }
  const QuadContext& quad() const;
  std::string name() const;

 private:
  Ring() = default;
  explicit Ring(QuadContext ctx) : quad_(ctx) {}

  std::optional<QuadContext> quad_;
};

struct Expr {
  enum class Kind { integer, variable, sqrt, neg, add, sub, mul, div, pow };

  Kind kind = Kind::integer;
  BigInt value;              // integer literal
  std::int64_t radicand = 0; // sqrt
  unsigned exponent = 0;     // pow
  std::vector<Expr> children;
  int line = 1;
  int column = 1;
};

/// Throws Error("parse") with a `line:column:` prefix.
Expr parse_expression(std::string_view input, const Ring& ring);

/// Fully parenthesized rendering that reparses to the same tree.
std::string serialize(const Expr& e);
/// Tree equality ignoring source positions.
bool structurally_equal(const Expr& a, const Expr& b);

RationalFunction<Rational> evaluate_rational(const Expr& e);
RationalFunction<QuadElement> evaluate_quadratic(const Expr& e, const QuadContext& ctx);

/// Parses and evaluates over Q; throws unless the result is a polynomial.
QPoly parse_polynomial_q(std::string_view input);

}  // namespace demival
