#pragma once

#include <concepts>
#include <string>

#include "demival/rational.hpp"

namespace demival {

/// How a coefficient is printed inside a polynomial: the sign is pulled out
/// when the element has one, and compound elements get parentheses.
struct CoefficientText {
  bool negative = false;
  std::string magnitude;
  bool compound = false;
};

inline CoefficientText coefficient_text(const Rational& q) {
  return {sgn(q) < 0, to_string(Rational(abs(q))), false};
}

/// The exact fields this library computes over (Q, Q(sqrt d), and K(X) for
/// both). Construction from an int gives the embedded integer.
template <class F>
concept ExactField = std::regular<F> && requires(const F& a, const F& b) {
  F(0);
  F(1);
  { F(a + b) } -> std::same_as<F>;
  { F(a - b) } -> std::same_as<F>;
  { F(a * b) } -> std::same_as<F>;
  { F(a / b) } -> std::same_as<F>;
  { F(-a) } -> std::same_as<F>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

}  // namespace demival
