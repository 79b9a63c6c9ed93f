#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "demival/expression.hpp"
#include "demival/value_group.hpp"

namespace demival::testing {

/// Value vector from label strings, e.g. vv({{"p:2", 2}, {"p:3", -1}}).
inline ValueVector vv(std::initializer_list<std::pair<const char*, std::int64_t>> entries) {
  std::vector<ValueVector::Entry> e;
  for (const auto& [label, exp] : entries) e.emplace_back(parse_label(label), exp);
  return ValueVector(std::move(e));
}

inline Rational q(const char* text) { return parse_rational(text); }

inline QFunction qf(const std::string& text) { return evaluate_rational(parse_expression(text, Ring::rational())); }

inline QPoly qp(const std::string& text) { return parse_polynomial_q(text); }

inline RationalFunction<QuadElement> kf(const std::string& text, const QuadContext& ctx) {
  return evaluate_quadratic(parse_expression(text, Ring::quadratic(ctx.d())), ctx);
}

inline Polynomial<QuadElement> kp(const std::string& text, const QuadContext& ctx) { return kf(text, ctx).num(); }

inline QuadElement qe(const std::string& text, const QuadContext& ctx) { return kp(text, ctx).coeff(0); }

}  // namespace demival::testing
