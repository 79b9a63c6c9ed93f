#pragma once

// The content valuation w on K(X) extending a base valuation v on K:
// w(sum a_i X^i) = inf_i v(a_i), w(p/q) = w(p) - w(q). Its valuation ring
// R(w) is the Kronecker function ring; finitely generated ideals there are
// principal, with an explicit generator built from X^h shifts.

#include <span>
#include <utility>
#include <vector>

#include "demival/error.hpp"
#include "demival/ideal_toolkit.hpp"
#include "demival/polynomial.hpp"
#include "demival/valuation.hpp"

namespace demival {

/// Meet of the coefficient values (zero coefficients contribute infinity,
/// so the zero polynomial has value infinity).
template <class F>
ExtendedValue content_value(const Polynomial<F>& f, const Valuation<F>& v) {
  return v.meet_of(std::span<const F>(f.coeffs()));
}

template <class F>
ExtendedValue w_value(const RationalFunction<F>& f, const Valuation<F>& v) {
  return ext_sub(content_value(f.num(), v), content_value(f.den(), v));
}

/// w as a valuation instance on K(X). Representatives are lifted from the
/// base valuation as constants.
template <class F>
Valuation<RationalFunction<F>> w_valuation(const Valuation<F>& base) {
  using RF = RationalFunction<F>;
  Valuation<RF> w("w[" + base.name() + "]", base.field() + "(X)", base.label_universe(),
                  [base](const RF& f) { return w_value(f, base); });
  if (base.has_representatives()) {
    w.with_representatives([base](const PrimeLabel& l) -> std::optional<RF> {
      auto pi = base.representative(l);
      if (!pi) return std::nullopt;
      return RF(*pi);
    });
  }
  return w;
}

/// c = X^(deg q + 1), d = 1: every coefficient of p and q survives on its
/// own in c p + d q, so w(c p + d q) = inf(w(p), w(q)).
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> bezout_coefficients(const Polynomial<F>& p, const Polynomial<F>& q) {
  (void)p;
  if (q.is_zero()) throw Error("domain", "bezout_coefficients: q must be nonzero");
  return {Polynomial<F>::monomial(F(1), static_cast<std::size_t>(q.degree() + 1)), Polynomial<F>::constant(F(1))};
}

template <class F>
bool kronecker_ring_member(const RationalFunction<F>& f, const Valuation<F>& v) {
  return ext_nonnegative(w_value(f, v));
}

/// Pairwise combiner for R(w). Both arguments are brought to the common
/// denominator r = den(x) den(y), giving numerators p_x, p_y; the X^h shift
/// goes on the numerator of larger degree (the first on ties).
template <class F>
BezoutCombiner<RationalFunction<F>> rw_bezout_combiner() {
  using RF = RationalFunction<F>;
  return [](const RF& x, const RF& y) -> BezoutCertificate<RF> {
    if (is_zero(y)) return {x, y, RF(1), RF(0), x};
    if (is_zero(x)) return {x, y, RF(0), RF(1), y};
    const Polynomial<F> r = x.den() * y.den();
    const Polynomial<F> px = x.num() * y.den();
    const Polynomial<F> py = y.num() * x.den();
    if (py.degree() > px.degree()) {
      auto [shift, one] = bezout_coefficients(py, px);
      RF m(shift * py + one * px, r);
      return {x, y, RF(one), RF(shift), std::move(m)};
    }
    auto [shift, one] = bezout_coefficients(px, py);
    RF m(shift * px + one * py, r);
    return {x, y, RF(shift), RF(one), std::move(m)};
  };
}

/// Finitely generated ideal of R(w).
template <class F>
class KroneckerIdeal {
 public:
  using RF = RationalFunction<F>;

  /// Throws "not_in_ring" if a generator is outside R(w).
  KroneckerIdeal(Valuation<F> base, std::vector<RF> generators)
      : base_(std::move(base)), generators_(std::move(generators)) {
    if (generators_.empty()) throw Error("domain", "ideal needs at least one generator");
    for (const RF& g : generators_) {
      if (!kronecker_ring_member(g, base_)) {
        throw Error("not_in_ring", to_string(g) + " is not in the Kronecker function ring");
      }
    }
  }

  const Valuation<F>& base() const noexcept { return base_; }
  const std::vector<RF>& generators() const noexcept { return generators_; }

 private:
  Valuation<F> base_;
  std::vector<RF> generators_;
};

/// The ideal of R(w) generated by elements of the base ring.
template <class F>
KroneckerIdeal<F> extend_ideal(const Valuation<F>& base, std::span<const F> gens) {
  std::vector<RationalFunction<F>> lifted(gens.begin(), gens.end());
  return KroneckerIdeal<F>(base, std::move(lifted));
}

/// Principal generator of J by the left fold of rw_bezout_combiner. Zero
/// generators are skipped (coefficient and cofactor 0); the zero ideal gets
/// m = 0.
template <class F>
PrincipalGenerator<RationalFunction<F>> rw_principal_generator(const KroneckerIdeal<F>& J) {
  using RF = RationalFunction<F>;
  const auto& gens = J.generators();
  std::vector<RF> nonzero;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!is_zero(gens[i])) {
      nonzero.push_back(gens[i]);
      where.push_back(i);
    }
  }
  PrincipalGenerator<RF> out;
  out.coefficients.assign(gens.size(), RF(0));
  out.cofactors.assign(gens.size(), RF(0));
  if (nonzero.empty()) return out;
  const auto w = w_valuation(J.base());
  auto inner = principal_generator_from_bezout<RF>(w, nonzero, rw_bezout_combiner<F>());
  out.m = std::move(inner.m);
  out.chain = std::move(inner.chain);
  for (std::size_t k = 0; k < where.size(); ++k) {
    out.coefficients[where[k]] = std::move(inner.coefficients[k]);
    out.cofactors[where[k]] = std::move(inner.cofactors[k]);
  }
  return out;
}

/// a_i / p for each nonzero coefficient a_i of p; each lies in R(w) since
/// w(a_i) >= w(p).
template <class F>
std::vector<RationalFunction<F>> coefficient_cofactors(const Polynomial<F>& p) {
  using RF = RationalFunction<F>;
  if (p.is_zero()) throw Error("domain", "coefficient_cofactors of the zero polynomial");
  std::vector<RF> out;
  const RF denominator(p);
  for (const F& a : p.coeffs()) {
    if (!is_zero(a)) out.push_back(RF(a) / denominator);
  }
  return out;
}

/// Polynomial with the same w-value as f = r/s: r times a polynomial whose
/// coefficients generate the inverse of the content ideal of s.
template <class F>
Polynomial<F> polynomial_with_same_value(const RationalFunction<F>& f, const IdealToolkit<F>& toolkit) {
  if (is_zero(f)) throw Error("domain", "polynomial_with_same_value of zero");
  if (f.den().degree() == 0) return f.num().scaled(F(F(1) / f.den().leading()));
  std::vector<F> content;
  for (const F& a : f.den().coeffs()) {
    if (!is_zero(a)) content.push_back(a);
  }
  return f.num() * Polynomial<F>(toolkit.inverse_generators(content));
}

/// Generators of J contracted to the base ring: the coefficients of a
/// same-value polynomial for each generator. Empty for the zero ideal.
template <class F>
std::vector<F> contract_ideal(const KroneckerIdeal<F>& J, const IdealToolkit<F>& toolkit) {
  std::vector<F> out;
  for (const auto& g : J.generators()) {
    if (is_zero(g)) continue;
    const Polynomial<F> p = polynomial_with_same_value(g, toolkit);
    for (const F& a : p.coeffs()) {
      if (!is_zero(a)) out.push_back(a);
    }
  }
  return out;
}

/// J1 = J2 iff their principal generators have equal w-values.
template <class F>
bool rw_ideal_equal(const KroneckerIdeal<F>& J1, const KroneckerIdeal<F>& J2) {
  const auto w1 = w_value(rw_principal_generator(J1).m, J1.base());
  const auto w2 = w_value(rw_principal_generator(J2).m, J2.base());
  return w1 == w2;
}

/// Checks b = bR(w) /\ R(v) on samples for the base ideal b = (gens):
/// (1) convexity: any sample t in R(v) with v(t) >= inf v(gens) is in b;
/// (2) any combination sum p_i gens_i with p_i in R(w) that lands in R(v)
///     is in b.
template <class F>
bool extend_contract_roundtrip_check(std::span<const F> gens, const Valuation<F>& v, const IdealToolkit<F>& toolkit,
                                     std::span<const F> samples,
                                     std::span<const std::vector<RationalFunction<F>>> multipliers) {
  using RF = RationalFunction<F>;
  const ExtendedValue floor = v.meet_of(gens);
  for (const F& t : samples) {
    if (!in_valuation_ring(v, t)) continue;
    const Ordering o = ext_compare(v(t), floor);
    if ((o == Ordering::greater || o == Ordering::equal) && !toolkit.member(t, gens)) return false;
  }
  for (const auto& coeffs : multipliers) {
    if (coeffs.size() != gens.size()) throw Error("domain", "multiplier count mismatch");
    RF s(0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!kronecker_ring_member(coeffs[i], v)) throw Error("not_in_ring", "multiplier outside R(w)");
      s = s + coeffs[i] * RF(gens[i]);
    }
    if (s.num().degree() > 0 || s.den().degree() > 0) continue;
    const F constant = s.num().coeff(0);
    if (in_valuation_ring(v, constant) && !toolkit.member(constant, gens)) return false;
  }
  return true;
}

}  // namespace demival
