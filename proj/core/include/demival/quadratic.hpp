#pragma once

// Q(sqrt d) for squarefree d = 2, 3 (mod 4), whose ring of integers is
// Z[sqrt d]; fractional ideals in Hermite normal form and the divisor
// valuation given by prime ideal exponents.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "demival/ideal_toolkit.hpp"
#include "demival/integer_factor.hpp"
#include "demival/rational.hpp"
#include "demival/valuation.hpp"

namespace demival {

class QuadContext {
 public:
  /// Throws for d not squarefree, d in {0, 1}, or d = 1 (mod 4).
  explicit QuadContext(std::int64_t d);

  std::int64_t d() const noexcept { return d_; }
  friend bool operator==(const QuadContext&, const QuadContext&) = default;

 private:
  std::int64_t d_;
};

/// a + b sqrt(d). Elements with b = 0 may leave d unset (0) so that rational
/// constants combine with any ring; arithmetic adopts the d of whichever
/// operand has one and rejects mixing two different rings.
class QuadElement {
 public:
  QuadElement() = default;
  QuadElement(int c) : a_(c) {}                // NOLINT(implicit)
  QuadElement(const Rational& a) : a_(a) {}    // NOLINT(implicit)
  QuadElement(Rational a, Rational b, std::int64_t d);

  static QuadElement sqrt_d(std::int64_t d) { return {Rational(0), Rational(1), d}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  std::int64_t d() const noexcept { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  /// In Z[sqrt d].
  bool is_integral() const { return is_integer(a_) && is_integer(b_); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  QuadElement conjugate() const { return {a_, Rational(-b_), d_}; }
  /// Least positive integer n with n * x integral.
  BigInt denominator() const { return lcm(a_.get_den(), b_.get_den()); }

  friend QuadElement operator+(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator-(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator-(const QuadElement& x);
  friend QuadElement operator*(const QuadElement& x, const QuadElement& y);
  friend QuadElement operator/(const QuadElement& x, const QuadElement& y);
  friend bool operator==(const QuadElement& x, const QuadElement& y);

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

inline bool is_zero(const QuadElement& x) { return sgn(x.a()) == 0 && sgn(x.b()) == 0; }
/// `a + b*sqrt(d)`; the rational part alone when b = 0.
std::string to_string(const QuadElement& x);
CoefficientText coefficient_text(const QuadElement& x);

/// Fractional ideal (1/n) M with M = Z*a + Z*(b + c sqrt d) in Hermite
/// normal form: a, c > 0, 0 <= b < a, gcd(n, a, b, c) = 1.
class QuadIdeal {
 public:
  /// O_K-ideal generated by the elements (zeros ignored); throws
  /// "zero_ideal" if all are zero.
  static QuadIdeal from_generators(const QuadContext& ctx, std::span<const QuadElement> gens);
  static QuadIdeal principal(const QuadContext& ctx, const QuadElement& x);
  static QuadIdeal unit(const QuadContext& ctx);

  const QuadContext& context() const noexcept { return ctx_; }
  const BigInt& denominator() const noexcept { return den_; }
  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }

  bool is_integral() const { return den_ == 1; }
  /// Absolute norm a c / n^2.
  Rational norm() const;
  /// Z-basis {a/n, (b + c sqrt d)/n}.
  std::array<QuadElement, 2> basis() const;

  friend bool operator==(const QuadIdeal&, const QuadIdeal&) = default;

 private:
  QuadIdeal(QuadContext ctx, BigInt den, BigInt a, BigInt b, BigInt c)
      : ctx_(ctx), den_(std::move(den)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  friend QuadIdeal make_ideal_from_lattice(const QuadContext& ctx, std::vector<std::array<BigInt, 2>> rows,
                                           BigInt den);

  QuadContext ctx_;
  BigInt den_;
  BigInt a_;
  BigInt b_;
  BigInt c_;
};

/// `(g1, g2)` using the HNF basis.
std::string to_string(const QuadIdeal& I);

QuadIdeal ideal_mul(const QuadIdeal& I, const QuadIdeal& J);
QuadIdeal ideal_inverse(const QuadIdeal& I);
QuadIdeal ideal_add(const QuadIdeal& I, const QuadIdeal& J);
/// I^k for any integer k (negative powers through the inverse).
QuadIdeal ideal_pow(const QuadIdeal& I, std::int64_t k);
bool ideal_membership(const QuadElement& x, const QuadIdeal& I);
/// I contains J.
bool ideal_contains(const QuadIdeal& I, const QuadIdeal& J);
/// Reverse inclusion: I <= J iff I contains J.
Ordering ideal_compare(const QuadIdeal& I, const QuadIdeal& J);

/// Labels of the prime ideals above p: one (inert or ramified) or two
/// (split_plus with root r in [1, p/2], split_minus with root p - r).
std::vector<QuadPrime> quad_splitting_type(const QuadContext& ctx, std::int64_t p);
/// (p, sqrt d - r) for split and ramified primes, (p) for inert ones.
QuadIdeal prime_ideal_of_label(const QuadContext& ctx, const QuadPrime& label);
/// Exponent of the prime ideal in the factorization of (x), by membership
/// of the integral numerator in successive powers.
std::int64_t prime_ideal_valuation(const QuadContext& ctx, const QuadElement& x, const QuadPrime& label);
ExtendedValue quad_divisor_valuation(const QuadContext& ctx, const QuadElement& x,
                                     std::uint64_t bound = default_factor_bound());
/// Prime ideal exponents of a nonzero fractional ideal, by containment in
/// prime powers.
ValueVector ideal_divisor_valuation(const QuadIdeal& I, std::uint64_t bound = default_factor_bound());
/// Product of prime ideal powers named by a value vector of QuadPrime labels.
QuadIdeal ideal_from_value(const QuadContext& ctx, const ValueVector& v);

/// Searches a + b sqrt d with |a|, |b| <= bound and |N| = N(I) generating
/// I. Not finding one is only a bounded statement; for d < 0 it is
/// complete once bound >= sqrt(N(I)).
std::optional<QuadElement> is_principal_search(const QuadIdeal& I, std::int64_t bound);

Valuation<QuadElement> quad_valuation(const QuadContext& ctx, std::uint64_t bound = default_factor_bound());
IdealToolkit<QuadElement> quad_ideal_toolkit(const QuadContext& ctx);

}  // namespace demival
