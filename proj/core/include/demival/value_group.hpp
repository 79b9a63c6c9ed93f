#pragma once

// Lattice-ordered groups of the form (+)_i Z with componentwise order, plus
// the formal top element used as the value of zero.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "demival/rational.hpp"

namespace demival {

/// Rational prime p; index of the p-adic component.
struct RationalPrime {
  std::int64_t p = 2;
};

enum class QuadPrimeKind { inert, ramified, split_plus, split_minus };

/// Prime ideal of Z[sqrt(d)] lying over p. The ring (d) is implied by the
/// valuation the label belongs to. `root` is present exactly for split
/// primes, with root^2 = d (mod p).
struct QuadPrime {
  std::int64_t p = 2;
  QuadPrimeKind kind = QuadPrimeKind::ramified;
  std::optional<std::int64_t> root;
};

/// Monic irreducible polynomial over Q, ascending coefficients.
struct IrreduciblePoly {
  std::vector<Rational> coeffs;
};

using PrimeLabel = std::variant<RationalPrime, QuadPrime, IrreduciblePoly>;

RationalPrime make_rational_prime(std::int64_t p);
QuadPrime make_quad_prime(std::int64_t p, QuadPrimeKind kind,
                          std::optional<std::int64_t> root = std::nullopt);
IrreduciblePoly make_irreducible_poly(std::vector<Rational> monic_coeffs);

/// Total order used for canonical serialization: RationalPrime < QuadPrime
/// < IrreduciblePoly, then by p / (p, kind, root) / (degree, coefficients
/// from the top down).
int compare_labels(const PrimeLabel& a, const PrimeLabel& b);
inline bool same_label(const PrimeLabel& a, const PrimeLabel& b) { return compare_labels(a, b) == 0; }
inline bool label_less(const PrimeLabel& a, const PrimeLabel& b) { return compare_labels(a, b) < 0; }

/// `p:2`, `q:2:ram`, `q:11:inert`, `q:3:split+:1`, `f:X^2+1`.
std::string label_string(const PrimeLabel& label);
PrimeLabel parse_label(std::string_view text);

enum class Ordering { less, equal, greater, incomparable };

const char* to_string(Ordering o);

/// Finitely supported element of (+)_i Z. Entries are kept sorted by label
/// with no zero exponents, so structural equality is group equality.
class ValueVector {
 public:
  using Entry = std::pair<PrimeLabel, std::int64_t>;

  ValueVector() = default;
  /// Accepts entries in any order; duplicates are summed and zeros dropped.
  explicit ValueVector(std::vector<Entry> entries);

  static ValueVector unit(const PrimeLabel& label, std::int64_t exp = 1);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t at(const PrimeLabel& label) const;

  friend bool operator==(const ValueVector& a, const ValueVector& b);

 private:
  std::vector<Entry> entries_;
};

ValueVector vv_add(const ValueVector& a, const ValueVector& b);
ValueVector vv_neg(const ValueVector& a);
ValueVector vv_sub(const ValueVector& a, const ValueVector& b);
Ordering vv_compare(const ValueVector& a, const ValueVector& b);
ValueVector vv_meet(const ValueVector& a, const ValueVector& b);
ValueVector vv_join(const ValueVector& a, const ValueVector& b);
/// a >= 0 in the componentwise order.
bool vv_nonnegative(const ValueVector& a);

/// Minimal element of a non-empty subset of the positive cone, found by
/// descent. Among several minimal elements the one with the least
/// serialization is returned. Throws for an empty set or a negative member.
ValueVector minimal_in_set(std::span<const ValueVector> set);

/// Finite value or the formal top element (the value of 0).
class ExtendedValue {
 public:
  ExtendedValue() = default;  // Finite({})
  ExtendedValue(ValueVector v) : value_(std::move(v)) {}  // NOLINT(implicit)

  static ExtendedValue infinity() {
    ExtendedValue e;
    e.value_.reset();
    return e;
  }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  /// Throws if infinite.
  const ValueVector& finite() const;

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    return a.value_ == b.value_;
  }

 private:
  std::optional<ValueVector> value_ = ValueVector{};
};

ExtendedValue ext_add(const ExtendedValue& a, const ExtendedValue& b);
/// a - b for finite b; infinity - finite = infinity.
ExtendedValue ext_sub(const ExtendedValue& a, const ExtendedValue& b);
ExtendedValue ext_meet(const ExtendedValue& a, const ExtendedValue& b);
Ordering ext_compare(const ExtendedValue& a, const ExtendedValue& b);
/// Infinity, or finite and >= 0.
bool ext_nonnegative(const ExtendedValue& a);

std::string to_string(const ValueVector& v);
std::string to_string(const ExtendedValue& v);

}  // namespace demival
