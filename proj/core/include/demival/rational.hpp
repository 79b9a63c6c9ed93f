#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace demival {

using BigInt = mpz_class;
/// Exact rational number. GMP keeps mpq_class in canonical form
/// (gcd(num, den) = 1, den > 0) after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Least common multiple of the denominators and gcd of the numerators of a
/// family; used by the content computations over Q.
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Non-negative remainder.
BigInt floor_mod(const BigInt& a, const BigInt& m);

std::int64_t to_int64(const BigInt& n);

}  // namespace demival
