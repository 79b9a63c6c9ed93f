#pragma once

// Q with the divisor valuation of prime factorization: v(x)_p is the
// exponent of p in x. R(v) = Z.

#include <cstdint>

#include "demival/ideal_toolkit.hpp"
#include "demival/integer_factor.hpp"
#include "demival/rational.hpp"
#include "demival/valuation.hpp"

namespace demival {

ExtendedValue rational_valuation(const Rational& q, std::uint64_t bound = default_factor_bound());

/// Divisor valuation on Q. meet_of uses gcd of numerators over lcm of
/// denominators; representatives are the primes themselves.
Valuation<Rational> rational_divisor_valuation(std::uint64_t bound = default_factor_bound());

/// Extended-gcd certificate for integers x, y: c x + d y = gcd(x, y).
BezoutCertificate<Rational> integer_bezout_certificate(const Rational& x, const Rational& y);

/// Positive generator g of the fractional ideal (gens) of Z, 0 for the zero
/// ideal.
Rational rational_ideal_generator(std::span<const Rational> gens);

IdealToolkit<Rational> rational_ideal_toolkit();

}  // namespace demival
