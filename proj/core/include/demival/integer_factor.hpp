#pragma once

#include <cstdint>
#include <vector>

#include "demival/rational.hpp"

namespace demival {

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;
/// Bounds above this would let accepted cofactors overflow 64 bits.
inline constexpr std::uint64_t kMaxFactorBound = 2'000'000'000;

struct PrimePower {
  std::int64_t p;
  int exp;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division bound in effect: DEMIVAL_FACTOR_BOUND if set, else
/// kDefaultFactorBound. Read once per process.
std::uint64_t default_factor_bound();

bool is_prime(std::int64_t n);

/// Factorization of |n| by trial division with primes <= bound, ascending.
/// A cofactor left after the search is accepted as prime only when it is
/// below (bound + 1)^2, which trial division has then proven; otherwise the
/// call fails with code "factor_bound". Units factor as the empty list.
std::vector<PrimePower> factor_integer(const BigInt& n, std::uint64_t bound = default_factor_bound());

/// p-adic valuation of a nonzero integer.
int padic_valuation(const BigInt& n, std::int64_t p);

/// All positive divisors of |n|, ascending (n != 0).
std::vector<BigInt> positive_divisors(const BigInt& n, std::uint64_t bound = default_factor_bound());

}  // namespace demival
