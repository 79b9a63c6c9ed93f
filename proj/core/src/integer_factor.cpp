#include "demival/integer_factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "demival/error.hpp"

namespace demival {

std::uint64_t default_factor_bound() {
  static const std::uint64_t bound = [] {
    if (const char* env = std::getenv("DEMIVAL_FACTOR_BOUND")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v >= 2 && v <= kMaxFactorBound) return static_cast<std::uint64_t>(v);
    }
    return kDefaultFactorBound;
  }();
  return bound;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

void factor_u64(std::uint64_t n, std::uint64_t bound, std::vector<PrimePower>& out) {
  auto take = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({static_cast<std::int64_t>(p), e});
  };
  if (bound >= 2) take(2);
  std::uint64_t p = 3;
  for (; p <= bound && p <= n / p; p += 2) take(p);
  if (n == 1) return;
  if (p > n / p) {
    // Every prime <= sqrt(n) was tried.
    out.push_back({static_cast<std::int64_t>(n), 1});
    return;
  }
  throw Error("factor_bound", "factorization exceeds bound " + std::to_string(bound) +
                                  " (unfactored cofactor " + std::to_string(n) + ")");
}

}  // namespace

std::vector<PrimePower> factor_integer(const BigInt& n, std::uint64_t bound) {
  if (n == 0) throw Error("domain", "cannot factor zero");
  if (bound < 2 || bound > kMaxFactorBound) throw Error("domain", "factor bound out of range");
  BigInt m = abs(n);
  std::vector<PrimePower> out;
  if (mpz_fits_ulong_p(m.get_mpz_t())) {
    factor_u64(m.get_ui(), bound, out);
    return out;
  }
  // Large input: strip small primes with GMP arithmetic, then finish in
  // 64 bits if possible.
  std::uint64_t p = 2;
  while (p <= bound) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.push_back({static_cast<std::int64_t>(p), e});
    }
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
      std::vector<PrimePower> rest;
      // Continue from p + 1 (primes < p are gone, so 2 and any p' < p yield nothing).
      std::uint64_t r = m.get_ui();
      std::uint64_t q = p == 2 ? 3 : p + 2;
      if (r == 1) return out;
      for (; q <= bound && q <= r / q; q += 2) {
        int e = 0;
        while (r % q == 0) {
          r /= q;
          ++e;
        }
        if (e > 0) out.push_back({static_cast<std::int64_t>(q), e});
      }
      if (r == 1) return out;
      if (q > r / q) {
        out.push_back({static_cast<std::int64_t>(r), 1});
        return out;
      }
      break;
    }
    p = p == 2 ? 3 : p + 2;
  }
  throw Error("factor_bound", "factorization exceeds bound " + std::to_string(bound) +
                                  " (unfactored cofactor " + m.get_str() + ")");
}

int padic_valuation(const BigInt& n, std::int64_t p) {
  if (n == 0) throw Error("domain", "p-adic valuation of zero");
  BigInt m = n;
  int e = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++e;
  }
  return e;
}

std::vector<BigInt> positive_divisors(const BigInt& n, std::uint64_t bound) {
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factor_integer(n, bound)) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace demival
