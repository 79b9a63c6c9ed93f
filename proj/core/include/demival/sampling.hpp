#pragma once

// Seeded generators for the property suites. All draws go through one
// mt19937_64, so a (seed, call sequence) pair reproduces bit for bit.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "demival/kronecker_factor.hpp"
#include "demival/quadratic.hpp"

namespace demival {

/// Primes <= limit (sieve, cached per call site by the caller).
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Per-suite seed: FNV-1a of the suite name mixed with the master seed.
  static std::uint64_t derive_seed(std::uint64_t master, std::string_view name);

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(int percent);
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

  /// +-(product of up to max_factors primes from `primes`).
  BigInt smooth_integer(const std::vector<std::int64_t>& primes, int max_factors);
  /// Quotient of two smooth integers, or zero with probability zero_percent.
  Rational smooth_rational(const std::vector<std::int64_t>& primes, int max_factors, int zero_percent = 0);
  Rational small_rational(std::int64_t num_range, std::int64_t max_den);

  QuadElement quad_element(const QuadContext& ctx, std::int64_t num_range, std::int64_t max_den);
  QuadElement quad_integral(const QuadContext& ctx, std::int64_t range);

  template <class F, class Gen>
  Polynomial<F> polynomial(int max_degree, Gen&& coefficient) {
    const int deg = static_cast<int>(uniform(0, max_degree));
    std::vector<F> c;
    for (int k = 0; k <= deg; ++k) c.push_back(coefficient());
    return Polynomial<F>(std::move(c));
  }

  /// Nonzero polynomial (retries until one comes out nonzero).
  template <class F, class Gen>
  Polynomial<F> nonzero_polynomial(int max_degree, Gen&& coefficient) {
    while (true) {
      Polynomial<F> p = polynomial<F>(max_degree, coefficient);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace demival
