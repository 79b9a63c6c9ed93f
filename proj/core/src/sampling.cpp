#include "demival/sampling.hpp"

namespace demival {

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 2; n <= limit; ++n) {
    if (composite[n]) continue;
    primes.push_back(n);
    for (std::int64_t m = n * n; m <= limit; m += n) composite[m] = true;
  }
  return primes;
}

std::uint64_t Sampler::derive_seed(std::uint64_t master, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h ^ (master * 0x9e3779b97f4a7c15ULL);
}

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  // Modulo draw rather than uniform_int_distribution, whose output is
  // library-specific; the slight bias is irrelevant here.
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

bool Sampler::chance(int percent) { return uniform(0, 99) < percent; }

BigInt Sampler::smooth_integer(const std::vector<std::int64_t>& primes, int max_factors) {
  BigInt n = 1;
  const auto count = uniform(0, max_factors);
  for (std::int64_t i = 0; i < count; ++i) n *= pick(primes);
  return chance(50) ? BigInt(-n) : n;
}

Rational Sampler::smooth_rational(const std::vector<std::int64_t>& primes, int max_factors, int zero_percent) {
  if (zero_percent > 0 && chance(zero_percent)) return 0;
  return make_rational(smooth_integer(primes, max_factors), abs(smooth_integer(primes, max_factors)));
}

Rational Sampler::small_rational(std::int64_t num_range, std::int64_t max_den) {
  return make_rational(uniform(-num_range, num_range), uniform(1, max_den));
}

QuadElement Sampler::quad_element(const QuadContext& ctx, std::int64_t num_range, std::int64_t max_den) {
  return {small_rational(num_range, max_den), small_rational(num_range, max_den), ctx.d()};
}

QuadElement Sampler::quad_integral(const QuadContext& ctx, std::int64_t range) {
  return {Rational(uniform(-range, range)), Rational(uniform(-range, range)), ctx.d()};
}

}  // namespace demival
