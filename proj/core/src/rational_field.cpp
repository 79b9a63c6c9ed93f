#include "demival/rational_field.hpp"

#include <string>

namespace demival {

ExtendedValue rational_valuation(const Rational& q, std::uint64_t bound) {
  if (is_zero(q)) return ExtendedValue::infinity();
  std::vector<ValueVector::Entry> entries;
  for (const auto& [p, e] : factor_integer(q.get_num(), bound)) entries.emplace_back(RationalPrime{p}, e);
  for (const auto& [p, e] : factor_integer(q.get_den(), bound)) entries.emplace_back(RationalPrime{p}, -e);
  return ValueVector(std::move(entries));
}

Rational rational_ideal_generator(std::span<const Rational> gens) {
  BigInt num = 0;
  BigInt den = 1;
  for (const Rational& g : gens) {
    if (is_zero(g)) continue;
    num = gcd(num, g.get_num());
    den = lcm(den, g.get_den());
  }
  return make_rational(num, den);
}

Valuation<Rational> rational_divisor_valuation(std::uint64_t bound) {
  Valuation<Rational> v("divisor", "Q", "rational primes p:<p>",
                        [bound](const Rational& q) { return rational_valuation(q, bound); });
  v.with_family_meet([bound](std::span<const Rational> xs) {
     return rational_valuation(rational_ideal_generator(xs), bound);
   }).with_representatives([](const PrimeLabel& label) -> std::optional<Rational> {
    if (const auto* r = std::get_if<RationalPrime>(&label)) return Rational(r->p);
    return std::nullopt;
  });
  return v;
}

BezoutCertificate<Rational> integer_bezout_certificate(const Rational& x, const Rational& y) {
  if (!is_integer(x) || !is_integer(y)) throw Error("not_in_ring", "integer Bezout combiner needs integers");
  BigInt g;
  BigInt c;
  BigInt d;
  mpz_gcdext(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t(), x.get_num().get_mpz_t(), y.get_num().get_mpz_t());
  if (g == 0) c = 1;  // both zero: m = 0 = 1*x + 0*y
  return {x, y, Rational(c), Rational(d), Rational(g)};
}

IdealToolkit<Rational> rational_ideal_toolkit() {
  IdealToolkit<Rational> t;
  t.inverse_generators = [](std::span<const Rational> gens) {
    Rational g = rational_ideal_generator(gens);
    if (is_zero(g)) throw Error("zero_ideal", "inverse of the zero ideal");
    return std::vector<Rational>{Rational(1 / g)};
  };
  t.member = [](const Rational& x, std::span<const Rational> gens) {
    Rational g = rational_ideal_generator(gens);
    if (is_zero(g)) return is_zero(x);
    return is_integer(Rational(x / g));
  };
  t.same_ideal = [](std::span<const Rational> a, std::span<const Rational> b) {
    return rational_ideal_generator(a) == rational_ideal_generator(b);
  };
  return t;
}

}  // namespace demival
