#include "demival/rational.hpp"

#include <limits>

#include "demival/error.hpp"

namespace demival {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("division_by_zero", "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw Error("parse", "invalid rational literal '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

std::int64_t to_int64(const BigInt& n) {
  if (!mpz_fits_slong_p(n.get_mpz_t())) {
    throw Error("overflow", "integer " + n.get_str() + " does not fit in 64 bits");
  }
  return n.get_si();
}

}  // namespace demival
