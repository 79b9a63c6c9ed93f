#include "demival/quadratic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "demival/error.hpp"

namespace demival {

namespace {

std::int64_t common_d(const QuadElement& x, const QuadElement& y) {
  if (x.d() == 0) return y.d();
  if (y.d() == 0 || x.d() == y.d()) return x.d();
  throw Error("ring_mismatch", "mixing elements of Q(sqrt " + std::to_string(x.d()) + ") and Q(sqrt " +
                                   std::to_string(y.d()) + ")");
}

bool is_squarefree(std::int64_t n) {
  n = std::llabs(n);
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

QuadContext::QuadContext(std::int64_t d) : d_(d) {
  if (d == 0 || d == 1) throw Error("invalid_ring", "d must not be 0 or 1");
  if (!is_squarefree(d)) throw Error("invalid_ring", "d = " + std::to_string(d) + " is not squarefree");
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) {
    throw Error("invalid_ring", "d = " + std::to_string(d) +
                                    " is 1 mod 4; only d = 2, 3 (mod 4) with integers Z[sqrt d] are supported");
  }
}

QuadElement::QuadElement(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (sgn(b_) != 0 && d_ == 0) throw Error("domain", "irrational quadratic element without a ring");
}

QuadElement operator+(const QuadElement& x, const QuadElement& y) {
  return {Rational(x.a_ + y.a_), Rational(x.b_ + y.b_), common_d(x, y)};
}

QuadElement operator-(const QuadElement& x, const QuadElement& y) {
  return {Rational(x.a_ - y.a_), Rational(x.b_ - y.b_), common_d(x, y)};
}

QuadElement operator-(const QuadElement& x) { return {Rational(-x.a_), Rational(-x.b_), x.d_}; }

QuadElement operator*(const QuadElement& x, const QuadElement& y) {
  const std::int64_t d = common_d(x, y);
  return {Rational(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_), Rational(x.a_ * y.b_ + x.b_ * y.a_), d};
}

QuadElement operator/(const QuadElement& x, const QuadElement& y) {
  const Rational n = y.norm();
  if (sgn(n) == 0) throw Error("division_by_zero", "division by zero in Q(sqrt d)");
  QuadElement num = x * y.conjugate();
  return {Rational(num.a_ / n), Rational(num.b_ / n), num.d_};
}

bool operator==(const QuadElement& x, const QuadElement& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.d_ == y.d_);
}

std::string to_string(const QuadElement& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string root = "sqrt(" + std::to_string(x.d()) + ")";
  auto irrational = [&](const Rational& b, bool leading) {
    std::string s;
    Rational mag = abs(b);
    if (sgn(b) < 0) s += leading ? "-" : " - ";
    else if (!leading) s += " + ";
    if (mag != 1) s += to_string(mag) + "*";
    return s + root;
  };
  if (sgn(x.a()) == 0) return irrational(x.b(), true);
  return to_string(x.a()) + irrational(x.b(), false);
}

CoefficientText coefficient_text(const QuadElement& x) {
  if (x.is_rational()) return coefficient_text(x.a());
  if (sgn(x.a()) == 0) {
    CoefficientText t;
    t.negative = sgn(x.b()) < 0;
    t.magnitude = to_string(QuadElement(Rational(0), Rational(abs(x.b())), x.d()));
    return t;
  }
  return {false, to_string(x), true};
}

// --- Hermite normal form ---------------------------------------------------

QuadIdeal make_ideal_from_lattice(const QuadContext& ctx, std::vector<std::array<BigInt, 2>> rows, BigInt den) {
  // Euclid on the sqrt(d) column until a single row carries it.
  std::size_t pivot = rows.size();
  while (true) {
    pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][1] != 0 && (pivot == rows.size() || abs(rows[i][1]) < abs(rows[pivot][1]))) pivot = i;
    }
    if (pivot == rows.size()) throw Error("zero_ideal", "ideal has rank < 2 (zero ideal)");
    bool reduced = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot || rows[i][1] == 0) continue;
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][1].get_mpz_t(), rows[pivot][1].get_mpz_t());
      rows[i][0] -= q * rows[pivot][0];
      rows[i][1] -= q * rows[pivot][1];
      if (rows[i][1] != 0) reduced = false;
    }
    if (reduced) break;
  }
  BigInt b = rows[pivot][0];
  BigInt c = rows[pivot][1];
  if (c < 0) {
    b = -b;
    c = -c;
  }
  BigInt a = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i != pivot) a = gcd(a, rows[i][0]);
  }
  if (a == 0) throw Error("zero_ideal", "ideal has rank < 2 (zero ideal)");
  b = floor_mod(b, a);
  BigInt g = gcd(gcd(den, a), gcd(b, c));
  return QuadIdeal(ctx, den / g, a / g, b / g, c / g);
}

namespace {

// Integer coordinates of n * x (must be integral).
std::array<BigInt, 2> scaled_coords(const QuadElement& x, const BigInt& n) {
  Rational u = x.a() * Rational(n);
  Rational v = x.b() * Rational(n);
  return {u.get_num(), v.get_num()};
}

}  // namespace

QuadIdeal QuadIdeal::from_generators(const QuadContext& ctx, std::span<const QuadElement> gens) {
  BigInt den = 1;
  for (const auto& g : gens) {
    if (!g.is_rational() && g.d() != ctx.d()) throw Error("ring_mismatch", "generator from another ring");
    den = lcm(den, g.denominator());
  }
  std::vector<std::array<BigInt, 2>> rows;
  for (const auto& g : gens) {
    if (is_zero(g)) continue;
    auto [u, v] = scaled_coords(g, den);
    rows.push_back({u, v});
    rows.push_back({BigInt(v * ctx.d()), u});
  }
  if (rows.empty()) throw Error("zero_ideal", "ideal generated by zero");
  return make_ideal_from_lattice(ctx, std::move(rows), den);
}

QuadIdeal QuadIdeal::principal(const QuadContext& ctx, const QuadElement& x) {
  return from_generators(ctx, std::span<const QuadElement>(&x, 1));
}

QuadIdeal QuadIdeal::unit(const QuadContext& ctx) { return QuadIdeal(ctx, 1, 1, 0, 1); }

Rational QuadIdeal::norm() const { return make_rational(a_ * c_, den_ * den_); }

std::array<QuadElement, 2> QuadIdeal::basis() const {
  return {QuadElement(make_rational(a_, den_)),
          QuadElement(make_rational(b_, den_), make_rational(c_, den_), ctx_.d())};
}

std::string to_string(const QuadIdeal& I) {
  auto basis = I.basis();
  return "(" + to_string(basis[0]) + ", " + to_string(basis[1]) + ")";
}

QuadIdeal ideal_mul(const QuadIdeal& I, const QuadIdeal& J) {
  if (!(I.context() == J.context())) throw Error("ring_mismatch", "ideals from different rings");
  const std::int64_t d = I.context().d();
  const std::array<std::array<BigInt, 2>, 2> x{{{I.a(), 0}, {I.b(), I.c()}}};
  const std::array<std::array<BigInt, 2>, 2> y{{{J.a(), 0}, {J.b(), J.c()}}};
  std::vector<std::array<BigInt, 2>> rows;
  for (const auto& u : x) {
    for (const auto& v : y) rows.push_back({BigInt(u[0] * v[0] + d * u[1] * v[1]), BigInt(u[0] * v[1] + u[1] * v[0])});
  }
  return make_ideal_from_lattice(I.context(), std::move(rows), I.denominator() * J.denominator());
}

QuadIdeal ideal_inverse(const QuadIdeal& I) {
  // M * conj(M) = (N(M)) for the maximal order, so I^-1 = n/(a c) conj(M).
  const Rational s = make_rational(I.denominator(), I.a() * I.c());
  const std::int64_t d = I.context().d();
  const std::array<QuadElement, 2> gens{
      QuadElement(Rational(s * I.a())),
      QuadElement(Rational(s * Rational(I.b())), Rational(-s * Rational(I.c())), d)};
  return QuadIdeal::from_generators(I.context(), gens);
}

QuadIdeal ideal_add(const QuadIdeal& I, const QuadIdeal& J) {
  if (!(I.context() == J.context())) throw Error("ring_mismatch", "ideals from different rings");
  const BigInt den = lcm(I.denominator(), J.denominator());
  const BigInt si = den / I.denominator();
  const BigInt sj = den / J.denominator();
  std::vector<std::array<BigInt, 2>> rows{{BigInt(I.a() * si), 0},
                                          {BigInt(I.b() * si), BigInt(I.c() * si)},
                                          {BigInt(J.a() * sj), 0},
                                          {BigInt(J.b() * sj), BigInt(J.c() * sj)}};
  return make_ideal_from_lattice(I.context(), std::move(rows), den);
}

QuadIdeal ideal_pow(const QuadIdeal& I, std::int64_t k) {
  QuadIdeal base = k < 0 ? ideal_inverse(I) : I;
  QuadIdeal result = QuadIdeal::unit(I.context());
  for (std::int64_t e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) result = ideal_mul(result, base);
    if (e > 1) base = ideal_mul(base, base);
  }
  return result;
}

bool ideal_membership(const QuadElement& x, const QuadIdeal& I) {
  if (is_zero(x)) return true;
  if (!x.is_rational() && x.d() != I.context().d()) throw Error("ring_mismatch", "element from another ring");
  const Rational u = x.a() * Rational(I.denominator());
  const Rational v = x.b() * Rational(I.denominator());
  if (!is_integer(u) || !is_integer(v)) return false;
  if (!mpz_divisible_p(v.get_num_mpz_t(), I.c().get_mpz_t())) return false;
  const BigInt t = v.get_num() / I.c();
  const BigInt rest = u.get_num() - t * I.b();
  return mpz_divisible_p(rest.get_mpz_t(), I.a().get_mpz_t()) != 0;
}

bool ideal_contains(const QuadIdeal& I, const QuadIdeal& J) {
  for (const auto& g : J.basis()) {
    if (!ideal_membership(g, I)) return false;
  }
  return true;
}

Ordering ideal_compare(const QuadIdeal& I, const QuadIdeal& J) {
  const bool i_contains_j = ideal_contains(I, J);
  const bool j_contains_i = ideal_contains(J, I);
  if (i_contains_j && j_contains_i) return Ordering::equal;
  if (i_contains_j) return Ordering::less;
  if (j_contains_i) return Ordering::greater;
  return Ordering::incomparable;
}

// --- primes ------------------------------------------------------------------

namespace {

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Square root of a quadratic residue n modulo an odd prime p.
std::int64_t sqrt_mod(std::int64_t n_in, std::int64_t p_in) {
  const BigInt p = p_in;
  const BigInt n = floor_mod(BigInt(n_in), p);
  BigInt q = p - 1;
  int s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  int m = s;
  BigInt c = powm(z, q, p);
  BigInt t = powm(n, q, p);
  BigInt r = powm(n, (q + 1) / 2, p);
  while (t != 1) {
    int i = 0;
    BigInt t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    BigInt b = c;
    for (int k = 0; k < m - i - 1; ++k) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return to_int64(r);
}

std::int64_t ramified_root(const QuadContext& ctx, std::int64_t p) {
  if (p == 2) return ((ctx.d() % 2) + 2) % 2;
  return 0;
}

}  // namespace

std::vector<QuadPrime> quad_splitting_type(const QuadContext& ctx, std::int64_t p) {
  if (!is_prime(p)) throw Error("domain", std::to_string(p) + " is not prime");
  if (p == 2 || ctx.d() % p == 0) return {QuadPrime{p, QuadPrimeKind::ramified, std::nullopt}};
  const BigInt dm = floor_mod(BigInt(ctx.d()), BigInt(p));
  const BigInt pp = p;
  if (mpz_legendre(dm.get_mpz_t(), pp.get_mpz_t()) == 1) {
    std::int64_t r = sqrt_mod(ctx.d(), p);
    r = std::min(r, p - r);
    return {QuadPrime{p, QuadPrimeKind::split_plus, r}, QuadPrime{p, QuadPrimeKind::split_minus, p - r}};
  }
  return {QuadPrime{p, QuadPrimeKind::inert, std::nullopt}};
}

QuadIdeal prime_ideal_of_label(const QuadContext& ctx, const QuadPrime& label) {
  const auto above = quad_splitting_type(ctx, label.p);
  const bool known = std::any_of(above.begin(), above.end(), [&](const QuadPrime& q) {
    return q.kind == label.kind && q.root == label.root;
  });
  if (!known) throw Error("invalid_label", label_string(label) + " is not a prime of Z[sqrt(" +
                                               std::to_string(ctx.d()) + ")]");
  if (label.kind == QuadPrimeKind::inert) return QuadIdeal::principal(ctx, QuadElement(Rational(label.p)));
  const std::int64_t r = label.root ? *label.root : ramified_root(ctx, label.p);
  const std::array<QuadElement, 2> gens{QuadElement(Rational(label.p)),
                                        QuadElement(Rational(-r), Rational(1), ctx.d())};
  return QuadIdeal::from_generators(ctx, gens);
}

namespace {

// Largest k <= limit with x in P^k, x integral and nonzero.
std::int64_t power_membership_exponent(const QuadIdeal& prime, const QuadElement& x, std::int64_t limit) {
  QuadIdeal power = prime;
  std::int64_t k = 0;
  while (k < limit && ideal_membership(x, power)) {
    ++k;
    power = ideal_mul(power, prime);
  }
  return k;
}

// v_P(N(y)) bounds the exponent since N(P) >= p; the factor 2 is slack.
std::int64_t integral_element_valuation(const QuadIdeal& prime, const QuadPrime& label, const QuadElement& y) {
  const BigInt n = abs(y.norm().get_num());
  const std::int64_t limit = 2 * static_cast<std::int64_t>(padic_valuation(n, label.p));
  return power_membership_exponent(prime, y, limit);
}

}  // namespace

std::int64_t prime_ideal_valuation(const QuadContext& ctx, const QuadElement& x, const QuadPrime& label) {
  if (is_zero(x)) throw Error("domain", "prime ideal valuation of zero");
  const QuadIdeal prime = prime_ideal_of_label(ctx, label);
  const BigInt n = x.denominator();
  const QuadElement y = x * QuadElement(Rational(n));
  std::int64_t v = integral_element_valuation(prime, label, y);
  if (n != 1) v -= integral_element_valuation(prime, label, QuadElement(Rational(n)));
  return v;
}

ExtendedValue quad_divisor_valuation(const QuadContext& ctx, const QuadElement& x, std::uint64_t bound) {
  if (is_zero(x)) return ExtendedValue::infinity();
  const BigInt n = x.denominator();
  const QuadElement y = x * QuadElement(Rational(n));
  std::map<std::int64_t, bool> primes;
  for (const auto& pp : factor_integer(y.norm().get_num(), bound)) primes[pp.p] = true;
  for (const auto& pp : factor_integer(n, bound)) primes[pp.p] = true;
  std::vector<ValueVector::Entry> entries;
  for (const auto& [p, unused] : primes) {
    for (const QuadPrime& label : quad_splitting_type(ctx, p)) {
      if (std::int64_t e = prime_ideal_valuation(ctx, x, label); e != 0) entries.emplace_back(label, e);
    }
  }
  return ValueVector(std::move(entries));
}

namespace {

// Largest k with P^k containing the integral ideal M.
std::int64_t integral_ideal_valuation(const QuadIdeal& prime, const QuadIdeal& M, std::int64_t p) {
  const std::int64_t limit = padic_valuation(M.a() * M.c(), p);
  QuadIdeal power = prime;
  std::int64_t k = 0;
  while (k < limit && ideal_contains(power, M)) {
    ++k;
    power = ideal_mul(power, prime);
  }
  return k;
}

}  // namespace

ValueVector ideal_divisor_valuation(const QuadIdeal& I, std::uint64_t bound) {
  const QuadContext& ctx = I.context();
  const QuadIdeal M = ideal_mul(I, QuadIdeal::principal(ctx, QuadElement(Rational(I.denominator()))));
  const QuadIdeal D = QuadIdeal::principal(ctx, QuadElement(Rational(I.denominator())));
  std::map<std::int64_t, bool> primes;
  for (const auto& pp : factor_integer(M.a() * M.c(), bound)) primes[pp.p] = true;
  for (const auto& pp : factor_integer(I.denominator(), bound)) primes[pp.p] = true;
  std::vector<ValueVector::Entry> entries;
  for (const auto& [p, unused] : primes) {
    for (const QuadPrime& label : quad_splitting_type(ctx, p)) {
      const QuadIdeal prime = prime_ideal_of_label(ctx, label);
      std::int64_t e = integral_ideal_valuation(prime, M, p);
      if (I.denominator() != 1) e -= integral_ideal_valuation(prime, D, p);
      if (e != 0) entries.emplace_back(label, e);
    }
  }
  return ValueVector(std::move(entries));
}

QuadIdeal ideal_from_value(const QuadContext& ctx, const ValueVector& v) {
  QuadIdeal result = QuadIdeal::unit(ctx);
  for (const auto& [label, exp] : v.entries()) {
    const auto* q = std::get_if<QuadPrime>(&label);
    if (q == nullptr) throw Error("invalid_label", label_string(label) + " is not a quadratic prime");
    result = ideal_mul(result, ideal_pow(prime_ideal_of_label(ctx, *q), exp));
  }
  return result;
}

std::optional<QuadElement> is_principal_search(const QuadIdeal& I, std::int64_t bound) {
  if (!I.is_integral()) throw Error("domain", "principal search expects an integral ideal");
  const std::int64_t d = I.context().d();
  const BigInt target = I.a() * I.c();
  for (std::int64_t b = 0; b <= bound; ++b) {
    for (std::int64_t a = 0; a <= bound; ++a) {
      const BigInt norm = BigInt(a) * a - BigInt(d) * b * b;
      if (abs(norm) != target) continue;
      for (std::int64_t sa : {1, -1}) {
        if (a == 0 && sa == -1) continue;
        QuadElement x(Rational(sa * a), Rational(b), d);
        if (QuadIdeal::principal(I.context(), x) == I) return x;
      }
    }
  }
  return std::nullopt;
}

Valuation<QuadElement> quad_valuation(const QuadContext& ctx, std::uint64_t bound) {
  Valuation<QuadElement> v("divisor", "Q(sqrt(" + std::to_string(ctx.d()) + "))",
                           "prime ideals of Z[sqrt(" + std::to_string(ctx.d()) + ")] q:<p>:<kind>[:<root>]",
                           [ctx, bound](const QuadElement& x) { return quad_divisor_valuation(ctx, x, bound); });
  v.with_family_meet([ctx, bound](std::span<const QuadElement> xs) -> ExtendedValue {
    std::vector<QuadElement> nonzero;
    for (const auto& x : xs) {
      if (!is_zero(x)) nonzero.push_back(x);
    }
    if (nonzero.empty()) return ExtendedValue::infinity();
    return ideal_divisor_valuation(QuadIdeal::from_generators(ctx, nonzero), bound);
  });
  return v;
}

IdealToolkit<QuadElement> quad_ideal_toolkit(const QuadContext& ctx) {
  IdealToolkit<QuadElement> t;
  t.inverse_generators = [ctx](std::span<const QuadElement> gens) {
    auto basis = ideal_inverse(QuadIdeal::from_generators(ctx, gens)).basis();
    return std::vector<QuadElement>(basis.begin(), basis.end());
  };
  t.member = [ctx](const QuadElement& x, std::span<const QuadElement> gens) {
    bool all_zero = std::all_of(gens.begin(), gens.end(), [](const QuadElement& g) { return is_zero(g); });
    if (all_zero) return is_zero(x);
    return ideal_membership(x, QuadIdeal::from_generators(ctx, gens));
  };
  t.same_ideal = [ctx](std::span<const QuadElement> a, std::span<const QuadElement> b) {
    return QuadIdeal::from_generators(ctx, a) == QuadIdeal::from_generators(ctx, b);
  };
  return t;
}

}  // namespace demival
