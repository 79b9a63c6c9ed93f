#include "demival/property_suites.hpp"

#include <algorithm>
#include <functional>

#include "demival/error.hpp"
#include "demival/function_field.hpp"
#include "demival/json_io.hpp"
#include "demival/kronecker_factor.hpp"
#include "demival/quadratic.hpp"
#include "demival/rational_field.hpp"
#include "demival/sampling.hpp"

namespace demival {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string_view name) { result_.name = name; }

  void sample() { ++result_.samples; }

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  // Runs one sample; a thrown domain error counts as a failure.
  template <class Fn>
  void run(Fn&& fn) {
    sample();
    try {
      fn();
    } catch (const std::exception& e) {
      check(false, [&] { return std::string("exception: ") + e.what(); });
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

const std::vector<std::int64_t>& primes_1e4() {
  static const auto p = primes_up_to(10000);
  return p;
}

const std::vector<std::int64_t>& primes_small() {
  static const auto p = primes_up_to(47);
  return p;
}

// Base rings for the function-field suites.

struct RationalBase {
  using F = Rational;
  Valuation<Rational> v = rational_divisor_valuation();
  IdealToolkit<Rational> toolkit = rational_ideal_toolkit();

  std::string name() const { return "q"; }
  // Coefficients with prime support <= 10^4.
  Rational coefficient(Sampler& s) const { return s.smooth_rational(primes_1e4(), 2, 15); }
  Rational small(Sampler& s) const { return s.smooth_rational(primes_small(), 2, 15); }
  Rational integral(Sampler& s) const { return Rational(s.smooth_integer(primes_small(), 3)); }
};

struct QuadBase {
  using F = QuadElement;
  QuadContext ctx;
  Valuation<QuadElement> v;
  IdealToolkit<QuadElement> toolkit;

  explicit QuadBase(std::int64_t d) : ctx(d), v(quad_valuation(ctx)), toolkit(quad_ideal_toolkit(ctx)) {}

  std::string name() const { return "quad" + std::to_string(ctx.d()); }
  // Smooth rational times a small integral element, so norms stay factorable.
  QuadElement coefficient(Sampler& s) const {
    if (s.chance(15)) return QuadElement(0);
    return QuadElement(s.smooth_rational(primes_1e4(), 1)) * s.quad_integral(ctx, 4);
  }
  QuadElement small(Sampler& s) const {
    if (s.chance(15)) return QuadElement(0);
    return QuadElement(s.smooth_rational(primes_small(), 1)) * s.quad_integral(ctx, 3);
  }
  QuadElement integral(Sampler& s) const {
    return QuadElement(Rational(s.smooth_integer(primes_small(), 1))) * s.quad_integral(ctx, 5);
  }
};

template <class Base>
auto random_function(Base& base, Sampler& s) {
  using F = typename Base::F;
  auto num = s.polynomial<F>(2, [&] { return base.small(s); });
  auto den = s.nonzero_polynomial<F>(2, [&] { return base.small(s); });
  return RationalFunction<F>(num, den);
}

// Element of R(w): integral numerator over a monic integral denominator.
template <class Base>
auto random_ring_element(Base& base, Sampler& s) {
  using F = typename Base::F;
  auto num = s.nonzero_polynomial<F>(2, [&] { return base.integral(s); });
  auto den = s.polynomial<F>(1, [&] { return base.integral(s); });
  den = den + Polynomial<F>::monomial(F(1), static_cast<std::size_t>(std::max(den.degree(), 0) + 1));
  if (s.chance(30)) den = Polynomial<F>::constant(F(1));
  return RationalFunction<F>(num, den);
}

// --- value groups --------------------------------------------------------

ValueVector random_vector(Sampler& s, bool nonnegative) {
  static const std::vector<PrimeLabel> labels{
      RationalPrime{2}, RationalPrime{3}, RationalPrime{5}, RationalPrime{7},
      QuadPrime{3, QuadPrimeKind::split_plus, 1}, QuadPrime{2, QuadPrimeKind::ramified, std::nullopt},
      IrreduciblePoly{{Rational(1), Rational(0), Rational(1)}}};
  std::vector<ValueVector::Entry> e;
  for (const auto& l : labels) {
    if (s.chance(50)) e.emplace_back(l, nonnegative ? s.uniform(0, 3) : s.uniform(-3, 3));
  }
  return ValueVector(std::move(e));
}

SuiteResult suite_lattice(std::uint64_t seed, std::size_t n) {
  Recorder rec("lattice");
  Sampler s(seed);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      const ValueVector a = random_vector(s, false);
      const ValueVector b = random_vector(s, false);
      const ValueVector c = random_vector(s, false);
      auto show = [&] { return to_string(a) + ", " + to_string(b) + ", " + to_string(c); };
      rec.check(vv_add(vv_meet(a, b), vv_join(a, b)) == vv_add(a, b), [&] { return "meet + join != a + b: " + show(); });
      rec.check(vv_compare(a, b) == vv_compare(vv_add(a, c), vv_add(b, c)), [&] { return "translation: " + show(); });
      const ValueVector m = vv_meet(a, b);
      auto below = [](const ValueVector& x, const ValueVector& y) {
        const Ordering o = vv_compare(x, y);
        return o == Ordering::less || o == Ordering::equal;
      };
      rec.check(below(m, a) && below(m, b), [&] { return "meet not a lower bound: " + show(); });
      const ValueVector lower = vv_meet(m, c);
      rec.check(below(lower, m), [&] { return "meet not greatest: " + show(); });
      rec.check(vv_add(a, vv_neg(a)).empty(), [&] { return "a + (-a) != 0: " + show(); });
      rec.check(vv_compare(a, a) == Ordering::equal, [&] { return "not reflexive: " + show(); });
      if (below(a, b) && below(b, c)) rec.check(below(a, c), [&] { return "not transitive: " + show(); });
      if (below(a, b) && below(b, a)) rec.check(a == b, [&] { return "not antisymmetric: " + show(); });
      rec.check(extended_value_from_json(to_json(ExtendedValue(a))) == ExtendedValue(a),
                [&] { return "JSON roundtrip: " + show(); });

      std::vector<ValueVector> set;
      const auto size = s.uniform(1, 5);
      for (std::int64_t k = 0; k < size; ++k) set.push_back(random_vector(s, true));
      const ValueVector mn = minimal_in_set(set);
      const bool member = std::find(set.begin(), set.end(), mn) != set.end();
      const bool minimal = std::none_of(set.begin(), set.end(),
                                        [&](const ValueVector& x) { return vv_compare(x, mn) == Ordering::less; });
      rec.check(member && minimal, [&] { return "minimal_in_set returned " + to_string(mn); });
    });
  }
  return rec.take();
}

// --- axioms ----------------------------------------------------------------

template <class F, class Gen>
SuiteResult axioms_suite(std::string_view name, const Valuation<F>& v, std::uint64_t seed, std::size_t n, Gen gen) {
  Recorder rec(name);
  Sampler s(seed);
  std::vector<std::pair<F, F>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    F a = gen(s);
    F b = s.chance(5) ? F(-a) : gen(s);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  // One pair at a time so a thrown error is charged to that pair only.
  for (const auto& pr : pairs) {
    rec.run([&] {
      const AxiomReport r = axiom_report<F>(v, std::span<const std::pair<F, F>>(&pr, 1));
      rec.check(r.ok(), [&] {
        const auto& f = r.failures.front();
        return f.relation + " fails on (" + f.a + ", " + f.b + "): " + f.detail;
      });
      rec.check(in_valuation_ring(v, F(0)) && v(F(1)) == ExtendedValue(), [&] { return std::string("v(0)/v(1)"); });
      const auto& [a, b] = pr;
      if (in_valuation_ring(v, a) && in_valuation_ring(v, b)) {
        rec.check(in_valuation_ring(v, F(a + b)) && in_valuation_ring(v, F(a * b)),
                  [&] { return "R(v) not closed on (" + to_string(a) + ", " + to_string(b) + ")"; });
      }
    });
  }
  return rec.take();
}

SuiteResult suite_axioms_q(std::uint64_t seed, std::size_t n) {
  return axioms_suite<Rational>("axioms/q", rational_divisor_valuation(), seed, n,
                                [](Sampler& s) { return s.smooth_rational(primes_up_to(97), 3, 5); });
}

SuiteResult axioms_quad(std::string_view name, std::int64_t d, std::uint64_t seed, std::size_t n) {
  const QuadContext ctx(d);
  return axioms_suite<QuadElement>(name, quad_valuation(ctx), seed, n, [ctx](Sampler& s) {
    return s.chance(5) ? QuadElement(0) : s.quad_element(ctx, 40, 12);
  });
}

SuiteResult suite_axioms_quad5(std::uint64_t seed, std::size_t n) { return axioms_quad("axioms/quad-5", -5, seed, n); }
SuiteResult suite_axioms_quad1(std::uint64_t seed, std::size_t n) { return axioms_quad("axioms/quad-1", -1, seed, n); }

SuiteResult suite_axioms_wq(std::uint64_t seed, std::size_t n) {
  RationalBase base;
  return axioms_suite<QFunction>("axioms/w-q", w_valuation(base.v), seed, n,
                                 [&](Sampler& s) { return random_function(base, s); });
}

SuiteResult suite_axioms_wquad(std::uint64_t seed, std::size_t n) {
  QuadBase base(-5);
  return axioms_suite<RationalFunction<QuadElement>>("axioms/w-quad-5", w_valuation(base.v), seed, n,
                                                     [&](Sampler& s) { return random_function(base, s); });
}

QFunction small_integer_function(Sampler& s) {
  auto coeff = [&] { return Rational(s.uniform(-3, 3)); };
  auto num = s.polynomial<Rational>(2, coeff);
  auto den = s.nonzero_polynomial<Rational>(2, coeff);
  const Rational scale = s.smooth_rational(primes_small(), 1);
  return QFunction(num.scaled(is_zero(scale) ? Rational(1) : scale), den);
}

SuiteResult suite_axioms_t(std::uint64_t seed, std::size_t n) {
  return axioms_suite<QFunction>("axioms/t", t_valuation(), seed, n, small_integer_function);
}

SuiteResult suite_axioms_u(std::uint64_t seed, std::size_t n) {
  return axioms_suite<QFunction>("axioms/u", u_valuation(), seed, n, small_integer_function);
}

// --- function field --------------------------------------------------------

template <class Base>
SuiteResult gauss_kronecker(std::string_view name, Base base, std::uint64_t seed, std::size_t n) {
  using F = typename Base::F;
  Recorder rec(name);
  Sampler s(seed);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      auto f = s.polynomial<F>(8, [&] { return base.coefficient(s); });
      auto g = s.polynomial<F>(8, [&] { return base.coefficient(s); });
      const ExtendedValue cf = content_value(f, base.v);
      const ExtendedValue cg = content_value(g, base.v);
      rec.check(content_value(f * g, base.v) == ext_add(cf, cg),
                [&] { return "w(fg) != w(f) + w(g) for f = " + to_string(f) + ", g = " + to_string(g); });
      rec.check(cf == base.v.fold_meet(std::span<const F>(f.coeffs())),
                [&] { return "ideal route and coefficient fold disagree on " + to_string(f); });
      // Reducing f/g must not change its value.
      if (!g.is_zero()) {
        const auto h = s.nonzero_polynomial<F>(2, [&] { return base.small(s); });
        rec.check(w_value(RationalFunction<F>(f * h, g * h), base.v) == ext_sub(cf, cg),
                  [&] { return "w not well defined on " + to_string(f) + " / " + to_string(g); });
      }
    });
  }
  return rec.take();
}

SuiteResult suite_gk_q(std::uint64_t seed, std::size_t n) { return gauss_kronecker("gauss-kronecker/q", RationalBase{}, seed, n); }
SuiteResult suite_gk_quad(std::uint64_t seed, std::size_t n) {
  return gauss_kronecker("gauss-kronecker/quad-5", QuadBase(-5), seed, n);
}

template <class Base>
SuiteResult bezout_suite(std::string_view name, Base base, std::uint64_t seed, std::size_t n) {
  using F = typename Base::F;
  Recorder rec(name);
  Sampler s(seed);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      auto p = s.polynomial<F>(5, [&] { return base.coefficient(s); });
      auto q = s.nonzero_polynomial<F>(5, [&] { return base.coefficient(s); });
      auto [c, d] = bezout_coefficients(p, q);
      rec.check(content_value(c * p + d * q, base.v) == ext_meet(content_value(p, base.v), content_value(q, base.v)),
                [&] { return "Bezout construction fails for p = " + to_string(p) + ", q = " + to_string(q); });
    });
  }
  return rec.take();
}

SuiteResult suite_bezout_q(std::uint64_t seed, std::size_t n) { return bezout_suite("bezout/q", RationalBase{}, seed, n); }
SuiteResult suite_bezout_quad(std::uint64_t seed, std::size_t n) { return bezout_suite("bezout/quad-5", QuadBase(-5), seed, n); }

template <class Base>
SuiteResult pgen_suite(std::string_view name, Base base, std::uint64_t seed, std::size_t n) {
  using F = typename Base::F;
  using RF = RationalFunction<F>;
  Recorder rec(name);
  Sampler s(seed);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      std::vector<RF> gens;
      const auto size = s.uniform(1, 4);
      for (std::int64_t k = 0; k < size; ++k) gens.push_back(random_ring_element(base, s));
      const KroneckerIdeal<F> J(base.v, gens);
      const auto pg = rw_principal_generator(J);
      ExtendedValue meet = ExtendedValue::infinity();
      std::vector<ValueVector> values;
      for (const auto& g : gens) {
        meet = ext_meet(meet, w_value(g, base.v));
        values.push_back(w_value(g, base.v).finite());
      }
      auto where = [&] { return "generators of size " + std::to_string(gens.size()) + ", first " + to_string(gens[0]); };
      rec.check(w_value(pg.m, base.v) == meet, [&] { return "w(m) != meet: " + where(); });
      for (const auto& c : pg.cofactors) {
        rec.check(kronecker_ring_member(c, base.v), [&] { return "cofactor outside R(w): " + where(); });
      }
      for (const auto& c : pg.coefficients) {
        rec.check(kronecker_ring_member(c, base.v), [&] { return "coefficient outside R(w): " + where(); });
      }
      rec.check(linear_combination<RF>(pg.coefficients, gens) == pg.m, [&] { return "chain != m: " + where(); });
      // Minimal value by descent coincides with the Bezout generator value.
      values.push_back(w_value(pg.m, base.v).finite());
      rec.check(minimal_in_set(values) == w_value(pg.m, base.v).finite(),
                [&] { return "descent minimum differs from w(m): " + where(); });
    });
  }
  return rec.take();
}

SuiteResult suite_pgen_q(std::uint64_t seed, std::size_t n) { return pgen_suite("pgen/q", RationalBase{}, seed, n); }
SuiteResult suite_pgen_quad(std::uint64_t seed, std::size_t n) { return pgen_suite("pgen/quad-5", QuadBase(-5), seed, n); }

template <class Base>
SuiteResult cofactor_suite(std::string_view name, Base base, std::uint64_t seed, std::size_t n) {
  using F = typename Base::F;
  Recorder rec(name);
  Sampler s(seed);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      auto p = s.nonzero_polynomial<F>(5, [&] { return base.coefficient(s); });
      for (const auto& c : coefficient_cofactors(p)) {
        rec.check(kronecker_ring_member(c, base.v), [&] { return "cofactor of " + to_string(p) + " outside R(w)"; });
      }
    });
  }
  return rec.take();
}

SuiteResult suite_cofactors_q(std::uint64_t seed, std::size_t n) { return cofactor_suite("cofactors/q", RationalBase{}, seed, n); }
SuiteResult suite_cofactors_quad(std::uint64_t seed, std::size_t n) {
  return cofactor_suite("cofactors/quad-5", QuadBase(-5), seed, n);
}

template <class Base>
SuiteResult same_value_suite(std::string_view name, Base base, std::uint64_t seed, std::size_t n) {
  Recorder rec(name);
  Sampler s(seed);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      auto f = random_function(base, s);
      if (is_zero(f)) return;
      auto p = polynomial_with_same_value(f, base.toolkit);
      rec.check(content_value(p, base.v) == w_value(f, base.v), [&] { return "w(p) != w(f) for f = " + to_string(f); });
    });
  }
  return rec.take();
}

SuiteResult suite_same_value_q(std::uint64_t seed, std::size_t n) { return same_value_suite("same-value/q", RationalBase{}, seed, n); }
SuiteResult suite_same_value_quad(std::uint64_t seed, std::size_t n) {
  return same_value_suite("same-value/quad-5", QuadBase(-5), seed, n);
}

template <class Base>
SuiteResult roundtrip_suite(std::string_view name, Base base, std::uint64_t seed, std::size_t n) {
  using F = typename Base::F;
  using RF = RationalFunction<F>;
  Recorder rec(name);
  Sampler s(seed);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      // Base ideal -> extension -> contraction.
      std::vector<F> gens;
      const auto size = s.uniform(1, 3);
      while (static_cast<std::int64_t>(gens.size()) < size) {
        F g = base.integral(s);
        if (!is_zero(g)) gens.push_back(g);
      }
      const auto J = extend_ideal<F>(base.v, gens);
      const auto contracted = contract_ideal(J, base.toolkit);
      rec.check(base.toolkit.same_ideal(contracted, gens), [&] { return "contract(extend(b)) != b, b starts " + to_string(gens[0]); });
      rec.check(base.v.meet_of(contracted) == base.v.meet_of(gens), [&] { return std::string("meet changed"); });

      std::vector<F> samples;
      for (int k = 0; k < 6; ++k) samples.push_back(F(base.integral(s) * s.pick(gens)));
      for (int k = 0; k < 6; ++k) samples.push_back(base.integral(s));
      std::vector<std::vector<RF>> multipliers;
      for (int k = 0; k < 6; ++k) {
        std::vector<RF> m;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          m.push_back(s.chance(50) ? RF(base.integral(s)) : random_ring_element(base, s));
        }
        multipliers.push_back(std::move(m));
      }
      rec.check(extend_contract_roundtrip_check<F>(gens, base.v, base.toolkit, samples, multipliers),
                [&] { return "convexity / contraction check failed, b starts " + to_string(gens[0]); });

      // R(w) ideal -> contraction -> extension.
      std::vector<RF> rgens;
      const auto rsize = s.uniform(1, 3);
      for (std::int64_t k = 0; k < rsize; ++k) rgens.push_back(random_ring_element(base, s));
      const KroneckerIdeal<F> K(base.v, rgens);
      const auto back = extend_ideal<F>(base.v, contract_ideal(K, base.toolkit));
      rec.check(rw_ideal_equal(back, K), [&] { return "extend(contract(J)) != J, J starts " + to_string(rgens[0]); });
    });
  }
  return rec.take();
}

SuiteResult suite_roundtrip_q(std::uint64_t seed, std::size_t n) { return roundtrip_suite("roundtrip/q", RationalBase{}, seed, n); }
SuiteResult suite_roundtrip_quad(std::uint64_t seed, std::size_t n) {
  return roundtrip_suite("roundtrip/quad-5", QuadBase(-5), seed, n);
}

// --- u = (w, t) -----------------------------------------------------------

bool syntactically_integer_polynomial(const QFunction& f) {
  if (!f.is_polynomial()) return false;
  return std::all_of(f.num().coeffs().begin(), f.num().coeffs().end(), [](const Rational& a) { return is_integer(a); });
}

SuiteResult suite_u_member(std::uint64_t seed, std::size_t n) {
  Recorder rec("u-member");
  Sampler s(seed);
  auto int_poly = [&](int deg) { return s.polynomial<Rational>(deg, [&] { return Rational(s.uniform(-5, 5)); }); };
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      QFunction f;
      if (i % 2 == 0) {
        // Inside Z[X], written as an unreduced quotient.
        auto p = int_poly(3);
        auto q = s.nonzero_polynomial<Rational>(1, [&] { return Rational(s.uniform(-3, 3)); });
        f = QFunction(p * q, q) ;
        if (s.chance(50)) f = QFunction(p);
      } else {
        auto p = s.nonzero_polynomial<Rational>(3, [&] { return Rational(s.uniform(-5, 5)); });
        if (s.chance(50)) {
          f = QFunction(p.scaled(make_rational(1, s.pick(primes_small()))));
        } else {
          auto q = s.nonzero_polynomial<Rational>(2, [&] { return Rational(s.uniform(-3, 3)); });
          f = QFunction(p, q.degree() >= 1 ? q : q + QPoly::x());
        }
      }
      rec.check(u_member(f) == syntactically_integer_polynomial(f), [&] { return "u_member disagrees on " + to_string(f); });
    });
  }
  return rec.take();
}

std::vector<PrimeLabel> sample_u_labels(Sampler& s, std::size_t count) {
  std::vector<PrimeLabel> labels;
  while (labels.size() < count) {
    if (s.chance(40)) {
      labels.emplace_back(RationalPrime{s.pick(primes_up_to(200))});
      continue;
    }
    auto p = s.nonzero_polynomial<Rational>(4, [&] { return Rational(s.uniform(-6, 6)); });
    if (p.degree() < 1) continue;
    for (const auto& [g, e] : kronecker_factor(p).factors) {
      if (labels.size() < count) labels.emplace_back(IrreduciblePoly{g.coeffs()});
    }
  }
  return labels;
}

SuiteResult suite_basis_witness(std::uint64_t seed, std::size_t n) {
  Recorder rec("basis-witness");
  Sampler s(seed);
  for (const auto& label : sample_u_labels(s, n)) {
    rec.run([&] {
      rec.check(u_value(basis_witness(label)) == ExtendedValue(ValueVector::unit(label)),
                [&] { return "u(witness) is not the unit vector at " + label_string(label); });
    });
  }
  return rec.take();
}

SuiteResult suite_reconstruct_u(std::uint64_t seed, std::size_t n) {
  Recorder rec("reconstruct-u");
  Sampler s(seed);
  const auto u = u_valuation();
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      QFunction f = small_integer_function(s);
      if (is_zero(f)) return;
      const QFunction unit = reconstruct_unit(u, f);
      rec.check(u(unit) == ExtendedValue(), [&] { return "reconstructed unit has nonzero value for " + to_string(f); });
    });
  }
  return rec.take();
}

SuiteResult suite_factor(std::uint64_t seed, std::size_t n) {
  Recorder rec("factor");
  Sampler s(seed);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      // Products of small pieces so that factors actually repeat and split.
      QPoly f = QPoly::constant(s.small_rational(9, 4) + (s.chance(50) ? 0 : 1));
      if (is_zero(f.leading())) f = QPoly::constant(Rational(1));
      const auto pieces = s.uniform(1, 3);
      for (std::int64_t k = 0; k < pieces; ++k) {
        auto piece = s.nonzero_polynomial<Rational>(2, [&] { return Rational(s.uniform(-3, 3)); });
        if (f.degree() + piece.degree() <= kDefaultDegreeBound) f = f * piece;
      }
      const auto r = kronecker_factor(f);
      rec.check(expand(r) == f, [&] { return "factorization does not re-expand to " + to_string(f); });
      for (std::size_t a = 0; a < r.factors.size(); ++a) {
        rec.check(r.factors[a].first.leading() == 1, [&] { return "non-monic factor of " + to_string(f); });
        for (std::size_t b = a + 1; b < r.factors.size(); ++b) {
          rec.check(poly_gcd(r.factors[a].first, r.factors[b].first).degree() == 0,
                    [&] { return "factors not coprime for " + to_string(f); });
        }
      }
    });
  }
  return rec.take();
}

// --- quadratic ideals -------------------------------------------------------

SuiteResult suite_dedekind(std::uint64_t seed, std::size_t n) {
  Recorder rec("dedekind-norm");
  Sampler s(seed);
  const QuadContext ctx(-5);
  for (std::size_t i = 0; i < n; ++i) {
    rec.run([&] {
      QuadElement x = s.quad_integral(ctx, 40);
      if (is_zero(x)) return;
      const ValueVector v = quad_divisor_valuation(ctx, x).finite();
      Rational product = 1;
      for (const auto& [label, e] : v.entries()) {
        Rational norm = prime_ideal_of_label(ctx, std::get<QuadPrime>(label)).norm();
        for (std::int64_t k = 0; k < e; ++k) product *= norm;
      }
      rec.check(product == abs(x.norm()), [&] { return "norm bookkeeping fails for " + to_string(x); });
      rec.check(ideal_from_value(ctx, v) == QuadIdeal::principal(ctx, x),
                [&] { return "prime powers do not rebuild (x) for " + to_string(x); });
    });
  }
  return rec.take();
}

QuadIdeal random_ideal(Sampler& s, const QuadContext& ctx) {
  std::vector<QuadElement> gens;
  const auto count = s.uniform(1, 2);
  while (static_cast<std::int64_t>(gens.size()) < count) {
    QuadElement g = s.quad_integral(ctx, 12);
    if (!is_zero(g)) gens.push_back(g);
  }
  if (s.chance(30)) gens[0] = gens[0] / QuadElement(Rational(s.uniform(2, 6)));
  return QuadIdeal::from_generators(ctx, gens);
}

SuiteResult suite_ideal_group(std::uint64_t seed, std::size_t n) {
  Recorder rec("ideal-group");
  Sampler s(seed);
  for (std::int64_t d : {-5, -1, 2, 3}) {
    const QuadContext ctx(d);
    const QuadIdeal one = QuadIdeal::unit(ctx);
    for (std::size_t i = 0; i < n / 4 + 1; ++i) {
      rec.run([&] {
        const QuadIdeal I = random_ideal(s, ctx);
        const QuadIdeal J = random_ideal(s, ctx);
        const QuadIdeal H = random_ideal(s, ctx);
        auto where = [&] { return to_string(I) + ", " + to_string(J) + ", " + to_string(H) + " in d = " + std::to_string(d); };
        rec.check(ideal_mul(ideal_mul(I, J), H) == ideal_mul(I, ideal_mul(J, H)), [&] { return "not associative: " + where(); });
        rec.check(ideal_mul(I, J) == ideal_mul(J, I), [&] { return "not commutative: " + where(); });
        rec.check(ideal_mul(I, one) == I, [&] { return "unit not neutral: " + where(); });
        rec.check(ideal_mul(I, ideal_inverse(I)) == one, [&] { return "I * I^-1 != O: " + where(); });
        rec.check(ideal_inverse(ideal_mul(I, J)) == ideal_mul(ideal_inverse(I), ideal_inverse(J)),
                  [&] { return "inverse not multiplicative: " + where(); });
        const QuadIdeal IJ = ideal_mul(I, J);  // I contains IJ when J is integral
        if (J.is_integral()) {
          rec.check(ideal_contains(ideal_mul(I, H), ideal_mul(IJ, H)), [&] { return "order not compatible: " + where(); });
        }
        const QuadIdeal sum = ideal_add(I, J);
        rec.check(ideal_contains(sum, I) && ideal_contains(sum, J), [&] { return "I + J misses I or J: " + where(); });
        rec.check(ideal_contains(ideal_add(sum, H), sum), [&] { return "I + J not least: " + where(); });
        rec.check(ideal_divisor_valuation(sum) == vv_meet(ideal_divisor_valuation(I), ideal_divisor_valuation(J)),
                  [&] { return "v(I + J) != meet: " + where(); });
        for (const auto& b : I.basis()) {
          rec.check(ideal_membership(b * QuadElement::sqrt_d(d), I), [&] { return "not an O_K-module: " + where(); });
        }
      });
    }
  }
  return rec.take();
}

const std::vector<SuiteInfo> kSuites{
    {"lattice", suite_lattice},
    {"axioms/q", suite_axioms_q},
    {"axioms/quad-5", suite_axioms_quad5},
    {"axioms/quad-1", suite_axioms_quad1},
    {"axioms/w-q", suite_axioms_wq},
    {"axioms/w-quad-5", suite_axioms_wquad},
    {"axioms/t", suite_axioms_t},
    {"axioms/u", suite_axioms_u},
    {"gauss-kronecker/q", suite_gk_q},
    {"gauss-kronecker/quad-5", suite_gk_quad},
    {"bezout/q", suite_bezout_q},
    {"bezout/quad-5", suite_bezout_quad},
    {"pgen/q", suite_pgen_q},
    {"pgen/quad-5", suite_pgen_quad},
    {"cofactors/q", suite_cofactors_q},
    {"cofactors/quad-5", suite_cofactors_quad},
    {"same-value/q", suite_same_value_q},
    {"same-value/quad-5", suite_same_value_quad},
    {"roundtrip/q", suite_roundtrip_q},
    {"roundtrip/quad-5", suite_roundtrip_quad},
    {"u-member", suite_u_member},
    {"basis-witness", suite_basis_witness},
    {"reconstruct-u", suite_reconstruct_u},
    {"factor", suite_factor},
    {"dedekind-norm", suite_dedekind},
    {"ideal-group", suite_ideal_group},
};

}  // namespace

const std::vector<SuiteInfo>& property_suites() { return kSuites; }

SuiteResult run_suite(std::string_view name, std::uint64_t master_seed, std::size_t samples) {
  for (const auto& s : kSuites) {
    if (s.name == name) return s.run(Sampler::derive_seed(master_seed, name), samples);
  }
  throw Error("usage", "unknown property suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all_suites(std::uint64_t master_seed, std::size_t samples) {
  std::vector<SuiteResult> out;
  for (const auto& s : kSuites) out.push_back(s.run(Sampler::derive_seed(master_seed, s.name), samples));
  return out;
}

}  // namespace demival
