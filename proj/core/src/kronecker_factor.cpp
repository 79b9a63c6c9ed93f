#include "demival/kronecker_factor.hpp"

#include <algorithm>
#include <string>

#include "demival/error.hpp"
#include "demival/function_field.hpp"
#include "demival/rational_field.hpp"

namespace demival {

QPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) throw Error("domain", "primitive part of zero");
  BigInt den = 1;
  BigInt num = 0;
  for (const Rational& a : f.coeffs()) {
    den = lcm(den, a.get_den());
    num = gcd(num, a.get_num());
  }
  Rational scale = make_rational(den, num);
  if (sgn(f.leading()) < 0) scale = -scale;
  return f.scaled(scale);
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  if (f.is_zero()) throw Error("domain", "squarefree decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() == 0) return out;
  const QPoly g = f.monic();
  const QPoly a0 = poly_gcd(g, g.derivative());
  QPoly b = divmod(g, a0).first;
  QPoly c = divmod(g.derivative(), a0).first;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const QPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

bool integral(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& a) { return is_integer(a); });
}

// Newton interpolation through (xs[j], ys[j]).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t j = n - 1; j >= level; --j) dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - level]);
  }
  QPoly result = QPoly::constant(dd[n - 1]);
  for (std::size_t j = n - 1; j-- > 0;) {
    result = result * QPoly(std::vector<Rational>{Rational(-xs[j]), Rational(1)}) + QPoly::constant(dd[j]);
  }
  return result;
}

struct EvaluationPoint {
  Rational x;
  BigInt value;
  std::vector<BigInt> divisors;
};

// A proper factor of the primitive squarefree integer polynomial P of degree
// <= k, or the zero polynomial if none exists. Every divisor g of P with
// deg g <= k is pinned down by its values at k + 1 points, and g(x) | P(x),
// so enumerating divisor tuples is exhaustive.
QPoly find_divisor(const QPoly& P, int k, std::uint64_t factor_bound) {
  std::vector<EvaluationPoint> points;
  const int wanted = k + 1;
  const int candidates = 2 * wanted + 4;
  for (int i = 0; i < candidates; ++i) {
    const int xi = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
    const Rational x(xi);
    const Rational value = P.eval(x);
    if (is_zero(value)) return QPoly(std::vector<Rational>{Rational(-x), Rational(1)});
    points.push_back({x, value.get_num(), positive_divisors(value.get_num(), factor_bound)});
  }
  std::stable_sort(points.begin(), points.end(), [](const EvaluationPoint& a, const EvaluationPoint& b) {
    return a.divisors.size() < b.divisors.size();
  });
  points.resize(wanted);

  const BigInt lead = abs(P.leading().get_num());
  std::vector<Rational> xs;
  for (const auto& pt : points) xs.push_back(pt.x);
  // Odometer over divisor choices; the first value is kept positive since
  // g and -g are the same candidate.
  std::vector<std::size_t> idx(wanted, 0);
  std::vector<int> sign(wanted, 1);
  std::vector<Rational> ys(wanted);
  while (true) {
    for (int j = 0; j < wanted; ++j) ys[j] = Rational(points[j].divisors[idx[j]] * sign[j]);
    QPoly g = interpolate(xs, ys);
    if (g.degree() >= 1 && g.degree() < P.degree() && integral(g) &&
        mpz_divisible_p(lead.get_mpz_t(), g.leading().get_num_mpz_t())) {
      auto [q, r] = divmod(P, g);
      if (r.is_zero()) return primitive_part(g);
    }
    int j = 0;
    for (; j < wanted; ++j) {
      if (j > 0 && sign[j] == 1) {
        sign[j] = -1;
        break;
      }
      sign[j] = 1;
      if (++idx[j] < points[j].divisors.size()) break;
      idx[j] = 0;
    }
    if (j == wanted) return {};
  }
}

void factor_squarefree(const QPoly& P, std::uint64_t factor_bound, std::vector<QPoly>& out) {
  if (P.degree() <= 1) {
    out.push_back(P);
    return;
  }
  for (int k = 1; k <= P.degree() / 2; ++k) {
    QPoly g = find_divisor(P, k, factor_bound);
    if (!g.is_zero()) {
      factor_squarefree(g, factor_bound, out);
      factor_squarefree(primitive_part(divmod(P, g).first), factor_bound, out);
      return;
    }
  }
  out.push_back(P);
}

int compare_monic(const QPoly& a, const QPoly& b) {
  return compare_labels(IrreduciblePoly{a.coeffs()}, IrreduciblePoly{b.coeffs()});
}

}  // namespace

FactorizationResult kronecker_factor(const QPoly& f, int degree_bound, std::uint64_t factor_bound) {
  if (f.is_zero()) throw Error("domain", "cannot factor the zero polynomial");
  if (f.degree() > degree_bound) {
    throw Error("degree_bound", "degree " + std::to_string(f.degree()) + " exceeds degree bound " +
                                    std::to_string(degree_bound));
  }
  FactorizationResult result{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    std::vector<QPoly> irreducible;
    factor_squarefree(primitive_part(part), factor_bound, irreducible);
    for (const QPoly& g : irreducible) result.factors.emplace_back(g.monic(), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) { return compare_monic(x.first, y.first) < 0; });
  return result;
}

QPoly expand(const FactorizationResult& r) {
  QPoly out = QPoly::constant(r.unit);
  for (const auto& [g, e] : r.factors) out = out * pow(g, static_cast<unsigned>(e));
  return out;
}

ExtendedValue t_value(const QFunction& f, const FunctionFieldBounds& bounds) {
  if (is_zero(f)) return ExtendedValue::infinity();
  std::vector<ValueVector::Entry> entries;
  for (const auto& [g, e] : kronecker_factor(f.num(), bounds.degree_bound, bounds.factor_bound).factors) {
    entries.emplace_back(IrreduciblePoly{g.coeffs()}, e);
  }
  for (const auto& [g, e] : kronecker_factor(f.den(), bounds.degree_bound, bounds.factor_bound).factors) {
    entries.emplace_back(IrreduciblePoly{g.coeffs()}, -e);
  }
  return ValueVector(std::move(entries));
}

ExtendedValue u_value(const QFunction& f, const FunctionFieldBounds& bounds) {
  if (is_zero(f)) return ExtendedValue::infinity();
  const auto base = rational_divisor_valuation(bounds.factor_bound);
  return ext_add(w_value(f, base), t_value(f, bounds));
}

bool u_member(const QFunction& f, const FunctionFieldBounds& bounds) {
  return ext_nonnegative(u_value(f, bounds));
}

QFunction basis_witness(const PrimeLabel& label) {
  if (const auto* r = std::get_if<RationalPrime>(&label)) return QFunction(Rational(r->p));
  if (const auto* q = std::get_if<IrreduciblePoly>(&label)) return QFunction(primitive_part(QPoly(q->coeffs)));
  throw Error("invalid_label", label_string(label) + " is not in the universe of u");
}

Valuation<QFunction> t_valuation(const FunctionFieldBounds& bounds) {
  return Valuation<QFunction>("t", "Q(X)", "monic irreducible polynomials f:<poly>",
                              [bounds](const QFunction& f) { return t_value(f, bounds); });
}

Valuation<QFunction> u_valuation(const FunctionFieldBounds& bounds) {
  Valuation<QFunction> u("u", "Q(X)", "rational primes p:<p> and monic irreducible polynomials f:<poly>",
                         [bounds](const QFunction& f) { return u_value(f, bounds); });
  u.with_representatives([](const PrimeLabel& l) -> std::optional<QFunction> {
    if (std::holds_alternative<QuadPrime>(l)) return std::nullopt;
    return basis_witness(l);
  });
  return u;
}

}  // namespace demival
