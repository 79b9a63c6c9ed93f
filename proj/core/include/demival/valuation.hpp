#pragma once

// The demi-valuation contract: an exact evaluator K -> value group plus
// the generic constructions that only use the axioms (valuation ring
// membership, Bezout certificates, principal generators of finitely
// generated ideals, unit reconstruction for surjective divisor valuations).

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "demival/error.hpp"
#include "demival/field.hpp"
#include "demival/value_group.hpp"

namespace demival {

template <class F>
class Valuation {
 public:
  using Evaluator = std::function<ExtendedValue(const F&)>;
  /// Value of the ideal generated by a finite family, i.e. the meet of the
  /// values. Instances with a cheaper exact route (gcd over Z, content
  /// ideals over O_K) supply it; otherwise the meet is folded.
  using FamilyMeet = std::function<ExtendedValue(std::span<const F>)>;
  /// Irreducible element pi_i whose value is the unit vector at a label.
  using Representative = std::function<std::optional<F>(const PrimeLabel&)>;

  Valuation(std::string name, std::string field, std::string label_universe, Evaluator evaluate)
      : name_(std::move(name)),
        field_(std::move(field)),
        label_universe_(std::move(label_universe)),
        evaluate_(std::move(evaluate)) {}

  Valuation& with_family_meet(FamilyMeet meet) {
    family_meet_ = std::move(meet);
    return *this;
  }
  Valuation& with_representatives(Representative rep) {
    representative_ = std::move(rep);
    return *this;
  }

  const std::string& name() const noexcept { return name_; }
  const std::string& field() const noexcept { return field_; }
  const std::string& label_universe() const noexcept { return label_universe_; }

  ExtendedValue operator()(const F& x) const {
    if (is_zero(x)) return ExtendedValue::infinity();
    return evaluate_(x);
  }

  ExtendedValue meet_of(std::span<const F> xs) const {
    if (family_meet_) return family_meet_(xs);
    return fold_meet(xs);
  }

  /// Meet by evaluating every member; the reference route for meet_of.
  ExtendedValue fold_meet(std::span<const F> xs) const {
    ExtendedValue acc = ExtendedValue::infinity();
    for (const F& x : xs) acc = ext_meet(acc, (*this)(x));
    return acc;
  }

  bool has_representatives() const noexcept { return static_cast<bool>(representative_); }
  std::optional<F> representative(const PrimeLabel& label) const {
    if (!representative_) return std::nullopt;
    return representative_(label);
  }

 private:
  std::string name_;
  std::string field_;
  std::string label_universe_;
  Evaluator evaluate_;
  FamilyMeet family_meet_;
  Representative representative_;
};

struct AxiomFailure {
  std::string a;
  std::string b;
  std::string relation;  // "multiplicativity" or "ultrametric"
  std::string detail;
};

struct AxiomReport {
  std::size_t samples = 0;
  std::vector<AxiomFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks v(ab) = v(a) + v(b) and v(a + b) >= inf(v(a), v(b)) exactly on
/// every sample pair. Failures are data, not errors.
template <class F>
AxiomReport axiom_report(const Valuation<F>& v, std::span<const std::pair<F, F>> samples) {
  AxiomReport report;
  for (const auto& [a, b] : samples) {
    ++report.samples;
    const ExtendedValue va = v(a);
    const ExtendedValue vb = v(b);
    const ExtendedValue vab = v(F(a * b));
    const ExtendedValue expected = ext_add(va, vb);
    if (!(vab == expected)) {
      report.failures.push_back({to_string(a), to_string(b), "multiplicativity",
                                 "v(ab) = " + to_string(vab) + ", v(a) + v(b) = " + to_string(expected)});
    }
    const ExtendedValue vsum = v(F(a + b));
    const ExtendedValue floor = ext_meet(va, vb);
    const Ordering o = ext_compare(vsum, floor);
    if (o != Ordering::greater && o != Ordering::equal) {
      report.failures.push_back({to_string(a), to_string(b), "ultrametric",
                                 "v(a+b) = " + to_string(vsum) + " is not >= " + to_string(floor)});
    }
  }
  return report;
}

template <class F>
bool in_valuation_ring(const Valuation<F>& v, const F& x) {
  return ext_nonnegative(v(x));
}

/// Witness that inf(v(x), v(y)) = v(c x + d y) with c, d in R(v).
template <class F>
struct BezoutCertificate {
  F x;
  F y;
  F c;
  F d;
  F m;
};

template <class F>
bool verify_bezout_certificate(const Valuation<F>& v, const BezoutCertificate<F>& cert) {
  if (!(F(cert.c * cert.x + cert.d * cert.y) == cert.m)) return false;
  if (!in_valuation_ring(v, cert.c) || !in_valuation_ring(v, cert.d)) return false;
  return v(cert.m) == ext_meet(v(cert.x), v(cert.y));
}

template <class F>
using BezoutCombiner = std::function<BezoutCertificate<F>(const F&, const F&)>;

/// Principal generator m of the ideal (g_1, ..., g_n) of R(v), obtained by
/// folding a Bezout combiner left to right.
template <class F>
struct PrincipalGenerator {
  F m;
  /// m = sum coefficients[i] * generators[i], every coefficient in R(v).
  std::vector<F> coefficients;
  /// generators[i] / m, every one in R(v) (zero when m = 0).
  std::vector<F> cofactors;
  std::vector<BezoutCertificate<F>> chain;
};

template <class F>
F linear_combination(std::span<const F> coefficients, std::span<const F> elements) {
  if (coefficients.size() != elements.size()) throw Error("domain", "coefficient count mismatch");
  F acc(0);
  for (std::size_t i = 0; i < elements.size(); ++i) acc = F(acc + coefficients[i] * elements[i]);
  return acc;
}

template <class F>
PrincipalGenerator<F> principal_generator_from_bezout(const Valuation<F>& v, std::span<const F> gens,
                                                      const BezoutCombiner<F>& combiner) {
  if (gens.empty()) throw Error("domain", "principal generator of an empty generator list");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!in_valuation_ring(v, gens[i])) {
      throw Error("not_in_ring", "generator " + std::to_string(i) + " (" + to_string(gens[i]) +
                                     ") is not in the valuation ring of " + v.name());
    }
  }
  PrincipalGenerator<F> out;
  out.m = gens[0];
  out.coefficients.assign(gens.size(), F(0));
  out.coefficients[0] = F(1);
  for (std::size_t k = 1; k < gens.size(); ++k) {
    BezoutCertificate<F> cert = combiner(out.m, gens[k]);
    if (!(cert.x == out.m) || !(cert.y == gens[k]) || !verify_bezout_certificate(v, cert)) {
      throw Error("invalid_certificate", "combiner returned an invalid certificate for generators 0.." +
                                             std::to_string(k - 1) + " and " + std::to_string(k) + ": (" +
                                             to_string(out.m) + ", " + to_string(gens[k]) + ")");
    }
    for (std::size_t i = 0; i < k; ++i) out.coefficients[i] = F(cert.c * out.coefficients[i]);
    out.coefficients[k] = cert.d;
    out.m = cert.m;
    out.chain.push_back(std::move(cert));
  }
  for (const F& g : gens) {
    F q = is_zero(out.m) ? F(0) : F(g / out.m);
    if (!in_valuation_ring(v, q)) {
      throw Error("invalid_certificate", "cofactor " + to_string(q) + " is not in the valuation ring");
    }
    out.cofactors.push_back(std::move(q));
  }
  return out;
}

/// x divided by prod pi_i^{v_i(x)}; the result has value {} when v is a
/// surjective divisor valuation with representatives for every label.
template <class F>
F reconstruct_unit(const Valuation<F>& v, const F& x) {
  if (is_zero(x)) throw Error("domain", "reconstruct_unit of zero");
  F u = x;
  const ExtendedValue value = v(x);
  for (const auto& [label, exp] : value.finite().entries()) {
    auto pi = v.representative(label);
    if (!pi) throw Error("missing_representative", "no irreducible representative for " + label_string(label));
    for (std::int64_t k = 0; k < (exp < 0 ? -exp : exp); ++k) u = exp > 0 ? F(u / *pi) : F(u * *pi);
  }
  return u;
}

}  // namespace demival
