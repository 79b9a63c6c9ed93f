#pragma once

// Factorization in Q[X] by Kronecker's interpolation method, and the two
// divisor valuations built on it: t (exponents of monic irreducible
// polynomials) and u = (w, t) whose valuation ring is Z[X].

#include <cstdint>
#include <utility>
#include <vector>

#include "demival/integer_factor.hpp"
#include "demival/polynomial.hpp"
#include "demival/valuation.hpp"

namespace demival {

using QPoly = Polynomial<Rational>;
using QFunction = RationalFunction<Rational>;

inline constexpr int kDefaultDegreeBound = 6;

struct FactorizationResult {
  Rational unit;
  /// Monic irreducible factors, pairwise coprime, in label order.
  std::vector<std::pair<QPoly, int>> factors;
};

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of f (f != 0).
QPoly primitive_part(const QPoly& f);

/// Squarefree decomposition f = lc(f) prod s_i^i (Yun), s_i monic.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f);

/// Throws "degree_bound" if deg f exceeds degree_bound and "factor_bound"
/// if an evaluation value cannot be factored.
FactorizationResult kronecker_factor(const QPoly& f, int degree_bound = kDefaultDegreeBound,
                                     std::uint64_t factor_bound = default_factor_bound());

QPoly expand(const FactorizationResult& r);

struct FunctionFieldBounds {
  int degree_bound = kDefaultDegreeBound;
  std::uint64_t factor_bound = default_factor_bound();
};

ExtendedValue t_value(const QFunction& f, const FunctionFieldBounds& bounds = {});
ExtendedValue u_value(const QFunction& f, const FunctionFieldBounds& bounds = {});
/// u(f) >= 0, i.e. f is a polynomial with integer coefficients.
bool u_member(const QFunction& f, const FunctionFieldBounds& bounds = {});

/// Element whose u-value is the unit vector at the label: the prime p, or
/// the primitive integer representative of an irreducible polynomial.
QFunction basis_witness(const PrimeLabel& label);

Valuation<QFunction> t_valuation(const FunctionFieldBounds& bounds = {});
/// u with basis_witness as the irreducible representatives.
Valuation<QFunction> u_valuation(const FunctionFieldBounds& bounds = {});

}  // namespace demival
