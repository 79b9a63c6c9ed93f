#pragma once

#include <functional>
#include <span>
#include <vector>

namespace demival {

/// Fractional-ideal operations of a base ring A = R(v), phrased on finite
/// generator lists so the function-field constructions stay generic.
template <class F>
struct IdealToolkit {
  /// Generators of the inverse of the (nonzero) fractional ideal generated
  /// by `gens`.
  std::function<std::vector<F>(std::span<const F> gens)> inverse_generators;
  /// x lies in the ideal of A generated by `gens`.
  std::function<bool(const F& x, std::span<const F> gens)> member;
  /// The two generator lists span the same ideal.
  std::function<bool(std::span<const F> a, std::span<const F> b)> same_ideal;
};

}  // namespace demival
