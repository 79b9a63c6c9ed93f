#pragma once

// Dense univariate polynomials and reduced rational functions over an exact
// field.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "demival/error.hpp"
#include "demival/field.hpp"

namespace demival {

namespace detail {
template <class F>
bool coeff_is_zero(const F& c) {
  return is_zero(c);
}
}  // namespace detail

template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  /// Ascending coefficients; trailing zeros are trimmed.
  explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const F& c) { return Polynomial(std::vector<F>{c}); }
  static Polynomial monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(F(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<F>& coeffs() const noexcept { return coeffs_; }
  F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
  F leading() const { return coeffs_.empty() ? F(0) : coeffs_.back(); }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = F(acc * x + *it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<F> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(F(coeffs_[k] * F(static_cast<int>(k))));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(F(F(1) / leading()));
  }

  Polynomial scaled(const F& c) const {
    std::vector<F> v;
    v.reserve(coeffs_.size());
    for (const F& a : coeffs_) v.push_back(F(a * c));
    return Polynomial(std::move(v));
  }

  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<F> v(k, F(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = F(v[i] + b.coeffs_[i]);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(F(-1)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = F(v[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

/// Euclidean division over the field: a = q*b + r, deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw Error("division_by_zero", "polynomial division by zero");
  std::vector<F> rem = a.coeffs();
  const int db = b.degree();
  const F lead_inv = F(F(1) / b.leading());
  std::vector<F> quot(a.degree() >= db ? a.degree() - db + 1 : 0, F(0));
  for (int k = a.degree(); k >= db; --k) {
    const F c = F(rem[k] * lead_inv);
    if (detail::coeff_is_zero(c)) continue;
    quot[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] = F(rem[k - db + j] - c * b.coeffs()[j]);
  }
  return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) is rejected.
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> f, Polynomial<F> g) {
  if (f.is_zero() && g.is_zero()) throw Error("domain", "gcd of two zero polynomials");
  while (!g.is_zero()) {
    auto r = divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

template <class F>
Polynomial<F> pow(const Polynomial<F>& base, unsigned exp) {
  Polynomial<F> result = Polynomial<F>::constant(F(1));
  Polynomial<F> b = base;
  while (exp != 0) {
    if (exp & 1U) result = result * b;
    exp >>= 1U;
    if (exp != 0) b = b * b;
  }
  return result;
}

/// Descending-degree rendering, e.g. `6*X^2 + 4*X + 10`. The compact form
/// drops the spaces (`X^2+1`) and is used inside prime labels.
template <class F>
std::string to_string(const Polynomial<F>& p, bool compact = false) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const F& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    CoefficientText t = coefficient_text(c);
    if (first) {
      if (t.negative) out += "-";
    } else {
      out += compact ? (t.negative ? "-" : "+") : (t.negative ? " - " : " + ");
    }
    // A lone constant needs no parentheses.
    const bool alone = first && k == 0;
    first = false;
    std::string mag = t.compound && !alone ? "(" + t.magnitude + ")" : t.magnitude;
    if (k == 0) {
      out += mag;
      continue;
    }
    if (t.magnitude != "1") out += mag + "*";
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

/// Element of K(X) in lowest terms with a monic denominator.
template <class F>
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial<F>::constant(F(1))) {}
  RationalFunction(int c) : RationalFunction(F(c)) {}  // NOLINT(implicit)
  RationalFunction(const F& c)  // NOLINT(implicit)
      : num_(Polynomial<F>::constant(c)), den_(Polynomial<F>::constant(F(1))) {}
  RationalFunction(Polynomial<F> p)  // NOLINT(implicit)
      : num_(std::move(p)), den_(Polynomial<F>::constant(F(1))) {}
  RationalFunction(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Polynomial<F>& num() const noexcept { return num_; }
  const Polynomial<F>& den() const noexcept { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw Error("division_by_zero", "rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw Error("division_by_zero", "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial<F>::constant(F(1));
      return;
    }
    Polynomial<F> g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const F inv = F(F(1) / den_.leading());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  Polynomial<F> num_;
  Polynomial<F> den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& f) {
  return f.num().is_zero();
}

template <class F>
std::string to_string(const RationalFunction<F>& f) {
  if (f.is_polynomial()) return to_string(f.num());
  auto wrap = [](const Polynomial<F>& p) {
    std::string s = to_string(p);
    bool atomic = p.degree() <= 0 ? !coefficient_text(p.leading()).compound && !coefficient_text(p.leading()).negative
                                  : (s.find(' ') == std::string::npos && s.front() != '-');
    return atomic && s.find('/') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(f.num()) + "/" + wrap(f.den());
}

}  // namespace demival
