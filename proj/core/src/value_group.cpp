#include "demival/value_group.hpp"

#include <algorithm>
#include <charconv>

#include "demival/error.hpp"
#include "demival/expression.hpp"
#include "demival/integer_factor.hpp"
#include "demival/json_io.hpp"
#include "demival/polynomial.hpp"

namespace demival {

namespace {

int kind_rank(QuadPrimeKind k) { return static_cast<int>(k); }

template <class T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

int compare_polys(const IrreduciblePoly& a, const IrreduciblePoly& b) {
  if (int c = three_way(a.coeffs.size(), b.coeffs.size())) return c;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    if (int c = cmp(a.coeffs[i], b.coeffs[i])) return c < 0 ? -1 : 1;
  }
  return 0;
}

const char* kind_token(QuadPrimeKind k) {
  switch (k) {
    case QuadPrimeKind::inert: return "inert";
    case QuadPrimeKind::ramified: return "ram";
    case QuadPrimeKind::split_plus: return "split+";
    case QuadPrimeKind::split_minus: return "split-";
  }
  return "?";
}

std::int64_t parse_int64(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("parse", "malformed prime label '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

RationalPrime make_rational_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error("invalid_label", std::to_string(p) + " is not prime");
  return RationalPrime{p};
}

QuadPrime make_quad_prime(std::int64_t p, QuadPrimeKind kind, std::optional<std::int64_t> root) {
  if (!is_prime(p)) throw Error("invalid_label", std::to_string(p) + " is not prime");
  const bool split = kind == QuadPrimeKind::split_plus || kind == QuadPrimeKind::split_minus;
  if (split != root.has_value()) {
    throw Error("invalid_label", "a quadratic prime label carries a root exactly when it is split");
  }
  if (root && (*root < 0 || *root >= p)) throw Error("invalid_label", "root out of range [0, p)");
  return QuadPrime{p, kind, root};
}

IrreduciblePoly make_irreducible_poly(std::vector<Rational> monic_coeffs) {
  Polynomial<Rational> f(std::move(monic_coeffs));
  if (f.degree() < 1 || f.leading() != 1) {
    throw Error("invalid_label", "irreducible polynomial label must be monic of positive degree");
  }
  return IrreduciblePoly{f.coeffs()};
}

int compare_labels(const PrimeLabel& a, const PrimeLabel& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (const auto* ra = std::get_if<RationalPrime>(&a)) return three_way(ra->p, std::get<RationalPrime>(b).p);
  if (const auto* qa = std::get_if<QuadPrime>(&a)) {
    const auto& qb = std::get<QuadPrime>(b);
    if (int c = three_way(qa->p, qb.p)) return c;
    if (int c = three_way(kind_rank(qa->kind), kind_rank(qb.kind))) return c;
    return three_way(qa->root.value_or(-1), qb.root.value_or(-1));
  }
  return compare_polys(std::get<IrreduciblePoly>(a), std::get<IrreduciblePoly>(b));
}

std::string label_string(const PrimeLabel& label) {
  if (const auto* r = std::get_if<RationalPrime>(&label)) return "p:" + std::to_string(r->p);
  if (const auto* q = std::get_if<QuadPrime>(&label)) {
    std::string s = "q:" + std::to_string(q->p) + ":" + kind_token(q->kind);
    if (q->root) s += ":" + std::to_string(*q->root);
    return s;
  }
  return "f:" + to_string(Polynomial<Rational>(std::get<IrreduciblePoly>(label).coeffs), true);
}

PrimeLabel parse_label(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') throw Error("parse", "malformed prime label '" + std::string(text) + "'");
  const char tag = text[0];
  if (tag == 'f') {
    auto f = parse_polynomial_q(text.substr(2));
    return make_irreducible_poly(f.coeffs());
  }
  auto parts = split_colon(text.substr(2));
  if (tag == 'p' && parts.size() == 1) return make_rational_prime(parse_int64(parts[0], text));
  if (tag == 'q' && (parts.size() == 2 || parts.size() == 3)) {
    const std::int64_t p = parse_int64(parts[0], text);
    std::optional<std::int64_t> root;
    if (parts.size() == 3) root = parse_int64(parts[2], text);
    for (auto k : {QuadPrimeKind::inert, QuadPrimeKind::ramified, QuadPrimeKind::split_plus,
                   QuadPrimeKind::split_minus}) {
      if (parts[1] == kind_token(k)) return make_quad_prime(p, k, root);
    }
  }
  throw Error("parse", "malformed prime label '" + std::string(text) + "'");
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
    case Ordering::incomparable: return "incomparable";
  }
  return "?";
}

ValueVector::ValueVector(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return label_less(x.first, y.first); });
  for (auto& e : entries) {
    if (!entries_.empty() && same_label(entries_.back().first, e.first)) {
      entries_.back().second += e.second;
    } else {
      entries_.push_back(std::move(e));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

ValueVector ValueVector::unit(const PrimeLabel& label, std::int64_t exp) {
  return ValueVector({{label, exp}});
}

std::int64_t ValueVector::at(const PrimeLabel& label) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), label,
                             [](const Entry& e, const PrimeLabel& l) { return label_less(e.first, l); });
  return it != entries_.end() && same_label(it->first, label) ? it->second : 0;
}

bool operator==(const ValueVector& a, const ValueVector& b) {
  return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                    [](const auto& x, const auto& y) { return x.second == y.second && same_label(x.first, y.first); });
}

namespace {

// Walks the union of supports, handing each label with both exponents
// (absent = 0) to `fn`.
template <class Fn>
void merge_walk(const ValueVector& a, const ValueVector& b, Fn&& fn) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    int c = i == ea.size() ? 1 : (j == eb.size() ? -1 : compare_labels(ea[i].first, eb[j].first));
    if (c < 0) {
      fn(ea[i].first, ea[i].second, std::int64_t{0});
      ++i;
    } else if (c > 0) {
      fn(eb[j].first, std::int64_t{0}, eb[j].second);
      ++j;
    } else {
      fn(ea[i].first, ea[i].second, eb[j].second);
      ++i;
      ++j;
    }
  }
}

template <class Op>
ValueVector componentwise(const ValueVector& a, const ValueVector& b, Op op) {
  std::vector<ValueVector::Entry> out;
  merge_walk(a, b, [&](const PrimeLabel& l, std::int64_t x, std::int64_t y) {
    if (std::int64_t v = op(x, y); v != 0) out.emplace_back(l, v);
  });
  return ValueVector(std::move(out));
}

}  // namespace

ValueVector vv_add(const ValueVector& a, const ValueVector& b) {
  return componentwise(a, b, [](std::int64_t x, std::int64_t y) { return x + y; });
}

ValueVector vv_neg(const ValueVector& a) {
  std::vector<ValueVector::Entry> out = a.entries();
  for (auto& e : out) e.second = -e.second;
  return ValueVector(std::move(out));
}

ValueVector vv_sub(const ValueVector& a, const ValueVector& b) {
  return componentwise(a, b, [](std::int64_t x, std::int64_t y) { return x - y; });
}

Ordering vv_compare(const ValueVector& a, const ValueVector& b) {
  bool some_less = false;
  bool some_greater = false;
  merge_walk(a, b, [&](const PrimeLabel&, std::int64_t x, std::int64_t y) {
    some_less |= x < y;
    some_greater |= x > y;
  });
  if (some_less && some_greater) return Ordering::incomparable;
  if (some_less) return Ordering::less;
  if (some_greater) return Ordering::greater;
  return Ordering::equal;
}

ValueVector vv_meet(const ValueVector& a, const ValueVector& b) {
  return componentwise(a, b, [](std::int64_t x, std::int64_t y) { return std::min(x, y); });
}

ValueVector vv_join(const ValueVector& a, const ValueVector& b) {
  return componentwise(a, b, [](std::int64_t x, std::int64_t y) { return std::max(x, y); });
}

bool vv_nonnegative(const ValueVector& a) {
  return std::all_of(a.entries().begin(), a.entries().end(), [](const auto& e) { return e.second >= 0; });
}

ValueVector minimal_in_set(std::span<const ValueVector> set) {
  if (set.empty()) throw Error("domain", "minimal_in_set: empty set");
  for (const auto& v : set) {
    if (!vv_nonnegative(v)) throw Error("domain", "minimal_in_set: element " + to_string(v) + " is not >= 0");
  }
  // Descent from each start; each step moves strictly down the positive
  // cone, so it terminates. Collect the distinct end points.
  std::vector<ValueVector> minimal;
  for (const auto& start : set) {
    ValueVector current = start;
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& s : set) {
        if (vv_compare(s, current) == Ordering::less) {
          current = s;
          moved = true;
          break;
        }
      }
    }
    if (std::find(minimal.begin(), minimal.end(), current) == minimal.end()) minimal.push_back(current);
  }
  return *std::min_element(minimal.begin(), minimal.end(), [](const ValueVector& x, const ValueVector& y) {
    return to_json(x).dump() < to_json(y).dump();
  });
}

const ValueVector& ExtendedValue::finite() const {
  if (!value_) throw Error("domain", "value is infinity");
  return *value_;
}

ExtendedValue ext_add(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinity() || b.is_infinity()) return ExtendedValue::infinity();
  return vv_add(a.finite(), b.finite());
}

ExtendedValue ext_sub(const ExtendedValue& a, const ExtendedValue& b) {
  if (b.is_infinity()) throw Error("domain", "subtracting infinity");
  if (a.is_infinity()) return a;
  return vv_sub(a.finite(), b.finite());
}

ExtendedValue ext_meet(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinity()) return b;
  if (b.is_infinity()) return a;
  return vv_meet(a.finite(), b.finite());
}

Ordering ext_compare(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinity() && b.is_infinity()) return Ordering::equal;
  if (a.is_infinity()) return Ordering::greater;
  if (b.is_infinity()) return Ordering::less;
  return vv_compare(a.finite(), b.finite());
}

bool ext_nonnegative(const ExtendedValue& a) { return a.is_infinity() || vv_nonnegative(a.finite()); }

std::string to_string(const ValueVector& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.entries().size(); ++i) {
    if (i != 0) s += ", ";
    s += label_string(v.entries()[i].first) + "=" + std::to_string(v.entries()[i].second);
  }
  return s + "}";
}

std::string to_string(const ExtendedValue& v) { return v.is_infinity() ? "inf" : to_string(v.finite()); }

}  // namespace demival
