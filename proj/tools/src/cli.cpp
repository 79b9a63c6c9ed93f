#include "demival_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "demival/error.hpp"
#include "demival/expression.hpp"
#include "demival/function_field.hpp"
#include "demival/kronecker_factor.hpp"
#include "demival/property_suites.hpp"
#include "demival/quadratic.hpp"
#include "demival/rational_field.hpp"

namespace demival::cli {

std::string CommandOutcome::rendered() const { return human_requested ? human : json.dump(); }

namespace {

struct Options {
  std::string ring = "q";
  std::string valuation = "divisor";
  bool json = false;
  bool human = false;
  std::uint64_t factor_bound = default_factor_bound();
  int degree_bound = kDefaultDegreeBound;
  std::int64_t bound = 100;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::vector<std::string> gens;
  std::vector<std::string> suites;
  std::vector<std::string> args;
};

struct Result {
  Json json;
  std::string human;
  int exit_code = kSuccess;
};

template <class T>
struct Tag {
  using type = T;
};

template <class Fn>
decltype(auto) with_field(const Ring& ring, Fn&& fn) {
  if (ring.is_quadratic()) return fn(Tag<QuadElement>{});
  return fn(Tag<Rational>{});
}

template <class F>
RationalFunction<F> parse_function(const std::string& text, const Ring& ring) {
  const Expr e = parse_expression(text, ring);
  if constexpr (std::is_same_v<F, Rational>) {
    return evaluate_rational(e);
  } else {
    return evaluate_quadratic(e, ring.quad());
  }
}

template <class F>
Polynomial<F> parse_poly(const std::string& text, const Ring& ring) {
  const auto f = parse_function<F>(text, ring);
  if (!f.is_polynomial()) throw Error("domain", "'" + text + "' is not a polynomial");
  return f.num();
}

template <class F>
F parse_constant(const std::string& text, const Ring& ring) {
  const auto p = parse_poly<F>(text, ring);
  if (p.degree() > 0) throw Error("domain", "'" + text + "' is not a constant");
  return p.coeff(0);
}

template <class F>
Valuation<F> base_valuation(const Ring& ring, std::uint64_t bound) {
  if constexpr (std::is_same_v<F, Rational>) {
    return rational_divisor_valuation(bound);
  } else {
    return quad_valuation(ring.quad(), bound);
  }
}

template <class F>
IdealToolkit<F> base_toolkit(const Ring& ring) {
  if constexpr (std::is_same_v<F, Rational>) {
    return rational_ideal_toolkit();
  } else {
    return quad_ideal_toolkit(ring.quad());
  }
}

template <class F>
std::string describe_base_ideal(const std::vector<F>& gens, const Ring& ring) {
  if (gens.empty()) return "(0)";
  if constexpr (std::is_same_v<F, Rational>) {
    return "(" + to_string(rational_ideal_generator(gens)) + ")";
  } else {
    return to_string(QuadIdeal::from_generators(ring.quad(), gens));
  }
}

void require_rational(const Ring& ring, const std::string& what) {
  if (ring.is_quadratic()) throw Error("usage", what + " is only defined over --ring q");
}

FunctionFieldBounds bounds_of(const Options& o) { return {o.degree_bound, o.factor_bound}; }

std::string single_arg(const Options& o, const char* what) {
  if (o.args.size() != 1) throw Error("usage", std::string("expected exactly one ") + what);
  return o.args.front();
}

Result value_result(const ExtendedValue& v) { return {to_json(v), to_string(v)}; }

Result cmd_valuate(const Options& o, const Ring& ring) {
  const std::string text = single_arg(o, "expression");
  if (o.valuation == "divisor") {
    return with_field(ring, [&](auto tag) {
      using F = typename decltype(tag)::type;
      return value_result(base_valuation<F>(ring, o.factor_bound)(parse_constant<F>(text, ring)));
    });
  }
  if (o.valuation == "w") {
    return with_field(ring, [&](auto tag) {
      using F = typename decltype(tag)::type;
      return value_result(w_value(parse_function<F>(text, ring), base_valuation<F>(ring, o.factor_bound)));
    });
  }
  if (o.valuation == "t" || o.valuation == "u") {
    require_rational(ring, "--valuation " + o.valuation);
    const auto f = parse_function<Rational>(text, ring);
    if (is_zero(f)) return value_result(ExtendedValue::infinity());
    return value_result(o.valuation == "t" ? t_value(f, bounds_of(o)) : u_value(f, bounds_of(o)));
  }
  throw Error("usage", "unknown valuation '" + o.valuation + "' (expected divisor, w, t or u)");
}

Result cmd_content(const Options& o, const Ring& ring) {
  const std::string text = single_arg(o, "polynomial");
  return with_field(ring, [&](auto tag) {
    using F = typename decltype(tag)::type;
    return value_result(content_value(parse_poly<F>(text, ring), base_valuation<F>(ring, o.factor_bound)));
  });
}

Result cmd_bezout(const Options& o, const Ring& ring) {
  if (o.args.size() != 2) throw Error("usage", "bezout expects two polynomials p q");
  return with_field(ring, [&](auto tag) {
    using F = typename decltype(tag)::type;
    const auto v = base_valuation<F>(ring, o.factor_bound);
    const auto p = parse_poly<F>(o.args[0], ring);
    const auto q = parse_poly<F>(o.args[1], ring);
    const auto [c, d] = bezout_coefficients(p, q);
    const auto m = c * p + d * q;
    const ExtendedValue value = content_value(m, v);
    const ExtendedValue meet = ext_meet(content_value(p, v), content_value(q, v));
    Result r;
    r.json = Json::object();
    r.json["c"] = to_string(c);
    r.json["d"] = to_string(d);
    r.json["m"] = to_string(m);
    r.json["value"] = to_json(value);
    r.json["meet"] = to_json(meet);
    r.json["verified"] = value == meet;
    r.human = "c = " + to_string(c) + "\nd = " + to_string(d) + "\nm = " + to_string(m) + "\nw(m) = " +
              to_string(value) + "\nmeet = " + to_string(meet) + "\nverified: " + (value == meet ? "yes" : "no");
    if (!(value == meet)) r.exit_code = kDomainError;
    return r;
  });
}

template <class F>
std::vector<RationalFunction<F>> parse_generators(const Options& o, const Ring& ring) {
  std::vector<std::string> texts = o.gens;
  texts.insert(texts.end(), o.args.begin(), o.args.end());
  if (texts.empty()) throw Error("usage", "expected generators (--gens g1 g2 ...)");
  std::vector<RationalFunction<F>> out;
  for (const auto& t : texts) out.push_back(parse_function<F>(t, ring));
  return out;
}

template <class T>
Json string_array(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

template <class T>
std::string joined(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + to_string(x);
  return "[" + s + "]";
}

Result cmd_pgen(const Options& o, const Ring& ring) {
  return with_field(ring, [&](auto tag) {
    using F = typename decltype(tag)::type;
    using RF = RationalFunction<F>;
    const auto v = base_valuation<F>(ring, o.factor_bound);
    const auto gens = parse_generators<F>(o, ring);
    const KroneckerIdeal<F> J(v, gens);
    const auto pg = rw_principal_generator(J);
    const auto w = w_valuation(v);
    bool verified = linear_combination<RF>(pg.coefficients, gens) == pg.m;
    for (const auto& c : pg.cofactors) verified = verified && kronecker_ring_member(c, v);
    for (const auto& cert : pg.chain) verified = verified && verify_bezout_certificate(w, cert);
    Json chain = Json::array();
    std::string chain_text;
    for (const auto& cert : pg.chain) {
      Json step = Json::object();
      step["x"] = to_string(cert.x);
      step["y"] = to_string(cert.y);
      step["c"] = to_string(cert.c);
      step["d"] = to_string(cert.d);
      step["m"] = to_string(cert.m);
      chain.push_back(std::move(step));
      chain_text += "\n  (" + to_string(cert.c) + ")*(" + to_string(cert.x) + ") + (" + to_string(cert.d) + ")*(" +
                    to_string(cert.y) + ") = " + to_string(cert.m);
    }
    const ExtendedValue value = w(pg.m);
    Result r;
    r.json = Json::object();
    r.json["generator"] = to_string(pg.m);
    r.json["value"] = to_json(value);
    r.json["coefficients"] = string_array(pg.coefficients);
    r.json["cofactors"] = string_array(pg.cofactors);
    r.json["certificate"] = std::move(chain);
    r.json["verified"] = verified;
    r.human = "generator: " + to_string(pg.m) + "\nw = " + to_string(value) + "\ncoefficients: " +
              joined(pg.coefficients) + "\ncofactors: " + joined(pg.cofactors) + "\ncertificate:" +
              (chain_text.empty() ? std::string(" (single generator)") : chain_text) +
              "\nverified: " + (verified ? "yes" : "no");
    if (!verified) r.exit_code = kDomainError;
    return r;
  });
}

Result cmd_cofactors(const Options& o, const Ring& ring) {
  const std::string text = single_arg(o, "polynomial");
  return with_field(ring, [&](auto tag) {
    using F = typename decltype(tag)::type;
    const auto v = base_valuation<F>(ring, o.factor_bound);
    const auto p = parse_poly<F>(text, ring);
    Result r;
    Json items = Json::array();
    bool all = true;
    for (const auto& c : coefficient_cofactors(p)) {
      const ExtendedValue value = w_value(c, v);
      const bool member = ext_nonnegative(value);
      all = all && member;
      Json item = Json::object();
      item["cofactor"] = to_string(c);
      item["value"] = to_json(value);
      item["member"] = member;
      items.push_back(std::move(item));
      r.human += to_string(c) + "  w = " + to_string(value) + (member ? "" : "  (outside R(w))") + "\n";
    }
    r.json = Json::object();
    r.json["cofactors"] = std::move(items);
    r.json["all_members"] = all;
    r.human += std::string("all in R(w): ") + (all ? "yes" : "no");
    if (!all) r.exit_code = kDomainError;
    return r;
  });
}

Result cmd_contract(const Options& o, const Ring& ring) {
  return with_field(ring, [&](auto tag) {
    using F = typename decltype(tag)::type;
    const auto v = base_valuation<F>(ring, o.factor_bound);
    const KroneckerIdeal<F> J(v, parse_generators<F>(o, ring));
    const auto gens = contract_ideal(J, base_toolkit<F>(ring));
    Result r;
    r.json = Json::object();
    r.json["generators"] = string_array(gens);
    r.json["ideal"] = describe_base_ideal(gens, ring);
    r.human = "contraction: " + describe_base_ideal(gens, ring) + "\ngenerators: " + joined(gens);
    return r;
  });
}

Result cmd_factor(const Options& o, const Ring& ring) {
  require_rational(ring, "factor");
  const auto p = parse_poly<Rational>(single_arg(o, "polynomial"), ring);
  const auto result = kronecker_factor(p, o.degree_bound, o.factor_bound);
  Result r{to_json(result), to_string(result.unit)};
  for (const auto& [g, e] : result.factors) {
    r.human += " * (" + to_string(g) + ")" + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return r;
}

// "(g1, g2, ...)" with commas split at parenthesis depth zero.
QuadIdeal parse_ideal(const std::string& text, const Ring& ring) {
  std::string s = text;
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos || s[first] != '(' || s[last] != ')') {
    throw Error("parse", "1:1: ideal must be written (g1, g2, ...)");
  }
  s = s.substr(first + 1, last - first - 1);
  std::vector<QuadElement> gens;
  int depth = 0;
  std::string current;
  auto flush = [&] {
    gens.push_back(parse_constant<QuadElement>(current, ring));
    current.clear();
  };
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      flush();
    } else {
      current += ch;
    }
  }
  flush();
  return QuadIdeal::from_generators(ring.quad(), gens);
}

Result ideal_result(const QuadIdeal& I) {
  Result r;
  r.json = Json::object();
  r.json["ideal"] = to_string(I);
  r.json["norm"] = to_string(I.norm());
  r.human = to_string(I) + "  (norm " + to_string(I.norm()) + ")";
  return r;
}

Result cmd_ideal(const Options& o, const Ring& ring) {
  if (!ring.is_quadratic()) throw Error("usage", "ideal needs --ring quad:<d>");
  if (o.args.empty()) throw Error("usage", "ideal expects an operation: mul, inverse, add, member, principal-search");
  const std::string& op = o.args[0];
  auto expect = [&](std::size_t n) {
    if (o.args.size() != n + 1) throw Error("usage", "ideal " + op + " expects " + std::to_string(n) + " arguments");
  };
  if (op == "mul" || op == "add") {
    expect(2);
    const QuadIdeal I = parse_ideal(o.args[1], ring);
    const QuadIdeal J = parse_ideal(o.args[2], ring);
    return ideal_result(op == "mul" ? ideal_mul(I, J) : ideal_add(I, J));
  }
  if (op == "inverse") {
    expect(1);
    return ideal_result(ideal_inverse(parse_ideal(o.args[1], ring)));
  }
  if (op == "member") {
    expect(2);
    const bool member = ideal_membership(parse_constant<QuadElement>(o.args[1], ring), parse_ideal(o.args[2], ring));
    Result r;
    r.json = Json::object();
    r.json["member"] = member;
    r.human = member ? "member" : "not a member";
    return r;
  }
  if (op == "principal-search") {
    expect(1);
    const auto found = is_principal_search(parse_ideal(o.args[1], ring), o.bound);
    Result r;
    r.json = Json::object();
    r.json["principal"] = found.has_value();
    if (found) r.json["generator"] = to_string(*found);
    r.human = found ? "principal, generated by " + to_string(*found)
                    : "no generator with coordinates bounded by " + std::to_string(o.bound);
    return r;
  }
  throw Error("usage", "unknown ideal operation '" + op + "'");
}

template <class F>
Result reconstruct_result(const Valuation<F>& v, const F& x) {
  const F unit = reconstruct_unit(v, x);
  const ExtendedValue value = v(unit);
  Result r;
  r.json = Json::object();
  r.json["unit"] = to_string(unit);
  r.json["value"] = to_json(value);
  r.human = "unit: " + to_string(unit) + "\nvalue: " + to_string(value);
  return r;
}

Result cmd_reconstruct(const Options& o, const Ring& ring) {
  const std::string text = single_arg(o, "expression");
  if (o.valuation == "divisor") {
    return with_field(ring, [&](auto tag) {
      using F = typename decltype(tag)::type;
      return reconstruct_result(base_valuation<F>(ring, o.factor_bound), parse_constant<F>(text, ring));
    });
  }
  if (o.valuation == "w") {
    return with_field(ring, [&](auto tag) {
      using F = typename decltype(tag)::type;
      return reconstruct_result(w_valuation(base_valuation<F>(ring, o.factor_bound)), parse_function<F>(text, ring));
    });
  }
  if (o.valuation == "t" || o.valuation == "u") {
    require_rational(ring, "--valuation " + o.valuation);
    const auto v = o.valuation == "t" ? t_valuation(bounds_of(o)) : u_valuation(bounds_of(o));
    return reconstruct_result(v, parse_function<Rational>(text, ring));
  }
  throw Error("usage", "unknown valuation '" + o.valuation + "' (expected divisor, w, t or u)");
}

Result cmd_check(const Options& o) {
  std::vector<SuiteResult> results;
  if (o.suites.empty()) {
    results = run_all_suites(o.seed, o.samples);
  } else {
    for (const auto& name : o.suites) results.push_back(run_suite(name, o.seed, o.samples));
  }
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  Result r;
  Json suites = Json::array();
  bool ok = true;
  for (const auto& s : results) {
    Json item = Json::object();
    item["name"] = s.name;
    item["samples"] = s.samples;
    item["failures"] = s.failures;
    if (!s.ok()) item["first_failure"] = s.first_failure;
    suites.push_back(std::move(item));
    ok = ok && s.ok();
    r.human += (s.ok() ? "ok    " : "FAIL  ") + s.name + "  " + std::to_string(s.samples) + " samples";
    if (!s.ok()) r.human += ", " + std::to_string(s.failures) + " failures; first: " + s.first_failure;
    r.human += "\n";
  }
  r.json = Json::object();
  r.json["seed"] = o.seed;
  r.json["samples"] = o.samples;
  r.json["suites"] = std::move(suites);
  r.json["ok"] = ok;
  r.human += ok ? "all suites passed" : "some suites failed";
  if (!ok) r.exit_code = kDomainError;
  return r;
}

int exit_code_for(const std::string& code) {
  return code == "parse" || code == "usage" || code == "invalid_ring" ? kUsageError : kDomainError;
}

CommandOutcome error_outcome(int exit_code, const std::string& code, const std::string& message, bool human) {
  CommandOutcome out;
  out.exit_code = exit_code;
  out.json = Json::object();
  out.json["error"] = code;
  out.json["message"] = message;
  out.human = "error (" + code + "): " + message;
  out.human_requested = human;
  return out;
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& argv) {
  Options o;
  CLI::App app{"Demi-valuations, content valuations and Kronecker function rings", "demival"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "q or quad:<d>");
    sub->add_flag("--json", o.json, "JSON output (default)");
    sub->add_flag("--human", o.human, "Human-readable output");
    sub->add_option("--factor-bound", o.factor_bound, "Trial-division bound");
    sub->add_option("--degree-bound", o.degree_bound, "Largest degree Kronecker factorization accepts");
    sub->add_option("args", o.args, "Operands");
  };
  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {"valuate", "Value of an element under --valuation divisor|w|t|u"},
      {"content", "Content value of a polynomial"},
      {"bezout", "X^h Bezout combination of two polynomials"},
      {"pgen", "Principal generator of an ideal of R(w)"},
      {"cofactors", "Coefficient cofactors a_i/p in R(w)"},
      {"contract", "Contraction of an ideal of R(w) to the base ring"},
      {"factor", "Factorization over Q"},
      {"ideal", "Quadratic ideal arithmetic: mul, inverse, add, member, principal-search"},
      {"reconstruct", "Unit reconstructed from the valuation of an element"},
      {"check", "Run the property suites"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub);
    subs[e.name] = sub;
  }
  for (const char* name : {"valuate", "reconstruct"}) {
    subs[name]->add_option("--valuation", o.valuation, "divisor, w, t or u");
  }
  for (const char* name : {"pgen", "contract"}) {
    subs[name]->add_option("--gens", o.gens, "Generators")->expected(1, 64);
  }
  subs["ideal"]->add_option("--bound", o.bound, "Coordinate bound for principal-search");
  subs["check"]->add_option("--seed", o.seed, "Master seed");
  subs["check"]->add_option("--samples", o.samples, "Samples per suite");
  subs["check"]->add_option("--suite", o.suites, "Run only the named suites");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    CommandOutcome outcome;
    outcome.exit_code = code == 0 ? kSuccess : kUsageError;
    outcome.human = out.str() + err.str();
    while (!outcome.human.empty() && outcome.human.back() == '\n') outcome.human.pop_back();
    outcome.human_requested = true;
    if (code != 0) {
      outcome.json = Json::object();
      outcome.json["error"] = "usage";
      outcome.json["message"] = e.what();
      outcome.human_requested = false;
    }
    return outcome;
  }
  if (o.json && o.human) return error_outcome(kUsageError, "usage", "--json and --human are exclusive", false);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Ring ring = Ring::parse(o.ring);
    Result r;
    if (command == "valuate") r = cmd_valuate(o, ring);
    else if (command == "content") r = cmd_content(o, ring);
    else if (command == "bezout") r = cmd_bezout(o, ring);
    else if (command == "pgen") r = cmd_pgen(o, ring);
    else if (command == "cofactors") r = cmd_cofactors(o, ring);
    else if (command == "contract") r = cmd_contract(o, ring);
    else if (command == "factor") r = cmd_factor(o, ring);
    else if (command == "ideal") r = cmd_ideal(o, ring);
    else if (command == "reconstruct") r = cmd_reconstruct(o, ring);
    else r = cmd_check(o);
    CommandOutcome out;
    out.exit_code = r.exit_code;
    out.json = std::move(r.json);
    out.human = std::move(r.human);
    out.human_requested = o.human;
    return out;
  } catch (const Error& e) {
    return error_outcome(exit_code_for(e.code()), e.code(), e.what(), o.human);
  }
}

}  // namespace demival::cli
