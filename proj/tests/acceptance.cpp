// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "demival/function_field.hpp"
#include "demival/kronecker_factor.hpp"
#include "demival/property_suites.hpp"
#include "demival/quadratic.hpp"
#include "demival/sampling.hpp"
#include "demival_cli/cli.hpp"
#include "oracles.hpp"

namespace {

using namespace demival;

constexpr std::uint64_t kSeed = 20240229;

struct Verdict {
  bool ok = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Runs the named suites at n samples each; fails on any failure or short count.
Verdict suites(const std::vector<std::string>& names, std::size_t n, double* elapsed = nullptr,
               double per_suite_limit = 0) {
  Verdict v;
  Clock total;
  std::string parts;
  for (const auto& name : names) {
    Clock c;
    const auto r = run_suite(name, kSeed, n);
    const double t = c.seconds();
    parts += (parts.empty() ? "" : "; ") + name + " " + std::to_string(r.samples) + "/" + std::to_string(r.failures) +
             " in " + fmt_seconds(t);
    if (!r.ok()) {
      v.ok = false;
      parts += " FIRST FAILURE: " + r.first_failure;
    }
    if (r.samples < n) v.ok = false;
    if (per_suite_limit > 0 && t >= per_suite_limit) {
      v.ok = false;
      parts += " (over " + fmt_seconds(per_suite_limit) + ")";
    }
  }
  if (elapsed) *elapsed = total.seconds();
  v.detail = "samples/failures: " + parts;
  return v;
}

Verdict criterion_axioms() {
  double t = 0;
  Verdict v = suites({"axioms/q", "axioms/quad-5", "axioms/quad-1", "axioms/w-q", "axioms/w-quad-5", "axioms/t", "axioms/u"},
                     1000, &t);
  if (t >= 30) v.ok = false;
  v.detail = "total " + fmt_seconds(t) + " (limit 30 s); " + v.detail;
  return v;
}

Verdict criterion_gauss_kronecker() {
  return suites({"gauss-kronecker/q", "gauss-kronecker/quad-5"}, 1000, nullptr, 10);
}

Verdict criterion_bezout() { return suites({"bezout/q", "bezout/quad-5"}, 500); }

Verdict criterion_pgen() { return suites({"pgen/q", "pgen/quad-5"}, 200); }

Verdict criterion_dedekind() {
  const QuadContext ctx(-5);
  Sampler s(Sampler::derive_seed(kSeed, "acceptance/dedekind"));
  Verdict v;
  int checked = 0;
  while (checked < 200) {
    const QuadElement x = s.quad_integral(ctx, 60);
    if (is_zero(x)) continue;
    ++checked;
    const ValueVector val = quad_divisor_valuation(ctx, x).finite();
    // Norms from the kind alone: p for split or ramified, p^2 for inert.
    BigInt product = 1;
    for (const auto& [label, e] : val.entries()) {
      const auto& P = std::get<QuadPrime>(label);
      const std::int64_t norm = P.kind == QuadPrimeKind::inert ? P.p * P.p : P.p;
      for (std::int64_t k = 0; k < e; ++k) product *= norm;
      if (e != oracle::prime_exponent(-5, BigInt(x.a()), BigInt(x.b()), P) ||
          e != prime_ideal_valuation(ctx, x, P)) {
        v.ok = false;
        v.detail = "exponent mismatch at " + label_string(label) + " for " + to_string(x);
      }
    }
    if (Rational(product) != abs(x.norm())) {
      v.ok = false;
      v.detail = "norm product mismatch for " + to_string(x);
    }
    if (!(val == oracle::quad_value(-5, x))) {
      v.ok = false;
      v.detail = "support mismatch with oracle for " + to_string(x);
    }
    if (!(ideal_from_value(ctx, val) == QuadIdeal::principal(ctx, x))) {
      v.ok = false;
      v.detail = "prime powers do not rebuild the HNF of (" + to_string(x) + ")";
    }
  }
  if (v.ok) v.detail = std::to_string(checked) + " elements agree with the quotient-map oracle and close the norm";
  return v;
}

Verdict criterion_non_pid() {
  const QuadContext ctx(-5);
  const QuadElement r = QuadElement(Rational(1), Rational(1), -5);
  const QuadIdeal p2 = QuadIdeal::from_generators(ctx, std::vector<QuadElement>{QuadElement(2), r});
  Verdict v;
  const auto found = is_principal_search(p2, 100);
  const bool norm_two = oracle::norm_represented(-5, 2, 100);
  using KF = RationalFunction<QuadElement>;
  const auto base = quad_valuation(ctx);
  const auto pg = rw_principal_generator(KroneckerIdeal<QuadElement>(base, {KF(QuadElement(2)), KF(r)}));
  const KF expected(Polynomial<QuadElement>(std::vector<QuadElement>{r, QuadElement(2)}));
  const bool gen_ok = pg.m == expected;
  const bool value_ok = w_value(pg.m, base) == ExtendedValue(ValueVector::unit(make_quad_prime(2, QuadPrimeKind::ramified)));
  v.ok = !found && !norm_two && gen_ok && value_ok;
  v.detail = std::string("principal search: ") + (found ? "found " + to_string(*found) : "none") +
             "; a^2 + 5b^2 = 2 solvable: " + (norm_two ? "yes" : "no") + "; R(w) generator " + to_string(pg.m) +
             " with w = " + to_string(w_value(pg.m, base));
  return v;
}

Verdict criterion_cofactors_roundtrip() {
  Verdict a = suites({"cofactors/q", "cofactors/quad-5"}, 200);
  Verdict b = suites({"roundtrip/q", "roundtrip/quad-5"}, 100);
  return {a.ok && b.ok, a.detail + "; " + b.detail};
}

Verdict criterion_u() {
  Verdict a = suites({"u-member"}, 500);
  Verdict b = suites({"basis-witness"}, 50);
  Verdict c = suites({"reconstruct-u"}, 200);
  return {a.ok && b.ok && c.ok, a.detail + "; " + b.detail + "; " + c.detail};
}

Verdict criterion_factor() {
  Clock c;
  Verdict v;
  std::size_t count = 0;
  std::size_t irreducible = 0;
  for (int deg = 0; deg <= 3 && v.ok; ++deg) {
    std::vector<std::int64_t> coeffs(deg + 1, -4);
    while (true) {
      if (coeffs.back() != 0) {
        ++count;
        const QPoly f(std::vector<Rational>(coeffs.begin(), coeffs.end()));
        const auto r = kronecker_factor(f);
        if (!(expand(r) == f)) {
          v.ok = false;
          v.detail = "re-expansion fails for " + to_string(f);
          break;
        }
        // Brute force: degree <= 3 is reducible iff it has a rational root.
        const auto roots = oracle::rational_roots(coeffs, 4);
        std::size_t multiplicity = 0;
        std::vector<Rational> linear;
        for (const auto& [g, e] : r.factors) {
          multiplicity += static_cast<std::size_t>(e);
          if (g.degree() == 1) linear.insert(linear.end(), e, Rational(-g.coeff(0)));
        }
        std::sort(linear.begin(), linear.end());
        const bool oracle_irreducible = deg >= 1 && (deg == 1 || roots.empty());
        const bool got_irreducible = multiplicity == 1;
        if (oracle_irreducible) ++irreducible;
        if (linear != roots || oracle_irreducible != got_irreducible) {
          v.ok = false;
          v.detail = "verdict differs from candidate search for " + to_string(f);
          break;
        }
      }
      std::size_t i = 0;
      while (i < coeffs.size() && coeffs[i] == 4) coeffs[i++] = -4;
      if (i == coeffs.size()) break;
      ++coeffs[i];
    }
  }
  const double t = c.seconds();
  if (t >= 60) v.ok = false;
  if (v.ok) {
    v.detail = std::to_string(count) + " polynomials, " + std::to_string(irreducible) + " irreducible, in " +
               fmt_seconds(t) + " (limit 60 s)";
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict criterion_cli() {
  struct Golden {
    const char* file;
    std::vector<std::string> args;
  };
  const std::vector<Golden> goldens{
      {"valuate_divisor.txt", {"demival", "valuate", "--ring", "q", "--valuation", "divisor", "4/9"}},
      {"pgen_two_x.txt", {"demival", "pgen", "--ring", "q", "--gens", "2", "X"}},
      {"principal_search.txt",
       {"demival", "ideal", "--ring", "quad:-5", "principal-search", "(2, 1+sqrt(-5))", "--bound", "100"}},
  };
  Verdict v;
  for (const auto& g : goldens) {
    const auto first = cli::run_command(g.args);
    const auto second = cli::run_command(g.args);
    const std::string expected = read_file(std::string(DEMIVAL_GOLDEN_DIR) + "/" + g.file);
    const std::string out1 = first.rendered() + "\n";
    const std::string out2 = second.rendered() + "\n";
    if (first.exit_code != 0 || out1 != out2 || out1 != expected) {
      v.ok = false;
      v.detail += std::string(v.detail.empty() ? "" : "; ") + g.file + " differs";
    }
  }
  if (v.ok) v.detail = "3 transcripts byte-identical across two runs and with the stored goldens";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"axiom suite over every shipped valuation", criterion_axioms},
      {"Gauss-Kronecker content law", criterion_gauss_kronecker},
      {"X^h Bezout construction", criterion_bezout},
      {"principal generators in R(w)", criterion_pgen},
      {"Dedekind oracle agreement", criterion_dedekind},
      {"non-PID witness", criterion_non_pid},
      {"cofactors and contraction/extension", criterion_cofactors_roundtrip},
      {"u = (w, t) membership, witnesses, units", criterion_u},
      {"exhaustive factorization check", criterion_factor},
      {"CLI golden transcripts", criterion_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.ok) ++failed;
    std::printf("%s %2zu  %s: %s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
