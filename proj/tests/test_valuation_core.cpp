#include <gtest/gtest.h>

#include "demival/rational_field.hpp"
#include "demival/valuation.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace demival {
namespace {

using testing::q;
using testing::vv;

using Pairs = std::vector<std::pair<Rational, Rational>>;

TEST(AxiomReport, RationalInstancePasses) {
  const auto v = rational_divisor_valuation();
  const Pairs pairs{{q("4"), q("9")}, {q("2"), q("-2")}, {q("1/3"), q("3")}, {q("0"), q("0")}};
  const auto r = axiom_report<Rational>(v, pairs);
  EXPECT_EQ(r.samples, 4u);
  EXPECT_TRUE(r.ok());
}

TEST(AxiomReport, TrivialValuationIsGenuine) {
  const Valuation<Rational> trivial("trivial", "Q", "none", [](const Rational&) { return ExtendedValue(); });
  const Pairs pairs{{q("2"), q("2")}, {q("3"), q("5")}};
  EXPECT_TRUE(axiom_report<Rational>(trivial, pairs).ok());
  // It still disagrees with the divisor valuation on 2.
  EXPECT_NE(trivial(q("2")), rational_divisor_valuation()(q("2")));
}

TEST(AxiomReport, ReportsBrokenMultiplicativity) {
  // Counts the numerator's prime factors without multiplicity.
  const Valuation<Rational> broken("broken", "Q", "p", [](const Rational& x) {
    std::vector<ValueVector::Entry> e;
    for (auto [p, k] : oracle::trial_division(x.get_num())) e.emplace_back(RationalPrime{p}, 1);
    return ExtendedValue(ValueVector(std::move(e)));
  });
  const Pairs pairs{{q("2"), q("2")}};
  const auto r = axiom_report<Rational>(broken, pairs);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].relation, "multiplicativity");
}

TEST(AxiomReport, ReportsBrokenUltrametric) {
  // v(x) = -v_2(x) reverses the order, so v(1 + 1) < meet(v(1), v(1)).
  const Valuation<Rational> reversed("reversed", "Q", "p", [](const Rational& x) {
    if (x == 0) return ExtendedValue::infinity();
    return ExtendedValue(ValueVector::unit(RationalPrime{2}, -oracle::padic(x.get_num(), 2) + oracle::padic(x.get_den(), 2)));
  });
  const Pairs pairs{{q("1"), q("1")}};
  const auto r = axiom_report<Rational>(reversed, pairs);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failures[0].relation, "ultrametric");
}

TEST(ValuationRing, Membership) {
  const auto v = rational_divisor_valuation();
  EXPECT_TRUE(in_valuation_ring(v, q("6")));
  EXPECT_FALSE(in_valuation_ring(v, q("1/2")));
  EXPECT_TRUE(in_valuation_ring(v, q("0")));
  EXPECT_EQ(v(q("0")), ExtendedValue::infinity());
  EXPECT_EQ(v(q("1")), ExtendedValue());
}

TEST(BezoutCertificate, Verification) {
  const auto v = rational_divisor_valuation();
  // v(10) = {2:1, 5:1} differs from meet({2:2}, {2:1, 3:1}) = {2:1}.
  EXPECT_EQ(v(q("10")), ExtendedValue(oracle::rational_value(q("10"))));
  EXPECT_FALSE(verify_bezout_certificate(v, BezoutCertificate<Rational>{q("4"), q("6"), q("1"), q("1"), q("10")}));
  EXPECT_TRUE(verify_bezout_certificate(v, BezoutCertificate<Rational>{q("4"), q("6"), q("1"), q("-1"), q("-2")}));
  EXPECT_TRUE(verify_bezout_certificate(v, BezoutCertificate<Rational>{q("1"), q("1"), q("1"), q("0"), q("1")}));
  // Coefficients outside R(v).
  EXPECT_FALSE(verify_bezout_certificate(v, BezoutCertificate<Rational>{q("4"), q("6"), q("1/2"), q("0"), q("2")}));
}

TEST(PrincipalGenerator, IntegerGcd) {
  const auto v = rational_divisor_valuation();
  const std::vector<Rational> g1{q("4"), q("6")};
  const auto pg = principal_generator_from_bezout<Rational>(v, g1, integer_bezout_certificate);
  EXPECT_EQ(abs(pg.m), 2);
  EXPECT_EQ(abs(pg.cofactors[0]), 2);
  EXPECT_EQ(abs(pg.cofactors[1]), 3);
  EXPECT_EQ(linear_combination<Rational>(pg.coefficients, g1), pg.m);

  const std::vector<Rational> g2{q("7")};
  const auto single = principal_generator_from_bezout<Rational>(v, g2, integer_bezout_certificate);
  EXPECT_EQ(single.m, q("7"));
  EXPECT_EQ(single.cofactors[0], 1);

  const std::vector<Rational> g3{q("6"), q("10"), q("15")};
  const auto three = principal_generator_from_bezout<Rational>(v, g3, integer_bezout_certificate);
  EXPECT_EQ(abs(three.m), 1);
  EXPECT_EQ(three.chain.size(), 2u);
  EXPECT_EQ(linear_combination<Rational>(three.coefficients, g3), three.m);
}

TEST(PrincipalGenerator, RejectsBadInput) {
  const auto v = rational_divisor_valuation();
  const std::vector<Rational> outside{q("1/2"), q("3")};
  EXPECT_THROW(principal_generator_from_bezout<Rational>(v, outside, integer_bezout_certificate), Error);
  const BezoutCombiner<Rational> lying = [](const Rational& x, const Rational& y) {
    return BezoutCertificate<Rational>{x, y, Rational(1), Rational(1), Rational(x + y)};
  };
  const std::vector<Rational> gens{q("4"), q("6")};
  try {
    principal_generator_from_bezout<Rational>(v, gens, lying);
    FAIL() << "expected invalid_certificate";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "invalid_certificate");
    EXPECT_NE(std::string(e.what()).find("(4, 6)"), std::string::npos);
  }
}

TEST(PrincipalGenerator, ValueIndependentOfOrder) {
  const auto v = rational_divisor_valuation();
  const std::vector<Rational> a{q("12"), q("18"), q("27")};
  const std::vector<Rational> b{q("27"), q("12"), q("18")};
  const auto ma = principal_generator_from_bezout<Rational>(v, a, integer_bezout_certificate).m;
  const auto mb = principal_generator_from_bezout<Rational>(v, b, integer_bezout_certificate).m;
  EXPECT_EQ(v(ma), v(mb));
  EXPECT_EQ(v(ma), ExtendedValue(vv({{"p:3", 1}})));
}

TEST(ReconstructUnit, RationalInstance) {
  const auto v = rational_divisor_valuation();
  EXPECT_EQ(reconstruct_unit(v, q("-12")), -1);
  EXPECT_EQ(reconstruct_unit(v, q("1")), 1);
  EXPECT_EQ(reconstruct_unit(v, q("9/8")), 1);
  EXPECT_THROW(reconstruct_unit(v, q("0")), Error);
}

TEST(ReconstructUnit, MissingRepresentative) {
  const Valuation<Rational> plain("plain", "Q", "p", [](const Rational& x) { return rational_valuation(x); });
  try {
    reconstruct_unit(plain, q("6"));
    FAIL() << "expected missing_representative";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "missing_representative");
  }
}

TEST(RationalValuation, MatchesTrialDivision) {
  for (const char* s : {"4/9", "-30", "1", "9991", "1024/243", "-77/60", "999983"}) {
    EXPECT_EQ(rational_valuation(q(s)), ExtendedValue(oracle::rational_value(q(s)))) << s;
  }
  EXPECT_EQ(rational_valuation(q("4/9")), ExtendedValue(vv({{"p:2", 2}, {"p:3", -2}})));
  EXPECT_EQ(rational_valuation(q("-30")), ExtendedValue(vv({{"p:2", 1}, {"p:3", 1}, {"p:5", 1}})));
  EXPECT_EQ(rational_valuation(q("0")), ExtendedValue::infinity());
}

TEST(RationalValuation, FactorBoundIsExplicit) {
  // 1000003 * 1000033 has no factor below 10^6.
  const Rational big = q("1000036000099");
  try {
    rational_valuation(big, 1000000);
    FAIL() << "expected factor_bound";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "factor_bound");
  }
  EXPECT_EQ(rational_valuation(big, 1000100), ExtendedValue(vv({{"p:1000003", 1}, {"p:1000033", 1}})));
}

TEST(RationalValuation, FamilyMeetAgreesWithFold) {
  const auto v = rational_divisor_valuation();
  const std::vector<Rational> xs{q("12/35"), q("18/5"), q("0"), q("-30/7")};
  EXPECT_EQ(v.meet_of(xs), v.fold_meet(xs));
  EXPECT_EQ(v.meet_of(std::vector<Rational>{}), ExtendedValue::infinity());
}

}  // namespace
}  // namespace demival
