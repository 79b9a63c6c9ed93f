#include <gtest/gtest.h>

#include "demival/function_field.hpp"
#include "demival/kronecker_factor.hpp"
#include "demival/quadratic.hpp"
#include "demival/rational_field.hpp"
#include "support.hpp"

namespace demival {
namespace {

using testing::kf;
using testing::kp;
using testing::qe;
using testing::qf;
using testing::qp;
using testing::vv;

const QuadContext kM5(-5);
using KF = RationalFunction<QuadElement>;

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(qp("X^2 - 1"), qp("X + 1")), qp("X + 1"));
  EXPECT_EQ(poly_gcd(qp("2*X + 4"), QPoly{}), qp("X + 2"));
  EXPECT_EQ(poly_gcd(qp("X^2 + 1"), qp("X^2 - 1")), qp("1"));
}

TEST(RationalFunction, Normalization) {
  const QFunction f = qf("(2*X + 2)/(X + 1)");
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f, qf("2"));
  const QFunction g = qf("X/(2*X^2 + 4)");
  EXPECT_EQ(g.den(), qp("X^2 + 2"));
  EXPECT_EQ(g.num(), qp("X/2"));
  EXPECT_EQ(to_string(g), "(1/2*X)/(X^2 + 2)");
  EXPECT_THROW(qf("1/(X - X)"), Error);
}

TEST(ContentValue, Examples) {
  const auto v = rational_divisor_valuation();
  EXPECT_EQ(content_value(qp("6*X^2 + 4*X + 10"), v), ExtendedValue(vv({{"p:2", 1}})));
  EXPECT_EQ(content_value(qp("X"), v), ExtendedValue());
  EXPECT_EQ(content_value(QPoly{}, v), ExtendedValue::infinity());
  const auto vq = quad_valuation(kM5);
  EXPECT_EQ(content_value(kp("2*X + 1 + sqrt(-5)", kM5), vq), ExtendedValue(vv({{"q:2:ram", 1}})));
}

TEST(WValue, Examples) {
  const auto v = rational_divisor_valuation();
  EXPECT_EQ(w_value(qf("(2*X + 2)/(X + 1)"), v), ExtendedValue(vv({{"p:2", 1}})));
  // Unreduced representation gives the same value.
  EXPECT_EQ(ext_sub(content_value(qp("2*X + 2"), v), content_value(qp("X + 1"), v)), ExtendedValue(vv({{"p:2", 1}})));
  EXPECT_EQ(w_value(qf("(X^2 + 3)/(X^2 + 3)"), v), ExtendedValue());
  EXPECT_EQ(w_value(qf("1/(3*X)"), v), ExtendedValue(vv({{"p:3", -1}})));
  EXPECT_EQ(w_value(qf("0"), v), ExtendedValue::infinity());
}

TEST(BezoutCoefficients, Examples) {
  const auto v = rational_divisor_valuation();
  struct Case {
    const char* p;
    const char* q;
    const char* c;
    const char* m;
    ValueVector value;
  };
  const Case cases[] = {
      {"2*X + 1", "3", "X", "2*X^2 + X + 3", {}},
      {"X", "2", "X", "X^2 + 2", {}},
      {"2", "4", "X", "2*X + 4", vv({{"p:2", 1}})},
  };
  for (const auto& c : cases) {
    const auto [cc, dd] = bezout_coefficients(qp(c.p), qp(c.q));
    EXPECT_EQ(cc, qp(c.c));
    EXPECT_EQ(dd, qp("1"));
    const QPoly m = cc * qp(c.p) + dd * qp(c.q);
    EXPECT_EQ(m, qp(c.m));
    EXPECT_EQ(content_value(m, v), ExtendedValue(c.value));
    EXPECT_EQ(content_value(m, v), ext_meet(content_value(qp(c.p), v), content_value(qp(c.q), v)));
  }
  EXPECT_THROW(bezout_coefficients(qp("X"), QPoly{}), Error);
  // Degree of q decides h.
  EXPECT_EQ(bezout_coefficients(qp("1"), qp("X^2 + 1")).first, qp("X^3"));
}

TEST(KroneckerRing, Membership) {
  const auto v = rational_divisor_valuation();
  EXPECT_FALSE(kronecker_ring_member(qf("X/2"), v));
  EXPECT_TRUE(kronecker_ring_member(qf("(X + 1)/(X + 2)"), v));
  EXPECT_TRUE(kronecker_ring_member(qf("0"), v));
  // X and its powers are units.
  EXPECT_TRUE(kronecker_ring_member(qf("1/X^3"), v));
  EXPECT_THROW(KroneckerIdeal<Rational>(v, {qf("X/2")}), Error);
}

TEST(PrincipalGenerator, TwoAndX) {
  const auto v = rational_divisor_valuation();
  const KroneckerIdeal<Rational> J(v, {qf("2"), qf("X")});
  const auto pg = rw_principal_generator(J);
  EXPECT_EQ(pg.m, qf("X^2 + 2"));
  EXPECT_EQ(w_value(pg.m, v), ExtendedValue());
  ASSERT_EQ(pg.chain.size(), 1u);
  EXPECT_EQ(pg.chain[0].c, qf("1"));
  EXPECT_EQ(pg.chain[0].d, qf("X"));
  EXPECT_EQ(linear_combination<QFunction>(pg.coefficients, J.generators()), pg.m);
  for (const auto& c : pg.cofactors) EXPECT_TRUE(kronecker_ring_member(c, v));
}

TEST(PrincipalGenerator, SingleAndZeroGenerators) {
  const auto v = rational_divisor_valuation();
  const QFunction f = qf("(3*X + 6)/(X^2 + 1)");
  EXPECT_EQ(rw_principal_generator(KroneckerIdeal<Rational>(v, {f})).m, f);
  const auto with_zero = rw_principal_generator(KroneckerIdeal<Rational>(v, {qf("0"), f}));
  EXPECT_EQ(with_zero.m, f);
  EXPECT_EQ(with_zero.cofactors[0], qf("0"));
  EXPECT_TRUE(is_zero(rw_principal_generator(KroneckerIdeal<Rational>(v, {qf("0")})).m));
}

TEST(PrincipalGenerator, NonPrincipalIdealBecomesPrincipal) {
  const auto v = quad_valuation(kM5);
  const KroneckerIdeal<QuadElement> J(v, {KF(QuadElement(2)), KF(qe("1 + sqrt(-5)", kM5))});
  const auto pg = rw_principal_generator(J);
  EXPECT_EQ(pg.m, kf("2*X + 1 + sqrt(-5)", kM5));
  EXPECT_EQ(w_value(pg.m, v), ExtendedValue(vv({{"q:2:ram", 1}})));
  EXPECT_EQ(to_string(pg.m), "2*X + (1 + sqrt(-5))");
  for (const auto& c : pg.cofactors) EXPECT_TRUE(kronecker_ring_member(c, v));
  EXPECT_EQ(linear_combination<KF>(pg.coefficients, J.generators()), pg.m);
  // The base ideal itself has no generator.
  EXPECT_FALSE(is_principal_search(QuadIdeal::from_generators(kM5, std::vector<QuadElement>{2, qe("1 + sqrt(-5)", kM5)}), 100));
}

TEST(CoefficientCofactors, Examples) {
  const auto v = rational_divisor_valuation();
  const auto c1 = coefficient_cofactors(qp("2*X + 4"));
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1[0], qf("4/(2*X + 4)"));
  EXPECT_EQ(c1[1], qf("2/(2*X + 4)"));
  for (const auto& c : c1) EXPECT_TRUE(kronecker_ring_member(c, v));
  const auto c2 = coefficient_cofactors(qp("X + 1"));
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2[0], qf("1/(X + 1)"));
  EXPECT_EQ(c2[1], qf("1/(X + 1)"));
  const auto c3 = coefficient_cofactors(qp("7/2"));
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0], qf("1"));
  EXPECT_THROW(coefficient_cofactors(QPoly{}), Error);
}

TEST(SameValuePolynomial, RationalBase) {
  const auto v = rational_divisor_valuation();
  const auto tk = rational_ideal_toolkit();
  const QPoly p = polynomial_with_same_value(qf("(X + 1)/2"), tk);
  EXPECT_EQ(p, qp("(X + 1)/2"));
  EXPECT_EQ(content_value(p, v), ExtendedValue(vv({{"p:2", -1}})));
  const QFunction f = qf("(6*X + 3)/(4*X^2 + 2)");
  EXPECT_EQ(content_value(polynomial_with_same_value(f, tk), v), w_value(f, v));
  EXPECT_EQ(polynomial_with_same_value(qf("4*X + 2"), tk), qp("4*X + 2"));
}

TEST(SameValuePolynomial, QuadraticBase) {
  const auto v = quad_valuation(kM5);
  const KF f = kf("1/(2*X + 1 + sqrt(-5))", kM5);
  const auto p = polynomial_with_same_value(f, quad_ideal_toolkit(kM5));
  EXPECT_EQ(content_value(p, v), ExtendedValue(vv({{"q:2:ram", -1}})));
  EXPECT_EQ(content_value(p, v), w_value(f, v));
  // Its coefficients generate the inverse of P2 = (2, 1 + sqrt(-5)).
  std::vector<QuadElement> coeffs;
  for (const auto& c : p.coeffs()) {
    if (!is_zero(c)) coeffs.push_back(c);
  }
  const QuadIdeal p2 = QuadIdeal::from_generators(kM5, std::vector<QuadElement>{2, qe("1 + sqrt(-5)", kM5)});
  EXPECT_EQ(QuadIdeal::from_generators(kM5, coeffs), ideal_inverse(p2));
  EXPECT_EQ(ideal_inverse(p2), QuadIdeal::from_generators(kM5, std::vector<QuadElement>{1, qe("(1 + sqrt(-5))/2", kM5)}));
}

TEST(Contraction, Examples) {
  const auto v = rational_divisor_valuation();
  const auto tk = rational_ideal_toolkit();
  const auto b = contract_ideal(KroneckerIdeal<Rational>(v, {qf("2*X + 4")}), tk);
  EXPECT_EQ(b, (std::vector<Rational>{4, 2}));
  EXPECT_EQ(rational_ideal_generator(b), 2);
  EXPECT_EQ(contract_ideal(KroneckerIdeal<Rational>(v, {qf("1")}), tk), std::vector<Rational>{1});

  const auto vq = quad_valuation(kM5);
  const auto bq = contract_ideal(KroneckerIdeal<QuadElement>(vq, {kf("2*X + 1 + sqrt(-5)", kM5)}), quad_ideal_toolkit(kM5));
  EXPECT_EQ(QuadIdeal::from_generators(kM5, bq),
            QuadIdeal::from_generators(kM5, std::vector<QuadElement>{2, qe("1 + sqrt(-5)", kM5)}));
}

TEST(Contraction, RoundtripCheckExamples) {
  const auto v = rational_divisor_valuation();
  const auto tk = rational_ideal_toolkit();
  const std::vector<Rational> two{2};
  const std::vector<Rational> six{6};
  EXPECT_TRUE(extend_contract_roundtrip_check<Rational>(two, v, tk, six, {}));
  const std::vector<std::vector<QFunction>> mult{{qf("X + 3")}, {qf("1/(X^2 + 1)")}};
  EXPECT_TRUE(extend_contract_roundtrip_check<Rational>(two, v, tk, six, mult));

  const auto vq = quad_valuation(kM5);
  const std::vector<QuadElement> p2{2, qe("1 + sqrt(-5)", kM5)};
  const std::vector<QuadElement> t{qe("1 - sqrt(-5)", kM5), qe("3 + 3*sqrt(-5)", kM5)};
  EXPECT_TRUE(extend_contract_roundtrip_check<QuadElement>(p2, vq, quad_ideal_toolkit(kM5), t, {}));
  const std::vector<QuadElement> unit{1};
  const std::vector<QuadElement> any{qe("7 - 2*sqrt(-5)", kM5), 1, qe("3/1", kM5)};
  EXPECT_TRUE(extend_contract_roundtrip_check<QuadElement>(unit, vq, quad_ideal_toolkit(kM5), any, {}));

  // A deliberately wrong toolkit is caught.
  auto liar = tk;
  liar.member = [](const Rational&, std::span<const Rational>) { return false; };
  EXPECT_FALSE(extend_contract_roundtrip_check<Rational>(two, v, liar, six, {}));
}

TEST(IdealEquality, Examples) {
  const auto v = rational_divisor_valuation();
  EXPECT_TRUE(rw_ideal_equal(KroneckerIdeal<Rational>(v, {qf("2"), qf("X")}), KroneckerIdeal<Rational>(v, {qf("X^2 + 2")})));
  EXPECT_FALSE(rw_ideal_equal(KroneckerIdeal<Rational>(v, {qf("2")}), KroneckerIdeal<Rational>(v, {qf("4")})));
  const QFunction f = qf("(2*X + 6)/(X - 1)");
  EXPECT_TRUE(rw_ideal_equal(KroneckerIdeal<Rational>(v, {f}), KroneckerIdeal<Rational>(v, {f * qf("-1")})));
}

TEST(TValue, Examples) {
  EXPECT_EQ(t_value(qf("5")), ExtendedValue());
  EXPECT_EQ(t_value(qf("(X^2 - 1)/(X + 1)^2")), ExtendedValue(vv({{"f:X-1", 1}, {"f:X+1", -1}})));
  EXPECT_EQ(t_value(qf("0")), ExtendedValue::infinity());
}

TEST(UValue, Examples) {
  EXPECT_EQ(u_value(qf("3*X + 1")), ExtendedValue(vv({{"f:X+1/3", 1}})));
  EXPECT_TRUE(u_member(qf("3*X + 1")));
  EXPECT_EQ(w_value(qf("X/2"), rational_divisor_valuation()), ExtendedValue(vv({{"p:2", -1}})));
  EXPECT_FALSE(u_member(qf("X/2")));
  EXPECT_EQ(t_value(qf("1/X")), ExtendedValue(vv({{"f:X", -1}})));
  EXPECT_FALSE(u_member(qf("1/X")));
  EXPECT_EQ(u_value(qf("(X^2 - 1)/(2*X)")), ExtendedValue(vv({{"p:2", -1}, {"f:X-1", 1}, {"f:X", -1}, {"f:X+1", 1}})));
}

TEST(BasisWitness, Examples) {
  EXPECT_EQ(basis_witness(parse_label("p:5")), qf("5"));
  EXPECT_EQ(u_value(qf("5")), ExtendedValue(vv({{"p:5", 1}})));
  EXPECT_EQ(basis_witness(parse_label("f:X^2+1")), qf("X^2 + 1"));
  EXPECT_EQ(u_value(qf("X^2 + 1")), ExtendedValue(vv({{"f:X^2+1", 1}})));
  EXPECT_EQ(basis_witness(parse_label("f:X+1/3")), qf("3*X + 1"));
  EXPECT_THROW(basis_witness(parse_label("q:2:ram")), Error);
}

TEST(ReconstructUnit, UInstance) {
  const auto u = u_valuation();
  for (const char* s : {"(X^2 - 1)/(2*X)", "6*X + 3", "-4/(9*X^2 + 3*X)", "7"}) {
    const QFunction unit = reconstruct_unit(u, qf(s));
    EXPECT_EQ(u(unit), ExtendedValue()) << s;
  }
  EXPECT_EQ(reconstruct_unit(u, qf("-12*X")), qf("-1"));
}

TEST(ReconstructUnit, WInstance) {
  const auto w = w_valuation(rational_divisor_valuation());
  EXPECT_EQ(w(reconstruct_unit(w, qf("(12*X + 6)/(5*X^2 + 10)"))), ExtendedValue());
}

}  // namespace
}  // namespace demival
