#include <gtest/gtest.h>

#include "pvkit/cyclo.hpp"

using namespace pvkit;

TEST(CyclotomicPolynomial, SmallLevels) {
  // Phi_1 = x - 1
  auto p1 = cyclotomic_polynomial(1);
  ASSERT_EQ(p1.size(), 2u);
  EXPECT_EQ(p1[0], Integer(-1));
  EXPECT_EQ(p1[1], Integer(1));
  // Phi_4 = x^2 + 1
  auto p4 = cyclotomic_polynomial(4);
  ASSERT_EQ(p4.size(), 3u);
  EXPECT_EQ(p4[0], Integer(1));
  EXPECT_EQ(p4[1], Integer(0));
  EXPECT_EQ(p4[2], Integer(1));
  // Phi_6 = x^2 - x + 1
  auto p6 = cyclotomic_polynomial(6);
  ASSERT_EQ(p6.size(), 3u);
  EXPECT_EQ(p6[0], Integer(1));
  EXPECT_EQ(p6[1], Integer(-1));
  EXPECT_EQ(p6[2], Integer(1));
  // Phi_12 = x^4 - x^2 + 1
  auto p12 = cyclotomic_polynomial(12);
  ASSERT_EQ(p12.size(), 5u);
  EXPECT_EQ(p12[0], Integer(1));
  EXPECT_EQ(p12[2], Integer(-1));
  EXPECT_EQ(p12[4], Integer(1));
  // Phi_105 is the first with a coefficient of magnitude 2.
  auto p105 = cyclotomic_polynomial(105);
  ASSERT_EQ(p105.size(), 49u);
  bool has_two = false;
  for (const auto& c : p105)
    if (c == Integer(-2)) has_two = true;
  EXPECT_TRUE(has_two);
}

TEST(CycloNum, BasicArithmetic) {
  CycloNum i = CycloNum::zeta(4);
  EXPECT_EQ(i * i, CycloNum(-1));
  EXPECT_EQ(i.pow(4), CycloNum(1));
  EXPECT_EQ(i.pow(3), -i);

  CycloNum w = CycloNum::zeta(3);
  EXPECT_EQ(w * w + w + CycloNum(1), CycloNum(0));
  EXPECT_EQ(w.pow(3), CycloNum(1));
}

TEST(CycloNum, InverseRoundtrip) {
  CycloNum z = CycloNum::zeta(12);
  CycloNum a = z.pow(5) + CycloNum(3) * z - CycloNum(Rational(7, 2));
  EXPECT_EQ(a * a.inverse(), CycloNum(1));

  CycloNum w = CycloNum::zeta(5);
  CycloNum b = w + w.pow(4);  // 2cos(2pi/5), a real quadratic irrational
  EXPECT_EQ(b * b.inverse(), CycloNum(1));
  // b satisfies b^2 + b - 1 = 0
  EXPECT_EQ(b * b + b - CycloNum(1), CycloNum(0));

  EXPECT_THROW(CycloNum(0).inverse(), Error);
}

TEST(CycloNum, PromotionAndEquality) {
  // zeta_6^2 = zeta_3, compared across levels
  CycloNum z6 = CycloNum::zeta(6);
  CycloNum z3 = CycloNum::zeta(3);
  EXPECT_EQ(z6 * z6, z3);
  EXPECT_EQ(z6.pow(3), CycloNum(-1));
  // Mixed-level arithmetic: zeta_4 * zeta_3 has level 12
  CycloNum z4 = CycloNum::zeta(4);
  CycloNum prod = z4 * z3;
  EXPECT_EQ(prod.pow(12), CycloNum(1));
  EXPECT_EQ(prod.pow(6), CycloNum(-1));
  // Rational values collapse to level 1 comparisons
  EXPECT_EQ(z6 + (-z6) + CycloNum(5), CycloNum(5));
}

TEST(CycloNum, IsRational) {
  EXPECT_TRUE(CycloNum(Rational(3, 4)).is_rational());
  CycloNum z8 = CycloNum::zeta(8);
  EXPECT_FALSE(z8.is_rational());
  // zeta_8^2 = i is not rational; zeta_8^4 = -1 is
  EXPECT_FALSE(z8.pow(2).is_rational());
  EXPECT_TRUE(z8.pow(4).is_rational());
  EXPECT_EQ(z8.pow(4).rational_value(), Rational(-1));
}

TEST(CycloNum, Division) {
  CycloNum z = CycloNum::zeta(8);
  CycloNum a = CycloNum(2) + z;
  CycloNum b = CycloNum(1) - z.pow(3);
  CycloNum q = a / b;
  EXPECT_EQ(q * b, a);
}

TEST(CycloNum, Ordering) {
  CycloNum z = CycloNum::zeta(4);
  EXPECT_EQ(CycloNum::cmp(z, z), 0);
  CycloNum a = z + CycloNum(1);
  EXPECT_NE(CycloNum::cmp(a, z), 0);
  // cmp is antisymmetric
  EXPECT_EQ(CycloNum::cmp(a, z), -CycloNum::cmp(z, a));
  // cmp agrees with equality across levels
  EXPECT_EQ(CycloNum::cmp(CycloNum::zeta(6) * CycloNum::zeta(6),
                          CycloNum::zeta(3)),
            0);
}

TEST(RootsOfUnity, GroupOrder) {
  // Level 1: {1, -1}; even level N: order N; odd level N: order 2N.
  EXPECT_EQ(roots_of_unity_order(1), 2);
  EXPECT_EQ(roots_of_unity_order(2), 2);
  EXPECT_EQ(roots_of_unity_order(3), 6);
  EXPECT_EQ(roots_of_unity_order(4), 4);
  EXPECT_EQ(roots_of_unity_order(5), 10);
  EXPECT_EQ(roots_of_unity_order(12), 12);
}

TEST(RootsOfUnity, PrimitiveKthRoot) {
  // A primitive k-th root exists in Q(zeta_N) iff k divides the group order.
  CycloNum r2 = root_of_unity(1, 2);
  EXPECT_EQ(r2, CycloNum(-1));
  CycloNum r4 = root_of_unity(4, 4);
  EXPECT_EQ(r4.pow(4), CycloNum(1));
  EXPECT_NE(r4.pow(2), CycloNum(1));
  CycloNum r6 = root_of_unity(3, 6);
  EXPECT_EQ(r6.pow(6), CycloNum(1));
  EXPECT_NE(r6.pow(3), CycloNum(1));
  EXPECT_NE(r6.pow(2), CycloNum(1));
  EXPECT_THROW(root_of_unity(4, 3), Error);
  EXPECT_THROW(root_of_unity(1, 4), Error);
}

TEST(CycloNum, FieldPow) {
  CycloNum z = CycloNum::zeta(4);
  CycloNum a = z + CycloNum(2);
  EXPECT_EQ(field_pow(a, 0), CycloNum(1));
  EXPECT_EQ(field_pow(a, 3), a * a * a);
  EXPECT_EQ(field_pow(a, -2) * a * a, CycloNum(1));
}
