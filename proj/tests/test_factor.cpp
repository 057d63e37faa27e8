#include <gtest/gtest.h>

#include "pvkit/factor.hpp"

using namespace pvkit;

namespace {

Poly P(std::initializer_list<long> coeffs) {
  std::vector<CycloNum> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(v);
}

// Every factor must be monic and nonconstant; reassembly must be exact.
void check_factorization(const Poly& input, const Factorization& fac) {
  for (const auto& [p, m] : fac.factors) {
    EXPECT_TRUE(p.is_monic());
    EXPECT_GE(p.deg(), 1);
    EXPECT_GE(m, 1);
  }
  EXPECT_EQ(fac.reassemble(), input);
}

}  // namespace

TEST(FactorQ, Linear) {
  Poly f = P({-1, 0, 1});  // x^2 - 1
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0].first, P({-1, 1}));
  EXPECT_EQ(fac.factors[1].first, P({1, 1}));
}

TEST(FactorQ, IrreducibleQuadratic) {
  Poly f = P({1, 0, 1});  // x^2 + 1, irreducible over Q
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 1u);
  EXPECT_EQ(fac.factors[0].second, 1);
}

TEST(FactorQ, Multiplicities) {
  Poly f = P({-1, 1}).pow(3) * P({1, 1}) * P({1, 1, 1}).pow(2);
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 3u);
}

TEST(FactorQ, RationalCoefficients) {
  // (x - 1/2)(x + 1/3) scaled by 6: factor_irreducible normalizes the unit
  Poly f = CycloNum(Rational(1, 6)) * (P({-1, 2}) * P({1, 3}));
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 2u);
}

TEST(FactorQ, MediumDegreeProduct) {
  // Mix of an irreducible cubic, quadratic, and two linears
  Poly f = P({1, 1, 0, 1}) * P({3, 0, 1}) * P({-2, 1}) * P({5, 1});
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 4u);
}

TEST(FactorQ, LargeCoefficients) {
  // (x^2 + 10^9) * (x^3 - 10^7 x + 3)
  Poly a = Poly::monomial(CycloNum(1), 2) + Poly(CycloNum(1000000000L));
  Poly b = Poly::monomial(CycloNum(1), 3) -
           Poly::monomial(CycloNum(10000000L), 1) + Poly(CycloNum(3));
  Poly f = a * b;
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 2u);
}

TEST(FactorQ, SwinnertonDyerLike) {
  // x^4 - 10x^2 + 1 (minimal polynomial of sqrt2 + sqrt3): irreducible over
  // Q, but splits mod every prime. Exercises the recombination step.
  Poly f = P({1, 0, -10, 0, 1});
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 1u);
  EXPECT_EQ(fac.factors[0].second, 1);
}

TEST(FactorCyclo, GaussianSplit) {
  // Over Q(zeta_4): x^2 + 1 = (x - zeta)(x + zeta)
  CycloNum i = CycloNum::zeta(4);
  Poly f = P({1, 0, 1});
  // Promoting the coefficients declares the ambient field Q(zeta_4).
  auto fac = factor_irreducible(Poly(std::vector<CycloNum>{
      CycloNum(1).promoted(4), CycloNum(0).promoted(4), CycloNum(1).promoted(4)}));
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 2u);
  // The two factors are x -/+ zeta in canonical order
  Poly f1 = fac.factors[0].first, f2 = fac.factors[1].first;
  EXPECT_EQ(f1 * f2, f);
  EXPECT_TRUE((f1 == Poly(std::vector<CycloNum>{-i, CycloNum(1)}) &&
               f2 == Poly(std::vector<CycloNum>{i, CycloNum(1)})) ||
              (f2 == Poly(std::vector<CycloNum>{-i, CycloNum(1)}) &&
               f1 == Poly(std::vector<CycloNum>{i, CycloNum(1)})));
}

TEST(FactorCyclo, EisensteinSplit) {
  // Over Q(zeta_3): x^2 + x + 1 = (x - zeta_3)(x - zeta_3^2)
  Poly f(std::vector<CycloNum>{CycloNum(1).promoted(3), CycloNum(1).promoted(3),
                               CycloNum(1).promoted(3)});
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 2u);
  for (const auto& [p, m] : fac.factors) {
    EXPECT_EQ(m, 1);
    // Each factor has a primitive cube root of unity as its root
    CycloNum root = -p.coeff(0);
    EXPECT_EQ(root.pow(3), CycloNum(1));
    EXPECT_NE(root, CycloNum(1));
  }
}

TEST(FactorCyclo, NontrivialNormShift) {
  // f = x^2 - zeta_4: roots are primitive 8th roots of unity, not in
  // Q(zeta_4), so f is irreducible there and the norm needs a shift.
  CycloNum i = CycloNum::zeta(4);
  Poly f = Poly::monomial(CycloNum(1).promoted(4), 2) - Poly(i);
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 1u);
}

TEST(FactorCyclo, SplitsAtLevelEight) {
  // Same polynomial over Q(zeta_8): x^2 - i = (x - zeta_8)(x + zeta_8)
  CycloNum z = CycloNum::zeta(8);
  Poly f = Poly::monomial(CycloNum(1).promoted(8), 2) - Poly(z.pow(2));
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 2u);
}

TEST(FactorCyclo, MixedWithMultiplicity) {
  // (x - zeta_6)^2 (x^2 + 1) over Q(zeta_12): the quadratic splits too
  CycloNum z6 = CycloNum::zeta(6).promoted(12);
  Poly lin(std::vector<CycloNum>{-z6, CycloNum(1).promoted(12)});
  Poly f = lin.pow(2) * P({1, 0, 1});
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 3u);
  bool found_sq = false;
  for (const auto& [p, m] : fac.factors)
    if (m == 2) {
      found_sq = true;
      EXPECT_EQ(p, lin);
    }
  EXPECT_TRUE(found_sq);
}

TEST(FactorCyclo, CyclotomicPolynomialSplitsCompletely) {
  // Phi_5 over Q(zeta_5) splits into 4 linear factors
  auto phi5 = cyclotomic_polynomial(5);
  std::vector<CycloNum> cs;
  for (const auto& c : phi5) cs.push_back(CycloNum(Rational(c)).promoted(5));
  Poly f(cs);
  auto fac = factor_irreducible(f);
  check_factorization(f, fac);
  ASSERT_EQ(fac.factors.size(), 4u);
  for (const auto& [p, m] : fac.factors) EXPECT_EQ(p.deg(), 1);
}

TEST(FactorEdge, ZeroAndConstants) {
  EXPECT_THROW(factor_irreducible(Poly()), Error);
  auto fac = factor_irreducible(Poly(CycloNum(Rational(3, 7))));
  EXPECT_TRUE(fac.factors.empty());
  EXPECT_EQ(fac.unit, CycloNum(Rational(3, 7)));
}
