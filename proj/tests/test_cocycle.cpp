#include <gtest/gtest.h>

#include "pvkit/classify.hpp"
#include "pvkit/cocycle.hpp"
#include "testutil.hpp"

using namespace pvkit;

namespace {

CMat scalar(const CycloNum& v) {
  CMat m(1, 1);
  m(0, 0) = v;
  return m;
}

GammaAction mu_to_gm(long k) {
  GammaAction act;
  act.group = cyclic_group(k);
  act.target = {TargetKind::Gm, 1};
  act.level = k;
  return act;
}

Cocycle scalar_cocycle(std::initializer_list<CycloNum> vs) {
  Cocycle a;
  for (const CycloNum& v : vs) a.values.push_back(scalar(v));
  return a;
}

}  // namespace

TEST(Cocycle, ValidationAndHandExamples) {
  GammaAction act = mu_to_gm(2);
  EXPECT_TRUE(is_cocycle(trivial_cocycle(act), act));
  EXPECT_TRUE(is_cocycle(scalar_cocycle({CycloNum(1), CycloNum(-1)}), act));
  // First value must be the identity.
  EXPECT_FALSE(is_cocycle(scalar_cocycle({CycloNum(-1), CycloNum(1)}), act));
  // a_g * a_g must equal a_e.
  GammaAction act4 = mu_to_gm(2);
  act4.level = 4;
  CycloNum i4 = root_of_unity(4, 4);
  EXPECT_FALSE(is_cocycle(scalar_cocycle({CycloNum(1), i4}), act4));
  // Zero is outside G_m.
  EXPECT_FALSE(is_cocycle(scalar_cocycle({CycloNum(1), CycloNum(0)}), act));
}

TEST(Cocycle, ApplyActionExponentsAndScales) {
  GammaAction act = mu_to_gm(2);
  act.exponents = {1, -1};
  act.level = 4;
  CycloNum i4 = root_of_unity(4, 4);
  EXPECT_EQ(apply_action(act, 1, scalar(i4))(0, 0), CycloNum(1) / i4);
  EXPECT_EQ(apply_action(act, 0, scalar(i4))(0, 0), i4);

  GammaAction ga;
  ga.group = cyclic_group(2);
  ga.target = {TargetKind::Ga, 1};
  ga.scales = {CycloNum(1), CycloNum(-1)};
  EXPECT_EQ(apply_action(ga, 1, scalar(CycloNum(5)))(0, 0), CycloNum(-5));
}

TEST(Equivalence, DiagonalPathTrivialAction) {
  GammaAction act = mu_to_gm(2);
  Cocycle neg = scalar_cocycle({CycloNum(1), CycloNum(-1)});
  Cocycle triv = trivial_cocycle(act);
  EXPECT_EQ(are_equivalent(neg, triv, act).decision, Decision::no);
  EXPECT_EQ(are_equivalent(triv, neg, act).decision, Decision::no);
  auto same = are_equivalent(neg, neg, act);
  EXPECT_EQ(same.decision, Decision::yes);
  ASSERT_TRUE(same.witness.has_value());
  EXPECT_TRUE(check_equivalence_witness(neg, neg, act, *same.witness));
}

TEST(Equivalence, InvertingActionNeedsSquareRoots) {
  // sigma(c) = c^{-1}: the coboundary of c is c^{-2}, so (1, q) splits
  // exactly when q has a square root in the constants.
  GammaAction act2 = mu_to_gm(2);
  act2.exponents = {1, -1};
  Cocycle q = scalar_cocycle({CycloNum(1), CycloNum(-1)});
  // Level 2 constants are the rationals: no square root of -1.
  EXPECT_EQ(are_equivalent(q, trivial_cocycle(act2), act2).decision,
            Decision::no);

  GammaAction act4 = mu_to_gm(2);
  act4.exponents = {1, -1};
  act4.level = 4;
  auto res = are_equivalent(q, trivial_cocycle(act4), act4);
  EXPECT_EQ(res.decision, Decision::yes);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_TRUE(check_equivalence_witness(q, trivial_cocycle(act4), act4,
                                        *res.witness));
}

TEST(Equivalence, AdditiveTargetAlwaysSplitsUnderScaling) {
  GammaAction act;
  act.group = cyclic_group(2);
  act.target = {TargetKind::Ga, 1};
  act.scales = {CycloNum(1), CycloNum(-1)};
  Cocycle a = scalar_cocycle({CycloNum(0), CycloNum(6)});
  EXPECT_TRUE(is_cocycle(a, act));
  Cocycle zero = scalar_cocycle({CycloNum(0), CycloNum(0)});
  auto res = are_equivalent(a, zero, act);
  EXPECT_EQ(res.decision, Decision::yes);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ((*res.witness)(0, 0), CycloNum(-3));

  // With the trivial action the only additive cocycle is zero, and a
  // nonzero constant function is not equivalent to it.
  GammaAction flat = act;
  flat.scales = {CycloNum(1), CycloNum(1)};
  EXPECT_EQ(are_equivalent(a, zero, flat).decision, Decision::no);
}

TEST(Equivalence, MatrixTargetWitnessAndUndecided) {
  GammaAction act;
  act.group = cyclic_group(2);
  act.target = {TargetKind::GLm, 2};
  act.level = 1;
  CMat swap(2, 2);
  swap(0, 1) = CycloNum(1);
  swap(1, 0) = CycloNum(1);
  CMat c = CMat::identity(2);
  c(0, 1) = CycloNum(1);
  Cocycle b;
  b.values = {CMat::identity(2), swap};
  Cocycle a;
  a.values = {CMat::identity(2), inverse(c) * swap * c};
  EXPECT_TRUE(is_cocycle(a, act));
  EXPECT_TRUE(is_cocycle(b, act));
  // With the witness supplied the answer is exact.
  EXPECT_EQ(are_equivalent(a, b, act, c).decision, Decision::yes);
  // Identity witness resolves reflexivity immediately.
  EXPECT_EQ(are_equivalent(b, b, act).decision, Decision::yes);
  // I and -I are inequivalent but the bounded search cannot prove it.
  Cocycle mi;
  mi.values = {CMat::identity(2),
               CycloNum(-1) * CMat::identity(2)};
  EXPECT_TRUE(is_cocycle(mi, act));
  EXPECT_EQ(are_equivalent(mi, b, act).decision, Decision::undecided);
}

TEST(Equivalence, RejectsValuesOutsideTarget) {
  GammaAction act;
  act.group = cyclic_group(2);
  act.target = {TargetKind::Mu, 2};
  act.level = 4;
  CycloNum i4 = root_of_unity(4, 4);
  Cocycle bad = scalar_cocycle({CycloNum(1), i4});
  EXPECT_THROW(are_equivalent(bad, trivial_cocycle(act), act), InputError);
}

TEST(EnumerateH1, CountsForRootsOfUnityIntoGm) {
  for (long k = 2; k <= 6; ++k) {
    GammaAction act = mu_to_gm(k);
    std::vector<Cocycle> classes = enumerate_h1(act);
    EXPECT_EQ(classes.size(), static_cast<std::size_t>(k)) << "k=" << k;
    for (const Cocycle& a : classes) EXPECT_TRUE(is_cocycle(a, act));
    for (std::size_t i = 0; i + 1 < classes.size(); ++i)
      EXPECT_LT(detail::cocycle_cmp(classes[i], classes[i + 1]), 0);
  }
}

TEST(EnumerateH1, ClassesArePairwiseInequivalent) {
  for (long k : {2L, 3L}) {
    GammaAction act = mu_to_gm(k);
    std::vector<Cocycle> classes = enumerate_h1(act);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = 0; j < classes.size(); ++j) {
        Decision d = are_equivalent(classes[i], classes[j], act).decision;
        EXPECT_EQ(d, i == j ? Decision::yes : Decision::no);
      }
  }
}

TEST(EnumerateH1, FiniteTargetAndTorus) {
  // mu_2 into mu_4 at level 4: Hom(Z/2, Z/4) has two elements.
  GammaAction act;
  act.group = cyclic_group(2);
  act.target = {TargetKind::Mu, 4};
  act.level = 4;
  EXPECT_EQ(enumerate_h1(act).size(), 2u);
  // Values land in mu_4.
  for (const Cocycle& a : enumerate_h1(act))
    for (const CMat& v : a.values) EXPECT_EQ(v(0, 0).pow(4), CycloNum(1));

  // Rank-2 torus: coordinates are independent.
  GammaAction tor = mu_to_gm(3);
  tor.target = {TargetKind::DiagTorus, 2};
  EXPECT_EQ(enumerate_h1(tor).size(), 9u);

  // Additive target collapses to the single zero class.
  GammaAction ga;
  ga.group = cyclic_group(5);
  ga.target = {TargetKind::Ga, 1};
  std::vector<Cocycle> z = enumerate_h1(ga);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].values[1](0, 0).is_zero());
}

TEST(EnumerateH1, RefusesLargeOrUnsupportedInputs) {
  GammaAction big = mu_to_gm(13);
  EXPECT_THROW(enumerate_h1(big), InputError);
  GammaAction glm;
  glm.group = cyclic_group(2);
  glm.target = {TargetKind::GLm, 2};
  EXPECT_THROW(enumerate_h1(glm), InputError);
  GammaAction twisted = mu_to_gm(2);
  twisted.exponents = {1, -1};
  EXPECT_THROW(enumerate_h1(twisted), InputError);
}

TEST(Twisting, RoundtripThroughEveryClass) {
  for (long k : {2L, 3L}) {
    GammaAction act = mu_to_gm(k);
    FinHopfGalois s = kummer_extension(k);
    ScalarExtension ambient = extend_scalars(trivial_object(1), s);
    for (const Cocycle& a : enumerate_h1(act)) {
      TwistedFormDesc tf = twisted_form_from_cocycle(a, act, ambient);
      EXPECT_NO_THROW(validate_twisted_form(tf));
      Cocycle back = construction_F(tf, act);
      EXPECT_TRUE(is_cocycle(back, act));
      EXPECT_EQ(are_equivalent(back, a, act).decision, Decision::yes);
    }
  }
}

TEST(Twisting, TwistedDerivationsRealizeKummerClasses) {
  // Over the order-k Kummer extension the class with a_g = zeta_k^j twists
  // the trivial line into y' = (j/(k x)) y up to gauge.
  long k = 3;
  GammaAction act = mu_to_gm(k);
  FinHopfGalois s = kummer_extension(k);
  ScalarExtension ambient = extend_scalars(trivial_object(1), s);
  std::vector<DiagGroup> seen;
  for (const Cocycle& a : enumerate_h1(act)) {
    PhiObject n = construction_G(a, act, ambient);
    ASSERT_EQ(n.d, 1);
    seen.push_back(rank1_group(n.derivation(0, 0)));
  }
  long trivial_count = 0, mu3_count = 0;
  for (const DiagGroup& g : seen) {
    if (g.is_trivial()) ++trivial_count;
    if (g.name() == "mu(3)") ++mu3_count;
  }
  EXPECT_EQ(trivial_count, 1);
  EXPECT_EQ(mu3_count, 2);
}

TEST(Twisting, HigherRankAmbient) {
  // Twisting a rank-2 trivial object by a scalar cocycle acts on both
  // coordinates at once.
  GammaAction act = mu_to_gm(2);
  FinHopfGalois s = kummer_extension(2);
  ScalarExtension ambient = extend_scalars(trivial_object(2), s);
  Cocycle neg;
  neg.values = {CMat::identity(1), scalar(CycloNum(-1))};
  TwistedFormDesc tf = twisted_form_from_cocycle(neg, act, ambient);
  EXPECT_EQ(tf.twisted.d, 2);
  EXPECT_NO_THROW(validate_twisted_form(tf));
  Cocycle back = construction_F(tf, act);
  EXPECT_EQ(are_equivalent(back, neg, act).decision, Decision::yes);
}

TEST(Twisting, DimensionDefectOnCorruptedExtension) {
  GammaAction act = mu_to_gm(2);
  FinHopfGalois s = corrupted_extension(2);
  ScalarExtension ambient = extend_scalars(trivial_object(1), s);
  Cocycle neg;
  neg.values = {CMat::identity(1), scalar(CycloNum(-1))};
  EXPECT_THROW(construction_G(neg, act, ambient), Error);
}

TEST(Twisting, InputChecks) {
  GammaAction act = mu_to_gm(2);
  FinHopfGalois s = kummer_extension(3);
  ScalarExtension ambient = extend_scalars(trivial_object(1), s);
  Cocycle neg;
  neg.values = {CMat::identity(1), scalar(CycloNum(-1))};
  // Group of order 2 against an extension of order 3.
  EXPECT_THROW(construction_G(neg, act, ambient), InputError);

  GammaAction ga;
  ga.group = cyclic_group(2);
  ga.target = {TargetKind::Ga, 1};
  TwistedFormDesc tf;
  tf.base = trivial_object(1);
  tf.twisted = trivial_object(1);
  tf.s = kummer_extension(2);
  tf.iso = FMat::identity(2);
  EXPECT_THROW(construction_F(tf, ga), InputError);
}
