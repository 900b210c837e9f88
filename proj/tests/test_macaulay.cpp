#include <gtest/gtest.h>

#include "checks.hpp"
#include "test_util.hpp"

using namespace elimkit;
using testutil::mp;

namespace {

using P = MultiPoly<BigInt>;
const std::vector<int> kXYZ{kX1, kX2, kX3};

void expect_ok(const checks::Tally& t) { EXPECT_TRUE(t.ok()) << t.failures << "/" << t.cases << ": " << t.first_failure; }

}  // namespace

TEST(Macaulay, Normalization) {
  EXPECT_EQ(mres<BigInt>({mp("X1^2"), mp("X2"), mp("X3^3")}, {2, 1, 3}, kXYZ), BigInt(1));
  expect_ok(checks::normalization(2));
}

TEST(Macaulay, LinearFormsAreDeterminant) { expect_ok(checks::axiom(checks::Axiom::LinearDet, 10, 1)); }

TEST(Macaulay, Axioms) {
  using checks::Axiom;
  for (Axiom a : {Axiom::PermutationSign, Axiom::Multiplicativity, Axiom::Elementary, Axiom::BaseChange,
                  Axiom::Homogeneity, Axiom::Isobarity})
    expect_ok(checks::axiom(a, 5, 7));
}

TEST(Macaulay, TranspositionOneOneTwo) {
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    auto f1 = testutil::random_form(rng, kXYZ, 1), f2 = testutil::random_form(rng, kXYZ, 1),
         f3 = testutil::random_form(rng, kXYZ, 2);
    // sign(sigma)^(1*1*2) = 1
    EXPECT_EQ(mres<BigInt>({f2, f1, f3}, {1, 1, 2}, kXYZ), mres<BigInt>({f1, f2, f3}, {1, 1, 2}, kXYZ));
  }
}

TEST(Macaulay, PolarDiscriminant) { expect_ok(checks::axiom(checks::Axiom::PolarDisc, 6, 9)); }

TEST(Macaulay, PolarDiscriminantMismatchedLine) {
  // Res(d1P, d2P, P) pairs with the line X3 = 0, not X1 = 0.
  auto p = mp("X1^2 + 2*X2^2 + 3*X3^2 + X1*X2");
  BigInt lhs = mres<BigInt>({mp_partial(p, kX1), mp_partial(p, kX2), p}, {1, 1, 2}, kXYZ);
  BigInt wrong_line = disc_ternary(p, 2) * disc_uni(std::vector<BigInt>{2, 0, 3}, 2);
  BigInt right_line = disc_ternary(p, 2) * disc_uni(std::vector<BigInt>{2, 1, 1}, 2);
  EXPECT_NE(lhs, wrong_line);
  EXPECT_EQ(lhs, right_line);
}

TEST(Macaulay, Errors) {
  EXPECT_THROW(mres<BigInt>({mp("X1^2+X2"), mp("X2"), mp("X3")}, {2, 1, 1}, kXYZ), NonHomogeneous);
  EXPECT_THROW(mres<BigInt>({mp("X1*X4"), mp("X2"), mp("X3")}, {2, 1, 1}, kXYZ), NonHomogeneous);
}

TEST(Macaulay, SharedZeroGivesZero) {
  // All three vanish at (1:1:1).
  Rng rng(10);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<P> f;
    for (int d : {1, 2, 2}) {
      auto g = testutil::random_form(rng, kXYZ, d);
      BigInt at = BigInt(0);
      for (const auto& t : g.terms()) at = at + t.c;
      f.push_back(g - mp_pow(mp("X1"), d).scale(at));
    }
    EXPECT_EQ(mres<BigInt>(f, {1, 2, 2}, kXYZ), BigInt(0));
  }
}

TEST(Macaulay, ParameterRingMatchesEvaluation) {
  Rng rng(12);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<MultiPoly<UniPoly>> f;
    std::vector<int> d{2, 1, 2};
    for (int di : d) {
      auto g = testutil::random_form(rng, kXYZ, di, 4) + testutil::random_form(rng, kXYZ, di, 4) * mp("x") +
               testutil::random_form(rng, kXYZ, di, 4) * mp("x^2");
      f.push_back(lift_parameter(g));
    }
    UniPoly r = mres<UniPoly>(f, d, kXYZ);
    for (int x = -3; x <= 3; ++x) {
      std::vector<P> fx;
      for (const auto& g : f) fx.push_back(eval_parameter(g, BigInt(x)));
      EXPECT_EQ(r.eval(BigInt(x)), mres<BigInt>(fx, d, kXYZ));
    }
  }
}

TEST(Macaulay, EliminatingMatchesSylvester) {
  // With the homogenizing variable first, Res = (-1)^(mn) Res_X3 of the affine pair.
  Rng rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    int m = 1 + trial % 2, n = 3;
    auto f = testutil::random_poly(rng, {kX3}, m, false), g = testutil::random_poly(rng, {kX3}, n, false);
    P syl = res_uni(sylvester_spec(mp_as_declared(f, kX3, m), mp_as_declared(g, kX3, n)));
    if (m * n % 2) syl = -syl;
    EXPECT_EQ(P(resultant_eliminating<BigInt>({f, g}, {kX3}, {m, n}, kX1)), syl);
  }
  // Two lines and a conic through the origin of the affine chart.
  EXPECT_EQ(resultant_eliminating<BigInt>({mp("X2+X3"), mp("X2-2*X3"), mp("X2^2+X3^2+X2*X3")}, {kX2, kX3}, {1, 1, 2}, kX1),
            BigInt(0));
}

TEST(Macaulay, ResOfResIsIdentityOne) {
  // Res over (z, y, z') of four random forms equals the iterated Sylvester resultant.
  Rng rng(14);
  std::vector<MultiPoly<BigInt>> f;
  for (int k = 0; k < 4; ++k) f.push_back(testutil::random_form(rng, {kX1, kX2, kX3}, 1, 5));
  auto ev = evaluate_identity<BigInt>(IdentityId::I1, {1, 1, 1, 1}, f);
  EXPECT_TRUE(ev.all_equal());
}

TEST(TernaryDisc, Examples) {
  EXPECT_EQ(disc_ternary(mp("X1^2+X2^2+X3^2"), 2), BigInt(4));
  EXPECT_EQ(disc_ternary(mp("X1^3"), 3), BigInt(0));
  // Nodal cubic X2^2 X3 - X1^2 (X1 + X3) is singular.
  EXPECT_EQ(disc_ternary(mp("X2^2*X3 - X1^3 - X1^2*X3"), 3), BigInt(0));
  EXPECT_THROW(disc_ternary(mp("X1^2+X2"), 2), NonHomogeneous);
}

TEST(TernaryDisc, DegreeTwelveForCubics) {
  Rng rng(15);
  auto p = testutil::random_form(rng, kXYZ, 3, 5);
  BigInt base = disc_ternary(p, 3);
  ASSERT_FALSE(base.is_zero());
  for (int s : {2, 3}) EXPECT_EQ(disc_ternary(p.scale(BigInt(s)), 3), pow(BigInt(s), 12) * base);
}

TEST(PairDisc, ExactAndDegree) {
  Rng rng(16);
  int done = 0;
  while (done < 4) {
    auto p1 = testutil::random_form(rng, kXYZ, 2, 5), p2 = testutil::random_form(rng, kXYZ, 2, 5);
    BigInt base;
    try {
      base = disc_pair(p1, 2, p2, 2);
    } catch (const DenominatorZero&) {
      continue;
    }
    ++done;
    // degree d2 (2(d1-1) + d2 - 1) = 6 in the coefficients of P1
    EXPECT_EQ(disc_pair(p1.scale(BigInt(3)), 2, p2, 2), pow(BigInt(3), 6) * base);
  }
}

TEST(PairDisc, TangentPairVanishes) {
  // Both conics pass through (1:0:0) with tangent line X3 = 0 there.
  EXPECT_EQ(disc_pair(mp("X1*X3 + X2^2 + X3^2 + X2*X3"), 2, mp("2*X1*X3 - X2^2 + 3*X3^2"), 2), BigInt(0));
  // Common zero (0:0:1) on the line X1 = 0.
  EXPECT_THROW(disc_pair(mp("X2^2 + X1*X3"), 2, mp("X2*X3 + X1^2"), 2), DenominatorZero);
}
