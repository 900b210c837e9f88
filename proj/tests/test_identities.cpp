#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"

#include "elimkit/showcase.hpp"

using namespace elimkit;
using testutil::mp;

namespace {

using P = MultiPoly<BigInt>;

std::vector<P> random_specialization(IdentityId id, const std::vector<int>& degrees, std::uint64_t seed) {
  auto degs = poly_degrees(id, degrees);
  return integer_polys(gen_specialization(degs, {Mode::Integer, seed, 10, 0}), degs);
}

}  // namespace

TEST(Identities, SymbolicResOfRes) {
  auto s = symbolic_i1();
  EXPECT_TRUE(s.equal);
  EXPECT_EQ(s.lhs, s.det);
  EXPECT_NE(s.lhs.find("U1_1,0"), std::string::npos);
}

TEST(Identities, NamesAndHypotheses) {
  EXPECT_EQ(parse_identity("I7"), IdentityId::I7);
  EXPECT_EQ(parse_identity("i14"), IdentityId::I14);
  EXPECT_FALSE(parse_identity("I15").has_value());
  EXPECT_EQ(all_identities().size(), 14u);
  EXPECT_TRUE(check_hypotheses(IdentityId::I1, {1, 1, 1, 1}).empty());
  EXPECT_FALSE(check_hypotheses(IdentityId::I1, {1, 1, 1}).empty());
  EXPECT_FALSE(check_hypotheses(IdentityId::I4, {1, 2}).empty());
  EXPECT_FALSE(check_hypotheses(IdentityId::I12, {3}).empty());
  EXPECT_EQ(poly_degrees(IdentityId::I14, {4}), (std::vector<int>{1, 3}));
}

TEST(Identities, SuiteSmokeTest) {
  for (const auto& [id, degrees] : identity_suite()) {
    auto s = run_trials(id, degrees, 2, {Mode::Integer, 42, 10, 0});
    EXPECT_TRUE(s.ok()) << identity_name(id) << ": " << (s.failures.empty() ? "warning" : s.failures[0].detail);
  }
}

TEST(Identities, ResOfResOnPurePowers) {
  // P1 = X3^2 + X1^2, P2 = X2, P3 = X3 - X1, P4 = X3 + X2.
  std::vector<P> f{mp("X3^2 + X1^2"), mp("X2"), mp("X3 - X1"), mp("X3 + X2")};
  auto ev = evaluate_identity<BigInt>(IdentityId::I1, {2, 1, 1, 1}, f);
  EXPECT_TRUE(ev.all_equal());
  ASSERT_NE(ev.find("lhs"), nullptr);
}

TEST(Identities, LowDegreeFactorIsOne) {
  auto f = random_specialization(IdentityId::I5, {2, 1}, 3);
  EXPECT_EQ(extract_T(f[0], 2, f[1], 1), BigInt(1));
}

TEST(Identities, VanishingLeadIsDegenerate) {
  std::vector<P> f{mp("X1^2 + X1*X3 + X2^2"), mp("X1 + X2 + X3")};
  EXPECT_THROW(evaluate_identity<BigInt>(IdentityId::I5, {2, 1}, f), DegenerateInput);
}

TEST(Identities, DiscOfResSignAsPrintedFails) {
  // At (2,2) the printed sign is -1; the computed one is +1.
  auto ev = evaluate_identity<BigInt>(IdentityId::I6, {2, 2}, random_specialization(IdentityId::I6, {2, 2}, 5));
  EXPECT_TRUE(ev.all_equal());
  ASSERT_EQ(ev.printed.size(), 1u);
  EXPECT_EQ(ev.printed[0].lhs, -ev.printed[0].rhs);
  EXPECT_FALSE(ev.printed[0].lhs.is_zero());
}

TEST(Identities, DiscOfDiscPowerOfTwo) {
  auto f = random_specialization(IdentityId::I13, {4}, 6);
  auto ev = evaluate_identity<BigInt>(IdentityId::I13, {4}, f);
  EXPECT_TRUE(ev.all_equal());
  ASSERT_EQ(ev.printed.size(), 1u);
  EXPECT_EQ(ev.printed[0].lhs, pow(BigInt(2), 24) * ev.printed[0].rhs);
}

TEST(Identities, FactorsAreConsistent) {
  // F and the square root U satisfy the flex and pleat relations they are extracted from.
  auto f = random_specialization(IdentityId::I12, {4}, 7);
  BigInt u = extract_U(f[0], 4), r = script_R(f[0], 4), lead = f[0].coeff(Monomial::var(kX3, 4));
  EXPECT_EQ(r, pow(lead, 2 * 4 * 3 - 6) * u * u);
  auto ev = evaluate_identity<BigInt>(IdentityId::I10, {4}, f);
  EXPECT_TRUE(ev.all_equal());
  ASSERT_NE(ev.find("F"), nullptr);
  EXPECT_EQ(*ev.find("F"), extract_F(f[0], 4));
}

TEST(Showcase, QuarticFactorization) {
  auto s = quartic_showcase();
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.disc_z_y_degree, 12);
  EXPECT_TRUE(s.report.product_ok);
  EXPECT_TRUE(s.catalog_form_ok);
  EXPECT_FALSE(s.printed_form_ok);

  std::vector<int> mult;
  BigInt constant(0);
  for (const auto& f : s.report.factors) {
    if (f.label == "unit/leading") constant = f.poly.lead();
    else mult.push_back(f.multiplicity);
  }
  std::sort(mult.begin(), mult.end());
  EXPECT_EQ(mult, (std::vector<int>{1, 2, 2, 3}));
  EXPECT_EQ(constant, BigInt("5540271966595842048"));
  EXPECT_EQ(s.pleat.str(), "512000*x^2 - 1220608*x + 708608");
  int total = 0;
  for (const auto& f : s.report.factors) total += f.multiplicity * f.poly.degree();
  EXPECT_EQ(s.disc_disc.degree(), total);
}
