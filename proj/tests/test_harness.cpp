#include <gtest/gtest.h>

#include "json.hpp"
#include "test_util.hpp"

using namespace elimkit;

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    auto v = r.uniform(-3, 5);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 5);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Specialization, IntegerModeKeepsLeadNonzero) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto a = gen_specialization({2, 3}, {Mode::Integer, seed, 1, 0});
    ASSERT_EQ(a.size(), 2u);
    for (const auto& comp : a) {
      EXPECT_FALSE(comp[0].is_zero());  // slot (0,0) is U00
      for (const auto& c : comp) {
        EXPECT_LE(c.degree(), 0);
        if (!c.is_zero()) EXPECT_LE(abs(c.lead()), BigInt(1));
      }
    }
  }
}

TEST(Specialization, ParameterDegreeFollowsX1Exponent) {
  auto slots = coefficient_slots(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = gen_specialization({2}, {Mode::UniPolyInX, seed, 10, 0});
    for (std::size_t s = 0; s < slots.size(); ++s) {
      EXPECT_EQ(a[0][s].degree(), slots[s].first) << "slot (" << slots[s].first << "," << slots[s].second << ")";
    }
  }
}

TEST(Specialization, ProbeScalesOneComponent) {
  SpecializationSpec base{Mode::Integer, 9, 10, 0}, probe{Mode::TScalingProbe, 9, 10, 1};
  auto a = gen_specialization({1, 2}, base), b = gen_specialization({1, 2}, probe);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t s = 0; s < a[0].size(); ++s) EXPECT_EQ(a[0][s], b[0][s]);
  for (std::size_t s = 0; s < a[1].size(); ++s) EXPECT_EQ(a[1][s] * UniPoly::monomial(BigInt(1), 1), b[1][s]);
}

TEST(DegreeProbe, Examples) {
  auto r1 = check_degree(IdentityId::I1, {1, 1, 1, 1}, "lhs", 0, 1, 3);
  EXPECT_TRUE(r1.ok) << r1.detail;
  EXPECT_EQ(r1.observed, 1);
  auto r6 = check_degree(IdentityId::I6, {2, 2}, "lhs", 0, 12, 3);
  EXPECT_TRUE(r6.ok) << r6.detail;
  auto r10 = check_degree(IdentityId::I10, {3}, "F", 0, 9, 3);
  EXPECT_TRUE(r10.ok) << r10.detail;
  auto wrong = check_degree(IdentityId::I10, {3}, "F", 0, 8, 3);
  EXPECT_FALSE(wrong.ok);
  EXPECT_EQ(wrong.observed, 9);
}

TEST(DegreeProbe, PrintedExponentRefuted) {
  auto contracts = degree_contracts(IdentityId::I5, {3, 1});
  ASSERT_FALSE(contracts.empty());
  ASSERT_TRUE(contracts[0].printed.has_value());
  EXPECT_EQ(contracts[0].expected, 18);
  EXPECT_EQ(*contracts[0].printed, 72);
  auto r = check_degree(IdentityId::I5, {3, 1}, contracts[0].quantity, 0, *contracts[0].printed, 5);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.observed, 18);
}

TEST(Trials, ReportIsReproducible) {
  SpecializationSpec spec{Mode::Integer, 1234, 10, 0};
  auto a = run_trials(IdentityId::I4, {2, 2}, 3, spec), b = run_trials(IdentityId::I4, {2, 2}, 3, spec);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(report_json(a, false), report_json(b, false));
  auto j = nlohmann::json::parse(report_json(a, false));
  EXPECT_TRUE(j.at("timings_ms").is_null());
  EXPECT_EQ(j.at("seed"), 1234u);
  EXPECT_EQ(j.at("identity"), "I4");
  EXPECT_TRUE(j.at("failures").empty());
  EXPECT_TRUE(nlohmann::json::parse(report_json(a, true)).at("timings_ms").is_number());
}

TEST(Trials, ParameterMode) {
  auto s = run_trials(IdentityId::I7, {2, 2}, 1, {Mode::UniPolyInX, 5, 10, 0});
  EXPECT_TRUE(s.ok()) << (s.failures.empty() ? "" : s.failures[0].detail);
  EXPECT_EQ(mode_name(s.mode), "zx");
  EXPECT_EQ(parse_mode("tprobe"), Mode::TScalingProbe);
  EXPECT_FALSE(parse_mode("float").has_value());
}
