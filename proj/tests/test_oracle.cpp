#include <gtest/gtest.h>

#include "zipdata/verify.hpp"

using namespace zipdata;

TEST(Oracle, SubwordIntervalOfLongestElement) {
  auto g = CoxeterGroup::from_type("B2");
  EXPECT_EQ(oracle::subword_products(g, g.parse_element("1,2,1,2")).size(), 8u);
  EXPECT_EQ(oracle::subword_products(g, g.parse_element("1,2")).size(), 4u);
}

TEST(Oracle, IwOracleFindsUniqueMinima) {
  auto g = CoxeterGroup::from_type("A2");
  auto reps = oracle::iw_oracle(g, {1});
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_EQ(reps[2].str(), "2,1");
}

TEST(Oracle, SigmaOracleOnA2) {
  auto g = CoxeterGroup::from_type("A2");
  ZipDatum z(g, {1}, {2}, {{1, 2}});
  EXPECT_EQ(oracle::sigma_oracle(z, g.parse_element("2")).str(), "1");
}

TEST(Oracle, PrecedesLiteralMatchesFastPath) {
  auto g = CoxeterGroup::from_type("B3");
  ZipDatum z(g, {1, 2}, {1, 2}, {{1, 2}, {2, 1}});
  oracle::SubwordBruhat bruhat(g);
  for (const auto& a : z.iw())
    for (const auto& b : z.iw()) EXPECT_EQ(z.precedes(a, b, ParamSide::IW), oracle::precedes_literal(z, a, b, bruhat));
}

TEST(Verify, SuitesPassOnSmallTypes) {
  for (const char* t : {"A2", "B2", "A1xA1"}) {
    auto g = CoxeterGroup::from_type(t);
    oracle::SubwordBruhat bruhat(g);
    for (const auto& z : verify::all_data(g)) {
      auto d = verify::describe(z);
      EXPECT_TRUE(verify::check_partition(z).empty()) << d;
      EXPECT_TRUE(verify::check_sigma(z).empty()) << d;
      EXPECT_TRUE(verify::check_oracles(z).empty()) << d;
      EXPECT_TRUE(verify::check_refined_length(z).empty()) << d;
      for (auto side : {ParamSide::IW, ParamSide::WJ}) EXPECT_TRUE(verify::check_closure_order(z, side, bruhat).empty()) << d;
    }
  }
}

TEST(Verify, DataCountsOfSweep) {
  EXPECT_EQ(verify::all_data(CoxeterGroup::from_type("A1")).size(), 2u);
  EXPECT_EQ(verify::all_data(CoxeterGroup::from_type("A2")).size(), 7u);
  EXPECT_EQ(verify::sweep_types().size(), 7u);
}

TEST(Verify, DetectsABrokenClaim) {
  auto g = CoxeterGroup::from_type("A2");
  ZipDatum z(g, {1}, {2}, {{1, 2}});
  oracle::SubwordBruhat bruhat(g);
  EXPECT_FALSE(bruhat.leq(g.parse_element("1,2"), g.parse_element("2,1")));
  EXPECT_TRUE(bruhat.leq(g.parse_element("2"), g.parse_element("1,2")));
}
