#include <gtest/gtest.h>

#include "zipdata/coxeter.hpp"
#include "zipdata/oracle.hpp"

using namespace zipdata;

namespace {
ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::Unsupported;
}
}  // namespace

TEST(CoxeterGroup, OrdersAndRootCounts) {
  struct Row {
    const char* type;
    std::uint64_t order;
    int positive;
  };
  for (auto r : {Row{"A1", 2, 1}, Row{"A2", 6, 3}, Row{"A3", 24, 6}, Row{"A4", 120, 10}, Row{"B2", 8, 4},
                 Row{"B3", 48, 9}, Row{"C3", 48, 9}, Row{"D4", 192, 12}, Row{"G2", 12, 6}, Row{"F4", 1152, 24},
                 Row{"E6", 51840, 36}, Row{"E7", 2903040, 63}, Row{"E8", 696729600, 120}, Row{"A1xA1", 4, 2},
                 Row{"A2xB2", 48, 7}}) {
    auto g = CoxeterGroup::from_type(r.type);
    EXPECT_EQ(g.order(), r.order) << r.type;
    EXPECT_EQ(g.num_positive_roots(), r.positive) << r.type;
  }
}

TEST(CoxeterGroup, EnumerationMatchesOrder) {
  for (const char* t : {"A3", "B3", "G2", "A2xA1"}) {
    auto g = CoxeterGroup::from_type(t);
    EXPECT_EQ(g.elements().size(), g.order()) << t;
  }
}

TEST(CoxeterGroup, CoxeterMatrixEntries) {
  auto b3 = CoxeterGroup::from_type("B3");
  EXPECT_EQ(b3.m(1, 2), 3);
  EXPECT_EQ(b3.m(2, 3), 4);
  EXPECT_EQ(b3.m(1, 3), 2);
  auto g2 = CoxeterGroup::from_type("G2");
  EXPECT_EQ(g2.m(1, 2), 6);
  auto f4 = CoxeterGroup::from_type("F4");
  EXPECT_EQ(f4.m(2, 3), 4);
}

TEST(CoxeterGroup, FromMatrixClassifies) {
  auto g = CoxeterGroup::from_matrix({{1, 3, 2}, {3, 1, 4}, {2, 4, 1}});
  EXPECT_EQ(g.order(), 48u);
  auto h = CoxeterGroup::from_matrix({{1, 2}, {2, 1}});
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(h.components().size(), 2u);
}

TEST(Element, WordsLengthsAndLongestElement) {
  auto g = CoxeterGroup::from_type("A2");
  auto w0 = g.parse_element("1,2,1");
  EXPECT_EQ(w0.length(), 3);
  EXPECT_EQ(w0, g.parse_element("2,1,2"));
  EXPECT_EQ(w0.str(), "1,2,1");
  EXPECT_EQ(g.parse_element("e"), g.identity());
  EXPECT_EQ(g.identity().str(), "e");
  EXPECT_EQ(g.parse_element("1,1").length(), 0);
  EXPECT_EQ(w0 * w0, g.identity());
  EXPECT_EQ(g.parse_element("1,2").inverse(), g.parse_element("2,1"));
  EXPECT_EQ(CoxeterGroup::from_type("B2").parse_element("1,2,1,2").length(), 4);
  EXPECT_EQ(CoxeterGroup::from_type("G2").parse_element("1,2,1,2,1,2").length(), 6);
}

TEST(Element, Descents) {
  auto g = CoxeterGroup::from_type("A3");
  auto w = g.parse_element("1,2");
  EXPECT_EQ(w.descents(Side::Left), SimpleSubset{1});
  EXPECT_EQ(w.descents(Side::Right), SimpleSubset{2});
  EXPECT_EQ(w.times_simple(2), g.simple_reflection(1));
  EXPECT_EQ(w.simple_times(1), g.simple_reflection(2));
}

TEST(Element, CanonicalWordIsShortLexMinimal) {
  auto g = CoxeterGroup::from_type("A3");
  for (const auto& w : g.elements()) {
    auto word = w.canonical_word();
    EXPECT_EQ(static_cast<int>(word.size()), w.length());
    EXPECT_EQ(g.element_from_word(word), w);
  }
  EXPECT_EQ(g.parse_element("3,2,1,2").str(), "1,3,2,1");
}

TEST(Bruhat, SmallCases) {
  auto g = CoxeterGroup::from_type("A2");
  auto s1 = g.simple_reflection(1), s2 = g.simple_reflection(2);
  EXPECT_TRUE(bruhat_leq(g.identity(), s1));
  EXPECT_FALSE(bruhat_leq(s1, s2));
  EXPECT_TRUE(bruhat_leq(s1, g.parse_element("2,1")));
  EXPECT_FALSE(bruhat_leq(g.parse_element("1,2"), g.parse_element("2,1")));
  for (const auto& w : g.elements()) EXPECT_TRUE(bruhat_leq(w, g.parse_element("1,2,1")));
}

TEST(Bruhat, AgreesWithSubwordsOnB3) {
  auto g = CoxeterGroup::from_type("B3");
  for (const auto& w : g.elements()) {
    auto lower = oracle::subword_products(g, w);
    for (const auto& x : g.elements()) EXPECT_EQ(bruhat_leq(x, w), lower.count(x) != 0);
  }
}

TEST(Bruhat, IntervalSizesInA3) {
  auto g = CoxeterGroup::from_type("A3");
  EXPECT_EQ(oracle::subword_products(g, g.parse_element("1,2,1,3,2,1")).size(), 24u);
  EXPECT_EQ(oracle::subword_products(g, g.parse_element("2,1,3,2")).size(), 14u);
}

TEST(CoxeterGroup, ConjugateSimple) {
  auto g = CoxeterGroup::from_type("A3");
  EXPECT_EQ(g.conjugate_simple(g.parse_element("1,2"), 1), 2);
  EXPECT_FALSE(g.conjugate_simple(g.parse_element("2"), 1).has_value());
}

TEST(CoxeterGroup, ParabolicSubgroup) {
  auto g = CoxeterGroup::from_type("B3");
  EXPECT_EQ(g.parabolic_elements({2, 3}).size(), 8u);
  EXPECT_EQ(g.parabolic_elements({1, 3}).size(), 4u);
  EXPECT_EQ(g.count_positive_roots({2, 3}), 4);
}

TEST(Errors, Codes) {
  EXPECT_EQ(code_of([] { CoxeterGroup::from_type("H3"); }), ErrorCode::NonFiniteType);
  EXPECT_EQ(code_of([] { CoxeterGroup::from_type("D3"); }), ErrorCode::NonFiniteType);
  EXPECT_EQ(code_of([] { CoxeterGroup::from_matrix({{1, 5}, {5, 1}}); }), ErrorCode::NonFiniteType);
  EXPECT_EQ(code_of([] { CoxeterGroup::from_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}); }), ErrorCode::NonFiniteType);
  EXPECT_EQ(code_of([] { CoxeterGroup::from_matrix({{1, 3}, {2, 1}}); }), ErrorCode::MalformedMatrix);
  EXPECT_EQ(code_of([] { CoxeterGroup::from_matrix({{2, 3}, {3, 1}}); }), ErrorCode::MalformedMatrix);
  EXPECT_EQ(code_of([] { CoxeterGroup::from_type("A2x"); }), ErrorCode::ParseError);
  auto a2 = CoxeterGroup::from_type("A2");
  auto other = CoxeterGroup::from_type("A2");
  EXPECT_EQ(code_of([&] { a2.simple_reflection(3); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { a2.parse_element("1,4"); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { (void)(a2.identity() * other.identity()); }), ErrorCode::GroupMismatch);
  EXPECT_EQ(code_of([&] { bruhat_leq(a2.identity(), other.identity()); }), ErrorCode::GroupMismatch);
  EXPECT_EQ(code_of([] { CoxeterGroup::from_type("E8").elements(); }), ErrorCode::GroupTooLarge);
}
