#include <gtest/gtest.h>

#include "zipdata/isogeny.hpp"

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

IsogenyInput input(const char* type, SimpleSubset I, const char* x, const char* phi = "id", const char* delta = "id") {
  auto g = CoxeterGroup::from_type(type);
  return {g, parse_automorphism(g, phi), parse_automorphism(g, delta), I, g.parse_element(x)};
}
}  // namespace

TEST(Automorphisms, Flip) {
  auto a3 = CoxeterGroup::from_type("A3");
  EXPECT_EQ(flip_automorphism(a3), (SimplePermutation{3, 2, 1}));
  EXPECT_EQ(flip_automorphism(CoxeterGroup::from_type("D4")), (SimplePermutation{1, 2, 4, 3}));
  EXPECT_EQ(flip_automorphism(CoxeterGroup::from_type("E6")), (SimplePermutation{6, 2, 5, 4, 3, 1}));
  EXPECT_EQ(parse_automorphism(a3, "[3,2,1]"), flip_automorphism(a3));
  EXPECT_EQ(code_of([] { flip_automorphism(CoxeterGroup::from_type("B3")); }), ErrorCode::Unsupported);
}

TEST(Isogeny, A3Example) {
  auto iso = build_from_isogeny(input("A3", {1}, "1,2"));
  EXPECT_EQ(iso.K, SimpleSubset{1});
  EXPECT_EQ(iso.datum.J(), SimpleSubset{2});
  EXPECT_EQ(iso.datum.psi(1), 2);
  EXPECT_TRUE(iso.lusztig_case());
}

TEST(Isogeny, FlipTwist) {
  auto iso = build_from_isogeny(input("A3", {1}, "e", "flip"));
  EXPECT_EQ(iso.K, SimpleSubset{3});
  EXPECT_EQ(iso.datum.psi(1), 3);
  EXPECT_FALSE(iso.lusztig_case());
  EXPECT_EQ(code_of([&] { lusztig_closure(iso, iso.input.group.identity()); }), ErrorCode::WrongMode);
}

TEST(Isogeny, LusztigClosureMatchesReparametrization) {
  auto iso = build_from_isogeny(input("A3", {1}, "1,2"));
  const auto& z = iso.datum;
  for (const auto& w : z.wj()) {
    auto wk = lusztig_reparam(iso, w, true);
    EXPECT_EQ(lusztig_reparam(iso, wk, false), w);
    std::vector<Element> expected;
    for (const auto& v : z.closure_set(w, ParamSide::WJ)) expected.push_back(lusztig_reparam(iso, v, true));
    auto got = lusztig_closure(iso, wk);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << w.str();
  }
}

TEST(Isogeny, FrobeniusReport) {
  auto r = frobenius_report(build_from_isogeny(input("A2", {1}, "e")).datum);
  EXPECT_EQ(r.orbits.size(), 3u);
  EXPECT_EQ(r.dim_G, 8);
  EXPECT_EQ(r.poset.nodes.size(), 3u);
}

TEST(Isogeny, ErrorCodes) {
  EXPECT_EQ(code_of([] { build_from_isogeny(input("A2", {1}, "2")); }), ErrorCode::NonSimpleConjugate);
  EXPECT_EQ(code_of([] { build_from_isogeny(input("A3", {1}, "1")); }), ErrorCode::NotDoubleCosetRep);
  EXPECT_EQ(code_of([] { build_from_isogeny(input("A1xA2", {1}, "e", "2,1,3")); }), ErrorCode::MatrixViolation);
  EXPECT_EQ(code_of([] { build_from_isogeny(input("A3", {1}, "e", "1,1,2")); }), ErrorCode::MatrixViolation);
  auto iso = build_from_isogeny(input("A3", {1}, "1,2"));
  EXPECT_EQ(code_of([&] { lusztig_reparam(iso, iso.input.group.simple_reflection(2), true); }), ErrorCode::NotMinimalRep);
}
