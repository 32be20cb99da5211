#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "zipdata/zipdata.hpp"

using namespace zipdata;
using verify::Failures;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void append(Failures& all, const Failures& more) { all.insert(all.end(), more.begin(), more.end()); }

#define EXPECT(cond, msg)         \
  do {                            \
    if (!(cond)) f.push_back(msg); \
  } while (0)

struct Sweep {
  std::vector<std::pair<CoxeterGroup, std::vector<ZipDatum>>> groups;
  std::size_t count() const {
    std::size_t n = 0;
    for (auto& [g, d] : groups) n += d.size();
    return n;
  }
};

const Sweep& sweep() {
  static const Sweep s = [] {
    Sweep out;
    for (const auto& t : verify::sweep_types()) {
      auto g = CoxeterGroup::from_type(t);
      out.groups.emplace_back(g, verify::all_data(g));
    }
    return out;
  }();
  return s;
}

Failures partition() {
  Failures f;
  for (auto& [g, data] : sweep().groups)
    for (const auto& z : data) append(f, verify::check_partition(z));
  EXPECT(sweep().count() > 0, "empty sweep");
  return f;
}

Failures cardinality() {
  Failures f;
  for (auto& [g, data] : sweep().groups)
    for (const auto& z : data) append(f, verify::check_class_cardinality(AbstractZipDatum::from_coxeter(z), verify::describe(z)));
  auto cat = verify::abstract_catalogue();
  EXPECT(cat.size() >= 20, "catalogue has fewer than 20 abstract data");
  bool has_s4 = false, non_injective = false;
  for (const auto& [name, a] : cat) {
    EXPECT(a.gamma().order() <= 48, name + ": group order above 48");
    has_s4 = has_s4 || a.gamma().order() == 24;
    non_injective = non_injective || !a.psi_injective();
    append(f, verify::check_class_cardinality(a, name));
  }
  EXPECT(has_s4, "no S4 datum in the catalogue");
  EXPECT(non_injective, "no non-injective psi in the catalogue");
  return f;
}

Failures sigma_duality() {
  Failures f;
  for (auto& [g, data] : sweep().groups)
    for (const auto& z : data) append(f, verify::check_sigma(z));
  return f;
}

Failures closure_order() {
  Failures f;
  for (auto& [g, data] : sweep().groups) {
    oracle::SubwordBruhat bruhat(g);
    for (const auto& z : data)
      for (auto side : {ParamSide::IW, ParamSide::WJ}) append(f, verify::check_closure_order(z, side, bruhat));
  }
  return f;
}

Failures refined_length() {
  Failures f;
  for (auto& [g, data] : sweep().groups)
    for (const auto& z : data) append(f, verify::check_refined_length(z, true));
  return f;
}

Failures oracles() {
  Failures f;
  std::size_t checked = 0;
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2", "A1xA1", "A2xA1", "A1xA1xA1", "B2xA1", "A3xA1",
                        "A2xA2", "G2xA1", "B3xA1", "B2xB2", "G2xA2", "G2xB2", "A2xA1xA1", "A1xA1xA1xA1"}) {
    auto g = CoxeterGroup::from_type(t);
    EXPECT(g.order() <= 120, std::string(t) + " exceeds 120");
    append(f, verify::check_bruhat_all_pairs(g));
    ++checked;
  }
  EXPECT(checked > 0, "no groups checked");
  append(f, verify::check_bruhat_random(CoxeterGroup::from_type("F4"), 10000, 20240601u));
  for (auto& [g, data] : sweep().groups)
    for (const auto& z : data) append(f, verify::check_oracles(z));
  for (const auto& [name, a] : verify::abstract_catalogue()) append(f, verify::check_abstract_oracles(a, name));
  return f;
}

Failures worked_a2() {
  Failures f;
  auto g = CoxeterGroup::from_type("A2");
  ZipDatum z(g, {1}, {2}, {{1, 2}});
  auto E = [&](const char* w) { return g.parse_element(w); };

  // oracle derivation
  auto iw = oracle::iw_oracle(g, z.I());
  EXPECT(iw == (std::vector<Element>{E("e"), E("2"), E("2,1")}), "oracle ^I W differs from {e, s2, s2s1}");
  EXPECT(iw == z.iw(), "^I W differs from the oracle");

  auto a = AbstractZipDatum::from_coxeter(z);
  auto classes = oracle::classes_bruteforce(a);
  std::set<std::set<std::string>> got, fast, expected{{"e", "1,2"}, {"1", "2"}, {"2,1", "1,2,1"}};
  std::map<std::vector<int>, Element> by_images;
  for (const auto& w : g.elements()) by_images.emplace(std::vector<int>(w.permutation().begin(), w.permutation().end()), w);
  for (const auto& c : classes) {
    std::set<std::string> names;
    for (auto v : c) names.insert(by_images.at(a.gamma().element(v).images()).str());
    got.insert(names);
  }
  for (const auto& c : a.all_classes()) {
    std::set<std::string> names;
    for (auto v : c) names.insert(by_images.at(a.gamma().element(v).images()).str());
    fast.insert(names);
  }
  EXPECT(got == expected, "oracle classes differ from {e,s1s2},{s1,s2},{s2s1,w0}");
  EXPECT(fast == got, "classes differ from the oracle");

  const std::vector<std::pair<const char*, const char*>> sigma{{"e", "e"}, {"2", "1"}, {"2,1", "2,1"}};
  for (auto [w, s] : sigma) {
    EXPECT(oracle::sigma_oracle(z, E(w)) == E(s), std::string("oracle sigma(") + w + ") is not " + s);
    EXPECT(z.sigma(E(w)) == E(s), std::string("sigma(") + w + ") is not " + s);
  }

  const int dims[] = {6, 7, 8}, stabs[] = {2, 2, 0};
  const SimpleSubset ks[] = {{}, {}, {2}};
  auto pieces = z.pieces();
  EXPECT(pieces.size() == 3, "expected three pieces");
  for (std::size_t i = 0; i < pieces.size() && i < 3; ++i) {
    const auto& p = pieces[i];
    EXPECT(p.dim == dims[i], "dim of " + p.w.str() + " is " + std::to_string(p.dim));
    EXPECT(p.inf_stab == stabs[i], "inf-stab of " + p.w.str() + " is " + std::to_string(p.inf_stab));
    EXPECT(p.K == ks[i], "K_w of " + p.w.str() + " is " + p.K.str());
    EXPECT(oracle::kw_bruteforce(z, p.w) == ks[i], "oracle K_w of " + p.w.str() + " differs");
    EXPECT(p.dim == z.dim_P() + p.w.length(), "dim of " + p.w.str() + " is not dim P + l(w)");
  }
  oracle::SubwordBruhat bruhat(g);
  for (std::size_t i = 0; i < iw.size(); ++i)
    for (std::size_t j = 0; j < iw.size(); ++j) {
      bool chain = i <= j;
      EXPECT(oracle::precedes_literal(z, iw[i], iw[j], bruhat) == chain, "oracle closure is not the chain e < s2 < s2s1");
      EXPECT(z.precedes(iw[i], iw[j], ParamSide::IW) == chain, "closure is not the chain e < s2 < s2s1");
    }
  auto poset = z.hasse_poset(ParamSide::IW);
  EXPECT(poset.covers == (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}), "Hasse covers are not a chain");
  return f;
}

std::set<std::vector<std::string>> orbit_names(const ExtendedZipDatum& e, ParamSide side) {
  std::set<std::vector<std::string>> out;
  for (const auto& o : e.nc_pieces(side)) {
    std::vector<std::string> names;
    for (const auto& a : o) names.push_back(e.str(a));
    std::sort(names.begin(), names.end());
    out.insert(names);
  }
  return out;
}

Failures nonconnected() {
  Failures f;
  for (auto& [g, data] : sweep().groups) {
    if (g.order() > 24) continue;
    for (const auto& z : data) {
      ExtendedZipDatum e(z, {}, {}, {});
      const auto tag = verify::describe(z);
      for (auto side : {ParamSide::IW, ParamSide::WJ}) {
        std::set<std::vector<std::string>> expect;
        for (const auto& w : z.params(side)) expect.insert({w.str()});
        EXPECT(orbit_names(e, side) == expect, tag + ": trivial-Omega pieces differ");
        for (const auto& w : z.params(side)) {
          auto nc = e.nc_closure(e.make(w), side);
          std::vector<Element> ws;
          for (const auto& a : nc) ws.push_back(a.w);
          EXPECT(ws == z.closure_set(w, side), tag + ": trivial-Omega closure differs at " + w.str());
        }
      }
      for (const auto& w : z.iw()) EXPECT(e.sigma_hat(e.make(w)) == e.make(z.sigma(w)), tag + ": sigma_hat differs at " + w.str());
    }
  }

  auto e = verify::a1a1_swap();
  auto orbits = orbit_names(e, ParamSide::IW);
  const std::set<std::vector<std::string>> expected{{"e"},           {"1", "2"},           {"1,2"},
                                                    {"e*[2,1]"},     {"1*[2,1]", "2*[2,1]"}, {"1,2*[2,1]"}};
  EXPECT(orbits.size() == 6, "A1xA1 swap gives " + std::to_string(orbits.size()) + " pieces");
  EXPECT(orbits == expected, "A1xA1 swap orbit structure differs");
  for (const auto& a : e.params(ParamSide::IW))
    for (auto u : e.omega_I()) {
      auto lhs = e.sigma_hat(e.omega_action(u, a, ParamSide::IW));
      auto rhs = e.omega_action(u, e.sigma_hat(a), ParamSide::WJ);
      EXPECT(lhs == rhs, "sigma_hat is not Omega_I-equivariant at " + e.str(a));
    }
  return f;
}

Failures isogeny() {
  Failures f;
  {
    auto g = CoxeterGroup::from_type("A2");
    auto iso = build_from_isogeny({g, flip_automorphism(g), identity_automorphism(g), {1}, g.identity()});
    EXPECT(iso.K == SimpleSubset{2}, "A2 flip: K is " + iso.K.str());
    EXPECT(iso.datum.J() == SimpleSubset{2} && iso.datum.psi(1) == 2, "A2 flip: datum is not ({1},{2},1->2)");
    std::vector<std::string> dims;
    for (const auto& p : iso.datum.pieces()) dims.push_back(std::to_string(p.dim));
    EXPECT(dims == (std::vector<std::string>{"6", "7", "8"}), "A2 flip: piece dimensions differ");
  }
  {
    auto g = CoxeterGroup::from_type("A3");
    auto iso = build_from_isogeny({g, identity_automorphism(g), identity_automorphism(g), {1}, g.parse_element("1,2")});
    EXPECT(iso.datum.J() == SimpleSubset{2} && iso.datum.psi(1) == 2, "A3 example: datum is not ({1},{2},1->2)");
    bool threw = false;
    try {
      auto a2 = CoxeterGroup::from_type("A2");
      build_from_isogeny({a2, identity_automorphism(a2), identity_automorphism(a2), {1}, a2.simple_reflection(2)});
    } catch (const Error& e) {
      threw = e.code() == ErrorCode::NonSimpleConjugate;
    }
    EXPECT(threw, "A2 with x = s2 should be rejected as NonSimpleConjugate");
  }
  std::size_t data = 0;
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A2xA1", "B2xA1", "A1xA1xA1", "G2xA1"}) {
    auto g = CoxeterGroup::from_type(t);
    std::vector<SimplePermutation> deltas{identity_automorphism(g)};
    if (g.components().size() == 1 && g.components().front().family == 'A' && g.rank() > 1) deltas.push_back(flip_automorphism(g));
    for (const auto& delta : deltas)
      for (std::uint32_t ib = 0; ib < (1u << g.rank()); ++ib)
        for (const auto& x : g.elements()) {
          std::optional<IsogenyDatum> iso;
          try {
            iso = build_from_isogeny({g, identity_automorphism(g), delta, SimpleSubset::from_bits(ib), x});
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NonSimpleConjugate && e.code() != ErrorCode::NotDoubleCosetRep)
              f.push_back(std::string(t) + ": unexpected " + e.what());
            continue;
          }
          ++data;
          const auto& z = iso->datum;
          for (const auto& w : z.wj()) {
            std::vector<Element> expected;
            for (const auto& v : z.closure_set(w, ParamSide::WJ)) expected.push_back(lusztig_reparam(*iso, v, true));
            auto got = lusztig_closure(*iso, lusztig_reparam(*iso, w, true));
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            EXPECT(got == expected, std::string(t) + " I=" + iso->input.I.str() + " x=" + x.str() + ": closure differs at " + w.str());
          }
        }
  }
  EXPECT(data > 0, "no isogeny data built");
  return f;
}

Failures performance() {
  Failures f;
  auto g = CoxeterGroup::from_type("F4");
  double worst = 0;
  std::string worst_name;
  std::size_t count = 0;
  for (const auto& z : verify::all_data(g)) {
    if (z.I().size() != 2) continue;
    auto t0 = Clock::now();
    auto pieces = z.pieces();
    auto poset = z.hasse_poset(ParamSide::IW);
    double dt = since(t0);
    ++count;
    EXPECT(pieces.size() == poset.nodes.size(), verify::describe(z) + ": piece count mismatch");
    if (dt > worst) {
      worst = dt;
      worst_name = verify::describe(z);
    }
  }
  EXPECT(count > 0, "no F4 data with |I| = 2");
  EXPECT(worst < 60.0, "F4 " + worst_name + " took " + std::to_string(worst) + " s");
  std::printf("  F4 |I|=2: %zu data, slowest %.3f s (%s)\n", count, worst, worst_name.c_str());

  auto b3 = CoxeterGroup::from_type("B3");
  auto t0 = Clock::now();
  Failures b3f;
  append(b3f, verify::check_bruhat_all_pairs(b3));
  oracle::SubwordBruhat bruhat(b3);
  for (const auto& z : verify::all_data(b3)) {
    append(b3f, verify::check_partition(z));
    append(b3f, verify::check_class_cardinality(AbstractZipDatum::from_coxeter(z), verify::describe(z)));
    append(b3f, verify::check_sigma(z));
    append(b3f, verify::check_oracles(z));
    append(b3f, verify::check_refined_length(z, true));
    for (auto side : {ParamSide::IW, ParamSide::WJ}) append(b3f, verify::check_closure_order(z, side, bruhat));
  }
  double b3t = since(t0);
  std::printf("  B3 full verify: %.3f s\n", b3t);
  EXPECT(b3f.empty(), "B3 full verify reported failures");
  EXPECT(b3t < 10.0, "B3 full verify took " + std::to_string(b3t) + " s");
  return f;
}

#undef EXPECT

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Failures()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "classes partition W with representatives ^I W", 60, partition},
      {2, "class cardinality #Delta and [Gamma:Delta] classes", 30, cardinality},
      {3, "sigma is a length-preserving order isomorphism", 0, sigma_duality},
      {4, "closure order axioms", 0, closure_order},
      {5, "refined length equals l(x)", 0, refined_length},
      {6, "fast paths agree with brute-force oracles", 300, oracles},
      {7, "worked A2 dataset", 0, worked_a2},
      {8, "non-connected consistency", 0, nonconnected},
      {9, "isogeny construction and Lusztig closure", 0, isogeny},
      {10, "performance on F4 and B3", 0, performance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Failures f;
    try {
      f = c.body();
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    double dt = since(t0);
    if (c.limit > 0 && dt > c.limit) f.push_back("took " + std::to_string(dt) + " s, limit " + std::to_string(c.limit) + " s");
    std::printf("%s [%d] %s (%.2f s)\n", f.empty() ? "PASS" : "FAIL", c.id, c.name, dt);
    for (std::size_t i = 0; i < f.size() && i < 10; ++i) std::printf("    %s\n", f[i].c_str());
    if (f.size() > 10) std::printf("    ... %zu more\n", f.size() - 10);
    std::fflush(stdout);
    if (!f.empty()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
