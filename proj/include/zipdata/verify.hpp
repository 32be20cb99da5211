#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zipdata/abstract.hpp"
#include "zipdata/nonconnected.hpp"
#include "zipdata/oracle.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata::verify {

using Failures = std::vector<std::string>;

inline std::string describe(const ZipDatum& z) {
  std::string psi;
  for (auto [s, t] : z.psi_map()) psi += (psi.empty() ? "" : ",") + std::to_string(s) + ":" + std::to_string(t);
  return z.group().label() + " I=" + z.I().str() + " J=" + z.J().str() + " psi={" + psi + "}";
}

/// Every (I, J, psi) with psi: I -> J preserving the Coxeter matrix.
inline std::vector<ZipDatum> all_data(const CoxeterGroup& g) {
  std::vector<ZipDatum> out;
  const int n = g.rank();
  for (std::uint32_t ib = 0; ib < (1u << n); ++ib) {
    auto I = SimpleSubset::from_bits(ib);
    for (std::uint32_t jb = 0; jb < (1u << n); ++jb) {
      auto J = SimpleSubset::from_bits(jb);
      if (J.size() != I.size()) continue;
      auto is = I.indices();
      auto js = J.indices();
      do {
        bool ok = true;
        for (std::size_t a = 0; a < is.size() && ok; ++a)
          for (std::size_t b = 0; b < is.size() && ok; ++b)
            if (g.m(is[a], is[b]) != g.m(js[a], js[b])) ok = false;
        if (!ok) continue;
        ZipDatum::PsiMap psi;
        for (std::size_t a = 0; a < is.size(); ++a) psi[is[a]] = js[a];
        out.emplace_back(g, I, J, psi);
      } while (std::next_permutation(js.begin(), js.end()));
    }
  }
  return out;
}

inline const std::vector<std::string>& sweep_types() {
  static const std::vector<std::string> types{"A1", "A2", "A3", "B2", "B3", "C3", "G2"};
  return types;
}

#define ZIPDATA_EXPECT(cond, msg)        \
  do {                                   \
    if (!(cond)) failures.push_back(msg); \
  } while (0)

/// Classes partition W, each meets ^I W in exactly one element, and
/// canonical_piece picks that element.
inline Failures check_partition(const ZipDatum& z) {
  Failures failures;
  const auto& g = z.group();
  auto a = AbstractZipDatum::from_coxeter(z);
  const auto& G = a.gamma();
  auto classes = a.all_classes();
  std::map<std::vector<int>, Element> by_images;
  for (const auto& w : g.elements())
    by_images.emplace(std::vector<int>(w.permutation().begin(), w.permutation().end()), w);
  std::size_t total = 0;
  ElementSet reps;
  for (const auto& cls : classes) {
    total += cls.size();
    std::vector<Element> members, in_iw;
    for (auto id : cls) members.push_back(by_images.at(G.element(id).images()));
    for (const auto& w : members)
      if (z.in_iw(w)) in_iw.push_back(w);
    ZIPDATA_EXPECT(in_iw.size() == 1, describe(z) + ": class meets ^I W in " + std::to_string(in_iw.size()) + " elements");
    if (in_iw.size() != 1) continue;
    reps.insert(in_iw.front());
    for (const auto& w : members) {
      Element c = z.canonical_piece(w);
      ZIPDATA_EXPECT(c == in_iw.front(), describe(z) + ": canonical_piece(" + w.str() + ") = " + c.str() +
                                             ", expected " + in_iw.front().str());
    }
  }
  ZIPDATA_EXPECT(total == g.elements().size(), describe(z) + ": classes do not cover W");
  ZIPDATA_EXPECT(reps.size() == z.iw().size(), describe(z) + ": representative set differs from ^I W");
  return failures;
}

/// Every class has #Delta elements and there are [Gamma:Delta] of them.
inline Failures check_class_cardinality(const AbstractZipDatum& a, const std::string& name) {
  Failures failures;
  auto classes = a.all_classes();
  std::vector<bool> seen(a.gamma().order(), false);
  for (const auto& cls : classes) {
    ZIPDATA_EXPECT(cls.size() == a.delta().size(), name + ": class of size " + std::to_string(cls.size()) +
                                                       " but #Delta = " + std::to_string(a.delta().size()));
    for (auto v : cls) {
      ZIPDATA_EXPECT(!seen[v], name + ": classes overlap");
      seen[v] = true;
    }
  }
  ZIPDATA_EXPECT(classes.size() * a.delta().size() == a.gamma().order(),
                 name + ": " + std::to_string(classes.size()) + " classes, index is " +
                     std::to_string(a.gamma().order() / a.delta().size()));
  return failures;
}

/// sigma: ^I W -> W^J bijective, length preserving, matches the search oracle
/// and transports ≼ on ^I W to ≼ on W^J.
inline Failures check_sigma(const ZipDatum& z) {
  Failures failures;
  const auto& iw = z.iw();
  std::vector<Element> images;
  for (const auto& w : iw) {
    Element s = z.sigma(w);
    images.push_back(s);
    ZIPDATA_EXPECT(z.in_wj(s), describe(z) + ": sigma(" + w.str() + ") not in W^J");
    ZIPDATA_EXPECT(s.length() == w.length(), describe(z) + ": sigma changes the length of " + w.str());
    ZIPDATA_EXPECT(s == oracle::sigma_oracle(z, w), describe(z) + ": sigma(" + w.str() + ") disagrees with search");
    ZIPDATA_EXPECT(z.sigma_inverse(s) == w, describe(z) + ": sigma_inverse fails at " + w.str());
  }
  ElementSet distinct(images.begin(), images.end());
  ZIPDATA_EXPECT(distinct.size() == iw.size() && iw.size() == z.wj().size(), describe(z) + ": sigma is not a bijection");
  for (std::size_t i = 0; i < iw.size(); ++i)
    for (std::size_t j = 0; j < iw.size(); ++j)
      ZIPDATA_EXPECT(z.precedes(iw[i], iw[j], ParamSide::IW) == z.precedes(images[i], images[j], ParamSide::WJ),
                     describe(z) + ": sigma breaks the order at (" + iw[i].str() + ", " + iw[j].str() + ")");
  return failures;
}

/// ≼ on one side: literal definition agrees, partial order, strictly
/// increasing length, closures downward closed, e minimum, unique maximum.
inline Failures check_closure_order(const ZipDatum& z, ParamSide side, oracle::SubwordBruhat& bruhat) {
  Failures failures;
  const std::string tag = describe(z) + " [" + to_string(side) + "]";
  auto poset = z.hasse_poset(side);
  const auto& nodes = poset.nodes;
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ZIPDATA_EXPECT(poset.leq[i][j] == oracle::precedes_literal(z, nodes[i], nodes[j], bruhat),
                     tag + ": precedes disagrees with the literal definition at (" + nodes[i].str() + ", " + nodes[j].str() + ")");
  for (std::size_t i = 0; i < n; ++i) {
    ZIPDATA_EXPECT(poset.leq[i][i], tag + ": not reflexive at " + nodes[i].str());
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && poset.leq[i][j]) {
        ZIPDATA_EXPECT(!poset.leq[j][i], tag + ": not antisymmetric at (" + nodes[i].str() + ", " + nodes[j].str() + ")");
        ZIPDATA_EXPECT(nodes[i].length() < nodes[j].length(),
                       tag + ": " + nodes[i].str() + " ≺ " + nodes[j].str() + " without a length drop");
      }
      for (std::size_t k = 0; k < n; ++k)
        if (poset.leq[i][j] && poset.leq[j][k])
          ZIPDATA_EXPECT(poset.leq[i][k], tag + ": not transitive through " + nodes[j].str());
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto closure = z.closure_set(nodes[j], side);
    ElementSet cset(closure.begin(), closure.end());
    for (const auto& v : closure)
      for (const auto& u : z.closure_set(v, side))
        ZIPDATA_EXPECT(cset.count(u), tag + ": closure of " + nodes[j].str() + " is not downward closed");
  }
  if (n > 0) {
    ZIPDATA_EXPECT(nodes.front().is_identity(), tag + ": first parameter is not e");
    for (std::size_t j = 0; j < n; ++j) ZIPDATA_EXPECT(poset.leq[0][j], tag + ": e is not below " + nodes[j].str());
    int top = 0;
    for (const auto& w : nodes) top = std::max(top, w.length());
    std::vector<std::size_t> longest;
    for (std::size_t j = 0; j < n; ++j)
      if (nodes[j].length() == top) longest.push_back(j);
    ZIPDATA_EXPECT(longest.size() == 1, tag + ": maximal length attained " + std::to_string(longest.size()) + " times");
    if (longest.size() == 1)
      for (std::size_t i = 0; i < n; ++i)
        ZIPDATA_EXPECT(poset.leq[i][longest.front()], tag + ": " + nodes[i].str() + " is not below the longest element");
  }
  return failures;
}

/// Root count = l(x) for every w in ^I W; Howlett triple matches exhaustive search.
inline Failures check_refined_length(const ZipDatum& z, bool with_oracle = true) {
  Failures failures;
  const auto& g = z.group();
  for (const auto& w : z.iw()) {
    auto h = howlett_decompose(g, z.I(), z.J(), w);
    ZIPDATA_EXPECT(refined_length_count(g, z.I(), z.J(), w) == h.x.length(),
                   describe(z) + ": refined length differs from l(x) at " + w.str());
    ZIPDATA_EXPECT(z.inf_stab_dim(w) >= 0, describe(z) + ": negative inf-stab dimension at " + w.str());
  }
  for (const auto& w : g.elements()) {
    auto h = howlett_decompose(g, z.I(), z.J(), w);
    ZIPDATA_EXPECT(h.w_I * h.x * h.w_J == w, describe(z) + ": Howlett product fails at " + w.str());
    ZIPDATA_EXPECT(h.w_I.length() + h.x.length() + h.w_J.length() == w.length(),
                   describe(z) + ": Howlett lengths do not add at " + w.str());
    if (with_oracle) {
      auto o = oracle::howlett_oracle(g, z.I(), z.J(), w, g.elements());
      ZIPDATA_EXPECT(o.w_I == h.w_I && o.x == h.x && o.w_J == h.w_J,
                     describe(z) + ": Howlett triple differs from search at " + w.str());
    }
  }
  return failures;
}

/// K_w, ^I W, E_gamma and the class partition against the brute-force oracles.
inline Failures check_oracles(const ZipDatum& z) {
  Failures failures;
  const auto& g = z.group();
  auto io = oracle::iw_oracle(g, z.I());
  ZIPDATA_EXPECT(io == z.iw(), describe(z) + ": ^I W differs from coset minima");
  ZIPDATA_EXPECT(oracle::wj_oracle(g, z.J(), g.elements()) == z.wj(), describe(z) + ": W^J differs from root criterion");
  for (const auto& w : z.iw())
    ZIPDATA_EXPECT(z.Kw(w) == oracle::kw_bruteforce(z, w), describe(z) + ": K_w differs at " + w.str());
  auto a = AbstractZipDatum::from_coxeter(z);
  for (std::size_t gamma = 0; gamma < a.gamma().order(); ++gamma)
    ZIPDATA_EXPECT(a.E(gamma) == oracle::e_gamma_bruteforce(a, gamma),
                   describe(z) + ": E_gamma differs at " + a.gamma().element(gamma).str());
  auto fast = a.all_classes();
  std::sort(fast.begin(), fast.end());
  ZIPDATA_EXPECT(fast == oracle::classes_bruteforce(a), describe(z) + ": classes differ from the closure oracle");
  return failures;
}

inline Failures check_abstract_oracles(const AbstractZipDatum& a, const std::string& name) {
  Failures failures;
  for (std::size_t gamma = 0; gamma < a.gamma().order(); ++gamma)
    ZIPDATA_EXPECT(a.E(gamma) == oracle::e_gamma_bruteforce(a, gamma), name + ": E_gamma differs at " + a.gamma().element(gamma).str());
  auto fast = a.all_classes();
  std::sort(fast.begin(), fast.end());
  ZIPDATA_EXPECT(fast == oracle::classes_bruteforce(a), name + ": classes differ from the closure oracle");
  return failures;
}

/// bruhat_leq against subwords on every pair.
inline Failures check_bruhat_all_pairs(const CoxeterGroup& g) {
  Failures failures;
  const auto& elems = g.elements();
  for (const auto& w : elems) {
    auto lower = oracle::subword_products(g, w);
    for (const auto& x : elems)
      ZIPDATA_EXPECT(bruhat_leq(x, w) == (lower.count(x) != 0),
                     g.label() + ": Bruhat disagrees at (" + x.str() + ", " + w.str() + ")");
  }
  return failures;
}

inline Failures check_bruhat_random(const CoxeterGroup& g, int pairs, unsigned seed) {
  Failures failures;
  const auto& elems = g.elements();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  oracle::SubwordBruhat bruhat(g);
  for (int k = 0; k < pairs; ++k) {
    const auto& x = elems[pick(rng)];
    const auto& w = elems[pick(rng)];
    ZIPDATA_EXPECT(bruhat_leq(x, w) == bruhat.leq(x, w), g.label() + ": Bruhat disagrees at (" + x.str() + ", " + w.str() + ")");
  }
  return failures;
}

#undef ZIPDATA_EXPECT

/// Small abstract data on permutation groups of order <= 48.
struct NamedAbstract {
  std::string name;
  AbstractZipDatum datum;
};

inline std::vector<NamedAbstract> abstract_catalogue() {
  struct Raw {
    std::string name;
    int degree;
    std::vector<std::string> gamma, delta, psi;
  };
  const std::vector<Raw> raw{
      {"S3 <(1 2)> -> (2 3)", 3, {"(1 2)", "(2 3)"}, {"(1 2)"}, {"(2 3)"}},
      {"S3 identity", 3, {"(1 2)", "(2 3)"}, {"(1 2)", "(2 3)"}, {"(1 2)", "(2 3)"}},
      {"S3 trivial Delta", 3, {"(1 2)", "(2 3)"}, {}, {}},
      {"S3 C3 inverted", 3, {"(1 2)", "(2 3)"}, {"(1 2 3)"}, {"(1 3 2)"}},
      {"S3 inner by (1 2)", 3, {"(1 2)", "(2 3)"}, {"(1 2)", "(2 3)"}, {"(1 2)", "(1 3)"}},
      {"S3 sign (non-injective)", 3, {"(1 2)", "(2 3)"}, {"(1 2)", "(2 3)"}, {"(1 2)", "(1 2)"}},
      {"S4 <(1 2)> -> (2 3)", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2)"}, {"(2 3)"}},
      {"S4 S3 shifted", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2)", "(2 3)"}, {"(2 3)", "(3 4)"}},
      {"S4 identity", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2)", "(2 3)", "(3 4)"}},
      {"S4 sign (non-injective)", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2)", "(1 2)", "(1 2)"}},
      {"S4 A4 conjugated", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2 3)", "(2 3 4)"}, {"(1 3 2)", "(1 3 4)"}},
      {"S4 D4 identity", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2 3 4)", "(1 3)"}, {"(1 2 3 4)", "(1 3)"}},
      {"S4 V4 rotated", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2)(3 4)", "(1 3)(2 4)"}, {"(1 3)(2 4)", "(1 4)(2 3)"}},
      {"S4 C4 onto C2 (non-injective)", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2 3 4)"}, {"(1 2)(3 4)"}},
      {"S4 <(1 2),(3 4)> collapsed", 4, {"(1 2)", "(2 3)", "(3 4)"}, {"(1 2)", "(3 4)"}, {"(1 2)", "(1 2)"}},
      {"C6 C3 inverted", 6, {"(1 2 3 4 5 6)"}, {"(1 3 5)(2 4 6)"}, {"(1 5 3)(2 6 4)"}},
      {"D4 reflection moved", 4, {"(1 2 3 4)", "(1 3)"}, {"(1 3)"}, {"(2 4)"}},
      {"S3xS2 swap factors", 5, {"(1 2)", "(2 3)", "(4 5)"}, {"(1 2)", "(4 5)"}, {"(4 5)", "(1 2)"}},
      {"S4xC2 chain", 6, {"(1 2)", "(2 3)", "(3 4)", "(5 6)"}, {"(1 2)", "(5 6)"}, {"(5 6)", "(3 4)"}},
      {"C2^3 twisted", 6, {"(1 2)", "(3 4)", "(5 6)"}, {"(1 2)", "(3 4)"}, {"(3 4)", "(1 2)(5 6)"}},
      {"A4 involution moved", 4, {"(1 2 3)", "(2 3 4)"}, {"(1 2)(3 4)"}, {"(1 3)(2 4)"}},
      {"C5 squaring", 5, {"(1 2 3 4 5)"}, {"(1 2 3 4 5)"}, {"(1 3 5 2 4)"}},
      {"D6 rotation inverted", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"}, {"(1 2 3 4 5 6)"}, {"(1 6 5 4 3 2)"}},
      {"S4xC2 full identity", 6, {"(1 2)", "(2 3)", "(3 4)", "(5 6)"}, {"(1 2)", "(2 3)", "(3 4)", "(5 6)"},
       {"(1 2)", "(2 3)", "(3 4)", "(5 6)"}},
  };
  std::vector<NamedAbstract> out;
  for (const auto& r : raw) {
    std::vector<Permutation> gg, dg, pi;
    for (auto& s : r.gamma) gg.push_back(Permutation::parse(s, r.degree));
    for (auto& s : r.delta) dg.push_back(Permutation::parse(s, r.degree));
    for (auto& s : r.psi) pi.push_back(Permutation::parse(s, r.degree));
    out.push_back({r.name, AbstractZipDatum(std::make_shared<const FiniteGroup>(r.degree, gg), dg, pi)});
  }
  return out;
}

/// A1xA1 with Omega = Omega_I = <swap>, I = J = {} and psi_hat = id.
inline ExtendedZipDatum a1a1_swap() {
  auto g = CoxeterGroup::from_type("A1xA1");
  return ExtendedZipDatum(ZipDatum(g, {}, {}, {}), {{2, 1}}, {{2, 1}}, {{2, 1}});
}

struct CheckResult {
  std::string name;
  bool passed = true;
  Failures failures;
  double seconds = 0;
};

struct Report {
  std::vector<CheckResult> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

inline CheckResult timed(const std::string& name, const std::function<Failures()>& body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.failures = body();
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = r.failures.empty();
  return r;
}

enum class Level { Quick, Full };

/// Invariant suites: quick covers ranks <= 2, full adds rank 3 and F4 Bruhat sampling.
inline Report run(Level level) {
  std::vector<std::string> types{"A1", "A2", "B2", "G2", "A1xA1"};
  if (level == Level::Full)
    for (std::string t : {"A3", "B3", "C3", "A2xA1"}) types.push_back(t);
  Report report;
  for (const auto& t : types) {
    auto g = CoxeterGroup::from_type(t);
    report.checks.push_back(timed(t + " bruhat", [&] { return check_bruhat_all_pairs(g); }));
    report.checks.push_back(timed(t + " zip data", [&] {
      Failures all;
      oracle::SubwordBruhat bruhat(g);
      for (const auto& z : all_data(g)) {
        for (auto* part : {&check_partition, &check_sigma, &check_oracles}) {
          auto f = (*part)(z);
          all.insert(all.end(), f.begin(), f.end());
        }
        for (auto side : {ParamSide::IW, ParamSide::WJ}) {
          auto f = check_closure_order(z, side, bruhat);
          all.insert(all.end(), f.begin(), f.end());
        }
        auto f = check_refined_length(z, level == Level::Quick || g.order() <= 24);
        all.insert(all.end(), f.begin(), f.end());
      }
      return all;
    }));
  }
  report.checks.push_back(timed("abstract catalogue", [] {
    Failures all;
    for (const auto& [name, a] : abstract_catalogue()) {
      auto f = check_class_cardinality(a, name);
      all.insert(all.end(), f.begin(), f.end());
      f = check_abstract_oracles(a, name);
      all.insert(all.end(), f.begin(), f.end());
    }
    return all;
  }));
  if (level == Level::Full) {
    auto f4 = CoxeterGroup::from_type("F4");
    report.checks.push_back(timed("F4 bruhat sample", [&] { return check_bruhat_random(f4, 10000, 20240601u); }));
  }
  return report;
}

}  // namespace zipdata::verify
