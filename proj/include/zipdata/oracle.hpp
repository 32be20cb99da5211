#pragma once

// Naive reference implementations. They transcribe definitions directly and
// share nothing with the fast paths beyond element arithmetic.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "zipdata/abstract.hpp"
#include "zipdata/coxeter.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata::oracle {

/// Every product of a subsequence of the canonical word of w that is reduced
/// as written: the lower Bruhat interval [e, w].
inline ElementSet subword_products(const CoxeterGroup& g, const Element& w) {
  ElementSet current{g.identity()};
  for (int s : w.canonical_word()) {
    std::vector<Element> add;
    for (const auto& u : current) {
      Element us = u.times_simple(s);
      if (us.length() == u.length() + 1) add.push_back(us);
    }
    for (auto& u : add) current.insert(std::move(u));
  }
  return current;
}

/// Subword test with the lower interval of each w cached.
class SubwordBruhat {
 public:
  explicit SubwordBruhat(CoxeterGroup g) : g_(std::move(g)) {}

  bool leq(const Element& x, const Element& w) {
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, subword_products(g_, w)).first;
    return it->second.count(x) != 0;
  }

 private:
  CoxeterGroup g_;
  std::unordered_map<Element, ElementSet, ElementHash> cache_;
};

inline bool bruhat_subword_oracle(const CoxeterGroup& g, const Element& x, const Element& w) {
  if (!x.same_group(w)) fail(ErrorCode::GroupMismatch, "oracle: elements of different groups");
  return subword_products(g, w).count(x) != 0;
}

/// W_K read off from canonical words.
inline std::vector<Element> parabolic_by_words(const CoxeterGroup&, SimpleSubset K,
                                               const std::vector<Element>& universe) {
  std::vector<Element> out;
  for (const auto& w : universe) {
    bool ok = true;
    for (int s : w.canonical_word()) ok = ok && K.contains(s);
    if (ok) out.push_back(w);
  }
  return out;
}

inline std::vector<Element> universe_of(const ZipDatum& z) {
  return parabolic_by_words(z.group(), z.support(), z.group().elements());
}

/// Unique minimal-length element of each coset W_I w.
inline std::vector<Element> iw_oracle(const CoxeterGroup& g, SimpleSubset I,
                                      const std::vector<Element>& universe) {
  auto WI = parabolic_by_words(g, I, universe);
  ElementSet reps;
  for (const auto& w : universe) {
    int best = 1 << 30;
    std::vector<Element> minima;
    for (const auto& y : WI) {
      Element v = y * w;
      if (v.length() < best) {
        best = v.length();
        minima = {v};
      } else if (v.length() == best) {
        minima.push_back(v);
      }
    }
    if (minima.size() != 1) fail(ErrorCode::NonUniqueMinimum, "coset of " + w.str() + " has no unique minimum");
    reps.insert(minima.front());
  }
  std::vector<Element> out(reps.begin(), reps.end());
  sort_shortlex(out);
  return out;
}

inline std::vector<Element> iw_oracle(const CoxeterGroup& g, SimpleSubset I) { return iw_oracle(g, I, g.elements()); }

/// W^J = {w : w Phi_J^+ ⊆ Phi^+}, checked on every root of Phi_J^+.
inline std::vector<Element> wj_oracle(const CoxeterGroup& g, SimpleSubset J, const std::vector<Element>& universe) {
  std::vector<Element> out;
  for (const auto& w : universe) {
    bool ok = true;
    for (int r = 0; r < g.num_positive_roots() && ok; ++r)
      if (g.root_support(r).subset_of(J) && !g.is_positive(w.act(r))) ok = false;
    if (ok) out.push_back(w);
  }
  sort_shortlex(out);
  return out;
}

/// Exhaustive search for w = a x b with a in W_I, x in ^I W^J, b in W_J,
/// lengths adding and b minimal in W_{I_x} b; must be unique.
inline HowlettDecomposition howlett_oracle(const CoxeterGroup& g, SimpleSubset I, SimpleSubset J, const Element& w,
                                           const std::vector<Element>& universe) {
  auto WI = parabolic_by_words(g, I, universe);
  auto WJ = parabolic_by_words(g, J, universe);
  auto left = iw_oracle(g, I, universe);
  auto right = wj_oracle(g, J, universe);
  ElementSet right_set(right.begin(), right.end());
  std::vector<HowlettDecomposition> found;
  for (const auto& x : left) {
    if (!right_set.count(x)) continue;
    SimpleSubset Ix;
    for (int s : J.indices()) {
      Element c = x * g.simple_reflection(s) * x.inverse();
      auto cw = c.canonical_word();
      if (cw.size() == 1 && I.contains(cw.front())) Ix.insert(s);
    }
    for (const auto& a : WI)
      for (const auto& b : WJ) {
        if (a * x * b != w) continue;
        if (a.length() + x.length() + b.length() != w.length()) continue;
        bool minimal = true;
        for (int s : Ix.indices())
          if ((g.simple_reflection(s) * b).length() < b.length()) minimal = false;
        if (minimal) found.push_back({a, x, b});
      }
  }
  if (found.size() != 1)
    fail(ErrorCode::OracleMismatch, "Howlett triple for " + w.str() + " found " + std::to_string(found.size()) + " times");
  return found.front();
}

/// All y in W_I with y w psi(y)^{-1} in W^J give the same element.
inline Element sigma_oracle(const ZipDatum& z, const Element& w) {
  const auto& g = z.group();
  auto universe = universe_of(z);
  auto WI = parabolic_by_words(g, z.I(), universe);
  auto right = wj_oracle(g, z.J(), universe);
  ElementSet right_set(right.begin(), right.end());
  ElementSet hits;
  for (const auto& y : WI) {
    Word word = y.canonical_word();
    for (int& s : word) s = z.psi(s);
    Element v = y * w * g.element_from_word(word).inverse();
    if (right_set.count(v)) hits.insert(v);
  }
  if (hits.size() != 1) fail(ErrorCode::OracleMismatch, "sigma(" + w.str() + ") has " + std::to_string(hits.size()) + " candidates");
  return *hits.begin();
}

/// exists y in W_I with y w' psi(y)^{-1} <= w, Bruhat by subwords, no shortcuts.
inline bool precedes_literal(const ZipDatum& z, const Element& w_prime, const Element& w, SubwordBruhat& bruhat) {
  const auto& g = z.group();
  for (const auto& y : parabolic_by_words(g, z.I(), g.elements())) {
    Word word = y.canonical_word();
    for (int& s : word) s = z.psi(s);
    if (bruhat.leq(y * w_prime * g.element_from_word(word).inverse(), w)) return true;
  }
  return false;
}

/// Union of all K ⊆ {s : w s w^{-1} in I} with psi(w K w^{-1}) = K.
inline SimpleSubset kw_bruteforce(const ZipDatum& z, const Element& w) {
  const auto& g = z.group();
  std::map<int, int> image;  // s -> psi(w s w^{-1})
  for (int s : z.support().indices()) {
    auto cw = (w * g.simple_reflection(s) * w.inverse()).canonical_word();
    if (cw.size() == 1 && z.I().contains(cw.front())) image[s] = z.psi(cw.front());
  }
  std::vector<int> domain;
  for (auto& [s, t] : image) domain.push_back(s);
  SimpleSubset best;
  for (std::uint32_t mask = 0; mask < (1u << domain.size()); ++mask) {
    SimpleSubset K, img;
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (mask & (1u << i)) {
        K.insert(domain[i]);
        img.insert(image[domain[i]]);
      }
    if (K == img) best = best | K;
  }
  SimpleSubset check;
  for (int s : best.indices()) check.insert(image.at(s));
  if (check != best) fail(ErrorCode::OracleMismatch, "union of stable subsets is not stable");
  return best;
}

/// Largest E ≤ gamma^{-1} Delta gamma with psi(gamma E gamma^{-1}) = E, as the
/// subgroup generated by every stable subgroup of the lattice.
inline ElementIds e_gamma_bruteforce(const AbstractZipDatum& a, std::size_t gamma, std::size_t bound = 48) {
  const auto& G = a.gamma();
  ElementIds D;
  for (auto d : a.delta()) D.push_back(G.index_of(G.element(gamma).inverse() * G.element(d) * G.element(gamma)));
  std::sort(D.begin(), D.end());
  if (D.size() > bound)
    fail(ErrorCode::LatticeTooLarge, "subgroup lattice of order " + std::to_string(D.size()) + " exceeds " + std::to_string(bound));
  auto f = [&](std::size_t e) {
    return a.psi(G.index_of(G.element(gamma) * G.element(e) * G.element(gamma).inverse()));
  };
  std::set<ElementIds> lattice;
  std::vector<std::pair<ElementIds, ElementIds>> queue;  // (subgroup, generators)
  std::vector<ElementIds> cyclic;
  for (auto e : D) {
    auto c = G.generate({e});
    if (lattice.insert(c).second) {
      queue.push_back({c, {e}});
      cyclic.push_back({e});
    }
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& c : cyclic) {
      ElementIds gens = queue[k].second;
      gens.push_back(c.front());
      auto h = G.generate(gens);
      if (lattice.insert(h).second) queue.push_back({h, gens});
    }
  }
  ElementIds union_gens;
  for (const auto& H : lattice) {
    ElementIds img;
    for (auto e : H) img.push_back(f(e));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img == H) union_gens.insert(union_gens.end(), H.begin(), H.end());
  }
  auto E = G.generate(union_gens);
  ElementIds img;
  for (auto e : E) img.push_back(f(e));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  if (img != E) fail(ErrorCode::OracleMismatch, "generated subgroup is not stable");
  return E;
}

/// Classes as the symmetric-transitive closure of single moves
/// gamma -> delta gamma eps psi(delta)^{-1}.
inline std::vector<ElementIds> classes_bruteforce(const AbstractZipDatum& a, std::size_t lattice_bound = 48) {
  const auto& G = a.gamma();
  const std::size_t n = G.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t g = 0; g < n; ++g) {
    auto E = e_gamma_bruteforce(a, g, lattice_bound);
    for (auto d : a.delta())
      for (auto e : E) {
        auto v = G.index_of(G.element(d) * G.element(g) * G.element(e) * G.element(a.psi(d)).inverse());
        parent[find(v)] = find(g);
      }
  }
  std::map<std::size_t, ElementIds> groups;
  for (std::size_t g = 0; g < n; ++g) groups[find(g)].push_back(g);
  std::vector<ElementIds> out;
  for (auto& [root, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zipdata::oracle
