#pragma once

#include <optional>
#include <vector>

#include "zipdata/coxeter.hpp"

namespace zipdata {

/// w = w_I * x * w_J with w_I in W_I, x in ^I W^J, w_J in ^{I_x} W_J.
struct HowlettDecomposition {
  Element w_I;
  Element x;
  Element w_J;
};

/// No left descent in I.
inline bool in_min_left(const Element& w, SimpleSubset I) {
  for (int s : I.indices())
    if (w.has_descent(s, Side::Left)) return false;
  return true;
}

/// w Phi_J^+ in Phi^+, i.e. w(alpha_s) > 0 for s in J.
inline bool in_min_right(const Element& w, SimpleSubset J) {
  for (int s : J.indices())
    if (w.has_descent(s, Side::Right)) return false;
  return true;
}

/// w lies in the parabolic subgroup W_K: every inversion of w is a root of Phi_K.
inline bool in_parabolic(const CoxeterGroup& g, const Element& w, SimpleSubset K) {
  g.check_member(w);
  for (int r = 0; r < g.num_positive_roots(); ++r)
    if (!g.is_positive(w.act(r)) && !g.root_in(r, K)) return false;
  return true;
}

namespace detail {

inline std::vector<Element> ambient_elements(const CoxeterGroup& g, std::optional<SimpleSubset> ambient) {
  if (!ambient || *ambient == g.simple_set()) return g.elements();
  return g.parabolic_elements(*ambient);
}

}  // namespace detail

/// ^I W inside W (or inside W_ambient), ShortLex ordered.
inline std::vector<Element> min_reps_left(const CoxeterGroup& g, SimpleSubset I,
                                          std::optional<SimpleSubset> ambient = std::nullopt) {
  g.check_subset(I);
  std::vector<Element> out;
  for (const auto& w : detail::ambient_elements(g, ambient))
    if (in_min_left(w, I)) out.push_back(w);
  return out;
}

/// W^J, ShortLex ordered.
inline std::vector<Element> min_reps_right(const CoxeterGroup& g, SimpleSubset J,
                                           std::optional<SimpleSubset> ambient = std::nullopt) {
  g.check_subset(J);
  std::vector<Element> out;
  for (const auto& w : detail::ambient_elements(g, ambient))
    if (in_min_right(w, J)) out.push_back(w);
  return out;
}

/// ^I W^J, ShortLex ordered.
inline std::vector<Element> double_reps(const CoxeterGroup& g, SimpleSubset I, SimpleSubset J,
                                        std::optional<SimpleSubset> ambient = std::nullopt) {
  g.check_subset(I);
  g.check_subset(J);
  std::vector<Element> out;
  for (const auto& w : detail::ambient_elements(g, ambient))
    if (in_min_left(w, I) && in_min_right(w, J)) out.push_back(w);
  return out;
}

/// I_x = J ∩ x^{-1} I x for x in ^I W^J.
inline SimpleSubset kilmoyer(const CoxeterGroup& g, SimpleSubset I, SimpleSubset J, const Element& x) {
  g.check_member(x);
  if (!in_min_left(x, I) || !in_min_right(x, J))
    fail(ErrorCode::NotDoubleCosetRep, x.str() + " is not in ^" + I.str() + "W^" + J.str());
  SimpleSubset out;
  for (int s : J.indices()) {
    auto t = g.conjugate_simple(x, s);
    if (t && I.contains(*t)) out.insert(s);
  }
  return out;
}

inline HowlettDecomposition howlett_decompose(const CoxeterGroup& g, SimpleSubset I, SimpleSubset J,
                                              const Element& w) {
  g.check_member(w);
  g.check_subset(I);
  g.check_subset(J);
  Element w_I = g.identity();
  Element u = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int s : I.indices()) {
      if (u.has_descent(s, Side::Left)) {
        u = u.simple_times(s);
        w_I = w_I.times_simple(s);
        changed = true;
        break;
      }
    }
  }
  Element w_J = g.identity();
  Element x = u;
  for (bool changed = true; changed;) {
    changed = false;
    for (int s : J.indices()) {
      if (x.has_descent(s, Side::Right)) {
        x = x.times_simple(s);
        w_J = w_J.simple_times(s);
        changed = true;
        break;
      }
    }
  }
  return {w_I, x, w_J};
}

/// #{alpha in Phi^+ \ Phi_J : w alpha in Phi^- \ Phi_I} for w in ^I W.
inline int refined_length_count(const CoxeterGroup& g, SimpleSubset I, SimpleSubset J, const Element& w) {
  g.check_member(w);
  if (!in_min_left(w, I)) fail(ErrorCode::NotMinimalRep, w.str() + " is not in ^" + I.str() + "W");
  int count = 0;
  for (int r = 0; r < g.num_positive_roots(); ++r) {
    if (g.root_in(r, J)) continue;
    int img = w.act(r);
    if (!g.is_positive(img) && !g.root_in(img, I)) ++count;
  }
  return count;
}

}  // namespace zipdata
