#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zipdata/nonconnected.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata {

inline SimplePermutation identity_automorphism(const CoxeterGroup& g) {
  SimplePermutation p;
  for (int s = 1; s <= g.rank(); ++s) p.push_back(s);
  return p;
}

/// The nontrivial diagram automorphism of an irreducible A_n, D_n or E6
/// (identity for A1).
inline SimplePermutation flip_automorphism(const CoxeterGroup& g) {
  if (g.components().size() != 1) fail(ErrorCode::Unsupported, "flip needs an irreducible type, got " + g.label());
  const auto c = g.components().front();
  const int n = c.rank;
  SimplePermutation p = identity_automorphism(g);
  switch (c.family) {
    case 'A':
      for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i - 1)] = n + 1 - i;
      break;
    case 'D':
      std::swap(p[static_cast<std::size_t>(n - 2)], p[static_cast<std::size_t>(n - 1)]);
      break;
    case 'E':
      if (n != 6) fail(ErrorCode::Unsupported, "E" + std::to_string(n) + " has no diagram flip");
      p = {6, 2, 5, 4, 3, 1};
      break;
    default:
      fail(ErrorCode::Unsupported, c.str() + " has no diagram flip");
  }
  return p;
}

/// "id", "flip" or an image list "2,1" / "[2,1]".
inline SimplePermutation parse_automorphism(const CoxeterGroup& g, std::string_view text) {
  if (text == "id") return identity_automorphism(g);
  if (text == "flip") return flip_automorphism(g);
  std::string cleaned;
  for (char c : text)
    if (c != '[' && c != ']') cleaned += c;
  SimplePermutation p = parse_word(cleaned);
  return p;
}

/// Throws MatrixViolation unless p permutes S and preserves the Coxeter matrix.
inline void check_automorphism(const CoxeterGroup& g, const SimplePermutation& p, std::string_view name) {
  const int n = g.rank();
  if (static_cast<int>(p.size()) != n)
    fail(ErrorCode::MatrixViolation, std::string(name) + " must list " + std::to_string(n) + " images");
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int s : p) {
    if (s < 1 || s > n || hit[static_cast<std::size_t>(s)])
      fail(ErrorCode::MatrixViolation, std::string(name) + " is not a permutation of the simple reflections");
    hit[static_cast<std::size_t>(s)] = true;
  }
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t)
      if (g.m(p[static_cast<std::size_t>(s - 1)], p[static_cast<std::size_t>(t - 1)]) != g.m(s, t))
        fail(ErrorCode::MatrixViolation, std::string(name) + " does not preserve the Coxeter matrix");
}

struct IsogenyInput {
  CoxeterGroup group;
  SimplePermutation phi_bar;
  SimplePermutation delta;
  SimpleSubset I;
  Element x;
};

struct IsogenyDatum {
  IsogenyInput input;
  SimpleSubset K;  // delta phi_bar (I)
  ZipDatum datum;

  bool lusztig_case() const { return input.phi_bar == identity_automorphism(input.group); }
};

/// (W, I, J, psi) with J = x (delta phi_bar (I)) x^{-1}, psi = inn(x) o delta o phi_bar.
inline IsogenyDatum build_from_isogeny(const IsogenyInput& in) {
  const auto& g = in.group;
  check_automorphism(g, in.phi_bar, "phi_bar");
  check_automorphism(g, in.delta, "delta");
  g.check_subset(in.I);
  g.check_member(in.x);
  auto dp = [&](int s) { return in.delta[static_cast<std::size_t>(in.phi_bar[static_cast<std::size_t>(s - 1)] - 1)]; };
  SimpleSubset K;
  for (int s : in.I.indices()) K.insert(dp(s));
  ZipDatum::PsiMap psi;
  SimpleSubset J;
  for (int s : in.I.indices()) {
    auto t = g.conjugate_simple(in.x, dp(s));
    if (!t)
      fail(ErrorCode::NonSimpleConjugate,
           "x = " + in.x.str() + " conjugates s" + std::to_string(dp(s)) + " to a non-simple reflection");
    psi[s] = *t;
    J.insert(*t);
  }
  if (!in_min_left(in.x, J) || !in_min_right(in.x, K))
    fail(ErrorCode::NotDoubleCosetRep, in.x.str() + " is not in ^" + J.str() + "W^" + K.str());
  for (int r = 0; r < g.num_positive_roots(); ++r) {
    if (!g.root_in(r, K)) continue;
    int img = in.x.act(r);
    if (!g.is_positive(img) || !g.root_in(img, J))
      fail(ErrorCode::NotDoubleCosetRep, "x does not map Phi_K^+ onto Phi_J^+");
  }
  return {in, K, ZipDatum(g, in.I, J, psi)};
}

/// forward: w in W^J -> w x in W^K; backward: w in W^K -> w x^{-1} in W^J.
inline Element lusztig_reparam(const IsogenyDatum& iso, const Element& w, bool forward) {
  const auto& g = iso.input.group;
  g.check_member(w);
  if (forward) {
    if (!in_min_right(w, iso.datum.J())) fail(ErrorCode::NotMinimalRep, w.str() + " is not in W^" + iso.datum.J().str());
    return w * iso.input.x;
  }
  if (!in_min_right(w, iso.K)) fail(ErrorCode::NotMinimalRep, w.str() + " is not in W^" + iso.K.str());
  return w * iso.input.x.inverse();
}

/// {w' in W^K : w' x^{-1} ≼ w x^{-1}} for phi_bar = id.
inline std::vector<Element> lusztig_closure(const IsogenyDatum& iso, const Element& w) {
  if (!iso.lusztig_case()) fail(ErrorCode::WrongMode, "closure in the W^K parametrization needs phi_bar = id");
  Element target = lusztig_reparam(iso, w, false);
  std::vector<Element> out;
  for (const auto& v : min_reps_right(iso.input.group, iso.K)) {
    Element v_back = v * iso.input.x.inverse();
    if (iso.datum.precedes(v_back, target, ParamSide::WJ)) out.push_back(v);
  }
  return out;
}

/// Pieces read as single orbits, with closure cover edges.
struct FrobeniusReport {
  std::vector<Piece> orbits;
  ClosurePoset poset;
  int dim_G = 0;
};

inline FrobeniusReport frobenius_report(const ZipDatum& z, int central_rank = 0) {
  FrobeniusReport r;
  r.orbits = z.pieces(ParamSide::IW, central_rank);
  r.poset = z.hasse_poset(ParamSide::IW);
  r.dim_G = z.dim_G(central_rank);
  return r;
}

}  // namespace zipdata
