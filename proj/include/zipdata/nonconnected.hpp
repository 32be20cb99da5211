#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zipdata/abstract.hpp"
#include "zipdata/zip_datum.hpp"

namespace zipdata {

/// Diagram automorphism as images of 1..n: perm[i-1] = image of i.
using SimplePermutation = std::vector<int>;

/// Element w·ω of W ⋊ Ω; omega is an index into the Ω enumeration.
struct ExtendedElement {
  Element w;
  std::size_t omega = 0;

  friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) {
    return a.w == b.w && a.omega == b.omega;
  }
};

/// Zip datum extended by a group Ω of Coxeter automorphisms, a subgroup Ω_I
/// stabilising I, and a homomorphism psi_hat: Ω_I -> Ω compatible with psi.
class ExtendedZipDatum {
 public:
  ExtendedZipDatum(ZipDatum base, const std::vector<SimplePermutation>& omega_gens,
                   const std::vector<SimplePermutation>& omega_I_gens,
                   const std::vector<SimplePermutation>& psi_hat_images)
      : base_(std::move(base)) {
    const auto& g = base_.group();
    const int n = g.rank();
    std::vector<Permutation> gens;
    for (auto& p : omega_gens) gens.push_back(to_perm(p));
    omega_ = std::make_shared<const FiniteGroup>(n, gens);
    std::vector<Permutation> ig, pi;
    for (auto& p : omega_I_gens) ig.push_back(to_perm(p));
    for (auto& p : psi_hat_images) pi.push_back(to_perm(p));
    for (auto& p : ig)
      if (!omega_->contains(p)) fail(ErrorCode::ElementNotInGroup, "Omega_I generator " + p.str() + " not in Omega");
    for (auto& p : pi)
      if (!omega_->contains(p)) fail(ErrorCode::ElementNotInGroup, "psi_hat image " + p.str() + " not in Omega");
    psi_hat_ = std::make_shared<const AbstractZipDatum>(omega_, ig, pi);
    omega_I_ = psi_hat_->delta();

    for (std::size_t u = 0; u < omega_->order(); ++u) {
      for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
          if (g.m(apply(u, s), apply(u, t)) != g.m(s, t))
            fail(ErrorCode::MatrixViolation, "Omega element " + omega_str(u) + " does not preserve the Coxeter matrix");
    }
    for (auto u : omega_I_) {
      for (int s : base_.I().indices()) {
        if (!base_.I().contains(apply(u, s)))
          fail(ErrorCode::SubsetMismatch, "Omega_I element " + omega_str(u) + " does not preserve I");
        int lhs = apply(psi_hat(u), base_.psi(s));
        int rhs = base_.psi(apply(u, s));
        if (lhs != rhs)
          fail(ErrorCode::NotAHomomorphism, "psi_hat(" + omega_str(u) + ") is not compatible with psi at " + std::to_string(s));
      }
      auto v = psi_hat(u);
      for (int t : base_.J().indices())
        if (!base_.J().contains(apply(v, t)))
          fail(ErrorCode::SubsetMismatch, "psi_hat(" + omega_str(u) + ") does not preserve J");
    }
  }

  const ZipDatum& base() const { return base_; }
  const FiniteGroup& omega() const { return *omega_; }
  const ElementIds& omega_I() const { return omega_I_; }
  std::size_t psi_hat(std::size_t u) const { return psi_hat_->psi(u); }

  int apply(std::size_t u, int s) const { return omega_->element(u)(s - 1) + 1; }
  SimplePermutation omega_perm(std::size_t u) const {
    SimplePermutation p;
    for (int s = 1; s <= base_.group().rank(); ++s) p.push_back(apply(u, s));
    return p;
  }
  /// "[2,1]"
  std::string omega_str(std::size_t u) const {
    std::string out = "[";
    for (int s = 1; s <= base_.group().rank(); ++s) {
      if (s > 1) out += ',';
      out += std::to_string(apply(u, s));
    }
    return out + "]";
  }
  std::size_t omega_index(const SimplePermutation& p) const { return omega_->index_of(to_perm(p)); }
  SimpleSubset apply(std::size_t u, SimpleSubset K) const {
    SimpleSubset out;
    for (int s : K.indices()) out.insert(apply(u, s));
    return out;
  }

  Element act(std::size_t u, const Element& w) const {
    return apply_automorphism(base_.group(), omega_perm(u), w);
  }

  ExtendedElement make(const Element& w, std::size_t u = 0) const { return {w, u}; }
  ExtendedElement multiply(const ExtendedElement& a, const ExtendedElement& b) const {
    return {a.w * act(a.omega, b.w), omega_->mul(a.omega, b.omega)};
  }
  ExtendedElement inverse(const ExtendedElement& a) const {
    auto ui = omega_->inv(a.omega);
    return {act(ui, a.w.inverse()), ui};
  }

  std::string str(const ExtendedElement& a) const {
    if (omega_->element(a.omega).is_identity()) return a.w.str();
    return a.w.str() + "*" + omega_str(a.omega);
  }

  bool in_param(const ExtendedElement& a, ParamSide side) const {
    if (side == ParamSide::IW) return base_.in_iw(a.w);
    return base_.in_support(a.w) && in_min_right(a.w, apply(a.omega, base_.J()));
  }

  /// ^I W·Ω (IW) or Ω·W^J (WJ), ordered by Ω index then ShortLex.
  std::vector<ExtendedElement> params(ParamSide side) const {
    std::vector<ExtendedElement> out;
    for (std::size_t u = 0; u < omega_->order(); ++u) {
      if (side == ParamSide::IW) {
        for (const auto& w : base_.iw()) out.push_back({w, u});
      } else {
        for (const auto& w : base_.wj()) out.push_back({act(u, w), u});
      }
    }
    return out;
  }

  /// υ ŵ psi_hat(υ)^{-1}
  ExtendedElement omega_action(std::size_t upsilon, const ExtendedElement& a, ParamSide side = ParamSide::IW) const {
    require(a, side);
    if (!psi_hat_->in_delta(upsilon)) fail(ErrorCode::NotInParamSet, omega_str(upsilon) + " is not in Omega_I");
    return multiply(multiply(make(base_.group().identity(), upsilon), a),
                    make(base_.group().identity(), omega_->inv(psi_hat(upsilon))));
  }

  std::vector<std::vector<ExtendedElement>> nc_pieces(ParamSide side = ParamSide::IW) const {
    auto all = params(side);
    std::vector<bool> done(all.size(), false);
    std::vector<std::vector<ExtendedElement>> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (done[i]) continue;
      std::vector<ExtendedElement> orbit;
      for (auto u : omega_I_) {
        auto img = omega_action(u, all[i], side);
        for (std::size_t j = 0; j < all.size(); ++j)
          if (!done[j] && all[j] == img) done[j] = true;
      }
      for (std::size_t j = 0; j < all.size(); ++j) {
        bool member = false;
        for (auto u : omega_I_)
          if (omega_action(u, all[i], side) == all[j]) member = true;
        if (member) orbit.push_back(all[j]);
      }
      out.push_back(std::move(orbit));
    }
    return out;
  }

  /// ŵ' ≼ ŵ: some ŷ = y·υ in W_I ⋊ Ω_I has ŷ ŵ' psi_hat(ŷ)^{-1} <= ŵ componentwise.
  bool nc_precedes(const ExtendedElement& a_prime, const ExtendedElement& a, ParamSide side = ParamSide::IW) const {
    require(a_prime, side);
    require(a, side);
    return precedes_unchecked(a_prime, a);
  }

  std::vector<ExtendedElement> nc_closure(const ExtendedElement& a, ParamSide side = ParamSide::IW) const {
    require(a, side);
    std::vector<ExtendedElement> out;
    for (const auto& v : params(side))
      if (precedes_unchecked(v, a)) out.push_back(v);
    return out;
  }

  /// The unique element of Ω·W^J of the form y ŵ psi(y)^{-1}, y in W_I.
  ExtendedElement sigma_hat(const ExtendedElement& a) const {
    require(a, ParamSide::IW);
    ZipDatum::PsiMap map;
    for (int s : base_.I().indices()) map[s] = apply(a.omega, base_.psi(s));
    ZipDatum twisted(base_.group(), base_.I(), apply(a.omega, base_.J()), map, base_.support());
    return {twisted.sigma(a.w), a.omega};
  }

  void require(const ExtendedElement& a, ParamSide side) const {
    base_.group().check_member(a.w);
    if (a.omega >= omega_->order()) fail(ErrorCode::NotInParamSet, "Omega index out of range");
    if (!in_param(a, side))
      fail(ErrorCode::NotInParamSet, str(a) + " is not in " + (side == ParamSide::IW ? "^I W Omega" : "Omega W^J"));
  }

 private:
  static Permutation to_perm(const SimplePermutation& p) {
    std::vector<int> v;
    for (int s : p) v.push_back(s - 1);
    return Permutation(std::move(v));
  }

  bool precedes_unchecked(const ExtendedElement& a_prime, const ExtendedElement& a) const {
    const auto& g = base_.group();
    for (auto u : omega_I_) {
      auto moved = multiply(multiply(make(g.identity(), u), a_prime), make(g.identity(), omega_->inv(psi_hat(u))));
      if (moved.omega != a.omega) continue;
      for (const auto& [y, py_inv] : base_.twists()) {
        // y·moved·psi(y)^{-1} = (y moved.w ω(psi(y)^{-1}), ω)
        Element w = y * moved.w * act(moved.omega, py_inv);
        if (bruhat_leq(w, a.w)) return true;
      }
    }
    return false;
  }

  ZipDatum base_;
  std::shared_ptr<const FiniteGroup> omega_;
  std::shared_ptr<const AbstractZipDatum> psi_hat_;
  ElementIds omega_I_;
};

}  // namespace zipdata
