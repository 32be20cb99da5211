#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zipdata/cosets.hpp"
#include "zipdata/coxeter.hpp"

namespace zipdata {

/// Which parameter set labels the pieces: ^I W or W^J.
enum class ParamSide { IW, WJ };

inline std::string to_string(ParamSide side) { return side == ParamSide::IW ? "iw" : "wj"; }

/// One stratum. On the WJ side, K, x, w_J and inf_stab are those of sigma^{-1}(w).
struct Piece {
  Element w;
  SimpleSubset K;
  int length = 0;
  Element x;
  Element w_J;
  int dim = 0;
  int inf_stab = 0;
};

struct ClosurePoset {
  ParamSide side = ParamSide::IW;
  std::vector<Element> nodes;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: nodes[i] ≼ nodes[j]
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Coxeter-type zip datum (W_{S'}, I, J, psi) with psi: I -> J a Coxeter
/// isomorphism. S' (the support) is all of S unless the datum was produced by
/// induction, in which case the ambient group is the parabolic W_{S'}.
class ZipDatum {
 public:
  using PsiMap = std::map<int, int>;

  ZipDatum(CoxeterGroup group, SimpleSubset I, SimpleSubset J, const PsiMap& psi_pairs,
           std::optional<SimpleSubset> support = std::nullopt)
      : group_(std::move(group)),
        support_(support.value_or(group_.simple_set())),
        I_(I),
        J_(J),
        cache_(std::make_shared<Cache>()) {
    group_.check_subset(support_);
    group_.check_subset(I_);
    group_.check_subset(J_);
    if (!I_.subset_of(support_) || !J_.subset_of(support_))
      fail(ErrorCode::SubsetMismatch, "I and J must lie in the support " + support_.str());
    if (I_.size() != J_.size())
      fail(ErrorCode::SubsetMismatch, "|I| = " + std::to_string(I_.size()) + " but |J| = " + std::to_string(J_.size()));
    psi_.fill(0);
    psi_inv_.fill(0);
    for (auto [s, t] : psi_pairs) {
      if (!I_.contains(s)) fail(ErrorCode::PsiNotBijective, "psi defined on " + std::to_string(s) + " outside I");
      if (!J_.contains(t)) fail(ErrorCode::PsiNotBijective, "psi(" + std::to_string(s) + ") = " + std::to_string(t) + " outside J");
      if (psi_inv_[static_cast<std::size_t>(t)] != 0)
        fail(ErrorCode::PsiNotBijective, "psi is not injective at " + std::to_string(t));
      psi_[static_cast<std::size_t>(s)] = t;
      psi_inv_[static_cast<std::size_t>(t)] = s;
    }
    for (int s : I_.indices())
      if (psi_[static_cast<std::size_t>(s)] == 0)
        fail(ErrorCode::PsiNotBijective, "psi undefined on " + std::to_string(s));
    for (int s : I_.indices())
      for (int t : I_.indices())
        if (group_.m(s, t) != group_.m(psi(s), psi(t)))
          fail(ErrorCode::PsiNotCoxeter, "m(" + std::to_string(s) + "," + std::to_string(t) + ") = " +
                                             std::to_string(group_.m(s, t)) + " but m(psi) = " +
                                             std::to_string(group_.m(psi(s), psi(t))));
  }

  const CoxeterGroup& group() const { return group_; }
  SimpleSubset support() const { return support_; }
  SimpleSubset I() const { return I_; }
  SimpleSubset J() const { return J_; }
  int psi(int s) const {
    if (!I_.contains(s)) fail(ErrorCode::IndexOutOfRange, std::to_string(s) + " not in I");
    return psi_[static_cast<std::size_t>(s)];
  }
  int psi_inverse(int t) const {
    if (!J_.contains(t)) fail(ErrorCode::IndexOutOfRange, std::to_string(t) + " not in J");
    return psi_inv_[static_cast<std::size_t>(t)];
  }
  PsiMap psi_map() const {
    PsiMap out;
    for (int s : I_.indices()) out[s] = psi(s);
    return out;
  }

  /// psi extended to W_I.
  Element psi_of(const Element& y) const {
    Word word = y.canonical_word();
    for (int& s : word) s = psi(s);
    return group_.element_from_word(word);
  }
  Element psi_inverse_of(const Element& v) const {
    Word word = v.canonical_word();
    for (int& s : word) s = psi_inverse(s);
    return group_.element_from_word(word);
  }

  bool in_support(const Element& w) const { return in_parabolic(group_, w, support_); }
  bool in_iw(const Element& w) const { return in_support(w) && in_min_left(w, I_); }
  bool in_wj(const Element& w) const { return in_support(w) && in_min_right(w, J_); }
  bool in_param(const Element& w, ParamSide side) const { return side == ParamSide::IW ? in_iw(w) : in_wj(w); }

  /// ^I W, ShortLex.
  const std::vector<Element>& iw() const {
    std::call_once(cache_->iw_once, [this] { cache_->iw = min_reps_left(group_, I_, support_); });
    return cache_->iw;
  }
  /// W^J, ShortLex.
  const std::vector<Element>& wj() const {
    std::call_once(cache_->wj_once, [this] { cache_->wj = min_reps_right(group_, J_, support_); });
    return cache_->wj;
  }
  const std::vector<Element>& params(ParamSide side) const { return side == ParamSide::IW ? iw() : wj(); }
  /// Elements of W_{S'}.
  std::vector<Element> ambient_elements() const { return detail::ambient_elements(group_, support_); }

  /// Pairs (y, psi(y)^{-1}) for y in W_I, ShortLex in y.
  const std::vector<std::pair<Element, Element>>& twists() const {
    std::call_once(cache_->twist_once, [this] {
      for (auto& y : group_.parabolic_elements(I_)) cache_->twists.emplace_back(y, psi_of(y).inverse());
    });
    return cache_->twists;
  }

  /// (W_J, I_x, J_x, psi o inn(x)) for x in ^I W^J.
  ZipDatum induced_at(const Element& x) const {
    group_.check_member(x);
    if (!in_support(x) || !in_min_left(x, I_) || !in_min_right(x, J_))
      fail(ErrorCode::NotDoubleCosetRep, x.str() + " is not in ^" + I_.str() + "W^" + J_.str());
    SimpleSubset Ix = kilmoyer(group_, I_, J_, x);
    PsiMap map;
    SimpleSubset Jx;
    for (int s : Ix.indices()) {
      int t = psi(*group_.conjugate_simple(x, s));
      map[s] = t;
      Jx.insert(t);
    }
    return ZipDatum(group_, Ix, Jx, map, J_);
  }

  /// (W_{S'}, J, I, psi^{-1})
  ZipDatum dual() const {
    PsiMap inv;
    for (int s : I_.indices()) inv[psi(s)] = s;
    return ZipDatum(group_, J_, I_, inv, support_);
  }

  /// Largest K ⊆ w^{-1} I w with psi(w K w^{-1}) = K.
  SimpleSubset Kw(const Element& w) const {
    require(w, ParamSide::IW);
    std::array<int, SimpleSubset::kMaxRank + 1> f{};
    SimpleSubset K;
    for (int s : support_.indices()) {
      auto t = group_.conjugate_simple(w, s);
      if (t && I_.contains(*t)) {
        f[static_cast<std::size_t>(s)] = psi(*t);
        K.insert(s);
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int s : K.indices()) {
        if (!K.contains(f[static_cast<std::size_t>(s)])) {
          K.erase(s);
          changed = true;
        }
      }
    }
    return K;
  }

  /// The unique element of ^I W equivalent to w.
  Element canonical_piece(const Element& w) const {
    group_.check_member(w);
    if (!in_support(w)) fail(ErrorCode::ElementNotInGroup, w.str() + " is not in W_" + support_.str());
    if (I_ == support_) return group_.identity();
    auto h = howlett_decompose(group_, I_, J_, w);
    Element v = h.w_J * psi_of(h.w_I);
    return h.x * induced_at(h.x).canonical_piece(v);
  }

  /// The unique element of W^J of the form y w psi(y)^{-1}, y in W_I.
  Element sigma(const Element& w) const {
    require(w, ParamSide::IW);
    if (I_ == support_) return w;
    auto h = howlett_decompose(group_, I_, J_, w);
    return psi_inverse_of(induced_at(h.x).sigma(h.w_J)) * h.x;
  }

  Element sigma_inverse(const Element& w) const {
    require(w, ParamSide::WJ);
    return dual().sigma(w.inverse()).inverse();
  }

  /// w' ≼ w: some y in W_I has y w' psi(y)^{-1} <= w.
  bool precedes(const Element& w_prime, const Element& w, ParamSide side) const {
    require(w_prime, side);
    require(w, side);
    return precedes_unchecked(w_prime, w);
  }

  std::vector<Element> closure_set(const Element& w, ParamSide side) const {
    require(w, side);
    std::vector<Element> out;
    for (const auto& v : params(side))
      if (precedes_unchecked(v, w)) out.push_back(v);
    return out;
  }

  ClosurePoset hasse_poset(ParamSide side) const {
    ClosurePoset poset;
    poset.side = side;
    poset.nodes = params(side);
    const std::size_t n = poset.nodes.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> above(n, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<std::uint64_t>> below(n, std::vector<std::uint64_t>(words, 0));
    poset.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (precedes_unchecked(poset.nodes[i], poset.nodes[j])) {
          poset.leq[i][j] = true;
          if (i == j) continue;
          above[i][j / 64] |= std::uint64_t{1} << (j % 64);
          below[j][i / 64] |= std::uint64_t{1} << (i % 64);
        }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !poset.leq[i][j]) continue;
        bool cover = true;
        for (std::size_t k = 0; k < words && cover; ++k)
          if (above[i][k] & below[j][k]) cover = false;
        if (cover) poset.covers.emplace_back(i, j);
      }
    return poset;
  }

  int torus_dim(int central_rank) const { return support_.size() + central_rank; }
  int dim_P(int central_rank = 0) const {
    return torus_dim(central_rank) + group_.count_positive_roots(support_) + group_.count_positive_roots(I_);
  }
  int dim_G(int central_rank = 0) const { return torus_dim(central_rank) + 2 * group_.count_positive_roots(support_); }
  /// #Phi^+ - #Phi_J^+
  int dim_V() const { return group_.count_positive_roots(support_) - group_.count_positive_roots(J_); }

  int piece_dimension(const Element& w, int central_rank = 0) const {
    require(w, ParamSide::IW);
    return dim_P(central_rank) + w.length();
  }
  int inf_stab_dim(const Element& w) const {
    require(w, ParamSide::IW);
    return dim_V() - howlett_decompose(group_, I_, J_, w).x.length();
  }

  Piece make_piece(const Element& w, ParamSide side, int central_rank = 0) const {
    require(w, side);
    Element base = side == ParamSide::IW ? w : sigma_inverse(w);
    auto h = howlett_decompose(group_, I_, J_, base);
    Piece p;
    p.w = w;
    p.K = Kw(base);
    p.length = w.length();
    p.x = h.x;
    p.w_J = h.w_J;
    p.dim = dim_P(central_rank) + w.length();
    p.inf_stab = dim_V() - h.x.length();
    return p;
  }

  std::vector<Piece> pieces(ParamSide side = ParamSide::IW, int central_rank = 0) const {
    std::vector<Piece> out;
    for (const auto& w : params(side)) out.push_back(make_piece(w, side, central_rank));
    return out;
  }

  /// Checks w is in the requested parameter set.
  void require(const Element& w, ParamSide side) const {
    group_.check_member(w);
    if (in_param(w, side)) return;
    ParamSide other = side == ParamSide::IW ? ParamSide::WJ : ParamSide::IW;
    if (in_param(w, other))
      fail(ErrorCode::NotMinimalRep, w.str() + " is not in " + (side == ParamSide::IW ? "^" + I_.str() + "W" : "W^" + J_.str()));
    fail(ErrorCode::Unsupported, w.str() + " lies in neither ^I W nor W^J");
  }

 private:
  struct Cache {
    std::once_flag iw_once, wj_once, twist_once;
    std::vector<Element> iw, wj;
    std::vector<std::pair<Element, Element>> twists;
  };

  bool precedes_unchecked(const Element& w_prime, const Element& w) const {
    for (const auto& [y, py_inv] : twists())
      if (bruhat_leq(y * w_prime * py_inv, w)) return true;
    return false;
  }

  CoxeterGroup group_;
  SimpleSubset support_;
  SimpleSubset I_;
  SimpleSubset J_;
  std::array<int, SimpleSubset::kMaxRank + 1> psi_{};
  std::array<int, SimpleSubset::kMaxRank + 1> psi_inv_{};
  std::shared_ptr<Cache> cache_;
};

}  // namespace zipdata
