#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zipdata/zip_datum.hpp"

namespace zipdata {

/// Permutation of {0..n-1}; printed and parsed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[static_cast<std::size_t>(v)])
        fail(ErrorCode::ParseError, "image list is not a permutation");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> v(static_cast<std::size_t>(degree));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  /// "(1 2)(3 4)", "(1,2,3)" or "()".
  static Permutation parse(std::string_view text, int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    std::vector<int> cycle;
    std::string num;
    bool open = false;
    auto push_num = [&] {
      if (num.empty()) return;
      int v = 0;
      try {
        v = std::stoi(num);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad point '" + num + "' in " + std::string(text));
      }
      if (v < 1 || v > degree)
        fail(ErrorCode::ParseError, "point " + num + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(v - 1)]) fail(ErrorCode::ParseError, "point " + num + " repeated in " + std::string(text));
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v - 1);
      num.clear();
    };
    for (char c : text) {
      if (c == '(') {
        if (open) fail(ErrorCode::ParseError, "nested '(' in " + std::string(text));
        open = true;
        cycle.clear();
      } else if (c == ')') {
        if (!open) fail(ErrorCode::ParseError, "unbalanced ')' in " + std::string(text));
        push_num();
        for (std::size_t i = 0; i < cycle.size(); ++i) img[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        open = false;
      } else if (c == ' ' || c == ',') {
        push_num();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        if (!open) fail(ErrorCode::ParseError, "point outside a cycle in " + std::string(text));
        num += c;
      } else {
        fail(ErrorCode::ParseError, "unexpected character in permutation " + std::string(text));
      }
    }
    if (open) fail(ErrorCode::ParseError, "unterminated cycle in " + std::string(text));
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  /// (a*b)(i) = a(b(i))
  Permutation operator*(const Permutation& b) const {
    if (b.images_.size() != images_.size()) fail(ErrorCode::GroupMismatch, "permutations of different degree");
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[static_cast<std::size_t>(b.images_[i])];
    return out;
  }
  Permutation inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return out;
  }

  std::string str() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == static_cast<int>(i)) continue;
      out += '(';
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
        j = static_cast<std::size_t>(images_[j]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int v : images_) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

/// Sorted element indices of a subset of a FiniteGroup.
using ElementIds = std::vector<std::size_t>;

/// Finite permutation group given by generators, fully enumerated.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultOrderBound = 100000;

  FiniteGroup(int degree, std::vector<Permutation> generators, std::size_t order_bound = kDefaultOrderBound)
      : degree_(degree), generators_(std::move(generators)) {
    for (auto& g : generators_)
      if (g.degree() != degree_) fail(ErrorCode::GroupMismatch, "generator " + g.str() + " has the wrong degree");
    elements_.push_back(Permutation::identity(degree_));
    index_.emplace(elements_.front(), 0);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      for (auto& g : generators_) {
        Permutation next = elements_[k] * g;
        if (index_.emplace(next, elements_.size()).second) {
          elements_.push_back(std::move(next));
          if (elements_.size() > order_bound)
            fail(ErrorCode::GroupTooLarge, "group order exceeds " + std::to_string(order_bound));
        }
      }
    }
  }

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_.at(i); }
  bool contains(const Permutation& p) const { return index_.count(p) != 0; }
  std::size_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) fail(ErrorCode::ElementNotInGroup, p.str() + " is not in the group");
    return it->second;
  }
  std::size_t mul(std::size_t a, std::size_t b) const { return index_of(elements_[a] * elements_[b]); }
  std::size_t inv(std::size_t a) const { return index_of(elements_[a].inverse()); }
  /// a^{-1} b a
  std::size_t conj_by_inverse(std::size_t a, std::size_t b) const {
    return index_of(elements_[a].inverse() * elements_[b] * elements_[a]);
  }

  /// Subgroup generated by the given elements, sorted ids.
  ElementIds generate(const ElementIds& gens) const {
    std::vector<bool> in(order(), false);
    ElementIds out{0};
    in[0] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (auto g : gens) {
        auto next = mul(out[k], g);
        if (!in[next]) {
          in[next] = true;
          out.push_back(next);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Abstract zip datum (Gamma, Delta, psi) with psi: Delta -> Gamma a homomorphism.
class AbstractZipDatum {
 public:
  AbstractZipDatum(std::shared_ptr<const FiniteGroup> gamma, std::vector<Permutation> delta_gens,
                   std::vector<Permutation> psi_images)
      : gamma_(std::move(gamma)), cache_(std::make_shared<Cache>()) {
    if (delta_gens.size() != psi_images.size())
      fail(ErrorCode::NotAHomomorphism, "one psi image is needed per Delta generator");
    ElementIds gens, imgs;
    for (auto& d : delta_gens) gens.push_back(gamma_->index_of(d));
    for (auto& p : psi_images) imgs.push_back(gamma_->index_of(p));
    delta_gens_ = gens;
    psi_gens_ = imgs;

    // psi(d g) = psi(d) psi(g) along every edge of the Cayley graph of Delta.
    in_delta_.assign(gamma_->order(), -1);
    psi_of_.clear();
    delta_.push_back(0);
    psi_of_.push_back(0);
    in_delta_[0] = 0;
    for (std::size_t k = 0; k < delta_.size(); ++k) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto next = gamma_->mul(delta_[k], gens[g]);
        auto image = gamma_->mul(psi_of_[k], imgs[g]);
        if (in_delta_[next] < 0) {
          in_delta_[next] = static_cast<long>(delta_.size());
          delta_.push_back(next);
          psi_of_.push_back(image);
        } else if (psi_of_[static_cast<std::size_t>(in_delta_[next])] != image) {
          fail(ErrorCode::NotAHomomorphism, "psi is not well defined on " + gamma_->element(next).str());
        }
      }
    }
    psi_table_.assign(gamma_->order(), SIZE_MAX);
    for (std::size_t k = 0; k < delta_.size(); ++k) psi_table_[delta_[k]] = psi_of_[k];
    std::sort(delta_.begin(), delta_.end());
  }

  /// The datum (W, W_I, psi) with W acting on its roots.
  static AbstractZipDatum from_coxeter(const ZipDatum& z) {
    const auto& g = z.group();
    std::vector<Permutation> gens;
    for (int s : z.support().indices()) gens.push_back(to_permutation(g.simple_reflection(s)));
    auto gamma = std::make_shared<const FiniteGroup>(g.num_roots(), gens);
    std::vector<Permutation> dg, pi;
    for (int s : z.I().indices()) {
      dg.push_back(to_permutation(g.simple_reflection(s)));
      pi.push_back(to_permutation(g.simple_reflection(z.psi(s))));
    }
    return AbstractZipDatum(gamma, dg, pi);
  }

  static Permutation to_permutation(const Element& w) {
    std::vector<int> v(w.permutation().begin(), w.permutation().end());
    return Permutation(std::move(v));
  }

  const FiniteGroup& gamma() const { return *gamma_; }
  std::shared_ptr<const FiniteGroup> gamma_ptr() const { return gamma_; }
  const ElementIds& delta() const { return delta_; }
  const ElementIds& delta_generators() const { return delta_gens_; }
  const ElementIds& psi_generator_images() const { return psi_gens_; }
  bool in_delta(std::size_t g) const { return in_delta_.at(g) >= 0; }
  std::size_t psi(std::size_t d) const {
    if (!in_delta(d)) fail(ErrorCode::ElementNotInGroup, gamma_->element(d).str() + " is not in Delta");
    return psi_table_[d];
  }
  bool psi_injective() const {
    std::vector<std::size_t> imgs;
    for (auto d : delta_) imgs.push_back(psi_table_[d]);
    std::sort(imgs.begin(), imgs.end());
    return std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end();
  }
  std::size_t index_of(const Permutation& p) const { return gamma_->index_of(p); }

  /// Largest subgroup E of gamma^{-1} Delta gamma with psi(gamma E gamma^{-1}) = E.
  ElementIds E(std::size_t gamma) const {
    check(gamma);
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->E.find(gamma);
      if (it != cache_->E.end()) return it->second;
    }
    ElementIds result = compute_E(gamma);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->E.emplace(gamma, result);
    return result;
  }

  /// psi(gamma e gamma^{-1}) for e in gamma^{-1} Delta gamma.
  std::size_t f(std::size_t gamma, std::size_t e) const {
    return psi(gamma_->conj_by_inverse(gamma_->inv(gamma), e));
  }

  /// The class {delta gamma eps psi(delta)^{-1}} of gamma, sorted.
  ElementIds orbit(std::size_t gamma) const {
    check(gamma);
    auto Eg = E(gamma);
    std::vector<bool> in(gamma_->order(), false);
    ElementIds out;
    for (auto d : delta_) {
      auto left = gamma_->mul(d, gamma);
      auto right = gamma_->inv(psi_table_[d]);
      for (auto e : Eg) {
        auto v = gamma_->mul(gamma_->mul(left, e), right);
        if (!in[v]) {
          in[v] = true;
          out.push_back(v);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// All classes, ordered by smallest element id.
  std::vector<ElementIds> all_classes() const {
    std::vector<bool> done(gamma_->order(), false);
    std::vector<ElementIds> out;
    for (std::size_t g = 0; g < gamma_->order(); ++g) {
      if (done[g]) continue;
      auto cls = orbit(g);
      for (auto v : cls) done[v] = true;
      out.push_back(std::move(cls));
    }
    return out;
  }

  /// (psi(Delta), psi(Delta) ∩ xi^{-1} Delta xi, psi o inn(xi)).
  AbstractZipDatum induced_at(std::size_t xi) const {
    check(xi);
    std::vector<Permutation> gamma_gens;
    for (auto g : psi_gens_) gamma_gens.push_back(gamma_->element(g));
    auto sub = std::make_shared<const FiniteGroup>(gamma_->degree(), gamma_gens);
    ElementIds image;
    for (auto d : delta_) image.push_back(psi_table_[d]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    ElementIds delta_xi;
    for (auto v : image) {
      auto c = gamma_->conj_by_inverse(gamma_->inv(xi), v);  // xi v xi^{-1}
      if (in_delta(c)) delta_xi.push_back(v);
    }
    ElementIds gens;
    ElementIds span{0};
    for (auto v : delta_xi) {
      if (std::binary_search(span.begin(), span.end(), v)) continue;
      gens.push_back(v);
      span = gamma_->generate(gens);
    }
    std::vector<Permutation> dg, pi;
    for (auto v : gens) {
      dg.push_back(gamma_->element(v));
      pi.push_back(gamma_->element(f(xi, v)));
    }
    return AbstractZipDatum(sub, dg, pi);
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::size_t, ElementIds> E;
  };

  void check(std::size_t g) const {
    if (g >= gamma_->order()) fail(ErrorCode::ElementNotInGroup, "element id " + std::to_string(g) + " out of range");
  }

  // D_inf = {e : f^k(e) stays in gamma^{-1} Delta gamma for all k} is a subgroup
  // mapped into itself by f; the images f^k(D_inf) decrease to the answer.
  ElementIds compute_E(std::size_t gamma) const {
    const auto n = gamma_->order();
    std::vector<bool> in(n, false);
    ElementIds cur;
    for (auto d : delta_) {
      auto e = gamma_->conj_by_inverse(gamma, d);
      in[e] = true;
      cur.push_back(e);
    }
    for (bool changed = true; changed;) {
      changed = false;
      ElementIds next;
      for (auto e : cur) {
        if (in[f(gamma, e)]) {
          next.push_back(e);
        } else {
          changed = true;
        }
      }
      if (changed) {
        std::fill(in.begin(), in.end(), false);
        for (auto e : next) in[e] = true;
        cur = std::move(next);
      }
    }
    while (true) {
      std::vector<bool> img_in(n, false);
      ElementIds img;
      for (auto e : cur) {
        auto v = f(gamma, e);
        if (!img_in[v]) {
          img_in[v] = true;
          img.push_back(v);
        }
      }
      if (img.size() == cur.size()) break;
      cur = std::move(img);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
  }

  std::shared_ptr<const FiniteGroup> gamma_;
  ElementIds delta_;
  ElementIds delta_gens_;
  ElementIds psi_gens_;
  std::vector<long> in_delta_;
  std::vector<std::size_t> psi_of_;
  std::vector<std::size_t> psi_table_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace zipdata
