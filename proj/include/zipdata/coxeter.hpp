#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "zipdata/errors.hpp"
#include "zipdata/subset.hpp"

namespace zipdata {

/// Sequence of 1-based simple indices; the empty word is the identity.
using Word = std::vector<int>;
using CoxeterMatrix = std::vector<std::vector<int>>;

enum class Side { Left, Right };

/// One irreducible factor of a finite Weyl type, e.g. {'B', 3}.
struct CartanComponent {
  char family = 'A';
  int rank = 1;

  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const CartanComponent&, const CartanComponent&) = default;
};

/// Input to CoxeterGroup::build: either a list of named irreducible types
/// (simple reflections numbered consecutively in Bourbaki order, factor by
/// factor) or an explicit Coxeter matrix.
struct CoxeterSpec {
  std::vector<CartanComponent> components;
  std::optional<CoxeterMatrix> matrix;

  static CoxeterSpec parse(std::string_view label);
  static CoxeterSpec from_matrix(CoxeterMatrix m) {
    CoxeterSpec spec;
    spec.matrix = std::move(m);
    return spec;
  }
};

class Element;
class CoxeterGroup;

namespace detail {

struct GroupData;

inline std::uint64_t next_group_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace detail

/// A Weyl group element, stored as the permutation it induces on the root
/// list (left action). Roots 0..N-1 are positive with the simple roots first;
/// root r+N is -root r.
class Element {
 public:
  Element() = default;

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  bool valid() const { return group_ != nullptr; }

  /// Image of a root index under the left action.
  int act(int root) const { return perm_[static_cast<std::size_t>(root)]; }
  std::span<const std::uint16_t> permutation() const { return perm_; }

  Element operator*(const Element& other) const;
  Element inverse() const;
  /// w * s_s
  Element times_simple(int s) const;
  /// s_s * w
  Element simple_times(int s) const;

  bool has_descent(int s, Side side) const;
  SimpleSubset descents(Side side) const;

  /// ShortLex-minimal reduced word: shortest, then lexicographically least.
  Word canonical_word() const;
  /// "e" for the identity, otherwise the canonical word as "1,2,1".
  std::string str() const;

  bool same_group(const Element& other) const { return group_ == other.group_; }
  std::uint64_t group_id() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.group_ == b.group_ && a.perm_ == b.perm_;
  }
  /// Arbitrary but deterministic total order (by permutation); use
  /// shortlex_less for presentation order.
  friend bool operator<(const Element& a, const Element& b) { return a.perm_ < b.perm_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : perm_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

 private:
  friend class CoxeterGroup;
  Element(std::shared_ptr<const detail::GroupData> group, std::vector<std::uint16_t> perm);

  void recount_length();

  std::shared_ptr<const detail::GroupData> group_;
  std::vector<std::uint16_t> perm_;
  int length_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& w) const { return w.hash(); }
};

using ElementSet = std::unordered_set<Element, ElementHash>;

namespace detail {

struct GroupData {
  std::uint64_t id = 0;
  int rank = 0;
  std::string label;
  std::vector<CartanComponent> components;
  CoxeterMatrix coxeter;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<int>> roots;   // coordinates in the simple-root basis
  int num_positive = 0;
  std::vector<std::uint32_t> support;                  // simple indices with nonzero coordinate
  std::vector<std::vector<std::uint16_t>> reflections;  // [s-1][root] -> root
  std::map<std::vector<int>, int> root_index;
  std::uint64_t order = 0;

  mutable std::once_flag elements_once;
  mutable std::vector<Element> elements;

  int num_roots() const { return static_cast<int>(roots.size()); }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Element

inline Element::Element(std::shared_ptr<const detail::GroupData> group, std::vector<std::uint16_t> perm)
    : group_(std::move(group)), perm_(std::move(perm)) {
  recount_length();
}

inline void Element::recount_length() {
  const auto n_pos = static_cast<std::size_t>(group_->num_positive);
  int count = 0;
  for (std::size_t r = 0; r < n_pos; ++r)
    if (perm_[r] >= n_pos) ++count;
  length_ = count;
}

inline std::uint64_t Element::group_id() const { return group_ ? group_->id : 0; }

inline Element Element::operator*(const Element& other) const {
  if (group_ != other.group_) fail(ErrorCode::GroupMismatch, "multiply: elements of different groups");
  std::vector<std::uint16_t> out(perm_.size());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = perm_[other.perm_[r]];
  return Element(group_, std::move(out));
}

inline Element Element::inverse() const {
  std::vector<std::uint16_t> out(perm_.size());
  for (std::size_t r = 0; r < out.size(); ++r) out[perm_[r]] = static_cast<std::uint16_t>(r);
  Element inv;
  inv.group_ = group_;
  inv.perm_ = std::move(out);
  inv.length_ = length_;
  return inv;
}

inline Element Element::times_simple(int s) const {
  const auto& refl = group_->reflections.at(static_cast<std::size_t>(s - 1));
  Element out;
  out.group_ = group_;
  out.perm_.resize(perm_.size());
  for (std::size_t r = 0; r < perm_.size(); ++r) out.perm_[r] = perm_[refl[r]];
  out.length_ = has_descent(s, Side::Right) ? length_ - 1 : length_ + 1;
  return out;
}

inline Element Element::simple_times(int s) const {
  const auto& refl = group_->reflections.at(static_cast<std::size_t>(s - 1));
  std::vector<std::uint16_t> out(perm_.size());
  for (std::size_t r = 0; r < perm_.size(); ++r) out[r] = refl[perm_[r]];
  return Element(group_, std::move(out));
}

inline bool Element::has_descent(int s, Side side) const {
  const auto n_pos = static_cast<std::uint16_t>(group_->num_positive);
  const auto simple = static_cast<std::size_t>(s - 1);
  if (side == Side::Right) return perm_[simple] >= n_pos;
  // w^{-1}(alpha_s) < 0  <=>  alpha_s = w(beta) for some negative beta
  for (std::size_t r = 0; r < perm_.size(); ++r)
    if (perm_[r] == simple) return r >= n_pos;
  return false;
}

inline SimpleSubset Element::descents(Side side) const {
  SimpleSubset out;
  if (side == Side::Right) {
    for (int s = 1; s <= group_->rank; ++s)
      if (has_descent(s, Side::Right)) out.insert(s);
    return out;
  }
  return inverse().descents(Side::Right);
}

inline Word Element::canonical_word() const {
  // Left descents of w are right descents of u = w^{-1}; strip the smallest
  // one each time: (s w)^{-1} = u s.
  Word word;
  word.reserve(static_cast<std::size_t>(length_));
  Element u = inverse();
  while (u.length_ > 0) {
    for (int s = 1; s <= group_->rank; ++s) {
      if (u.has_descent(s, Side::Right)) {
        word.push_back(s);
        u = u.times_simple(s);
        break;
      }
    }
  }
  return word;
}

inline std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

/// Parses "e", "" or "2,1" (whitespace tolerated).
inline Word parse_word(std::string_view text) {
  Word word;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token == "e") {
      token.clear();
      return;
    }
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      word.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad word token '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return word;
}

inline std::string Element::str() const { return word_to_string(canonical_word()); }

/// ShortLex: shorter first, then lexicographic on canonical words.
inline bool shortlex_less(const Element& a, const Element& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.canonical_word() < b.canonical_word();
}

inline void sort_shortlex(std::vector<Element>& elems) {
  std::vector<std::pair<Word, std::size_t>> keys;
  keys.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) keys.emplace_back(elems[i].canonical_word(), i);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Element> out;
  out.reserve(elems.size());
  for (auto& k : keys) out.push_back(std::move(elems[k.second]));
  elems = std::move(out);
}

/// Bruhat order via the lifting property: for a right descent s of w,
/// x <= w iff (xs <= ws when s is a right descent of x, else x <= ws).
/// The recursion never branches, so it runs in O(l(w) * #roots).
inline bool bruhat_leq(const Element& x, const Element& w) {
  if (!x.same_group(w)) fail(ErrorCode::GroupMismatch, "bruhat_leq: elements of different groups");
  Element u = w;
  Element v = x;
  const int rank = static_cast<int>(SimpleSubset::kMaxRank);
  while (u.length() > 0) {
    if (v.length() > u.length()) return false;
    int s = 1;
    while (s <= rank && !u.has_descent(s, Side::Right)) ++s;
    if (v.has_descent(s, Side::Right)) v = v.times_simple(s);
    u = u.times_simple(s);
  }
  return v.is_identity();
}

// ---------------------------------------------------------------------------
// Cartan data and classification

namespace detail {

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t component_order(const CartanComponent& c) {
  const int n = c.rank;
  switch (c.family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

inline void validate_component(const CartanComponent& c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.family) {
    case 'A': ok = n >= 1; break;
    case 'B':
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) fail(ErrorCode::NonFiniteType, "unknown or unsupported Cartan type " + c.str());
}

/// Bourbaki-numbered Cartan matrix, cartan[i][j] = <alpha_j, alpha_i^vee>.
inline std::vector<std::vector<int>> cartan_matrix(const CartanComponent& c) {
  const int n = c.rank;
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto bond = [&](int i, int j, int a_ij, int a_ji) {  // 1-based
    a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = a_ij;
    a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = a_ji;
  };
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (c.family) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -1, -2);  // alpha_n short
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -2, -1);  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n, -1, -1);
      break;
    case 'E':
      bond(1, 3, -1, -1);
      bond(2, 4, -1, -1);
      for (int i = 3; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'F':
      bond(1, 2, -1, -1);
      bond(2, 3, -1, -2);  // alpha_3, alpha_4 short
      bond(3, 4, -1, -1);
      break;
    case 'G':
      bond(1, 2, -3, -1);  // alpha_1 short
      break;
  }
  return a;
}

inline int coxeter_entry_from_cartan(int a_ij, int a_ji) {
  switch (a_ij * a_ji) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  fail(ErrorCode::NonFiniteType, "Cartan product outside {0,1,2,3}");
}

inline void validate_coxeter_matrix(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0 || n > static_cast<std::size_t>(SimpleSubset::kMaxRank))
    fail(ErrorCode::MalformedMatrix, "rank must be between 1 and 32");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrorCode::MalformedMatrix, "matrix is not square");
    if (m[i][i] != 1) fail(ErrorCode::MalformedMatrix, "diagonal entry must be 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) fail(ErrorCode::MalformedMatrix, "matrix is not symmetric");
      if (m[i][j] < 2) fail(ErrorCode::MalformedMatrix, "off-diagonal entries must be >= 2");
      if (m[i][j] != 2 && m[i][j] != 3 && m[i][j] != 4 && m[i][j] != 6)
        fail(ErrorCode::NonFiniteType, "entry m=" + std::to_string(m[i][j]) + " is not of finite Weyl type");
    }
  }
}

/// Splits a (validated) Coxeter matrix into connected components and names
/// each one; throws NonFiniteType when a component is not a finite Weyl type.
/// B and C are indistinguishable here and reported as B.
inline std::vector<CartanComponent> classify(const CoxeterMatrix& m) {
  const int n = static_cast<int>(m.size());
  auto mm = [&](int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<CartanComponent> out;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (!seen[static_cast<std::size_t>(j)] && mm(comp[k], j) >= 3) {
          seen[static_cast<std::size_t>(j)] = true;
          comp.push_back(j);
        }
    const int k = static_cast<int>(comp.size());
    int edges = 0, n4 = 0, n6 = 0;
    std::map<int, int> degree;
    std::vector<std::pair<int, int>> four_edges;
    for (int a : comp)
      for (int b : comp)
        if (a < b && mm(a, b) >= 3) {
          ++edges;
          ++degree[a];
          ++degree[b];
          if (mm(a, b) == 4) {
            ++n4;
            four_edges.emplace_back(a, b);
          }
          if (mm(a, b) == 6) ++n6;
        }
    if (edges != k - 1) fail(ErrorCode::NonFiniteType, "Coxeter graph contains a cycle");
    int maxdeg = 0;
    for (auto& [v, d] : degree) maxdeg = std::max(maxdeg, d);
    if (k == 1) {
      out.push_back({'A', 1});
      continue;
    }
    if (n6 > 0) {
      if (k == 2) {
        out.push_back({'G', 2});
        continue;
      }
      fail(ErrorCode::NonFiniteType, "m=6 bond in a component of rank > 2");
    }
    if (n4 > 1) fail(ErrorCode::NonFiniteType, "more than one m=4 bond");
    if (n4 == 1) {
      if (maxdeg > 2) fail(ErrorCode::NonFiniteType, "branched graph with m=4 bond");
      auto [a, b] = four_edges.front();
      if (k == 2 || degree[a] == 1 || degree[b] == 1) {
        out.push_back({'B', k});
        continue;
      }
      if (k == 4) {
        out.push_back({'F', 4});
        continue;
      }
      fail(ErrorCode::NonFiniteType, "m=4 bond in the interior of a long path");
    }
    if (maxdeg <= 2) {
      out.push_back({'A', k});
      continue;
    }
    int branch = -1, branches = 0;
    for (auto& [v, d] : degree) {
      if (d > 3) fail(ErrorCode::NonFiniteType, "vertex of degree > 3");
      if (d == 3) {
        branch = v;
        ++branches;
      }
    }
    if (branches != 1) fail(ErrorCode::NonFiniteType, "more than one branch vertex");
    std::vector<int> arms;
    for (int nb : comp) {
      if (mm(branch, nb) < 3) continue;
      int prev = branch, cur = nb, len = 1;
      while (true) {
        int next = -1;
        for (int j : comp)
          if (j != prev && j != cur && mm(cur, j) >= 3) next = j;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      out.push_back({'D', k});
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      out.push_back({'E', k});
    } else {
      fail(ErrorCode::NonFiniteType, "branched Coxeter graph of infinite type");
    }
  }
  return out;
}

/// Cartan matrix realizing a finite-type Coxeter matrix. Graph components are
/// trees, so any orientation of the multiple bonds is crystallographic.
inline std::vector<std::vector<int>> cartan_from_coxeter(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      int p = 0, q = 0;
      switch (m[i][j]) {
        case 3: p = q = -1; break;
        case 4: p = -1; q = -2; break;
        case 6: p = -1; q = -3; break;
        default: break;
      }
      a[i][j] = p;
      a[j][i] = q;
    }
  }
  return a;
}

inline std::shared_ptr<GroupData> build_data(std::string label, std::vector<std::vector<int>> cartan) {
  auto data = std::make_shared<GroupData>();
  data->id = next_group_id();
  data->rank = static_cast<int>(cartan.size());
  data->label = std::move(label);
  const std::size_t n = cartan.size();
  data->coxeter.assign(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) data->coxeter[i][j] = coxeter_entry_from_cartan(cartan[i][j], cartan[j][i]);
  data->components = classify(data->coxeter);
  data->order = 1;
  for (auto& c : data->components) data->order *= component_order(c);
  data->cartan = std::move(cartan);

  // Every root of a reduced root system is W-conjugate to a simple root.
  auto reflect = [&](std::size_t i, const std::vector<int>& beta) {
    int pairing = 0;
    for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * data->cartan[i][j];
    std::vector<int> out = beta;
    out[i] -= pairing;
    return out;
  };
  std::vector<std::vector<int>> all;
  std::map<std::vector<int>, int> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (seen.emplace(e, 0).second) all.push_back(e);
  }
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all.size() > 100000) fail(ErrorCode::NonFiniteType, "root system does not close up");
    for (std::size_t i = 0; i < n; ++i) {
      auto img = reflect(i, all[k]);
      if (seen.emplace(img, 0).second) all.push_back(img);
    }
  }
  std::vector<std::vector<int>> positive;
  for (auto& r : all)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positive.push_back(r);
  auto height = [](const std::vector<int>& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
  };
  std::sort(positive.begin(), positive.end(), [&](const auto& a, const auto& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a > b;
  });
  data->num_positive = static_cast<int>(positive.size());
  if (2 * positive.size() != all.size()) fail(ErrorCode::NonFiniteType, "root system is not symmetric");
  data->roots = positive;
  for (auto& r : positive) {
    std::vector<int> neg(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) neg[j] = -r[j];
    data->roots.push_back(neg);
  }
  if (data->roots.size() > 65535) fail(ErrorCode::GroupTooLarge, "too many roots");
  for (std::size_t r = 0; r < data->roots.size(); ++r) {
    data->root_index[data->roots[r]] = static_cast<int>(r);
    std::uint32_t supp = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (data->roots[r][j] != 0) supp |= std::uint32_t{1} << j;
    data->support.push_back(supp);
  }
  data->reflections.assign(n, std::vector<std::uint16_t>(data->roots.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < data->roots.size(); ++r)
      data->reflections[i][r] = static_cast<std::uint16_t>(data->root_index.at(reflect(i, data->roots[r])));
  return data;
}

}  // namespace detail

inline CoxeterSpec CoxeterSpec::parse(std::string_view label) {
  CoxeterSpec spec;
  std::string part;
  auto flush = [&] {
    if (part.empty()) fail(ErrorCode::ParseError, "empty factor in Cartan type '" + std::string(label) + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    int rank = 0;
    try {
      std::size_t used = 0;
      rank = std::stoi(part.substr(1), &used);
      if (used + 1 != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad Cartan type factor '" + part + "'");
    }
    CartanComponent c{family, rank};
    detail::validate_component(c);
    spec.components.push_back(c);
    part.clear();
  };
  for (char ch : label) {
    if (ch == 'x' || ch == 'X' || ch == '*') {
      flush();
    } else if (ch != ' ') {
      part += ch;
    }
  }
  flush();
  return spec;
}

// ---------------------------------------------------------------------------
// CoxeterGroup

/// Immutable handle to a finite Weyl group together with its root system.
/// Copies share the underlying data.
class CoxeterGroup {
 public:
  /// Groups above this order are not enumerated element by element.
  static constexpr std::uint64_t kEnumerationLimit = 1'000'000;

  static CoxeterGroup build(const CoxeterSpec& spec) {
    if (spec.matrix) {
      detail::validate_coxeter_matrix(*spec.matrix);
      auto comps = detail::classify(*spec.matrix);
      std::string label;
      for (auto& c : comps) label += (label.empty() ? "" : "x") + c.str();
      return CoxeterGroup(detail::build_data(label, detail::cartan_from_coxeter(*spec.matrix)));
    }
    if (spec.components.empty()) fail(ErrorCode::ParseError, "empty Coxeter spec");
    std::size_t n = 0;
    for (auto& c : spec.components) {
      detail::validate_component(c);
      n += static_cast<std::size_t>(c.rank);
    }
    if (n > static_cast<std::size_t>(SimpleSubset::kMaxRank)) fail(ErrorCode::MalformedMatrix, "rank exceeds 32");
    std::vector<std::vector<int>> cartan(n, std::vector<int>(n, 0));
    std::size_t offset = 0;
    std::string label;
    for (auto& c : spec.components) {
      auto block = detail::cartan_matrix(c);
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = 0; j < block.size(); ++j) cartan[offset + i][offset + j] = block[i][j];
      offset += block.size();
      label += (label.empty() ? "" : "x") + c.str();
    }
    return CoxeterGroup(detail::build_data(label, std::move(cartan)));
  }

  static CoxeterGroup from_type(std::string_view label) { return build(CoxeterSpec::parse(label)); }
  static CoxeterGroup from_matrix(const CoxeterMatrix& m) { return build(CoxeterSpec::from_matrix(m)); }

  int rank() const { return data_->rank; }
  std::uint64_t order() const { return data_->order; }
  const std::string& label() const { return data_->label; }
  const std::vector<CartanComponent>& components() const { return data_->components; }
  std::uint64_t id() const { return data_->id; }
  SimpleSubset simple_set() const { return SimpleSubset::full(rank()); }

  const CoxeterMatrix& coxeter_matrix() const { return data_->coxeter; }
  int m(int s, int t) const {
    check_index(s);
    check_index(t);
    return data_->coxeter[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - 1)];
  }
  const std::vector<std::vector<int>>& cartan_matrix() const { return data_->cartan; }

  int num_roots() const { return data_->num_roots(); }
  int num_positive_roots() const { return data_->num_positive; }
  const std::vector<int>& root(int r) const { return data_->roots.at(static_cast<std::size_t>(r)); }
  bool is_positive(int r) const { return r < data_->num_positive; }
  int negate(int r) const { return r < data_->num_positive ? r + data_->num_positive : r - data_->num_positive; }
  int simple_root(int s) const {
    check_index(s);
    return s - 1;
  }
  SimpleSubset root_support(int r) const {
    return SimpleSubset::from_bits(data_->support.at(static_cast<std::size_t>(r)));
  }
  /// alpha in Phi_I
  bool root_in(int r, SimpleSubset I) const { return root_support(r).subset_of(I); }
  /// #Phi_I^+
  int count_positive_roots(SimpleSubset I) const {
    int count = 0;
    for (int r = 0; r < data_->num_positive; ++r)
      if (root_in(r, I)) ++count;
    return count;
  }

  Element identity() const {
    std::vector<std::uint16_t> perm(static_cast<std::size_t>(num_roots()));
    for (std::size_t r = 0; r < perm.size(); ++r) perm[r] = static_cast<std::uint16_t>(r);
    return Element(data_, std::move(perm));
  }
  Element simple_reflection(int s) const {
    check_index(s);
    return Element(data_, data_->reflections[static_cast<std::size_t>(s - 1)]);
  }
  /// s_{i1} s_{i2} ... s_{ik}
  Element element_from_word(const Word& word) const {
    for (int s : word) check_index(s);
    Element w = identity();
    for (int s : word) w = w.times_simple(s);
    return w;
  }
  Element parse_element(std::string_view text) const { return element_from_word(zipdata::parse_word(text)); }

  void check_member(const Element& w) const {
    if (!w.valid() || w.group_id() != id()) fail(ErrorCode::GroupMismatch, "element belongs to a different group");
  }
  bool operator==(const CoxeterGroup& other) const { return data_ == other.data_; }

  /// Simple index t with w s w^{-1} = s_t, if the conjugate is simple.
  std::optional<int> conjugate_simple(const Element& w, int s) const {
    check_member(w);
    check_index(s);
    int r = w.act(s - 1);
    int base = r < data_->num_positive ? r : r - data_->num_positive;
    if (base < rank()) return base + 1;
    return std::nullopt;
  }

  /// All elements of the parabolic subgroup W_I, ShortLex ordered.
  std::vector<Element> parabolic_elements(SimpleSubset I) const {
    check_subset(I);
    std::vector<Element> out{identity()};
    ElementSet seen{out.front()};
    const auto gens = I.indices();
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (int s : gens) {
        if (out[k].has_descent(s, Side::Right)) continue;
        Element next = out[k].times_simple(s);
        if (seen.insert(next).second) {
          out.push_back(std::move(next));
          if (out.size() > kEnumerationLimit) fail(ErrorCode::GroupTooLarge, "parabolic subgroup too large to enumerate");
        }
      }
    }
    sort_shortlex(out);
    return out;
  }

  /// Every element of W in ShortLex order; computed once and cached.
  const std::vector<Element>& elements() const {
    if (order() > kEnumerationLimit)
      fail(ErrorCode::GroupTooLarge, label() + " has order " + std::to_string(order()) + "; too large to enumerate");
    std::call_once(data_->elements_once, [this] { data_->elements = parabolic_elements(simple_set()); });
    return data_->elements;
  }

  void check_index(int s) const {
    if (s < 1 || s > rank())
      fail(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(s) + " not in 1.." + std::to_string(rank()));
  }
  void check_subset(SimpleSubset I) const {
    if (!I.subset_of(simple_set())) fail(ErrorCode::IndexOutOfRange, "subset " + I.str() + " not contained in S");
  }

 private:
  explicit CoxeterGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::GroupData> data_;
};

/// Apply a Coxeter automorphism given as a permutation of simple indices
/// (perm[i-1] = image of i) to w, letter by letter on a reduced word.
inline Element apply_automorphism(const CoxeterGroup& g, const std::vector<int>& perm, const Element& w) {
  g.check_member(w);
  Word word = w.canonical_word();
  for (int& s : word) s = perm.at(static_cast<std::size_t>(s - 1));
  return g.element_from_word(word);
}

}  // namespace zipdata
