#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "zipdata/errors.hpp"

namespace zipdata {

/// A subset of the simple reflections {1..n}, n <= 32. Indices are 1-based
/// everywhere in the public interface, matching the Bourbaki labels.
class SimpleSubset {
 public:
  static constexpr int kMaxRank = 32;

  constexpr SimpleSubset() = default;
  SimpleSubset(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  static constexpr SimpleSubset from_bits(std::uint32_t bits) {
    SimpleSubset s;
    s.bits_ = bits;
    return s;
  }
  /// {1..n}
  static constexpr SimpleSubset full(int n) {
    return from_bits(n >= kMaxRank ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static SimpleSubset of(const std::vector<int>& indices) {
    SimpleSubset s;
    for (int i : indices) s.insert(i);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const {
    return i >= 1 && i <= kMaxRank && ((bits_ >> (i - 1)) & 1u) != 0;
  }
  void insert(int i) {
    check(i);
    bits_ |= std::uint32_t{1} << (i - 1);
  }
  void erase(int i) {
    check(i);
    bits_ &= ~(std::uint32_t{1} << (i - 1));
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(SimpleSubset other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 1; i <= kMaxRank; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// "{}" or "{1,3}"
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

  friend constexpr SimpleSubset operator|(SimpleSubset a, SimpleSubset b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr SimpleSubset operator&(SimpleSubset a, SimpleSubset b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr SimpleSubset operator-(SimpleSubset a, SimpleSubset b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SimpleSubset a, SimpleSubset b) = default;
  friend constexpr auto operator<=>(SimpleSubset a, SimpleSubset b) = default;

 private:
  static void check(int i) {
    if (i < 1 || i > kMaxRank) fail(ErrorCode::IndexOutOfRange, "simple index " + std::to_string(i));
  }

  std::uint32_t bits_ = 0;
};

}  // namespace zipdata
