#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rootclosed/error.hpp"

namespace rootclosed {

/// Fixed-width bitset over root indices. 256 bits covers every irreducible
/// root system up to E8 (240 roots).
class RootSet {
 public:
  static constexpr int kCapacity = 256;
  static constexpr int kWords = kCapacity / 64;

  constexpr RootSet() = default;

  static RootSet from_indices(std::span<const int> indices) {
    RootSet s;
    for (int i : indices) s.insert(i);
    return s;
  }

  /// Set containing 0..n-1.
  static RootSet range(int begin, int end) {
    RootSet s;
    for (int i = begin; i < end; ++i) s.insert(i);
    return s;
  }

  bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void insert(int i) {
    check(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void erase(int i) {
    check(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (int k = 0; k < kWords; ++k)
      if (words_[k]) return k * 64 + std::countr_zero(words_[k]);
    return -1;
  }

  bool is_subset_of(const RootSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const RootSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  RootSet& operator&=(const RootSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  RootSet& operator|=(const RootSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  /// Set difference.
  RootSet& operator-=(const RootSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
  friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
  friend RootSet operator-(RootSet a, const RootSet& b) { return a -= b; }

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < kWords; ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  friend bool operator==(const RootSet&, const RootSet&) = default;

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static void check(int i) {
    if (i < 0 || i >= kCapacity) throw Error("root index out of RootSet range");
  }

  std::array<std::uint64_t, kWords> words_{};
};

/// Lexicographic order on the sorted index lists. Used to pick canonical
/// representatives.
inline bool lex_less(const RootSet& a, const RootSet& b) {
  for (int k = 0; k < RootSet::kWords; ++k) {
    std::uint64_t diff = a.words()[k] ^ b.words()[k];
    if (!diff) continue;
    const int d = k * 64 + std::countr_zero(diff);
    // Both lists agree below d; the one holding d is smaller unless the other
    // one runs out first.
    const bool a_has = a.contains(d);
    const RootSet& other = a_has ? b : a;
    for (int kk = 0; kk < RootSet::kWords; ++kk) {
      std::uint64_t w = other.words()[kk];
      if (kk == d / 64) w &= (d % 64 == 63) ? 0 : (~std::uint64_t{0} << (d % 64 + 1));
      if (kk < d / 64) w = 0;
      if (w) return a_has;  // other continues with something > d
    }
    return !a_has;
  }
  return false;
}

}  // namespace rootclosed

template <>
struct std::hash<rootclosed::RootSet> {
  std::size_t operator()(const rootclosed::RootSet& s) const noexcept { return s.hash(); }
};
