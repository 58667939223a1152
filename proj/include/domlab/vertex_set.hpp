#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace domlab {

/// Fixed-width set of vertex indices in [0, 256).
///
/// One set fills exactly one 256-bit vector register, which is what the
/// kernels in kernels.hpp operate on. The layout is four little-endian
/// 64-bit words (bit v lives in word v / 64) and is relied upon by those
/// kernels.
class alignas(32) VertexSet {
 public:
  static constexpr int kCapacity = 256;
  static constexpr int kWords = 4;

  constexpr VertexSet() = default;

  static constexpr VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      const int lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
  }

  constexpr bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  constexpr void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  constexpr bool empty() const {
    return (words_[0] | words_[1] | words_[2] | words_[3]) == 0;
  }
  constexpr bool any() const { return !empty(); }

  /// Smallest element, or -1.
  constexpr int first() const {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    }
    return -1;
  }

  /// Smallest element strictly greater than v, or -1.
  constexpr int next(int v) const {
    ++v;
    if (v >= kCapacity) return -1;
    int w = v >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (cur != 0) return w * 64 + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  constexpr bool subset_of(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }
  constexpr bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kWords; ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }

  constexpr VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr VertexSet& operator^=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Total order on the raw words (high word first). Not the subset order.
  friend constexpr bool operator<(const VertexSet& a, const VertexSet& b) {
    for (int w = kWords - 1; w >= 0; --w) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    }
    return false;
  }

  constexpr std::uint64_t word(int i) const { return words_[i]; }
  constexpr void set_word(int i, std::uint64_t value) { words_[i] = value; }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    constexpr int operator*() const { return v_; }
    constexpr iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  constexpr iterator begin() const { return {this, first()}; }
  constexpr iterator end() const { return {this, -1}; }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) out += ',';
      out += std::to_string(v);
      sep = true;
    }
    out += '}';
    return out;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

static_assert(sizeof(VertexSet) == 32);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace domlab
