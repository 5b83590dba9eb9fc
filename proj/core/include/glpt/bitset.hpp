#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace glpt {

inline constexpr int kMaxVertices = 512;

/// Fixed-width bitset over vertex ids. Words is the number of 64-bit words;
/// the search kernels instantiate narrow widths for small graphs.
template <std::size_t Words>
class BasicBitset {
 public:
  static constexpr int kCapacity = static_cast<int>(64 * Words);

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const BasicBitset* owner, int pos) : owner_(owner), pos_(pos) {}

    int operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = owner_->next(pos_);
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    const BasicBitset* owner_ = nullptr;
    int pos_ = -1;
  };

  constexpr BasicBitset() = default;

  /// Bits [0, n).
  static BasicBitset prefix(int n) {
    BasicBitset b;
    for (std::size_t w = 0; w < Words && n > 0; ++w, n -= 64) {
      b.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return b;
  }

  static BasicBitset from_words(const std::array<std::uint64_t, Words>& w) {
    BasicBitset b;
    b.words_ = w;
    return b;
  }

  static BasicBitset single(int i) {
    BasicBitset b;
    b.set(i);
    return b;
  }

  template <class Range>
  static BasicBitset of(const Range& items) {
    BasicBitset b;
    for (int i : items) b.set(i);
    return b;
  }

  void set(int i) { words_[i >> 6] |= bit(i); }
  void reset(int i) { words_[i >> 6] &= ~bit(i); }
  bool test(int i) const { return (words_[i >> 6] & bit(i)) != 0; }
  void clear() { words_.fill(0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool empty() const { return !any(); }

  /// Lowest set bit, or -1.
  int first() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w]) return static_cast<int>(64 * w) + std::countr_zero(words_[w]);
    return -1;
  }

  /// Lowest set bit strictly above i, or -1.
  int next(int i) const {
    ++i;
    if (i >= kCapacity) return -1;
    std::size_t w = static_cast<std::size_t>(i >> 6);
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return static_cast<int>(64 * w) + std::countr_zero(cur);
      if (++w == Words) return -1;
      cur = words_[w];
    }
  }

  /// Highest set bit, or -1.
  int last() const {
    for (std::size_t w = Words; w-- > 0;)
      if (words_[w]) return static_cast<int>(64 * w + 63) - std::countl_zero(words_[w]);
    return -1;
  }

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int i : *this) out.push_back(i);
    return out;
  }

  bool intersects(const BasicBitset& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const BasicBitset& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  BasicBitset& operator&=(const BasicBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BasicBitset& operator|=(const BasicBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  BasicBitset& operator^=(const BasicBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  BasicBitset& operator-=(const BasicBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend BasicBitset operator&(BasicBitset a, const BasicBitset& b) { return a &= b; }
  friend BasicBitset operator|(BasicBitset a, const BasicBitset& b) { return a |= b; }
  friend BasicBitset operator^(BasicBitset a, const BasicBitset& b) { return a ^= b; }
  friend BasicBitset operator-(BasicBitset a, const BasicBitset& b) { return a -= b; }

  friend bool operator==(const BasicBitset&, const BasicBitset&) = default;

  /// Orders sets by their sorted element sequences (lexicographic).
  friend bool lex_less(const BasicBitset& a, const BasicBitset& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
      if (*ia != *ib) return *ia < *ib;
    return ia == a.end() && ib != b.end();
  }

  const std::array<std::uint64_t, Words>& words() const { return words_; }

  template <std::size_t W2>
  BasicBitset<W2> resized() const {
    // Bits beyond the narrower width are dropped.
    std::array<std::uint64_t, W2> w{};
    for (std::size_t i = 0; i < W2 && i < Words; ++i) w[i] = words_[i];
    return BasicBitset<W2>::from_words(w);
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

  std::array<std::uint64_t, Words> words_{};
};

using VertexSet = BasicBitset<kMaxVertices / 64>;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace glpt
