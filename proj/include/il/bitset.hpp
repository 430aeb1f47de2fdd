#pragma once

#include "il/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace il {

inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + word_bits - 1) / word_bits; }

/// Compile-time width bitset for hot inner loops (W words of 64 bits).
template <std::size_t W>
struct fixed_bitset {
  static constexpr std::size_t capacity = W * word_bits;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::array<std::uint64_t, W> words{};

  void set(std::size_t i) { words[i / word_bits] |= std::uint64_t{1} << (i % word_bits); }
  void reset(std::size_t i) { words[i / word_bits] &= ~(std::uint64_t{1} << (i % word_bits)); }
  bool test(std::size_t i) const { return (words[i / word_bits] >> (i % word_bits)) & 1U; }

  bool none() const {
    for (auto w : words)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t first() const {
    for (std::size_t i = 0; i < W; ++i)
      if (words[i]) return i * word_bits + static_cast<std::size_t>(std::countr_zero(words[i]));
    return npos;
  }

  /// Sets bits 0..n-1.
  static fixed_bitset prefix(std::size_t n) {
    fixed_bitset b;
    for (std::size_t i = 0; i < W && n > 0; ++i) {
      std::size_t take = std::min(n, word_bits);
      b.words[i] = take == word_bits ? ~std::uint64_t{0} : (std::uint64_t{1} << take) - 1;
      n -= take;
    }
    return b;
  }

  fixed_bitset& operator&=(const fixed_bitset& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] &= o.words[i];
    return *this;
  }
  fixed_bitset& operator|=(const fixed_bitset& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] |= o.words[i];
    return *this;
  }
  fixed_bitset& and_not(const fixed_bitset& o) {
    for (std::size_t i = 0; i < W; ++i) words[i] &= ~o.words[i];
    return *this;
  }
  friend fixed_bitset operator&(fixed_bitset a, const fixed_bitset& b) { return a &= b; }
  friend fixed_bitset operator|(fixed_bitset a, const fixed_bitset& b) { return a |= b; }
  friend bool operator==(const fixed_bitset&, const fixed_bitset&) = default;

  bool intersects(const fixed_bitset& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (words[i] & o.words[i]) return true;
    return false;
  }

  std::size_t count_and(const fixed_bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < W; ++i)
      c += static_cast<std::size_t>(std::popcount(words[i] & o.words[i]));
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t w = words[i];
      while (w) {
        f(i * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
};

/// Calls f.template operator()<W>() with the smallest supported W covering n bits.
template <class F>
decltype(auto) dispatch_width(std::size_t n, F&& f) {
  if (n <= 64) return f.template operator()<1>();
  if (n <= 128) return f.template operator()<2>();
  if (n <= 256) return f.template operator()<4>();
  if (n <= 512) return f.template operator()<8>();
  if (n <= 1024) return f.template operator()<16>();
  if (n <= 4096) return f.template operator()<64>();
  throw limit_exceeded("fixed-width bitset", n, 4096);
}

/// Subset of {0..universe-1}; bitset semantics.
class vertex_set {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  vertex_set() = default;
  explicit vertex_set(std::size_t universe) : universe_(universe), words_(words_for(universe)) {}

  vertex_set(std::size_t universe, std::initializer_list<vertex> members) : vertex_set(universe) {
    for (auto v : members) insert(v);
  }

  template <class Range>
  static vertex_set of(std::size_t universe, const Range& members) {
    vertex_set s(universe);
    for (auto v : members) s.insert(static_cast<vertex>(v));
    return s;
  }

  static vertex_set full(std::size_t universe) {
    vertex_set s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(vertex v) {
    check(v);
    words_[v / word_bits] |= std::uint64_t{1} << (v % word_bits);
  }
  void erase(vertex v) {
    check(v);
    words_[v / word_bits] &= ~(std::uint64_t{1} << (v % word_bits));
  }
  bool contains(vertex v) const {
    return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1U);
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::size_t first() const { return next(0); }

  /// Smallest member >= from, or npos.
  std::size_t next(std::size_t from) const {
    if (from >= universe_) return npos;
    std::size_t i = from / word_bits;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from % word_bits));
    while (true) {
      if (w) return i * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++i == words_.size()) return npos;
      w = words_[i];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<vertex>(i * word_bits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<vertex> members() const {
    std::vector<vertex> out;
    out.reserve(size());
    for_each([&](vertex v) { out.push_back(v); });
    return out;
  }

  vertex_set& operator|=(const vertex_set& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  vertex_set& operator&=(const vertex_set& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  vertex_set& operator-=(const vertex_set& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
  friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
  friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }

  bool intersects(const vertex_set& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const vertex_set& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  template <std::size_t W>
  fixed_bitset<W> to_fixed() const {
    fixed_bitset<W> b;
    std::copy_n(words_.begin(), std::min(W, words_.size()), b.words.begin());
    return b;
  }

  template <std::size_t W>
  static vertex_set from_fixed(std::size_t universe, const fixed_bitset<W>& b) {
    vertex_set s(universe);
    std::copy_n(b.words.begin(), std::min(W, s.words_.size()), s.words_.begin());
    return s;
  }

  friend bool operator==(const vertex_set&, const vertex_set&) = default;

  /// Lexicographic order of the sorted member lists.
  friend bool lex_less(const vertex_set& a, const vertex_set& b) {
    std::size_t x = a.first(), y = b.first();
    while (x != npos && y != npos) {
      if (x != y) return x < y;
      x = a.next(x + 1);
      y = b.next(y + 1);
    }
    return x == npos && y != npos;
  }

 private:
  void check(vertex v) const {
    if (v >= universe_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe_));
  }
  void same_universe(const vertex_set& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex_set: universe mismatch");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace il
