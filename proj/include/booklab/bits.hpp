#pragma once

// Fixed-width bit rows used by the graph kernels. A graph on n vertices
// stores each adjacency row in W 64-bit words, W a power of two; kernels
// are instantiated per width so the n <= 64 case compiles down to plain
// uint64_t arithmetic.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>

#include "booklab/error.hpp"

namespace booklab::detail {

template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  static Bits load(std::span<const std::uint64_t> words) {
    Bits b;
    for (int i = 0; i < W; ++i) b.w[i] = words[i];
    return b;
  }

  /// Bits {first, ..., n-1}.
  static Bits range_from(int first, int n) {
    Bits b;
    for (int i = 0; i < W; ++i) {
      const int lo = i * 64;
      const int hi = lo + 64;
      std::uint64_t word = ~std::uint64_t{0};
      if (first >= hi || n <= lo) {
        word = 0;
      } else {
        if (first > lo) word &= ~std::uint64_t{0} << (first - lo);
        if (n < hi) word &= (std::uint64_t{1} << (n - lo)) - 1;
      }
      b.w[i] = word;
    }
    return b;
  }

  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  /// Lowest set bit, or -1.
  int first() const {
    for (int i = 0; i < W; ++i)
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
  }
  /// Clears and returns the lowest set bit; requires any().
  int pop_first() {
    for (int i = 0; i < W; ++i) {
      if (w[i]) {
        const int b = std::countr_zero(w[i]);
        w[i] &= w[i] - 1;
        return i * 64 + b;
      }
    }
    return -1;
  }

  Bits& operator&=(const Bits& o) {
    for (int i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (int i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  Bits and_not(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  friend bool operator==(const Bits&, const Bits&) = default;
};

inline constexpr int kMaxRowWords = 16;

/// Smallest supported row width (in words) for n vertices.
inline int row_words_for(int n) {
  const int need = n <= 64 ? 1 : (n + 63) / 64;
  int w = 1;
  while (w < need) w *= 2;
  if (w > kMaxRowWords)
    throw Error(ErrorKind::kCapacityExceeded,
                "graph order " + std::to_string(n) + " exceeds vertex cap " +
                    std::to_string(kMaxRowWords * 64));
  return w;
}

/// Calls f(std::integral_constant<int, W>{}) for the runtime width.
template <class F>
decltype(auto) dispatch_width(int words, F&& f) {
  switch (words) {
    case 1: return f(std::integral_constant<int, 1>{});
    case 2: return f(std::integral_constant<int, 2>{});
    case 4: return f(std::integral_constant<int, 4>{});
    case 8: return f(std::integral_constant<int, 8>{});
    default: return f(std::integral_constant<int, 16>{});
  }
}

}  // namespace booklab::detail
