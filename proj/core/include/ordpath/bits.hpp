#pragma once

#include <bit>
#include <cstdint>
#include <vector>

// Word-array bit helpers. Graphs and cell sets are stored as rows of 64-bit
// words; bit i stands for vertex i+1. These loops are the inner kernels of
// the containment DP and the deletion engines, so they stay branch-light.

namespace ordpath::bits {

inline constexpr int word_bits = 64;

inline int words_for(int nbits) { return (nbits + word_bits - 1) / word_bits; }

inline bool test(const std::uint64_t* w, int i) {
  return (w[i / word_bits] >> (i % word_bits)) & 1u;
}

inline void set(std::uint64_t* w, int i) { w[i / word_bits] |= std::uint64_t(1) << (i % word_bits); }

inline void clear(std::uint64_t* w, int i) { w[i / word_bits] &= ~(std::uint64_t(1) << (i % word_bits)); }

inline bool any(const std::uint64_t* w, int nwords) {
  for (int k = 0; k < nwords; ++k)
    if (w[k]) return true;
  return false;
}

inline int popcount(const std::uint64_t* w, int nwords) {
  int c = 0;
  for (int k = 0; k < nwords; ++k) c += std::popcount(w[k]);
  return c;
}

// Lowest set bit index, or -1 when empty.
inline int lowest(const std::uint64_t* w, int nwords) {
  for (int k = 0; k < nwords; ++k)
    if (w[k]) return k * word_bits + std::countr_zero(w[k]);
  return -1;
}

// Highest set bit index, or -1 when empty.
inline int highest(const std::uint64_t* w, int nwords) {
  for (int k = nwords - 1; k >= 0; --k)
    if (w[k]) return k * word_bits + (word_bits - 1 - std::countl_zero(w[k]));
  return -1;
}

// Lowest index set in both arrays, or -1.
inline int lowest_common(const std::uint64_t* a, const std::uint64_t* b, int nwords) {
  for (int k = 0; k < nwords; ++k) {
    std::uint64_t t = a[k] & b[k];
    if (t) return k * word_bits + std::countr_zero(t);
  }
  return -1;
}

// Highest index set in both arrays, or -1.
inline int highest_common(const std::uint64_t* a, const std::uint64_t* b, int nwords) {
  for (int k = nwords - 1; k >= 0; --k) {
    std::uint64_t t = a[k] & b[k];
    if (t) return k * word_bits + (word_bits - 1 - std::countl_zero(t));
  }
  return -1;
}

inline void clear_all(std::uint64_t* w, int nwords) {
  for (int k = 0; k < nwords; ++k) w[k] = 0;
}

// dst = src with only bits strictly below `bound` kept. bound may be 0 (empty)
// or up to the array capacity.
inline void and_below(std::uint64_t* dst, const std::uint64_t* src, int nwords, int bound) {
  int full = bound / word_bits;
  int rem = bound % word_bits;
  for (int k = 0; k < nwords; ++k) {
    if (k < full)
      dst[k] = src[k];
    else if (k == full && rem)
      dst[k] = src[k] & ((std::uint64_t(1) << rem) - 1);
    else
      dst[k] = 0;
  }
}

// dst = src with only bits strictly above `bound` kept. bound may be -1 (all).
inline void and_above(std::uint64_t* dst, const std::uint64_t* src, int nwords, int bound) {
  int cut = bound + 1;  // first index kept
  int full = cut / word_bits;
  int rem = cut % word_bits;
  for (int k = 0; k < nwords; ++k) {
    if (k > full || (k == full && rem == 0))
      dst[k] = src[k];
    else if (k == full)
      dst[k] = src[k] & ~((std::uint64_t(1) << rem) - 1);
    else
      dst[k] = 0;
  }
}

// Set all bit indices in [lo, hi] (inclusive, 0-based).
inline void set_range(std::uint64_t* w, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) set(w, i);
}

// Iterate set bits ascending, calling fn(index).
template <typename Fn>
inline void for_each(const std::uint64_t* w, int nwords, Fn&& fn) {
  for (int k = 0; k < nwords; ++k) {
    std::uint64_t t = w[k];
    while (t) {
      int b = std::countr_zero(t);
      fn(k * word_bits + b);
      t &= t - 1;
    }
  }
}

}  // namespace ordpath::bits
