#pragma once

#include <cstdint>

namespace ordpath {

// C(x, 2) without overflow for the sizes handled here.
inline long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Exact floor(sqrt(x)) for x >= 0. Newton step on the double estimate, then
// a local fixup; exact over the full long long range we use.
inline long long isqrt_floor(long long x) {
  if (x < 0) return -1;
  if (x < 2) return x;
  long long r = static_cast<long long>(__builtin_sqrtl(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline long long ipow2(int e) { return 1LL << e; }

}  // namespace ordpath
