#pragma once

#include <algorithm>
#include <vector>

#include "harmonic/int128.hpp"

namespace harmonic {

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1u) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Strong-pseudoprime test to base a; n odd, n > 2, a not a multiple of n.
inline bool strong_probable_prime(u64 n, u64 a) {
  const int s = trailing_zeros(n - 1);
  const u64 d = (n - 1) >> s;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic primality for the full 64-bit range: trial division below
// 2^16, otherwise a strong-pseudoprime test with the first twelve primes as
// witnesses, which is known to be exact for every n < 3.3 * 10^24.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == static_cast<u64>(p)) return true;
    if (n % p == 0) return false;
  }
  if (n < 65536) {
    for (u64 d = 41; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!detail::strong_probable_prime(n, a)) return false;
  }
  return true;
}

// All primes <= limit, by a byte sieve over odd numbers.
inline std::vector<u32> primes_up_to(u32 limit) {
  std::vector<u32> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  // sieve[i] covers the odd number 2i+1; index 0 (the number 1) stays unused.
  const u32 half = limit / 2 + 1;
  std::vector<u8> composite(half, 0);
  for (u32 i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * static_cast<u64>(i) + 1;
    if (p > limit) break;
    primes.push_back(static_cast<u32>(p));
    for (u64 j = p * p / 2; j < half; j += p) composite[static_cast<u32>(j)] = 1;
  }
  return primes;
}

// Shared trial-division table, built once on first use.
inline const std::vector<u32>& small_primes() {
  static const std::vector<u32> table = primes_up_to(1'000'000);
  return table;
}

// Calls fn(p) for every prime in [lo, hi], ascending, using a segmented
// sieve so the bound may be large (up to 10^12 or so) without a full table.
template <class Fn>
void for_each_prime(u64 lo, u64 hi, Fn&& fn) {
  if (hi < 2 || lo > hi) return;
  if (lo < 2) lo = 2;
  const u64 root = isqrt(hi);
  const std::vector<u32> base = primes_up_to(static_cast<u32>(root));
  constexpr u64 kSegment = 1 << 18;
  std::vector<u8> composite;
  for (u64 seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    const u64 seg_hi = std::min(hi, seg_lo + kSegment - 1);
    const u64 len = seg_hi - seg_lo + 1;
    composite.assign(len, 0);
    for (const u32 p : base) {
      const u64 pp = static_cast<u64>(p) * p;
      if (pp > seg_hi) break;
      u64 start = ((seg_lo + p - 1) / p) * p;
      if (start < pp) start = pp;
      for (u64 m = start; m <= seg_hi; m += p) composite[m - seg_lo] = 1;
    }
    for (u64 i = 0; i < len; ++i) {
      const u64 n = seg_lo + i;
      if (!composite[i] && n >= 2) fn(n);
    }
  }
}

}  // namespace harmonic
