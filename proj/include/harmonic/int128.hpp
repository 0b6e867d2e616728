#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace harmonic {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// All wide intermediates in this library are unsigned 128-bit.  Arithmetic
// that could exceed that width goes through the checked_* helpers below and
// reports overflow with an exception instead of wrapping.

inline constexpr u128 U128_MAX = ~static_cast<u128>(0);

constexpr u128 checked_add(u128 a, u128 b, const char* what = "128-bit addition overflow") {
  if (b > U128_MAX - a) throw std::overflow_error(what);
  return a + b;
}

constexpr u128 checked_mul(u128 a, u128 b, const char* what = "128-bit multiplication overflow") {
  if (a != 0 && b > U128_MAX / a) throw std::overflow_error(what);
  return a * b;
}

// b^e with overflow detection.
constexpr u128 checked_pow(u128 b, u32 e, const char* what = "128-bit power overflow") {
  u128 r = 1;
  while (e > 0) {
    if (e & 1u) r = checked_mul(r, b, what);
    e >>= 1;
    if (e > 0) b = checked_mul(b, b, what);
  }
  return r;
}

constexpr int trailing_zeros(u64 x) { return __builtin_ctzll(x); }

constexpr int trailing_zeros(u128 x) {
  const u64 lo = static_cast<u64>(x);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<u64>(x >> 64));
}

// Stein's binary gcd; works at any unsigned width, in particular u128 where
// std::gcd's repeated division would be slow.
template <class U>
constexpr U binary_gcd(U a, U b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = trailing_zeros(a | b);
  a >>= trailing_zeros(a);
  for (;;) {
    b >>= trailing_zeros(b);
    if (a > b) {
      const U t = a;
      a = b;
      b = t;
    }
    b -= a;
    if (b == 0) break;
  }
  return a << shift;
}

// Floor of sqrt(n), exact for all 64-bit inputs (the float estimate is
// corrected by hand because long double loses precision near 2^63).
constexpr u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int i = 40;
  while (v > 0) {
    buf[--i] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
    v /= 10;
  }
  return std::string(buf + i, buf + 40);
}

}  // namespace harmonic
