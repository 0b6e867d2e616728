#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "harmonic/int128.hpp"

namespace harmonic {

enum class DivisorKind { All, Unitary, Biunitary };

struct DivisorList {
  u64 n = 0;
  DivisorKind kind = DivisorKind::All;
  std::vector<u64> values;  // ascending
};

// Greatest common unitary divisor of a and b: the largest d with d | a,
// gcd(d, a/d) = 1, d | b, gcd(d, b/d) = 1.  Computed by taking g = gcd(a, b)
// and stripping every prime of g that is not unitary on either side; no
// factorization is needed because those primes are exactly the primes of
// gcd(g, a/g) and gcd(g, b/g).
inline u64 gcud(u64 a, u64 b) {
  if (a == 0 || b == 0) throw std::invalid_argument("gcud: arguments must be positive");
  u64 g = std::gcd(a, b);
  const u64 bad_a = std::gcd(g, a / g);
  const u64 bad_b = std::gcd(g, b / g);
  for (u64 bad : {bad_a, bad_b}) {
    u64 k = bad;
    while (k > 1) {
      const u64 s = std::gcd(g, k);
      if (s == 1) break;
      g /= s;
      k = s;
    }
  }
  return g;
}

namespace detail {

template <class Keep>
DivisorList divisor_list(u64 n, DivisorKind kind, Keep&& keep) {
  if (n == 0) throw std::invalid_argument("divisors: 0 has infinitely many divisors");
  DivisorList out;
  out.n = n;
  out.kind = kind;
  for (u64 i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    if (keep(i, n / i)) out.values.push_back(i);
    const u64 j = n / i;
    if (j != i && keep(j, i)) out.values.push_back(j);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

}  // namespace detail

// Direct enumerations by trial division.  These are reference oracles for
// the multiplicative formulas and are intended for modest n (the cost is
// sqrt(n) per call), not for bulk scanning.

inline DivisorList divisors(u64 n) {
  return detail::divisor_list(n, DivisorKind::All, [](u64, u64) { return true; });
}

inline DivisorList unitary_divisors(u64 n) {
  return detail::divisor_list(n, DivisorKind::Unitary,
                              [](u64 d, u64 rest) { return std::gcd(d, rest) == 1; });
}

inline DivisorList biunitary_divisors(u64 n) {
  return detail::divisor_list(n, DivisorKind::Biunitary,
                              [](u64 d, u64 rest) { return gcud(d, rest) == 1; });
}

}  // namespace harmonic
