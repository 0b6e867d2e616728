#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

#include "harmonic/primes.hpp"

namespace harmonic {

struct PrimePower {
  u64 prime = 0;
  u32 exponent = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly ascending, exponents >= 1.
// A u64 has at most 15 distinct prime factors (the primorial of 16 primes
// already exceeds 2^64).
struct Factorization {
  std::vector<PrimePower> factors;

  u64 value() const {
    u128 n = 1;
    for (const auto& f : factors) n = checked_mul(n, checked_pow(f.prime, f.exponent));
    if (n > static_cast<u128>(~static_cast<u64>(0))) {
      throw std::overflow_error("Factorization::value: product exceeds 64 bits");
    }
    return static_cast<u64>(n);
  }

  u32 omega() const { return static_cast<u32>(factors.size()); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {

inline u64 pollard_rho(u64 n) {
  // Brent's variant; n must be composite, odd, and > 1.
  for (u64 c = 1;; ++c) {
    const auto step = [n, c](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = step(y);
      ++lam;
      const u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;  // cycle without a factor; retry with next c
      d = binary_gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

inline void factor_into(u64 n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  const u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

// Complete factorization of any 64-bit n >= 1: trial division by the sieved
// prime table, then deterministic primality plus Pollard-rho splitting for
// whatever survives.  Throws std::invalid_argument for n = 0.
inline Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: 0 has no prime factorization");
  Factorization result;
  if (n == 1) return result;
  for (const u32 p : small_primes()) {
    if (static_cast<u64>(p) * p > n) break;
    if (n % p != 0) continue;
    u32 e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    result.factors.push_back({p, e});
  }
  if (n > 1) {
    if (is_prime(n)) {
      result.factors.push_back({n, 1});
    } else {
      // Composite survivor of trial division to 10^6: both prime factors
      // exceed the table, so collect them via rho and merge.
      std::vector<PrimePower> rest;
      detail::factor_into(n, rest);
      std::sort(rest.begin(), rest.end());
      for (const auto& f : rest) {
        if (!result.factors.empty() && result.factors.back().prime == f.prime) {
          result.factors.back().exponent += f.exponent;
        } else {
          result.factors.push_back(f);
        }
      }
    }
  }
  return result;
}

}  // namespace harmonic
