#pragma once

#include "harmonic/factorization.hpp"

namespace harmonic {

// Prime-power building blocks.  For any n < 2^64 the divisor sums fit
// comfortably in 128 bits (sigma(n) < 6n), so these cannot overflow on
// canonical factorizations; the checked helpers still guard against
// malformed input.

// 1 + p + ... + p^e
inline u128 sigma_prime_power(u64 p, u32 e) {
  u128 sum = 1;
  u128 pw = 1;
  for (u32 i = 0; i < e; ++i) {
    pw = checked_mul(pw, p);
    sum = checked_add(sum, pw);
  }
  return sum;
}

// 1 + p^k + ... + p^(k*e)
inline u128 sigma_k_prime_power(u64 p, u32 e, u32 k) {
  const u128 pk = checked_pow(p, k, "sigma_k: p^k overflows 128 bits");
  u128 sum = 1;
  u128 pw = 1;
  for (u32 i = 0; i < e; ++i) {
    pw = checked_mul(pw, pk, "sigma_k: term overflows 128 bits");
    sum = checked_add(sum, pw, "sigma_k: sum overflows 128 bits");
  }
  return sum;
}

// Sum of bi-unitary divisors of p^e: the full geometric sum when e is odd,
// with the middle term p^(e/2) dropped when e is even.
inline u128 sigma_bistar_prime_power(u64 p, u32 e) {
  u128 sum = sigma_prime_power(p, e);
  if (e % 2 == 0) sum -= checked_pow(p, e / 2);
  return sum;
}

// sigma(n): sum of all divisors.
inline u128 sigma(const Factorization& f) {
  u128 r = 1;
  for (const auto& [p, e] : f.factors) r = checked_mul(r, sigma_prime_power(p, e));
  return r;
}

// sigma_k(n): sum of k-th powers of divisors.  Unlike the k = 1 functions
// this can genuinely exceed 128 bits, in which case it throws.
inline u128 sigma_k(const Factorization& f, u32 k) {
  if (k == 0) throw std::invalid_argument("sigma_k: k must be >= 1");
  u128 r = 1;
  for (const auto& [p, e] : f.factors) {
    r = checked_mul(r, sigma_k_prime_power(p, e, k), "sigma_k: product overflows 128 bits");
  }
  return r;
}

// sigma*(n): sum of unitary divisors, multiplicative with p^e -> p^e + 1.
inline u128 sigma_star(const Factorization& f) {
  u128 r = 1;
  for (const auto& [p, e] : f.factors) {
    r = checked_mul(r, checked_add(checked_pow(p, e), 1));
  }
  return r;
}

// sigma**(n): sum of bi-unitary divisors.
inline u128 sigma_bistar(const Factorization& f) {
  u128 r = 1;
  for (const auto& [p, e] : f.factors) r = checked_mul(r, sigma_bistar_prime_power(p, e));
  return r;
}

// d(n): number of divisors.  d(n) < 2^20 for every 64-bit n, so u64 is
// ample for all three counting functions.
inline u64 d_count(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f.factors) r *= e + 1;
  return r;
}

// d*(n) = 2^omega(n): number of unitary divisors.
inline u64 d_star(const Factorization& f) {
  return static_cast<u64>(1) << f.omega();
}

// d**(n): number of bi-unitary divisors; factor e+1 for odd exponents,
// e for even ones (the middle divisor is not bi-unitary).
inline u64 d_bistar(const Factorization& f) {
  u64 r = 1;
  for (const auto& [p, e] : f.factors) r *= (e % 2 == 1) ? e + 1 : e;
  return r;
}

}  // namespace harmonic
