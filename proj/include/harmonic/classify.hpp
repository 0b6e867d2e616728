#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "harmonic/multiplicative.hpp"
#include "harmonic/ratio.hpp"
#include "harmonic/shape.hpp"

namespace harmonic {

// The nine harmonic-type means of n.  Each is n * count / sum for one of
// the three divisor-counting functions against one of the three divisor-sum
// functions; H, HStar and HBistar are the diagonal (matching) pairs and
// H1..H6 are the mixed ones.
enum class MeanKind : int {
  H = 0,       // n d(n)   / sigma(n)
  HStar,       // n d*(n)  / sigma*(n)
  HBistar,     // n d**(n) / sigma**(n)
  H1,          // n d(n)   / sigma*(n)
  H2,          // n d*(n)  / sigma(n)
  H3,          // n d(n)   / sigma**(n)
  H4,          // n d**(n) / sigma(n)
  H5,          // n d*(n)  / sigma**(n)
  H6,          // n d**(n) / sigma*(n)
};

inline constexpr std::array<MeanKind, 9> kAllMeans = {
    MeanKind::H,  MeanKind::HStar, MeanKind::HBistar, MeanKind::H1, MeanKind::H2,
    MeanKind::H3, MeanKind::H4,    MeanKind::H5,      MeanKind::H6,
};

inline constexpr std::string_view mean_name(MeanKind k) {
  switch (k) {
    case MeanKind::H: return "h";
    case MeanKind::HStar: return "h_star";
    case MeanKind::HBistar: return "h_bistar";
    case MeanKind::H1: return "h1";
    case MeanKind::H2: return "h2";
    case MeanKind::H3: return "h3";
    case MeanKind::H4: return "h4";
    case MeanKind::H5: return "h5";
    case MeanKind::H6: return "h6";
  }
  return "?";
}

namespace detail {

// count-function selector: 0 -> d, 1 -> d*, 2 -> d**
inline constexpr int mean_count_index(MeanKind k) {
  switch (k) {
    case MeanKind::H:
    case MeanKind::H1:
    case MeanKind::H3: return 0;
    case MeanKind::HStar:
    case MeanKind::H2:
    case MeanKind::H5: return 1;
    default: return 2;
  }
}

// sum-function selector: 0 -> sigma, 1 -> sigma*, 2 -> sigma**
inline constexpr int mean_sum_index(MeanKind k) {
  switch (k) {
    case MeanKind::H:
    case MeanKind::H2:
    case MeanKind::H4: return 0;
    case MeanKind::HStar:
    case MeanKind::H1:
    case MeanKind::H6: return 1;
    default: return 2;
  }
}

}  // namespace detail

// Everything the library knows about one integer: the six arithmetic
// function values, all nine means as reduced fractions, and the standard
// predicate flags.  Built once, consumed by search records, the CLI and
// the theorem checks alike.
struct NumberProfile {
  u64 n = 0;
  Factorization factorization;

  u64 d = 1, d_star = 1, d_bistar = 1;
  u128 sigma = 1, sigma_star = 1, sigma_bistar = 1;

  std::array<ExactRatio, 9> means;  // indexed by MeanKind

  bool harmonic = false;
  bool unitary_harmonic = false;
  bool biunitary_harmonic = false;
  std::array<bool, 6> h_number{};  // H1..H6 integral

  std::optional<u32> perfect_level;           // k with sigma = k n (k >= 2)
  std::optional<u32> biunitary_perfect_level; // k with sigma** = k n (k >= 2)
  bool perfect = false;           // sigma = 2n
  bool unitary_perfect = false;   // sigma* = 2n
  bool biunitary_perfect = false; // sigma** = 2n
  bool balanced = false;          // 2 sigma = n d
  bool friendly = false;          // n > 1 and gcd(n, sigma) = 1
  bool powerful = false;
  bool perfect_square = false;
  bool squarefree = false;

  const ExactRatio& mean(MeanKind k) const { return means[static_cast<int>(k)]; }
  bool mean_integral(MeanKind k) const { return mean(k).is_integer(); }
};

inline ExactRatio harmonic_mean(const Factorization& f, MeanKind kind) {
  const u64 n = f.value();
  const u64 counts[3] = {d_count(f), d_star(f), d_bistar(f)};
  const u128 sums[3] = {sigma(f), sigma_star(f), sigma_bistar(f)};
  const u128 num = checked_mul(static_cast<u128>(n), counts[detail::mean_count_index(kind)]);
  return ExactRatio(num, sums[detail::mean_sum_index(kind)]);
}

inline ExactRatio harmonic_mean(u64 n, MeanKind kind) {
  return harmonic_mean(factorize(n), kind);
}

inline NumberProfile profile_of(const Factorization& f) {
  NumberProfile p;
  p.factorization = f;
  p.n = f.value();
  p.d = d_count(f);
  p.d_star = d_star(f);
  p.d_bistar = d_bistar(f);
  p.sigma = sigma(f);
  p.sigma_star = sigma_star(f);
  p.sigma_bistar = sigma_bistar(f);

  const u64 counts[3] = {p.d, p.d_star, p.d_bistar};
  const u128 sums[3] = {p.sigma, p.sigma_star, p.sigma_bistar};
  for (const MeanKind k : kAllMeans) {
    const u128 num = checked_mul(static_cast<u128>(p.n), counts[detail::mean_count_index(k)]);
    p.means[static_cast<int>(k)] = ExactRatio(num, sums[detail::mean_sum_index(k)]);
  }

  p.harmonic = p.mean_integral(MeanKind::H);
  p.unitary_harmonic = p.mean_integral(MeanKind::HStar);
  p.biunitary_harmonic = p.mean_integral(MeanKind::HBistar);
  for (int i = 0; i < 6; ++i) {
    p.h_number[i] = p.mean_integral(static_cast<MeanKind>(static_cast<int>(MeanKind::H1) + i));
  }

  if (p.sigma % p.n == 0 && p.sigma >= 2 * static_cast<u128>(p.n)) {
    p.perfect_level = static_cast<u32>(p.sigma / p.n);
  }
  if (p.sigma_bistar % p.n == 0 && p.sigma_bistar >= 2 * static_cast<u128>(p.n)) {
    p.biunitary_perfect_level = static_cast<u32>(p.sigma_bistar / p.n);
  }
  p.perfect = p.sigma == 2 * static_cast<u128>(p.n);
  p.unitary_perfect = p.sigma_star == 2 * static_cast<u128>(p.n);
  p.biunitary_perfect = p.sigma_bistar == 2 * static_cast<u128>(p.n);
  p.balanced = 2 * p.sigma == checked_mul(static_cast<u128>(p.n), p.d);
  p.friendly = p.n > 1 && binary_gcd<u128>(p.n, p.sigma) == 1;

  p.powerful = true;
  p.perfect_square = true;
  p.squarefree = true;
  for (const auto& [prime, e] : f.factors) {
    if (e == 1) p.powerful = false;
    if (e % 2 == 1) p.perfect_square = false;
    if (e >= 2) p.squarefree = false;
  }
  return p;
}

inline NumberProfile profile_of(u64 n) { return profile_of(factorize(n)); }

// Predicate wrappers over the profile; each is also available fused in the
// bulk scanner, these single-number forms are the reference definitions.

inline bool is_harmonic(u64 n) { return harmonic_mean(n, MeanKind::H).is_integer(); }
inline bool is_unitary_harmonic(u64 n) { return harmonic_mean(n, MeanKind::HStar).is_integer(); }
inline bool is_biunitary_harmonic(u64 n) { return harmonic_mean(n, MeanKind::HBistar).is_integer(); }

// i in [1, 6]
inline bool is_h_variant_number(u64 n, int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("is_h_variant_number: index must be 1..6");
  return harmonic_mean(n, static_cast<MeanKind>(static_cast<int>(MeanKind::H1) + i - 1)).is_integer();
}

// n is k-harmonic when sigma_k(n) divides n^k * d(n).
inline bool is_k_harmonic(u64 n, u32 k) {
  const Factorization f = factorize(n);
  const u128 sk = sigma_k(f, k);
  const u128 nk = checked_pow(n, k, "is_k_harmonic: n^k overflows 128 bits");
  const u128 top = checked_mul(nk, d_count(f), "is_k_harmonic: n^k d(n) overflows 128 bits");
  return top % sk == 0;
}

inline bool is_perfect(u64 n) {
  return sigma(factorize(n)) == 2 * static_cast<u128>(n);
}

// k with sigma(n) = k n, if any (k = 1 only for n = 1).
inline std::optional<u32> k_perfect_level(u64 n) {
  const u128 s = sigma(factorize(n));
  if (s % n != 0) return std::nullopt;
  return static_cast<u32>(s / n);
}

inline bool is_unitary_perfect(u64 n) {
  return sigma_star(factorize(n)) == 2 * static_cast<u128>(n);
}

// k with sigma**(n) = k n, if any.
inline std::optional<u32> biunitary_k_perfect_level(u64 n) {
  const u128 s = sigma_bistar(factorize(n));
  if (s % n != 0) return std::nullopt;
  return static_cast<u32>(s / n);
}

inline bool is_balanced(u64 n) {
  const Factorization f = factorize(n);
  return 2 * sigma(f) == checked_mul(static_cast<u128>(n), d_count(f));
}

inline bool is_friendly(u64 n) {
  if (n <= 1) return false;
  return binary_gcd<u128>(n, sigma(factorize(n))) == 1;
}

inline bool is_powerful(u64 n) {
  for (const auto& [p, e] : factorize(n).factors) {
    if (e < 2) return false;
  }
  return true;
}

inline bool is_perfect_square(u64 n) {
  const u64 r = isqrt(n);
  return r * r == n;
}

inline bool is_squarefree(u64 n) {
  for (const auto& [p, e] : factorize(n).factors) {
    if (e >= 2) return false;
  }
  return true;
}

// Multiplicative split of n under which the bi-unitary mean factors
// exactly.  Odd-exponent primes p^(2a+1) go to n1 unchanged; an
// even-exponent prime q^(2b) contributes q^(b-1) to n1 and q^(b+1) to n2.
// Then n1 * n2 = n and, prime power by prime power,
//   sigma**(q^(2b)) = sigma(q^(b-1)) * sigma*(q^(b+1)),
//   d**(q^(2b))     = d(q^(b-1))     * d*(q^(b+1)),
// so H**(n) = H(n1) * H*(n2) as exact rationals.
struct MeanSplit {
  Factorization n1;
  Factorization n2;
};

inline MeanSplit biunitary_mean_split(const Factorization& f) {
  MeanSplit s;
  for (const auto& [p, e] : f.factors) {
    if (e % 2 == 1) {
      s.n1.factors.push_back({p, e});
    } else {
      const u32 b = e / 2;
      if (b >= 2) s.n1.factors.push_back({p, b - 1});
      s.n2.factors.push_back({p, b + 1});
    }
  }
  return s;
}

inline MeanSplit biunitary_mean_split(u64 n) { return biunitary_mean_split(factorize(n)); }

// True when H**(n) = H(n1) * H*(n2) holds for the split above; this is an
// identity, so it should hold for every n >= 1.
inline bool biunitary_mean_split_identity_holds(const Factorization& f) {
  const MeanSplit s = biunitary_mean_split(f);
  const ExactRatio lhs = harmonic_mean(f, MeanKind::HBistar);
  const ExactRatio rhs = harmonic_mean(s.n1, MeanKind::H) * harmonic_mean(s.n2, MeanKind::HStar);
  return lhs == rhs;
}

}  // namespace harmonic
