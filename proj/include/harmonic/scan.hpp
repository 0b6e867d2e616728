#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "harmonic/factorization.hpp"
#include "harmonic/shape.hpp"

namespace harmonic {

inline constexpr u64 kDefaultSegmentSize = 1 << 20;
inline constexpr u64 kMaxScanBound = 10'000'000'000ull;  // 10^10, the supported range

// Odd primes up to a limit together with the constants for exact division:
// inv[k] is the inverse of primes[k] modulo 2^64, so for p | r the product
// r * inv equals r / p, and p | r exactly when r * inv <= cap[k]
// (Granlund-Montgomery divisibility).  Powers of two are handled separately
// with count-trailing-zeros.
struct ScanPrimeTable {
  std::vector<u32> primes;
  std::vector<u64> inv;
  std::vector<u64> cap;
  u64 limit = 0;

  static ScanPrimeTable build(u64 limit) {
    ScanPrimeTable t;
    t.limit = limit;
    if (limit > 0xffffffffull) throw std::invalid_argument("ScanPrimeTable: limit too large");
    for (const u32 p : primes_up_to(static_cast<u32>(limit))) {
      if (p == 2) continue;
      u64 x = p;  // Newton iteration doubles correct low bits each round
      for (int i = 0; i < 5; ++i) x *= 2 - p * x;
      t.primes.push_back(p);
      t.inv.push_back(x);
      t.cap.push_back(~static_cast<u64>(0) / p);
    }
    return t;
  }
};

// Core segment walk shared by every bulk operation.  The visitor owns the
// per-integer state and exposes
//   u64& remaining(i)            initialized by the caller to lo + i
//   void apply(i, p, e, p^e)     one call per prime power of lo + i
// Events for one integer arrive with primes strictly ascending; after the
// walk every remaining() is 1.
template <class Visitor>
void drive_factor_events(u64 lo, u64 hi, const ScanPrimeTable& table, Visitor& v) {
  const u64 root = isqrt(hi);
  if (table.limit < root) throw std::invalid_argument("drive_factor_events: prime table too small");

  for (u64 m = lo + (lo & 1); m <= hi; m += 2) {
    u64& r = v.remaining(m - lo);
    const int e = trailing_zeros(r);
    r >>= e;
    v.apply(m - lo, 2, static_cast<u32>(e), static_cast<u64>(1) << e);
  }

  for (std::size_t k = 0; k < table.primes.size(); ++k) {
    const u64 p = table.primes[k];
    if (p > root) break;
    const u64 pinv = table.inv[k];
    const u64 pcap = table.cap[k];
    for (u64 m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
      u64& r = v.remaining(m - lo);
      u64 q = r * pinv;
      u32 e = 1;
      u64 pe = p;
      for (;;) {
        const u64 q2 = q * pinv;
        if (q2 > pcap) break;
        q = q2;
        ++e;
        pe *= p;
      }
      r = q;
      v.apply(m - lo, p, e, pe);
    }
  }

  for (u64 i = 0; i <= hi - lo; ++i) {
    u64& r = v.remaining(i);
    if (r > 1) {
      const u64 p = r;
      r = 1;
      v.apply(i, p, 1, p);  // prime cofactor beyond the table
    }
  }
}

namespace detail {

// Exponent-pattern bits accumulated per integer during a scan.
enum ExponentFlags : u8 {
  kHasExpOne = 1,    // some exponent equals 1
  kHasExpGe2 = 2,    // some exponent is at least 2
  kHasExpGe3 = 4,    // some exponent is at least 3
  kHasOddExp = 8,    // some exponent is odd
  kHasEvenExp = 16,  // some exponent is even
};

constexpr u8 exponent_flags(u32 e) {
  u8 f = (e % 2 == 1) ? kHasOddExp : kHasEvenExp;
  if (e == 1) {
    f |= kHasExpOne;
  } else {
    f |= kHasExpGe2;
    if (e >= 3) f |= kHasExpGe3;
  }
  return f;
}

constexpr u64 half_power(u64 p, u32 e) {  // p^(e/2) for even e
  u64 r = 1;
  for (u32 i = 0; i < e / 2; ++i) r *= p;
  return r;
}

}  // namespace detail

// Packed per-integer accumulator for the fused profile scan: one cache line
// holds ~1.3 of these, and the whole hot loop touches nothing else.  The
// u64 sums and u16 counts are exact for every n <= 10^10 (sigma(n) < 6n,
// d(n) <= 6720 there).
struct ProfileCell {
  u64 remaining;
  u64 sigma;
  u64 sigma_star;
  u64 sigma_bistar;
  u32 shape_key;
  u16 d;
  u16 d_star;
  u16 d_bistar;
  u8 flags;

  bool squarefree() const { return !(flags & detail::kHasExpGe2); }
  bool powerful() const { return !(flags & detail::kHasExpOne); }
  bool perfect_square() const { return !(flags & detail::kHasOddExp); }
  bool all_exponents_odd() const { return !(flags & detail::kHasEvenExp); }
  bool all_exponents_in_12() const { return !(flags & detail::kHasExpGe3); }
};
static_assert(sizeof(ProfileCell) == 48);

// Streams (n, ProfileCell) over one segment after a fused sieve pass.
class ProfileScanner {
 public:
  explicit ProfileScanner(u64 max_hi) : table_(ScanPrimeTable::build(isqrt(max_hi))) {
    if (max_hi > kMaxScanBound) throw std::invalid_argument("ProfileScanner: bound exceeds 10^10");
  }

  // fn(n, const ProfileCell&) for every n in [lo, hi], ascending.
  template <class Fn>
  void scan(u64 lo, u64 hi, Fn&& fn) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("ProfileScanner: bad segment bounds");
    const u64 len = hi - lo + 1;
    cells_.resize(len);
    for (u64 i = 0; i < len; ++i) {
      cells_[i] = ProfileCell{lo + i, 1, 1, 1, 1, 1, 1, 1, 0};
    }
    drive_factor_events(lo, hi, table_, *this);
    for (u64 i = 0; i < len; ++i) fn(lo + i, static_cast<const ProfileCell&>(cells_[i]));
  }

  u64& remaining(u64 i) { return cells_[i].remaining; }

  void apply(u64 i, u64 p, u32 e, u64 pe) {
    ProfileCell& c = cells_[i];
    u64 s, sb;
    if (e == 1) {
      s = p + 1;  // avoids pe * p, which could overflow for a huge tail prime
      sb = s;
    } else {
      s = (pe * p - 1) / (p - 1);  // p <= n^(1/2) here, so pe * p <= n^(3/2)
      sb = (e % 2 == 1) ? s : s - detail::half_power(p, e);
    }
    c.sigma *= s;
    c.sigma_star *= pe + 1;
    c.sigma_bistar *= sb;
    c.d = static_cast<u16>(c.d * (e + 1));
    c.d_star = static_cast<u16>(c.d_star * 2);
    c.d_bistar = static_cast<u16>(c.d_bistar * ((e % 2 == 1) ? e + 1 : e));
    c.shape_key *= shape_detail_prime(e);
    c.flags |= detail::exponent_flags(e);
  }

 private:
  static u32 shape_detail_prime(u32 e) { return detail::kExponentPrime[e]; }

  ScanPrimeTable table_;
  std::vector<ProfileCell> cells_;
};

// Single-threaded convenience walk over [lo, hi] in fixed segments.
template <class Fn>
void scan_profiles(u64 lo, u64 hi, Fn&& fn, u64 segment_size = kDefaultSegmentSize) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("scan_profiles: bad range");
  ProfileScanner scanner(hi);
  for (u64 seg_lo = lo; seg_lo <= hi; seg_lo += segment_size) {
    const u64 seg_hi = std::min(hi, seg_lo + segment_size - 1);
    scanner.scan(seg_lo, seg_hi, fn);
  }
}

namespace detail {

// Bounded-width factor store used when full factorizations of a whole
// segment are needed (a 64-bit integer has at most 15 prime factors).
class FlatFactorVisitor {
 public:
  static constexpr u32 kMaxFactors = 15;

  void reset(u64 lo, u64 len) {
    rem_.resize(len);
    count_.assign(len, 0);
    entries_.resize(len * kMaxFactors);
    for (u64 i = 0; i < len; ++i) rem_[i] = lo + i;
  }

  u64& remaining(u64 i) { return rem_[i]; }

  void apply(u64 i, u64 p, u32 e, u64) {
    entries_[i * kMaxFactors + count_[i]++] = PrimePower{p, e};
  }

  std::span<const PrimePower> factors_of(u64 i) const {
    return {entries_.data() + i * kMaxFactors, count_[i]};
  }

 private:
  std::vector<u64> rem_;
  std::vector<u8> count_;
  std::vector<PrimePower> entries_;
};

}  // namespace detail

// Calls fn(n, span<const PrimePower>) for every n in [lo, hi], ascending;
// the span is the canonical factorization and is only valid inside the call.
template <class Fn>
void for_each_factorization(u64 lo, u64 hi, Fn&& fn) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("for_each_factorization: bad range");
  constexpr u64 kChunk = 1 << 16;
  const ScanPrimeTable table = ScanPrimeTable::build(isqrt(hi));
  detail::FlatFactorVisitor v;
  for (u64 seg_lo = lo; seg_lo <= hi; seg_lo += kChunk) {
    const u64 seg_hi = std::min(hi, seg_lo + kChunk - 1);
    v.reset(seg_lo, seg_hi - seg_lo + 1);
    drive_factor_events(seg_lo, seg_hi, table, v);
    for (u64 i = 0; i <= seg_hi - seg_lo; ++i) fn(seg_lo + i, v.factors_of(i));
  }
}

// Factorizations of every integer in [lo, hi] by one shared sieve pass
// rather than per-integer trial division.  The segment length is capped so
// a typo cannot silently allocate tens of gigabytes.
inline std::vector<Factorization> sieve_segment(u64 lo, u64 hi,
                                                u64 max_length = kDefaultSegmentSize) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("sieve_segment: bad segment bounds");
  if (hi - lo + 1 > max_length) throw std::length_error("sieve_segment: segment exceeds maximum length");
  std::vector<Factorization> out;
  out.reserve(hi - lo + 1);
  for_each_factorization(lo, hi, [&](u64, std::span<const PrimePower> fs) {
    Factorization f;
    f.factors.assign(fs.begin(), fs.end());
    out.push_back(std::move(f));
  });
  return out;
}

}  // namespace harmonic
