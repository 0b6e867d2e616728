#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/census.hpp"
#include "harmonic/classify.hpp"
#include "harmonic/scan.hpp"
#include "harmonic/search.hpp"

namespace harmonic {

// Result of one bounded falsification run.  Universally quantified claims
// are checked exhaustively up to the given bounds; `passed` with a bound is
// evidence, not proof, except where the bound genuinely exhausts the claim.
struct VerificationOutcome {
  std::string id;
  std::string claim;
  std::string bounds;
  bool passed = true;
  std::optional<std::pair<u64, std::string>> counterexample;  // first failure
  std::vector<std::pair<std::string, u64>> witness_counts;

  void fail(u64 n, std::string why) {
    if (passed) {
      passed = false;
      counterexample = {n, std::move(why)};
    }
  }

  void count(std::string key, u64 value) { witness_counts.emplace_back(std::move(key), value); }
};

namespace detail {

inline u32 cell_omega(const ProfileCell& c) {
  return static_cast<u32>(trailing_zeros(static_cast<u64>(c.d_star)));
}

inline bool cell_biunitary_harmonic(u64 n, const ProfileCell& c) {
  return divides_scaled(n, c.d_bistar, c.sigma_bistar);
}

inline bool cell_harmonic(u64 n, const ProfileCell& c) {
  return divides_scaled(n, c.d, c.sigma);
}

inline bool cell_unitary_harmonic(u64 n, const ProfileCell& c) {
  return divides_scaled(n, c.d_star, c.sigma_star);
}

}  // namespace detail

// Theorem 1: for a bi-unitary k-perfect number n (sigma**(n) = k n), n is
// bi-unitary harmonic exactly when k divides d**(n).  Corollaries: every
// bi-unitary 2-perfect number is bi-unitary harmonic, and so is every
// bi-unitary 4-perfect number with at least two prime factors.
inline VerificationOutcome verify_theorem1(u64 bound) {
  if (bound < 1 || bound > 1'000'000'000ull) {
    throw std::invalid_argument("verify_theorem1: need 1 <= bound <= 10^9");
  }
  VerificationOutcome out;
  out.id = "theorem1";
  out.claim =
      "bi-unitary k-perfect n is bi-unitary harmonic iff k | d**(n); "
      "2-perfect members (and 4-perfect members with omega >= 2) are bi-unitary harmonic";
  out.bounds = "bound=" + std::to_string(bound);

  u64 multiperfect = 0, two_perfect = 0, four_perfect = 0;
  std::set<u64> two_perfect_members;
  scan_profiles(1, bound, [&](u64 n, const ProfileCell& c) {
    if (c.sigma_bistar % n != 0) return;
    const u64 k = c.sigma_bistar / n;
    ++multiperfect;
    const bool bh = detail::cell_biunitary_harmonic(n, c);
    if (bh != (c.d_bistar % k == 0)) {
      out.fail(n, "bi-unitary harmonic does not match k | d** for k=" + std::to_string(k));
    }
    if (k == 2) {
      ++two_perfect;
      two_perfect_members.insert(n);
      if (!bh) out.fail(n, "bi-unitary 2-perfect but not bi-unitary harmonic");
    }
    if (k == 4) {
      ++four_perfect;
      if (detail::cell_omega(c) >= 2 && !bh) {
        out.fail(n, "bi-unitary 4-perfect with omega >= 2 but not bi-unitary harmonic");
      }
    }
  });
  if (bound >= 90) {
    for (const u64 w : {6, 60, 90}) {
      if (!two_perfect_members.contains(w)) {
        out.fail(w, "expected bi-unitary 2-perfect witness not found");
      }
    }
  }
  out.count("biunitary-multiperfect", multiperfect);
  out.count("biunitary-2-perfect", two_perfect);
  out.count("biunitary-4-perfect", four_perfect);
  return out;
}

// Theorem 2: when every exponent in n is odd, sigma**(n) = sigma(n) and
// d**(n) = d(n), so n is bi-unitary harmonic exactly when it is harmonic.
// Corollary 1: the squarefree bi-unitary harmonic numbers are exactly
// {1, 6}.  Corollary 2: an even all-odd-exponent bi-unitary harmonic number
// has at least three prime factors -- with the single exception n = 6,
// which is even, squarefree and bi-unitary harmonic with omega = 2 (the
// blanket claim overlooks it, so it is carved out here).
inline VerificationOutcome verify_theorem2(u64 bound) {
  if (bound < 1 || bound > kMaxScanBound) {
    throw std::invalid_argument("verify_theorem2: need 1 <= bound <= 10^10");
  }
  VerificationOutcome out;
  out.id = "theorem2";
  out.claim =
      "all exponents odd: sigma** = sigma, d** = d, and bi-unitary harmonic <=> harmonic; "
      "squarefree bi-unitary harmonic members are exactly {1, 6}; "
      "even all-odd-exponent members other than 6 have omega >= 3";
  out.bounds = "bound=" + std::to_string(bound);

  u64 all_odd_members = 0;
  std::set<u64> expected_odd = {6, 270, 672, 30240};
  std::set<u64> squarefree_members;
  scan_profiles(1, bound, [&](u64 n, const ProfileCell& c) {
    if (!c.all_exponents_odd()) return;
    if (c.sigma_bistar != c.sigma || c.d_bistar != c.d) {
      out.fail(n, "sigma**/d** do not collapse to sigma/d despite all-odd exponents");
      return;
    }
    const bool bh = detail::cell_biunitary_harmonic(n, c);
    if (bh != detail::cell_harmonic(n, c)) {
      out.fail(n, "bi-unitary harmonic and harmonic disagree on all-odd exponents");
    }
    if (!bh) return;
    ++all_odd_members;
    expected_odd.erase(n);
    if (c.squarefree()) {
      squarefree_members.insert(n);
      if (n != 1 && n != 6) out.fail(n, "squarefree bi-unitary harmonic member other than 1, 6");
    }
    if (n % 2 == 0 && n != 6 && detail::cell_omega(c) < 3) {
      out.fail(n, "even all-odd-exponent member with omega < 3 (and n != 6)");
    }
  });
  if (bound >= 6 && !squarefree_members.contains(6)) out.fail(6, "6 missing from squarefree members");
  if (!squarefree_members.contains(1)) out.fail(1, "1 missing from squarefree members");
  if (bound >= 30240 && !expected_odd.empty()) {
    out.fail(*expected_odd.begin(), "expected all-odd-exponent member not found");
  }
  out.count("all-odd-exponent members", all_odd_members);
  out.count("squarefree members", squarefree_members.size());
  return out;
}

// Theorem 3: no prime power p^a (a >= 1) is bi-unitary harmonic; in
// particular omega(n) >= 2 for every bi-unitary harmonic n > 1.
inline VerificationOutcome verify_theorem3(u64 bound) {
  if (bound < 1 || bound > 1'000'000'000ull) {
    throw std::invalid_argument("verify_theorem3: need 1 <= bound <= 10^9");
  }
  VerificationOutcome out;
  out.id = "theorem3";
  out.claim = "no prime power p^a <= bound (a >= 1) is bi-unitary harmonic";
  out.bounds = "bound=" + std::to_string(bound);

  u64 checked = 0;
  for_each_prime(2, bound, [&](u64 p) {
    for (u128 pe = p; pe <= bound; pe = pe * p) {
      u32 e = 0;
      for (u128 t = pe; t > 1; t /= p) ++e;
      const u128 sb = sigma_bistar_prime_power(p, e);
      const u64 db = (e % 2 == 1) ? e + 1 : e;
      ++checked;
      if ((pe * db) % sb == 0) {
        out.fail(static_cast<u64>(pe), "prime power is bi-unitary harmonic");
      }
    }
  });
  out.count("prime powers checked", checked);
  return out;
}

// Theorem 4 and its remark: there is no bi-unitary harmonic number of the
// form p^3 q^2, p q^4, or p^3 q^4 (distinct primes), and the only one of
// the form p q^2 is 45 = 5 * 3^2.  Checked two ways: symbolically over all
// prime pairs up to prime_bound, and by a shape-filtered scan up to
// range_bound.
inline VerificationOutcome verify_theorem4(u64 prime_bound, u64 range_bound) {
  if (prime_bound < 3 || prime_bound > 10'000) {
    throw std::invalid_argument("verify_theorem4: need 3 <= prime_bound <= 10^4");
  }
  if (range_bound < 1 || range_bound > kMaxScanBound) {
    throw std::invalid_argument("verify_theorem4: need 1 <= range_bound <= 10^10");
  }
  VerificationOutcome out;
  out.id = "theorem4";
  out.claim =
      "no bi-unitary harmonic number has shape p^3 q^2, p q^4 or p^3 q^4; "
      "shape p q^2 has exactly the member 45";
  out.bounds =
      "prime_bound=" + std::to_string(prime_bound) + " range_bound=" + std::to_string(range_bound);

  struct TwoPrimeShape {
    u32 ep, eq;
    const char* label;
    bool only_45;
  };
  const TwoPrimeShape shapes[] = {
      {3, 2, "3,2", false},
      {1, 4, "1,4", false},
      {3, 4, "3,4", false},
      {1, 2, "1,2", true},
  };

  const std::vector<u32> primes = primes_up_to(static_cast<u32>(prime_bound));
  for (const auto& s : shapes) {
    u64 pairs = 0;
    bool found_45 = false;
    for (const u32 p : primes) {
      for (const u32 q : primes) {
        if (p == q) continue;
        ++pairs;
        const u128 n = checked_mul(checked_pow(p, s.ep), checked_pow(q, s.eq));
        const u128 sb =
            checked_mul(sigma_bistar_prime_power(p, s.ep), sigma_bistar_prime_power(q, s.eq));
        const u64 db = static_cast<u64>((s.ep % 2 == 1) ? s.ep + 1 : s.ep) *
                       ((s.eq % 2 == 1) ? s.eq + 1 : s.eq);
        if (checked_mul(n, db) % sb != 0) continue;
        if (s.only_45 && n == 45) {
          found_45 = true;
          continue;
        }
        out.fail(n <= 0xffffffffffffffffull ? static_cast<u64>(n) : 0,
                 std::string("unexpected member of two-prime shape ") + s.label);
      }
    }
    out.count(std::string("pairs checked for shape ") + s.label, pairs);
    if (s.only_45 && !found_45 && prime_bound >= 5) {
      out.fail(45, "45 = 5 * 3^2 not recovered as a shape 1,2 member");
    }
  }

  // Range scan cross-check over actual integers.
  const u32 key32 = ShapePattern::of({3, 2}).key();
  const u32 key14 = ShapePattern::of({1, 4}).key();
  const u32 key34 = ShapePattern::of({3, 4}).key();
  const u32 key12 = ShapePattern::of({1, 2}).key();
  u64 scan_members_12 = 0;
  scan_profiles(1, range_bound, [&](u64 n, const ProfileCell& c) {
    const u32 k = c.shape_key;
    if (k != key32 && k != key14 && k != key34 && k != key12) return;
    if (!detail::cell_biunitary_harmonic(n, c)) return;
    if (k == key12) {
      ++scan_members_12;
      if (n != 45) out.fail(n, "scan found a shape 1,2 member other than 45");
    } else {
      out.fail(n, "scan found a member of an excluded two-prime shape");
    }
  });
  if (range_bound >= 45 && scan_members_12 != 1) {
    out.fail(45, "scan did not recover 45 as the unique shape 1,2 member");
  }
  out.count("scan members of shape 1,2", scan_members_12);
  return out;
}

// Theorem 5 (with the corrected split): writing n = n1 * n2 where odd
// exponents stay in n1 and each even-exponent prime q^(2b) contributes
// q^(b-1) to n1 and q^(b+1) to n2, the identity H**(n) = H(n1) * H*(n2)
// holds for every n, and n1 harmonic together with n2 unitary harmonic
// forces n bi-unitary harmonic.
inline VerificationOutcome verify_theorem5(u64 bound) {
  if (bound < 1 || bound > kMaxScanBound) {
    throw std::invalid_argument("verify_theorem5: need 1 <= bound <= 10^10");
  }
  VerificationOutcome out;
  out.id = "theorem5";
  out.claim = "H**(n) = H(n1) * H*(n2) under the corrected split, for all n <= bound";
  out.bounds = "bound=" + std::to_string(bound);

  u64 implication_hits = 0;
  for_each_factorization(1, bound, [&](u64 n, std::span<const PrimePower> fs) {
    u128 n1 = 1, n2 = 1, s1 = 1, ss2 = 1, sb = 1;
    u64 d1 = 1, ds2 = 1, db = 1;
    for (const auto& [p, e] : fs) {
      sb = sb * sigma_bistar_prime_power(p, e);
      db *= (e % 2 == 1) ? e + 1 : e;
      if (e % 2 == 1) {
        n1 = n1 * checked_pow(p, e);
        s1 = s1 * sigma_prime_power(p, e);
        d1 *= e + 1;
      } else {
        const u32 b = e / 2;
        if (b >= 2) {
          n1 = n1 * checked_pow(p, b - 1);
          s1 = s1 * sigma_prime_power(p, b - 1);
        }
        d1 *= b;
        const u128 q_up = checked_pow(p, b + 1);
        n2 = n2 * q_up;
        ss2 = ss2 * (q_up + 1);
        ds2 *= 2;
      }
    }
    const ExactRatio lhs(checked_mul(n, db), sb);
    const ExactRatio h1(checked_mul(n1, d1), s1);
    const ExactRatio h2(checked_mul(n2, ds2), ss2);
    if (lhs != h1 * h2) {
      out.fail(n, "H**(n) != H(n1) * H*(n2)");
      return;
    }
    if (h1.is_integer() && h2.is_integer()) {
      ++implication_hits;
      if (!lhs.is_integer()) {
        out.fail(n, "n1 harmonic and n2 unitary harmonic, but n not bi-unitary harmonic");
      }
    }
  });
  out.count("integers checked", bound);
  out.count("implication premises met", implication_hits);
  return out;
}

// Theorem 6: H**/H5, H4/H2 and H6/H* all equal d**/d*, a positive integer.
// Collapse cases: exponents all in {1, 2} give sigma** = sigma* and
// d** = d* (so H3 = H1, H5 = H*, H6 = H** = H*, H4 = H2); all-odd
// exponents give sigma** = sigma and d** = d (so H5 = H2, H6 = H1,
// H3 = H4 = H).  Additionally recovers the reported shape catalog by a
// shape-filtered census within min(bound, 10^6).
inline VerificationOutcome verify_theorem6(u64 bound) {
  if (bound < 1 || bound > kMaxScanBound) {
    throw std::invalid_argument("verify_theorem6: need 1 <= bound <= 10^10");
  }
  VerificationOutcome out;
  out.id = "theorem6";
  out.claim =
      "H**/H5 = H4/H2 = H6/H* = d**/d*, a positive integer; collapse equalities on "
      "exponent-{1,2} and all-odd inputs; shape catalog within 10^6";
  out.bounds = "bound=" + std::to_string(bound);

  u64 checked = 0;
  for_each_factorization(1, bound, [&](u64 n, std::span<const PrimePower> fs) {
    u128 s = 1, ss = 1, sb = 1;
    u64 d = 1, ds = 1, db = 1;
    bool all_12 = true, all_odd = true;
    for (const auto& [p, e] : fs) {
      s = s * sigma_prime_power(p, e);
      ss = ss * (checked_pow(p, e) + 1);
      sb = sb * sigma_bistar_prime_power(p, e);
      d *= e + 1;
      ds *= 2;
      db *= (e % 2 == 1) ? e + 1 : e;
      if (e > 2) all_12 = false;
      if (e % 2 == 0) all_odd = false;
    }
    ++checked;
    const u128 un = n;
    const ExactRatio h(checked_mul(un, d), s);
    const ExactRatio h_star(checked_mul(un, ds), ss);
    const ExactRatio h_bistar(checked_mul(un, db), sb);
    const ExactRatio h1(checked_mul(un, d), ss);
    const ExactRatio h2(checked_mul(un, ds), s);
    const ExactRatio h3(checked_mul(un, d), sb);
    const ExactRatio h4(checked_mul(un, db), s);
    const ExactRatio h5(checked_mul(un, ds), sb);
    const ExactRatio h6(checked_mul(un, db), ss);

    const ExactRatio expected(db, ds);
    if (!expected.is_integer()) {
      out.fail(n, "d**/d* is not an integer");
      return;
    }
    if (h_bistar / h5 != expected || h4 / h2 != expected || h6 / h_star != expected) {
      out.fail(n, "quotient of means does not equal d**/d*");
      return;
    }
    if (all_12) {
      if (sb != ss || db != ds) {
        out.fail(n, "sigma**/d** do not collapse to sigma*/d* on exponent-{1,2} input");
      } else if (h3 != h1 || h5 != h_star || h6 != h_bistar || h6 != h_star || h4 != h2) {
        out.fail(n, "exponent-{1,2} mean equalities fail");
      }
    }
    if (all_odd) {
      if (sb != s || db != d) {
        out.fail(n, "sigma**/d** do not collapse to sigma/d on all-odd input");
      } else if (h5 != h2 || h6 != h1 || h3 != h4 || h3 != h) {
        out.fail(n, "all-odd mean equalities fail");
      }
    }
  });
  out.count("integers checked", checked);

  // Shape catalog census within 10^6.
  const u64 catalog_bound = std::min<u64>(bound, 1'000'000);
  const std::pair<ShapePattern, std::vector<u64>> expected_catalog[] = {
      {ShapePattern::of({2, 1}), {45}},
      {ShapePattern::of({2, 1, 1}), {60, 90}},
      {ShapePattern::of({2, 2, 1}), {15925}},
      {ShapePattern::of({2, 1, 1, 1}), {420, 630}},
      {ShapePattern::of({2, 2, 1, 1}), {9100}},
      {ShapePattern::of({2, 2, 2, 1}), {646425}},
  };
  std::vector<std::vector<u64>> found(std::size(expected_catalog));
  scan_profiles(1, catalog_bound, [&](u64 n, const ProfileCell& c) {
    if (!detail::cell_biunitary_harmonic(n, c)) return;
    for (std::size_t i = 0; i < std::size(expected_catalog); ++i) {
      if (c.shape_key == expected_catalog[i].first.key()) found[i].push_back(n);
    }
  });
  for (std::size_t i = 0; i < std::size(expected_catalog); ++i) {
    std::vector<u64> want;
    for (const u64 m : expected_catalog[i].second) {
      if (m <= catalog_bound) want.push_back(m);
    }
    if (found[i] != want) {
      out.fail(found[i].empty() ? 0 : found[i].front(),
               "shape " + expected_catalog[i].first.str() + " member list mismatch");
    }
    out.count("shape " + expected_catalog[i].first.str() + " members", found[i].size());
  }
  return out;
}

// Theorem 7: every perfect number is an H2- and H4-number; no H2-number
// above 1 is a perfect square; a friendly number (gcd(n, sigma(n)) = 1,
// n > 1) is never an H-, H2- or H4-number.
inline VerificationOutcome verify_theorem7(u64 bound) {
  if (bound < 1 || bound > kMaxScanBound) {
    throw std::invalid_argument("verify_theorem7: need 1 <= bound <= 10^10");
  }
  VerificationOutcome out;
  out.id = "theorem7";
  out.claim =
      "perfect => H2-number and H4-number; no square H2-number above 1; "
      "friendly => none of H, H2, H4 integral";
  out.bounds = "bound=" + std::to_string(bound);

  u64 perfect = 0, friendly = 0;
  scan_profiles(1, bound, [&](u64 n, const ProfileCell& c) {
    using detail::divides_scaled;
    const bool h2 = divides_scaled(n, c.d_star, c.sigma);
    if (c.sigma == 2 * n) {
      ++perfect;
      if (!h2) out.fail(n, "perfect but not an H2-number");
      if (!divides_scaled(n, c.d_bistar, c.sigma)) out.fail(n, "perfect but not an H4-number");
    }
    if (h2 && n > 1 && c.perfect_square()) out.fail(n, "square H2-number above 1");
    if (n > 1 && std::gcd(n, c.sigma) == 1) {
      ++friendly;
      if (detail::cell_harmonic(n, c)) out.fail(n, "friendly H-number");
      if (h2) out.fail(n, "friendly H2-number");
      if (divides_scaled(n, c.d_bistar, c.sigma)) out.fail(n, "friendly H4-number");
    }
  });
  out.count("perfect numbers", perfect);
  out.count("friendly numbers", friendly);
  return out;
}

// Classical background facts, checked at bound scale: harmonic n > 1 has
// omega >= 2 and the omega = 2 harmonic numbers are the even perfect
// numbers; 6 is the only balanced number; there is no k-harmonic number in
// (1, bound] for 2 <= k <= kmax; the bi-unitary perfect numbers are
// {6, 60, 90}; every unitary perfect number is unitary harmonic; every
// perfect number is harmonic.
inline VerificationOutcome verify_classical(u64 bound, u32 kmax) {
  if (bound < 1 || bound > kMaxScanBound) {
    throw std::invalid_argument("verify_classical: need 1 <= bound <= 10^10");
  }
  if (kmax < 2 || kmax > 8) {
    throw std::invalid_argument("verify_classical: need 2 <= kmax <= 8");
  }
  try {  // the k-harmonic divisibility operands must fit in 128 bits
    checked_mul(checked_pow(bound, kmax), static_cast<u128>(1) << 20);
  } catch (const std::overflow_error&) {
    throw std::invalid_argument("verify_classical: bound^kmax too large for exact arithmetic");
  }

  VerificationOutcome out;
  out.id = "classical";
  out.claim =
      "harmonic n>1 => omega >= 2, omega = 2 harmonic => even perfect; balanced = {6}; "
      "no k-harmonic in (1, bound]; bi-unitary perfect = {6, 60, 90}; "
      "unitary perfect => unitary harmonic; perfect => harmonic";
  out.bounds = "bound=" + std::to_string(bound) + " kmax=" + std::to_string(kmax);

  u64 harmonic_members = 0, perfect = 0, unitary_perfect = 0;
  std::vector<u64> balanced, biunitary_perfect;
  scan_profiles(1, bound, [&](u64 n, const ProfileCell& c) {
    using detail::divides_scaled;
    const bool h = detail::cell_harmonic(n, c);
    if (h && n > 1) {
      ++harmonic_members;
      const u32 om = detail::cell_omega(c);
      if (om < 2) out.fail(n, "harmonic above 1 with omega < 2");
      if (om == 2 && (n % 2 != 0 || c.sigma != 2 * n)) {
        out.fail(n, "omega = 2 harmonic number that is not an even perfect number");
      }
    }
    if (2 * c.sigma == n * c.d) balanced.push_back(n);
    if (c.sigma_bistar == 2 * n) biunitary_perfect.push_back(n);
    if (c.sigma_star == 2 * n) {
      ++unitary_perfect;
      if (!detail::cell_unitary_harmonic(n, c)) {
        out.fail(n, "unitary perfect but not unitary harmonic");
      }
    }
    if (c.sigma == 2 * n) {
      ++perfect;
      if (!h) out.fail(n, "perfect but not harmonic");
    }
  });

  if (bound >= 6 && balanced != std::vector<u64>{6}) {
    out.fail(balanced.empty() ? 0 : balanced.front(), "balanced members differ from {6}");
  }
  if (bound < 6 && !balanced.empty()) {
    out.fail(balanced.front(), "unexpected balanced member below 6");
  }
  {
    std::vector<u64> want;
    for (const u64 m : {6, 60, 90}) {
      if (m <= bound) want.push_back(m);
    }
    if (biunitary_perfect != want) {
      out.fail(biunitary_perfect.empty() ? 0 : biunitary_perfect.front(),
               "bi-unitary perfect members differ from {6, 60, 90}");
    }
  }

  // k-harmonic sweep: sigma_k(n) | n^k d(n) has no solutions in (1, bound].
  u64 k_harmonic_hits = 0;
  if (bound >= 2) {
    for_each_factorization(2, bound, [&](u64 n, std::span<const PrimePower> fs) {
      u64 d = 1;
      for (const auto& [p, e] : fs) d *= e + 1;
      for (u32 k = 2; k <= kmax; ++k) {
        u128 sk = 1;
        for (const auto& [p, e] : fs) sk = checked_mul(sk, sigma_k_prime_power(p, e, k));
        const u128 top = checked_mul(checked_pow(n, k), d);
        if (top % sk == 0) {
          ++k_harmonic_hits;
          out.fail(n, "k-harmonic number for k=" + std::to_string(k));
        }
      }
    });
  }

  out.count("harmonic members above 1", harmonic_members);
  out.count("balanced members", balanced.size());
  out.count("biunitary-perfect members", biunitary_perfect.size());
  out.count("unitary-perfect members", unitary_perfect);
  out.count("perfect members", perfect);
  out.count("k-harmonic hits", k_harmonic_hits);
  return out;
}

// The whole suite at one bound (theorem 4 additionally enumerates prime
// pairs up to its own symbolic bound).
inline std::vector<VerificationOutcome> verify_all(u64 bound, u32 kmax = 4) {
  std::vector<VerificationOutcome> outcomes;
  outcomes.push_back(verify_theorem1(std::min<u64>(bound, 1'000'000'000ull)));
  outcomes.push_back(verify_theorem2(bound));
  outcomes.push_back(verify_theorem3(std::min<u64>(bound, 1'000'000'000ull)));
  outcomes.push_back(verify_theorem4(1000, bound));
  outcomes.push_back(verify_theorem5(bound));
  outcomes.push_back(verify_theorem6(bound));
  outcomes.push_back(verify_theorem7(bound));
  outcomes.push_back(verify_classical(bound, kmax));
  return outcomes;
}

}  // namespace harmonic
