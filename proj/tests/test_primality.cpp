#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "harmonic/primes.hpp"

using harmonic::u32;
using harmonic::u64;

TEST_CASE("primality on small and adversarial inputs") {
  CHECK_FALSE(harmonic::is_prime(0));
  CHECK_FALSE(harmonic::is_prime(1));
  CHECK(harmonic::is_prime(2));
  CHECK(harmonic::is_prime(3));
  CHECK_FALSE(harmonic::is_prime(4));
  CHECK(harmonic::is_prime(65521));
  CHECK_FALSE(harmonic::is_prime(65533));  // 59 * 11 * 101

  // Fermat/strong pseudoprimes that defeat weak witness sets.
  CHECK_FALSE(harmonic::is_prime(341));        // 11 * 31, Fermat psp base 2
  CHECK_FALSE(harmonic::is_prime(561));        // Carmichael
  CHECK_FALSE(harmonic::is_prime(25326001));   // strong psp bases 2,3,5
  CHECK_FALSE(harmonic::is_prime(3215031751ull));  // strong psp bases 2,3,5,7
  CHECK_FALSE(harmonic::is_prime(3825123056546413051ull));  // strong psp bases 2..23

  CHECK(harmonic::is_prime(1000000007ull));
  CHECK(harmonic::is_prime(1000000009ull));
  CHECK(harmonic::is_prime(2305843009213693951ull));  // 2^61 - 1
  CHECK(harmonic::is_prime(18446744073709551557ull)); // largest prime < 2^64
  CHECK_FALSE(harmonic::is_prime(18446744073709551615ull));  // 2^64 - 1
  CHECK_FALSE(harmonic::is_prime(2305843009213693953ull));   // (2^61-1) + 2
}

TEST_CASE("prime sieve counts match known pi(x)") {
  CHECK(harmonic::primes_up_to(1).empty());
  CHECK(harmonic::primes_up_to(2) == std::vector<u32>{2});
  CHECK(harmonic::primes_up_to(10).size() == 4);
  CHECK(harmonic::primes_up_to(100).size() == 25);
  CHECK(harmonic::primes_up_to(1000).size() == 168);
  CHECK(harmonic::primes_up_to(1000000).size() == 78498);
  const auto primes = harmonic::primes_up_to(1000);
  for (u32 p : primes) CHECK(harmonic::is_prime(p));
}

TEST_CASE("segmented prime iteration agrees with the sieve") {
  std::vector<u64> seen;
  harmonic::for_each_prime(2, 1000, [&](u64 p) { seen.push_back(p); });
  const auto direct = harmonic::primes_up_to(1000);
  REQUIRE(seen.size() == direct.size());
  for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == direct[i]);

  seen.clear();
  harmonic::for_each_prime(90, 113, [&](u64 p) { seen.push_back(p); });
  CHECK(seen == std::vector<u64>{97, 101, 103, 107, 109, 113});

  // Window straddling a segment boundary high above 2^31.
  seen.clear();
  harmonic::for_each_prime(3000000000ull, 3000000100ull, [&](u64 p) { seen.push_back(p); });
  for (u64 p : seen) CHECK(harmonic::is_prime(p));
  u64 brute = 0;
  for (u64 n = 3000000000ull; n <= 3000000100ull; ++n) brute += harmonic::is_prime(n) ? 1 : 0;
  CHECK(seen.size() == brute);
}
