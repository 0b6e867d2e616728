#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "harmonic/divisors.hpp"
#include "harmonic/multiplicative.hpp"

using harmonic::u128;
using harmonic::u64;

TEST_CASE("greatest common unitary divisor frozen values") {
  CHECK_THROWS_AS(harmonic::gcud(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(harmonic::gcud(5, 0), std::invalid_argument);
  CHECK(harmonic::gcud(1, 1) == 1);
  CHECK(harmonic::gcud(4, 4) == 4);
  CHECK(harmonic::gcud(8, 4) == 1);    // 2 divides both but is unitary in neither
  CHECK(harmonic::gcud(2, 8) == 1);
  CHECK(harmonic::gcud(12, 18) == 1);  // gcd 6, but 2 and 3 are non-unitary on one side
  CHECK(harmonic::gcud(12, 45) == 1);  // 3 is unitary in 12 but not in 45
  CHECK(harmonic::gcud(60, 90) == 5);  // common unitary divisors are 1 and 5
  CHECK(harmonic::gcud(1, 100) == 1);
  CHECK(harmonic::gcud(7, 11) == 1);
  CHECK(harmonic::gcud(36, 48) == 1);
}

TEST_CASE("gcud agrees with the brute-force definition") {
  // gcud(a,b) = largest d with d|a, gcd(d,a/d)=1, d|b, gcd(d,b/d)=1.
  auto brute = [](u64 a, u64 b) {
    u64 best = 1;
    for (u64 d = 1; d <= a && d <= b; ++d) {
      if (a % d || b % d) continue;
      if (std::gcd(d, a / d) == 1 && std::gcd(d, b / d) == 1) best = d;
    }
    return best;
  };
  for (u64 a = 1; a <= 60; ++a)
    for (u64 b = 1; b <= 60; ++b) CHECK(harmonic::gcud(a, b) == brute(a, b));
}

TEST_CASE("divisor lists of the three kinds") {
  CHECK_THROWS_AS(harmonic::divisors(0), std::invalid_argument);
  CHECK(harmonic::divisors(1).values == std::vector<u64>{1});
  CHECK(harmonic::divisors(12).values == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(harmonic::unitary_divisors(12).values == std::vector<u64>{1, 3, 4, 12});
  CHECK(harmonic::biunitary_divisors(16).values == std::vector<u64>{1, 2, 8, 16});
  CHECK(harmonic::biunitary_divisors(12).values == std::vector<u64>{1, 3, 4, 12});
  CHECK(harmonic::unitary_divisors(45).values == std::vector<u64>{1, 5, 9, 45});
  // For p^2 the bi-unitary divisors are just {1, p^2}, so 45 has four.
  CHECK(harmonic::biunitary_divisors(45).values == std::vector<u64>{1, 5, 9, 45});
}

TEST_CASE("divisor lists are consistent with the arithmetic functions") {
  for (u64 n = 1; n <= 2000; ++n) {
    const auto f = harmonic::factorize(n);
    const auto all = harmonic::divisors(n).values;
    const auto uni = harmonic::unitary_divisors(n).values;
    const auto bi = harmonic::biunitary_divisors(n).values;

    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::is_sorted(uni.begin(), uni.end()));
    CHECK(std::is_sorted(bi.begin(), bi.end()));

    CHECK(all.size() == harmonic::d_count(f));
    CHECK(uni.size() == harmonic::d_star(f));
    CHECK(bi.size() == harmonic::d_bistar(f));

    auto sum = [](const std::vector<u64>& v) {
      return std::accumulate(v.begin(), v.end(), u128{0});
    };
    CHECK(sum(all) == harmonic::sigma(f));
    CHECK(sum(uni) == harmonic::sigma_star(f));
    CHECK(sum(bi) == harmonic::sigma_bistar(f));

    // Every bi-unitary divisor satisfies the defining coprimality condition.
    for (u64 d : bi) {
      CHECK(n % d == 0);
      CHECK(harmonic::gcud(d, n / d) == 1);
    }
    // Unitary divisors are bi-unitary, bi-unitary divisors are divisors.
    CHECK(std::includes(all.begin(), all.end(), bi.begin(), bi.end()));
    CHECK(std::includes(bi.begin(), bi.end(), uni.begin(), uni.end()));
  }
}
