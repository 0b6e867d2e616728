#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "harmonic/int128.hpp"

using harmonic::u128;
using harmonic::u64;

TEST_CASE("u128 decimal rendering") {
  CHECK(harmonic::to_string(u128{0}) == "0");
  CHECK(harmonic::to_string(u128{1}) == "1");
  CHECK(harmonic::to_string(u128{9999999999ull}) == "9999999999");
  const u128 two64 = static_cast<u128>(1) << 64;
  CHECK(harmonic::to_string(two64) == "18446744073709551616");
  CHECK(harmonic::to_string(harmonic::U128_MAX) ==
        "340282366920938463463374607431768211455");
}

TEST_CASE("checked addition and multiplication throw on wraparound") {
  CHECK(harmonic::checked_add(harmonic::U128_MAX - 1, 1) == harmonic::U128_MAX);
  CHECK_THROWS_AS(harmonic::checked_add(harmonic::U128_MAX, 1), std::overflow_error);

  const u128 two64 = static_cast<u128>(1) << 64;
  CHECK(harmonic::checked_mul(two64, two64 - 1) ==
        (static_cast<u128>(1) << 64) * ((static_cast<u128>(1) << 64) - 1));
  CHECK_THROWS_AS(harmonic::checked_mul(two64, two64), std::overflow_error);
  CHECK(harmonic::checked_mul(0, harmonic::U128_MAX) == 0);
}

TEST_CASE("checked exponentiation") {
  CHECK(harmonic::checked_pow(2, 0) == 1);
  CHECK(harmonic::checked_pow(2, 127) == static_cast<u128>(1) << 127);
  CHECK_THROWS_AS(harmonic::checked_pow(2, 128), std::overflow_error);
  CHECK(harmonic::checked_pow(10, 38) ==
        harmonic::checked_mul(harmonic::checked_pow(10, 19), harmonic::checked_pow(10, 19)));
  CHECK_THROWS_AS(harmonic::checked_pow(10, 39), std::overflow_error);
  CHECK(harmonic::checked_pow(1, 4000000000u) == 1);
}

TEST_CASE("binary gcd matches Euclid on both widths") {
  CHECK(harmonic::binary_gcd<u64>(0, 0) == 0);
  CHECK(harmonic::binary_gcd<u64>(0, 7) == 7);
  CHECK(harmonic::binary_gcd<u64>(12, 18) == 6);
  CHECK(harmonic::binary_gcd<u64>(1071, 462) == 21);
  CHECK(harmonic::binary_gcd<u64>(u64{1} << 40, (u64{1} << 20) * 3) == u64{1} << 20);
  const u128 a = harmonic::checked_pow(2, 100);
  const u128 b = harmonic::checked_mul(harmonic::checked_pow(2, 60), 3);
  CHECK(harmonic::binary_gcd<u128>(a, b) == harmonic::checked_pow(2, 60));
  CHECK(harmonic::binary_gcd<u128>(harmonic::checked_pow(3, 50), harmonic::checked_pow(3, 30)) ==
        harmonic::checked_pow(3, 30));
}

TEST_CASE("integer square root floors exactly at boundaries") {
  CHECK(harmonic::isqrt(0) == 0);
  CHECK(harmonic::isqrt(1) == 1);
  CHECK(harmonic::isqrt(3) == 1);
  CHECK(harmonic::isqrt(4) == 2);
  CHECK(harmonic::isqrt(99) == 9);
  CHECK(harmonic::isqrt(100) == 10);
  const u64 m = 4294967295ull;  // 2^32 - 1
  CHECK(harmonic::isqrt(m * m) == m);
  CHECK(harmonic::isqrt(m * m - 1) == m - 1);
  CHECK(harmonic::isqrt(m * m + 2 * m) == m);  // largest n with floor sqrt = m
  CHECK(harmonic::isqrt(~u64{0}) == m);
  for (u64 r : {2ull, 3ull, 1000003ull, 3037000499ull}) {
    CHECK(harmonic::isqrt(r * r) == r);
    CHECK(harmonic::isqrt(r * r - 1) == r - 1);
  }
}

TEST_CASE("trailing zero counts") {
  CHECK(harmonic::trailing_zeros(u64{1}) == 0);
  CHECK(harmonic::trailing_zeros(u64{96}) == 5);
  CHECK(harmonic::trailing_zeros(u64{1} << 63) == 63);
  CHECK(harmonic::trailing_zeros(static_cast<u128>(1) << 100) == 100);
  CHECK(harmonic::trailing_zeros(static_cast<u128>(3) << 64) == 64);
}
