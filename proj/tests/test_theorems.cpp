#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "harmonic/theorems.hpp"

using harmonic::VerificationOutcome;
using harmonic::u64;

namespace {

void expect_pass(const VerificationOutcome& o) {
  INFO(o.id << " bounds=" << o.bounds);
  if (o.counterexample) {
    INFO("counterexample n=" << o.counterexample->first << ": " << o.counterexample->second);
  }
  CHECK(o.passed);
  CHECK_FALSE(o.id.empty());
  CHECK_FALSE(o.claim.empty());
  CHECK_FALSE(o.bounds.empty());
}

u64 witness(const VerificationOutcome& o, const std::string& key) {
  for (const auto& [k, v] : o.witness_counts) {
    if (k == key) return v;
  }
  return static_cast<u64>(-1);
}

}  // namespace

TEST_CASE("integrality splitting of the bi-unitary mean") {
  const auto o = harmonic::verify_theorem1(100000);
  expect_pass(o);
  // 6, 60 and 90 are the bi-unitary 2-perfect witnesses below 10^5.
  CHECK(witness(o, "biunitary-2-perfect") == 3);
}

TEST_CASE("odd-exponent collapse and squarefree classification") {
  const auto o = harmonic::verify_theorem2(100000);
  expect_pass(o);
}

TEST_CASE("no prime power has an integral bi-unitary mean") {
  expect_pass(harmonic::verify_theorem3(1000000));
}

TEST_CASE("shape exclusions and the lone p^2*q member") {
  const auto o = harmonic::verify_theorem4(1000, 1000000);
  expect_pass(o);
  CHECK(witness(o, "scan members of shape 1,2") == 1);
}

TEST_CASE("mean-split product identity across a range") {
  expect_pass(harmonic::verify_theorem5(20000));
  expect_pass(harmonic::verify_theorem5(9));
}

TEST_CASE("quotient integrality among the nine means") {
  expect_pass(harmonic::verify_theorem6(20000));
}

TEST_CASE("mean-variant implications for perfect, square, friendly") {
  expect_pass(harmonic::verify_theorem7(100000));
}

TEST_CASE("classical facts bundle") {
  const auto o = harmonic::verify_classical(100000, 4);
  expect_pass(o);
  CHECK_THROWS_AS(harmonic::verify_classical(100000, 1), std::invalid_argument);
  CHECK_THROWS_AS(harmonic::verify_classical(100000, 9), std::invalid_argument);
}

TEST_CASE("the full battery passes at 10^4") {
  const auto outcomes = harmonic::verify_all(10000);
  CHECK(outcomes.size() == 8);
  for (const auto& o : outcomes) expect_pass(o);
}
