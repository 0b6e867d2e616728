#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "harmonic/int128.hpp"

namespace harmonic {

// Exact non-negative rational with 128-bit numerator and denominator,
// always stored fully reduced.  Arithmetic cross-reduces before multiplying
// and throws std::overflow_error if a result still cannot be represented;
// nothing is ever rounded.
struct ExactRatio {
  u128 num = 0;
  u128 den = 1;

  ExactRatio() = default;

  ExactRatio(u128 n, u128 d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("ExactRatio: zero denominator");
    const u128 g = binary_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }

  // Floor and exactness; handy when printing.
  u128 floor() const { return num / den; }

  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;

  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
    const u128 g1 = binary_gcd(a.num, b.den);
    const u128 g2 = binary_gcd(b.num, a.den);
    ExactRatio r;
    r.num = checked_mul(a.num / g1, b.num / g2, "ExactRatio: numerator overflow");
    r.den = checked_mul(a.den / g2, b.den / g1, "ExactRatio: denominator overflow");
    return r;
  }

  friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
    if (b.num == 0) throw std::domain_error("ExactRatio: division by zero");
    return a * ExactRatio(b.den, b.num);
  }

  std::string str() const { return to_string(num) + "/" + to_string(den); }
};

}  // namespace harmonic
