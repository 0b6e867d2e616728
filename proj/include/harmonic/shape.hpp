#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/factorization.hpp"

namespace harmonic {

namespace detail {

// nth_prime[e] for small e, used to encode an exponent multiset as a
// product of primes: multisets compare equal exactly when the products do.
// Exponents of 64-bit integers never exceed 63.
inline constexpr std::array<u32, 64> kExponentPrime = [] {
  std::array<u32, 64> t{};
  u32 count = 0;
  for (u32 c = 2; count < 63; ++c) {
    bool prime = true;
    for (u32 d = 2; d * d <= c; ++d) {
      if (c % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) t[++count] = c;
  }
  return t;
}();

}  // namespace detail

// An exponent multiset such as {2, 2, 1}: matches any n whose canonical
// factorization has exactly these exponents, over arbitrary distinct
// primes.  Stored sorted descending, the conventional way to write them.
struct ShapePattern {
  std::vector<u32> exponents;

  static ShapePattern of(std::vector<u32> exps) {
    if (exps.empty()) throw std::invalid_argument("ShapePattern: empty exponent list");
    for (const u32 e : exps) {
      if (e == 0 || e > 63) throw std::invalid_argument("ShapePattern: exponents must be in [1, 63]");
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
    ShapePattern s;
    s.exponents = std::move(exps);
    return s;
  }

  // Parses "2,2,1" (whitespace around the commas is ignored).
  static ShapePattern parse(std::string_view text) {
    std::string compact;
    for (const char c : text) {
      if (c == ' ' || c == '\t') continue;
      compact += c;
    }
    std::vector<u32> exps;
    u64 cur = 0;
    bool have_digit = false;
    for (const char c : compact) {
      if (c >= '0' && c <= '9') {
        cur = cur * 10 + static_cast<u64>(c - '0');
        if (cur > 63) throw std::invalid_argument("ShapePattern: exponent out of range");
        have_digit = true;
      } else if (c == ',') {
        if (!have_digit) throw std::invalid_argument("ShapePattern: malformed exponent list");
        exps.push_back(static_cast<u32>(cur));
        cur = 0;
        have_digit = false;
      } else {
        throw std::invalid_argument("ShapePattern: unexpected character in exponent list");
      }
    }
    if (!have_digit) throw std::invalid_argument("ShapePattern: malformed exponent list");
    exps.push_back(static_cast<u32>(cur));
    return of(std::move(exps));
  }

  // Multiset key; equal keys <=> equal exponent multisets.
  u32 key() const {
    u64 k = 1;
    for (const u32 e : exponents) k *= detail::kExponentPrime[e];
    if (k > 0xffffffffull) throw std::overflow_error("ShapePattern: key overflow");
    return static_cast<u32>(k);
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(exponents[i]);
    }
    return s;
  }

  friend bool operator==(const ShapePattern&, const ShapePattern&) = default;
};

inline u32 shape_key_of(const Factorization& f) {
  u64 k = 1;
  for (const auto& [p, e] : f.factors) k *= detail::kExponentPrime[e];
  if (k > 0xffffffffull) throw std::overflow_error("shape_key_of: key overflow");
  return static_cast<u32>(k);
}

inline bool shape_match(const Factorization& f, const ShapePattern& shape) {
  if (f.factors.size() != shape.exponents.size()) return false;
  return shape_key_of(f) == shape.key();
}

}  // namespace harmonic
