// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Reference computations for the tests, written from the definitions and
// sharing no code with the library.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Symbols = std::vector<std::uint64_t>;

inline Symbols symbols(const std::string& s) { return Symbols(s.begin(), s.end()); }

inline std::size_t lce(const Symbols& t, std::size_t i, std::size_t j) {
  std::size_t m = 0;
  while (i + m < t.size() && j + m < t.size() && t[i + m] == t[j + m]) ++m;
  return m;
}

/// Longest common suffix of t[..i] and t[..j], inclusive ends.
inline std::size_t lce_r(const Symbols& t, std::size_t i, std::size_t j) {
  std::size_t m = 0;
  while (m <= i && m <= j && t[i - m] == t[j - m]) ++m;
  return m;
}

inline bool is_period(const Symbols& s, std::size_t p) {
  for (std::size_t i = 0; i + p < s.size(); ++i) {
    if (s[i] != s[i + p]) return false;
  }
  return true;
}

inline std::size_t period(const Symbols& s) {
  for (std::size_t p = 1; p < s.size(); ++p) {
    if (is_period(s, p)) return p;
  }
  return s.size();
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

/// sum_{k} t[i+k] * x^k mod p over t[i, i+len), term by term.
inline std::uint64_t phi(const Symbols& t, std::size_t i, std::size_t len, std::uint64_t p, std::uint64_t x) {
  std::uint64_t sum = 0, power = 1 % p;
  for (std::size_t k = 0; k < len; ++k) {
    sum = (sum + mulmod(t[i + k] % p, power, p)) % p;
    power = mulmod(power, x, p);
  }
  return sum;
}

inline std::uint64_t powmod(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (std::uint64_t k = 0; k < e; ++k) r = mulmod(r, x, p);
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::string fibonacci_word(std::size_t n) {
  std::string a = "a", b = "ab";
  while (b.size() < n) {
    std::string next = b + a;
    a = std::move(b);
    b = std::move(next);
  }
  return n <= 1 ? a.substr(0, n) : b.substr(0, n);
}

inline std::size_t trailing_zeros(std::uint64_t v, std::size_t width) {
  std::size_t z = 0;
  while (z < width && ((v >> z) & 1) == 0) ++z;
  return z;
}

}  // namespace oracle
