// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Input text, reference oracles and generators for adversarial inputs.
//
// Positions are 0-indexed everywhere: position i of a text of length n lies in
// [0, n). Texts described in 1-indexed notation (T[1..n]) shift by one.

#include <bit>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lce/common.hpp"

namespace lce {

/// Immutable input string over an integer alphabet.
class Text {
 public:
  explicit Text(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    detail::require(!symbols_.empty(), "Text: length must be at least 1");
  }

  static Text from_string(std::string_view s) {
    std::vector<Symbol> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) v[i] = static_cast<unsigned char>(s[i]);
    return Text(std::move(v));
  }

  /// Reads a file as raw bytes, one symbol per byte.
  static Text from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open text file: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_string(bytes);
  }

  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol max_symbol() const { return *std::max_element(symbols_.begin(), symbols_.end()); }

  /// Printable form for byte texts; symbols above 255 print as '?'.
  std::string to_string() const {
    std::string s(symbols_.size(), '?');
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] < 256) s[i] = static_cast<char>(symbols_[i]);
    }
    return s;
  }

  /// FNV-1a over the little-endian bytes of every symbol; binds dumps to texts.
  std::uint64_t checksum() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Symbol s : symbols_) {
      for (int b = 0; b < 8; ++b) {
        h ^= (s >> (8 * b)) & 0xff;
        h *= 0x100000001b3ULL;
      }
    }
    return h;
  }

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Longest common extension by direct left-to-right comparison.
inline std::size_t naive_lce(const Text& t, std::size_t i, std::size_t j) {
  const std::size_t n = t.size();
  detail::check_index(i, n, "naive_lce");
  detail::check_index(j, n, "naive_lce");
  std::size_t m = 0;
  while (i + m < n && j + m < n && t[i + m] == t[j + m]) ++m;
  return m;
}

/// Longest common suffix of the prefixes ending (inclusively) at i and j.
inline std::size_t naive_lce_r(const Text& t, std::size_t i, std::size_t j) {
  const std::size_t n = t.size();
  detail::check_index(i, n, "naive_lce_r");
  detail::check_index(j, n, "naive_lce_r");
  std::size_t m = 0;
  while (m <= i && m <= j && t[i - m] == t[j - m]) ++m;
  return m;
}

struct PeriodInfo {
  std::size_t period = 0;
  std::size_t length = 0;
  /// A string is periodic when its smallest period is at most half its length.
  bool periodic() const { return 2 * period <= length; }
  friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

/// True when p is a period of s, i.e. s[i] == s[i+p] wherever both exist.
inline bool has_period(std::span<const Symbol> s, std::size_t p) {
  for (std::size_t i = 0; i + p < s.size(); ++i) {
    if (s[i] != s[i + p]) return false;
  }
  return true;
}

/// Quadratic reference for the smallest period. Oracle only.
inline PeriodInfo brute_period(std::span<const Symbol> s) {
  detail::require(!s.empty(), "brute_period: empty input");
  for (std::size_t p = 1; p <= s.size(); ++p) {
    if (has_period(s, p)) return {p, s.size()};
  }
  return {s.size(), s.size()};  // unreachable: |s| is always a period
}

inline PeriodInfo brute_period(const std::vector<Symbol>& s) {
  return brute_period(std::span<const Symbol>(s));
}

/// Smallest period via the border array (failure function), O(|s|) time and
/// O(|s|) scratch.
inline std::size_t smallest_period(std::span<const Symbol> s) {
  detail::require(!s.empty(), "smallest_period: empty input");
  std::vector<std::size_t> border(s.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return s.size() - border.back();
}

// --- generators -------------------------------------------------------------

namespace gen {

/// Symbols drawn uniformly from an alphabet of size sigma. Alphabets of at
/// most 26 symbols use 'a'.., larger ones use the integers [0, sigma).
inline Text random(std::size_t n, std::uint64_t sigma, std::uint64_t seed) {
  detail::require(n >= 1, "random: n must be at least 1");
  detail::require(sigma >= 1, "random: sigma must be at least 1");
  std::mt19937_64 rng(seed);
  // Rejection keeps the draw uniform and independent of the standard
  // library's distribution implementation.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % sigma;
  const Symbol base = sigma <= 26 ? 'a' : 0;
  std::vector<Symbol> v(n);
  for (auto& s : v) {
    std::uint64_t r;
    do r = rng(); while (r >= limit);
    s = base + r % sigma;
  }
  return Text(std::move(v));
}

inline Text periodic(std::string_view motif, std::size_t n) {
  detail::require(n >= 1, "periodic: n must be at least 1");
  detail::require(!motif.empty(), "periodic: empty motif");
  std::vector<Symbol> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<unsigned char>(motif[i % motif.size()]);
  return Text(std::move(v));
}

/// Prefix of length n of the infinite Fibonacci word s_k = s_{k-1} s_{k-2}.
inline Text fibonacci(std::size_t n) {
  detail::require(n >= 1, "fibonacci: n must be at least 1");
  std::string prev = "a", cur = "ab";
  while (cur.size() < n) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Text::from_string(std::string_view(cur).substr(0, n));
}

inline Text thue_morse(std::size_t n) {
  detail::require(n >= 1, "thue_morse: n must be at least 1");
  std::vector<Symbol> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (std::popcount(i) & 1) ? 'b' : 'a';
  return Text(std::move(v));
}

inline Text constant(std::size_t n) {
  detail::require(n >= 1, "constant: n must be at least 1");
  return Text(std::vector<Symbol>(n, 'a'));
}

}  // namespace gen

/// Parses generator strings of the form "kind:key=value,...":
///   random:n=1024,sigma=2,seed=7   periodic:motif=ab,n=5   fibonacci:n=13
///   thue_morse:n=64                constant:n=4
inline Text generate(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string kind(spec.substr(0, colon));
  std::map<std::string, std::string> kv;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw PreconditionError("generator: expected key=value, got '" + std::string(item) + "'");
      }
      kv[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  auto number = [&](const std::string& key, std::optional<std::uint64_t> fallback = {}) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (fallback) return *fallback;
      throw PreconditionError("generator " + kind + ": missing '" + key + "'");
    }
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(it->second, &used, 0);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it->second.size() || it->second.empty()) {
      throw PreconditionError("generator " + kind + ": bad number for '" + key + "'");
    }
    return v;
  };
  if (kind == "random") return gen::random(number("n"), number("sigma", 2), number("seed", 0));
  if (kind == "periodic") {
    auto it = kv.find("motif");
    if (it == kv.end()) throw PreconditionError("generator periodic: missing 'motif'");
    return gen::periodic(it->second, number("n"));
  }
  if (kind == "fibonacci") return gen::fibonacci(number("n"));
  if (kind == "thue_morse") return gen::thue_morse(number("n"));
  if (kind == "constant") return gen::constant(number("n"));
  throw PreconditionError("unknown generator kind '" + kind + "'");
}

}  // namespace lce
