// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Karp-Rabin fingerprints.
//
//   phi(T[i..j]) = sum_{i <= k <= j} T[k] * x^(k-i)  mod p
//
// Prefix fingerprints are anchored at position 0: f(q) covers T[0..q) and is
// stored together with x^q, so f(0) = (value 0, exponent 1).

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lce/common.hpp"
#include "lce/modular.hpp"
#include "lce/text.hpp"

namespace lce {

class PhiParams {
 public:
  PhiParams(std::uint64_t p, std::uint64_t x) : p_(p), x_(x) {
    detail::require(p <= mod::kMaxModulus, "PhiParams: modulus wider than 61 bits");
    detail::require(mod::is_prime(p), "PhiParams: modulus is not prime");
    detail::require(x >= 1 && x < p, "PhiParams: base must lie in [1, p-1]");
    x_inv_ = mod::inverse(x, p);
  }

  std::uint64_t p() const { return p_; }
  std::uint64_t x() const { return x_; }
  std::uint64_t x_inv() const { return x_inv_; }

  friend bool operator==(const PhiParams&, const PhiParams&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t x_;
  std::uint64_t x_inv_;
};

struct PrefixFingerprint {
  std::uint64_t value = 0;
  std::uint64_t exponent = 1;
  std::size_t index = 0;
  friend bool operator==(const PrefixFingerprint&, const PrefixFingerprint&) = default;
};

/// Fingerprint of the inclusive range [i, j] by Horner's rule.
inline std::uint64_t phi_range(const PhiParams& phi, const Text& t, std::size_t i, std::size_t j) {
  detail::check_index(j, t.size(), "phi_range");
  detail::require(i <= j, "phi_range: empty or reversed range");
  const std::uint64_t p = phi.p();
  std::uint64_t r = 0;
  for (std::size_t k = j + 1; k-- > i;) r = mod::add(mod::mul(r, phi.x(), p), t[k] % p, p);
  return r;
}

/// f(q) computed from scratch; reference for the incremental paths.
inline PrefixFingerprint prefix_fingerprint(const PhiParams& phi, const Text& t, std::size_t q) {
  detail::require(q <= t.size(), "prefix_fingerprint: index past text end");
  PrefixFingerprint f;
  const std::uint64_t p = phi.p();
  for (std::size_t k = 0; k < q; ++k) {
    f.value = mod::add(f.value, mod::mul(t[k] % p, f.exponent, p), p);
    f.exponent = mod::mul(f.exponent, phi.x(), p);
  }
  f.index = q;
  return f;
}

/// f(index + a) from f(index) in |a| steps; backward steps use x^-1.
inline PrefixFingerprint fp_extend(const PhiParams& phi, PrefixFingerprint f, const Text& t,
                                   std::ptrdiff_t a) {
  const auto target = static_cast<std::ptrdiff_t>(f.index) + a;
  if (target < 0 || target > static_cast<std::ptrdiff_t>(t.size())) {
    throw std::out_of_range("fp_extend: resulting index outside [0, n]");
  }
  const std::uint64_t p = phi.p();
  for (; a > 0; --a, ++f.index) {
    f.value = mod::add(f.value, mod::mul(t[f.index] % p, f.exponent, p), p);
    f.exponent = mod::mul(f.exponent, phi.x(), p);
  }
  for (; a < 0; ++a) {
    --f.index;
    f.exponent = mod::mul(f.exponent, phi.x_inv(), p);
    f.value = mod::sub(f.value, mod::mul(t[f.index] % p, f.exponent, p), p);
  }
  return f;
}

/// phi(T[fi.index .. fj.index)) from two prefix fingerprints.
inline std::uint64_t fp_substring(const PhiParams& phi, const PrefixFingerprint& fi,
                                  const PrefixFingerprint& fj) {
  detail::require(fi.index < fj.index, "fp_substring: prefixes not ordered");
  const std::uint64_t p = phi.p();
  return mod::mul(mod::sub(fj.value, fi.value, p), mod::inverse(fi.exponent, p), p);
}

/// Equality of phi(T[a..a+c)) and phi(T[b..b+c)) given the four prefix
/// fingerprints, by cross-multiplying with the opposite exponent. Needs no
/// modular inverse, so it is O(1) word operations.
inline bool fp_equal(std::uint64_t p, const PrefixFingerprint& a, const PrefixFingerprint& a_end,
                     const PrefixFingerprint& b, const PrefixFingerprint& b_end) {
  const std::uint64_t lhs = mod::mul(mod::sub(a_end.value, a.value, p), b.exponent, p);
  const std::uint64_t rhs = mod::mul(mod::sub(b_end.value, b.value, p), a.exponent, p);
  return lhs == rhs;
}

/// Fingerprints of every length-l window, left to right, O(1) per step.
class RollingWindow {
 public:
  RollingWindow(const PhiParams& phi, const Text& t, std::size_t l)
      : phi_(phi), text_(&t), length_(l) {
    detail::require(l >= 1 && l <= t.size(), "sliding_window: length outside [1, n]");
    residue_ = phi_range(phi, t, 0, l - 1);
    top_ = mod::pow(phi.x(), l - 1, phi.p());
  }

  bool done() const { return position_ + length_ > text_->size(); }
  std::size_t position() const { return position_; }
  std::uint64_t residue() const { return residue_; }

  void advance() {
    const std::uint64_t p = phi_.p();
    const auto& t = *text_;
    ++position_;
    if (done()) return;
    residue_ = mod::mul(mod::sub(residue_, t[position_ - 1] % p, p), phi_.x_inv(), p);
    residue_ = mod::add(residue_, mod::mul(t[position_ + length_ - 1] % p, top_, p), p);
  }

 private:
  PhiParams phi_;
  const Text* text_;
  std::size_t length_;
  std::size_t position_ = 0;
  std::uint64_t residue_ = 0;
  std::uint64_t top_ = 1;
};

/// All (position, residue) pairs of the length-l windows.
inline std::vector<std::pair<std::size_t, std::uint64_t>> sliding_window(const PhiParams& phi,
                                                                         const Text& t,
                                                                         std::size_t l) {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (RollingWindow w(phi, t, l); !w.done(); w.advance()) out.emplace_back(w.position(), w.residue());
  return out;
}

/// Random Karp-Rabin function for a text of length n: p is the smallest prime
/// at or above n^(4+c), capped at 2^61 - 1, and x is uniform in [1, p-1].
inline PhiParams pick_random_phi(std::size_t n, double c, std::uint64_t seed) {
  detail::require(n >= 1, "pick_random_phi: n must be at least 1");
  detail::require(c >= 0, "pick_random_phi: c must be non-negative");
  const long double target = std::pow(static_cast<long double>(n), 4.0L + c);
  std::uint64_t p = mod::kMaxModulus;
  if (target < static_cast<long double>(mod::kMaxModulus)) {
    p = mod::next_prime(static_cast<std::uint64_t>(std::ceil(target)));
    if (p > mod::kMaxModulus) p = mod::kMaxModulus;
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t range = p - 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t r;
  do r = rng(); while (r >= limit);
  return PhiParams(p, 1 + r % range);
}

}  // namespace lce
