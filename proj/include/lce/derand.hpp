// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Deterministic choice of a fingerprint tuple that is collision-free on the
// comparison set
//
//   C = {(T[a, a+l), T[i, i+l)) : a in A, l in L, i in [0, n-l]}.
//
// B(f) counts the pairs of C on which f agrees; B(id) counts the genuinely
// equal ones, and f is collision-free on C iff B(f) = B(id). Components are
// added one at a time, each time taking the first base x that cuts the excess
// B - B(id) by a factor of at least n^eps. Such an x exists because two
// distinct windows of length l agree for at most l - 1 bases, so the average
// excess over all bases shrinks by l/p <= n^-eps.

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lce/baseline.hpp"
#include "lce/common.hpp"
#include "lce/fingerprint.hpp"
#include "lce/mc.hpp"
#include "lce/modular.hpp"
#include "lce/text.hpp"

namespace lce {

/// B(id): pairs of C whose windows are equal.
inline std::uint64_t count_b_id(const Text& t, std::span<const std::size_t> positions,
                                std::span<const std::size_t> lengths, const BaselineIndex& oracle) {
  const std::size_t n = t.size();
  std::uint64_t total = 0;
  for (std::size_t l : lengths) {
    if (l == 0 || l > n) continue;
    for (std::size_t a : positions) {
      if (a + l > n) continue;
      for (std::size_t i = 0; i + l <= n; ++i) total += oracle.forward().lce(a, i) >= l ? 1 : 0;
    }
  }
  return total;
}

/// |C|, which is also B of the empty tuple.
inline std::uint64_t comparison_set_size(const Text& t, std::span<const std::size_t> positions,
                                         std::span<const std::size_t> lengths) {
  const std::size_t n = t.size();
  std::uint64_t total = 0;
  for (std::size_t l : lengths) {
    if (l == 0 || l > n) continue;
    std::uint64_t anchors = 0;
    for (std::size_t a : positions) anchors += a + l <= n ? 1 : 0;
    total += anchors * (n - l + 1);
  }
  return total;
}

namespace derand_detail {

struct TupleHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = v.size();
    for (auto x : v) h = detail::mix64(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace derand_detail

/// B(f) for a tuple f, processing A in chunks of at most `chunk` anchors so
/// that the multiset never holds more than `chunk` entries.
inline std::uint64_t count_b_phi(const Text& t, std::span<const std::size_t> positions,
                                 std::span<const std::size_t> lengths, std::span<const PhiParams> tuple,
                                 std::size_t chunk) {
  detail::require(chunk >= 1, "count_b_phi: space budget must be positive");
  if (tuple.empty()) return comparison_set_size(t, positions, lengths);
  const std::size_t n = t.size();
  const std::size_t k = tuple.size();
  std::uint64_t total = 0;
  std::vector<std::uint64_t> key(k);

  for (std::size_t l : lengths) {
    if (l == 0 || l > n) continue;
    for (std::size_t begin = 0; begin < positions.size(); begin += chunk) {
      const auto part = positions.subspan(begin, std::min(chunk, positions.size() - begin));
      std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, derand_detail::TupleHash> multiset;
      for (std::size_t a : part) {
        if (a + l > n) continue;
        for (std::size_t c = 0; c < k; ++c) key[c] = phi_range(tuple[c], t, a, a + l - 1);
        ++multiset[key];
      }
      if (multiset.empty()) continue;
      std::vector<RollingWindow> windows;
      for (const auto& phi : tuple) windows.emplace_back(phi, t, l);
      while (!windows.front().done()) {
        for (std::size_t c = 0; c < k; ++c) key[c] = windows[c].residue();
        if (const auto it = multiset.find(key); it != multiset.end()) total += it->second;
        for (auto& w : windows) w.advance();
      }
    }
  }
  return total;
}

struct DerandRound {
  std::uint64_t x;
  std::uint64_t bases_tried;
  std::uint64_t b_before;
  std::uint64_t b_after;
};

struct DerandResult {
  std::vector<PhiParams> tuple;
  std::vector<DerandRound> rounds;
  std::uint64_t b_id = 0;
  std::uint64_t comparisons = 0;  // |C|
  std::uint64_t b_final = 0;
  std::size_t max_components = 0;  // ceil(4 / eps)
};

/// Smallest prime at or above max(L) * n^eps.
inline std::uint64_t derand_prime(std::size_t n, std::size_t max_length, double eps) {
  const long double target = static_cast<long double>(max_length) * std::pow(static_cast<long double>(n), eps);
  detail::require(target < static_cast<long double>(mod::kMaxModulus), "derandomize: modulus too wide");
  const std::uint64_t p = mod::next_prime(static_cast<std::uint64_t>(std::ceil(target)));
  detail::require(p <= mod::kMaxModulus, "derandomize: modulus too wide");
  return p;
}

/// Builds the tuple one component per round. Stops early once B equals B(id)
/// but always returns at least one component.
inline DerandResult derandomize(const Text& t, std::span<const std::size_t> positions,
                                std::span<const std::size_t> lengths, double eps, std::size_t chunk,
                                const BaselineIndex& oracle) {
  detail::require(eps > 0 && eps < 1, "derandomize: eps must lie in (0, 1)");
  detail::require(!lengths.empty(), "derandomize: empty length set");
  const std::size_t n = t.size();
  std::size_t max_length = 0;
  for (std::size_t l : lengths) max_length = std::max(max_length, l);
  DerandResult result;
  const std::uint64_t p = derand_prime(n, std::max<std::size_t>(max_length, 1), eps);
  result.comparisons = comparison_set_size(t, positions, lengths);
  if (result.comparisons > 0 && t.max_symbol() >= p) {
    throw PreconditionError("derandomize: alphabet not below the modulus");
  }
  result.b_id = count_b_id(t, positions, lengths, oracle);
  result.max_components = static_cast<std::size_t>(std::ceil(4.0 / eps - 1e-9));
  const long double shrink = std::pow(static_cast<long double>(n), eps);

  std::uint64_t b = result.comparisons;
  while (result.tuple.size() < result.max_components) {
    if (!result.tuple.empty() && b == result.b_id) break;
    const long double budget = static_cast<long double>(b - result.b_id) / shrink;
    bool accepted = false;
    for (std::uint64_t x = 1; x < p; ++x) {
      result.tuple.emplace_back(p, x);
      const std::uint64_t b_new = count_b_phi(t, positions, lengths, result.tuple, chunk);
      if (static_cast<long double>(b_new - result.b_id) <= budget) {
        result.rounds.push_back({x, x, b, b_new});
        b = b_new;
        accepted = true;
        break;
      }
      result.tuple.pop_back();
    }
    if (!accepted) throw std::logic_error("derandomize: no base meets the decrease bound");
  }
  result.b_final = b;
  if (b != result.b_id) throw std::logic_error("derandomize: tuple is not collision-free");
  return result;
}

/// The comparison set of the Monte Carlo query for text length n and
/// (rounded) tau: anchors at block starts, lengths 2^l * tau.
struct McComparisonSet {
  std::vector<std::size_t> positions;
  std::vector<std::size_t> lengths;
};

inline McComparisonSet mc_comparison_set(std::size_t n, std::size_t tau) {
  const BitGeometry g(n, tau);
  McComparisonSet set;
  for (std::size_t a = 0; a < n; a += g.tau()) set.positions.push_back(a);
  for (unsigned l = 0; l < g.lg_blocks(); ++l) {
    if ((g.tau() << l) <= n) set.lengths.push_back(g.tau() << l);
  }
  // With a single block no comparison can succeed; one length keeps the
  // modulus and tuple well defined.
  if (set.lengths.empty()) set.lengths.push_back(std::min(g.tau(), n));
  return set;
}

struct DerandMc {
  McStructure structure;
  DerandResult derand;
};

/// Deterministic Monte Carlo structure; chunk 0 means |A|.
inline DerandMc build_derand_mc(const Text& t, std::size_t tau, double eps, const BaselineIndex& oracle,
                                std::size_t chunk = 0) {
  detail::require(tau >= 1 && tau <= t.size(), "build_derand_mc: tau outside [1, n]");
  const auto set = mc_comparison_set(t.size(), tau);
  if (chunk == 0) chunk = set.positions.size();
  auto result = derandomize(t, set.positions, set.lengths, eps, chunk, oracle);
  auto structure = McStructure::build(t, tau, result.tuple);
  return {std::move(structure), std::move(result)};
}

}  // namespace lce
