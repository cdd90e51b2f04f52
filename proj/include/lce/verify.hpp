// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Las Vegas certification of fingerprint functions for the Monte Carlo
// structure. Every comparison a query makes has the form
//
//   phi(T[k*tau, k*tau + 2^l*tau)) =? phi(T[j, j + 2^l*tau))
//
// so for each l the verifier hashes the block-aligned windows, slides a window
// over every j and compares the substrings of every residue match directly.

#include <algorithm>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lce/baseline.hpp"
#include "lce/common.hpp"
#include "lce/fingerprint.hpp"
#include "lce/mc.hpp"
#include "lce/text.hpp"

namespace lce {

struct CollisionWitness {
  std::size_t block_position;  // k * tau
  std::size_t position;        // j
  std::size_t length;          // 2^l * tau
};

struct LevelStats {
  std::size_t length = 0;
  std::uint64_t candidates = 0;        // residue matches compared directly
  std::uint64_t symbols_compared = 0;  // symbols read by those comparisons
};

struct VerificationReport {
  std::optional<CollisionWitness> collision;
  std::vector<LevelStats> levels;
  bool collision_free() const { return !collision.has_value(); }
};

/// Thrown when build_las_vegas runs out of trials.
class VerificationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace verify_detail {

inline std::uint64_t tuple_key(std::span<const std::uint64_t> residues) {
  std::uint64_t h = 0;
  for (auto r : residues) h = detail::mix64(h ^ r);
  return h;
}

}  // namespace verify_detail

/// Checks phi (or a tuple of functions, all components must agree for a
/// match) on every comparison the query algorithm can make. When `oracle` is
/// given, residue matches are confirmed with its LCE instead of a symbol scan.
inline VerificationReport verify_phi(const Text& t, std::size_t tau, std::span<const PhiParams> phis,
                                     const BaselineIndex* oracle = nullptr) {
  detail::require(tau >= 1 && tau <= t.size(), "verify_phi: tau outside [1, n]");
  detail::require(!phis.empty(), "verify_phi: no fingerprint function");
  const BitGeometry g(t.size(), tau);
  const std::size_t n = t.size();
  const std::size_t k_count = phis.size();
  VerificationReport report;

  for (unsigned l = 0; l < g.lg_blocks(); ++l) {
    const std::size_t len = g.tau() << l;
    if (len > n) break;
    LevelStats level{len, 0, 0};

    // Windows advance in lockstep, one per component.
    std::vector<RollingWindow> windows;
    for (const auto& phi : phis) windows.emplace_back(phi, t, len);
    std::vector<std::uint64_t> residues(k_count);
    auto current = [&] {
      for (std::size_t c = 0; c < k_count; ++c) residues[c] = windows[c].residue();
      return verify_detail::tuple_key(residues);
    };
    auto advance_to = [&](std::size_t pos) {
      while (windows.front().position() < pos) {
        for (auto& w : windows) w.advance();
      }
    };

    // One representative block per residue tuple. Keeping only the first is
    // complete: a colliding block k is either found against its
    // representative, or equals it and is found through the sliding pass.
    struct Rep {
      std::size_t position;
      std::vector<std::uint64_t> residues;
    };
    std::unordered_map<std::uint64_t, std::vector<Rep>> table;
    for (std::size_t start = 0; start + len <= n; start += g.tau()) {
      advance_to(start);
      const auto key = current();
      auto& bucket = table[key];
      bool known = false;
      for (const auto& rep : bucket) known = known || rep.residues == residues;
      if (!known) bucket.push_back({start, residues});
    }

    windows.clear();
    for (const auto& phi : phis) windows.emplace_back(phi, t, len);
    // Compares window j against the representatives sharing its residues.
    auto matches_all = [&](std::size_t j) {
      const auto it = table.find(current());
      if (it == table.end()) return true;
      for (const auto& rep : it->second) {
        if (rep.residues != residues || rep.position == j) continue;
        ++level.candidates;
        bool equal;
        if (oracle != nullptr) {
          equal = oracle->forward().lce(rep.position, j) >= len;
        } else {
          const auto s = t.symbols();
          std::size_t m = 0;
          while (m < len && s[rep.position + m] == s[j + m]) ++m;
          level.symbols_compared += std::min(m + 1, len);
          equal = m == len;
        }
        if (!equal) {
          report.collision = CollisionWitness{rep.position, j, len};
          return false;
        }
      }
      return true;
    };
    while (!windows.front().done()) {
      if (!matches_all(windows.front().position())) {
        report.levels.push_back(level);
        return report;
      }
      for (auto& w : windows) w.advance();
    }
    report.levels.push_back(level);
  }
  return report;
}

inline VerificationReport verify_phi(const Text& t, std::size_t tau, const PhiParams& phi,
                                     const BaselineIndex* oracle = nullptr) {
  return verify_phi(t, tau, std::span<const PhiParams>(&phi, 1), oracle);
}

struct LasVegasOptions {
  double c = 1.0;
  std::size_t max_trials = 32;
  /// Use this modulus instead of the n^(4+c) choice; for stress tests.
  std::optional<std::uint64_t> forced_prime;
};

struct LasVegasResult {
  McStructure structure;
  VerificationReport report;
  std::size_t trials = 0;
};

/// The fingerprint function tried in a given trial, derived from the seed.
inline PhiParams las_vegas_phi(std::size_t n, std::uint64_t seed, std::size_t trial,
                               const LasVegasOptions& options) {
  const std::uint64_t trial_seed = detail::mix64(seed + trial);
  if (!options.forced_prime) return pick_random_phi(n, options.c, trial_seed);
  const std::uint64_t p = *options.forced_prime;
  detail::require(p >= 2, "build_las_vegas: forced modulus below 2");
  std::mt19937_64 rng(trial_seed);
  return PhiParams(p, 1 + rng() % (p - 1));
}

/// Draws fingerprint functions until one verifies; deterministic in seed.
inline LasVegasResult build_las_vegas(const Text& t, std::size_t tau, std::uint64_t seed,
                                      const LasVegasOptions& options = {},
                                      const BaselineIndex* oracle = nullptr) {
  detail::require(options.max_trials >= 1, "build_las_vegas: trial budget must be positive");
  for (std::size_t trial = 0; trial < options.max_trials; ++trial) {
    const PhiParams phi = las_vegas_phi(t.size(), seed, trial, options);
    auto report = verify_phi(t, tau, phi, oracle);
    if (report.collision_free()) {
      return {McStructure::build(t, tau, phi), std::move(report), trial + 1};
    }
  }
  throw VerificationExhausted("build_las_vegas: no collision-free function within " +
                              std::to_string(options.max_trials) + " trials");
}

}  // namespace lce
