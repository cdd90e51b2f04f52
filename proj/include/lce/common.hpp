// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lce {

/// One text symbol. Generated texts may use the full word; file-backed texts
/// hold one byte per symbol.
using Symbol = std::uint64_t;

/// Unit of space accounting: one 64-bit machine word of persistent state.
using Word = std::uint64_t;

/// Raised when a query or build receives an index or parameter outside its
/// documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-query instrumentation. Counters start at zero and only grow while a
/// query runs; callers reset (or construct a fresh value) between queries.
struct QueryStats {
  std::uint64_t char_comparisons = 0;
  /// Fingerprint comparisons actually evaluated by the Monte Carlo check.
  std::uint64_t fp_evaluations = 0;
  /// Symbols folded into prefix fingerprints while walking from a stored
  /// sample to the requested position.
  std::uint64_t fp_extension_steps = 0;
  /// Calls to check, including the ones short-circuited by the text-end clamp.
  std::uint64_t check_calls = 0;
  /// Largest number of check calls made with one comparison length.
  std::uint64_t max_checks_per_length = 0;
  std::uint64_t reduction_rounds = 0;
  /// Largest number of symbol comparisons spent in one reduction round.
  std::uint64_t max_round_comparisons = 0;
  /// Symbol comparisons spent inside the nearby-indices structure.
  std::uint64_t nearby_comparisons = 0;
  /// Runtime-checked loop invariants that failed. Always zero for a correct
  /// implementation; the acceptance suite asserts it.
  std::uint64_t invariant_violations = 0;
  /// Set by the combined structure when the long-LCE path produced the answer.
  bool long_path = false;
  std::chrono::nanoseconds wall_time{0};

  void reset() { *this = QueryStats{}; }
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

inline void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) {
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) +
                            " outside [0," + std::to_string(n) + ")");
  }
}

/// splitmix64 step; used to derive independent seeds from one user seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename T>
std::size_t words_of(std::size_t count) {
  return (count * sizeof(T) + sizeof(Word) - 1) / sizeof(Word);
}

}  // namespace detail
}  // namespace lce
