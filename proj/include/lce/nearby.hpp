// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// LCE(i, j) for |i - j| <= tau in O(tau) time and O(n / tau) words.
//
// Block k owns the window T_k = T[k*tau, (k+2)*tau). When T_k is periodic
// (smallest period p_k <= tau) the structure stores p_k and run_k, the length
// of the longest substring starting at k*tau that has period p_k. A query
// aligns i to a block boundary, compares 2*tau + 1 symbol pairs and, when all
// of them match, d = j - i is a multiple of p_k and the answer is run_k - d.

#include <optional>
#include <vector>

#include "lce/common.hpp"
#include "lce/text.hpp"

namespace lce {

struct NearbyBlock {
  std::size_t period;
  std::size_t run;
};

namespace nearby_detail {

/// bit[k] = 1 iff T_k is full and periodic and its period p_k extends over
/// T[k*tau, (k+4)*tau), i.e. T_k . T_{k+2} has a period of at most tau.
inline std::vector<bool> pairwise_extension_bits(const Text& t, std::size_t tau,
                                                 const std::vector<Word>& periods) {
  const std::size_t n = t.size();
  std::vector<bool> bits(periods.size(), false);
  for (std::size_t k = 0; k < periods.size(); ++k) {
    const std::size_t p = periods[k];
    const std::size_t start = k * tau;
    if (p == 0 || start + 4 * tau > n) continue;
    bool ok = true;
    for (std::size_t x = start + 2 * tau; x < start + 4 * tau && ok; ++x) ok = t[x] == t[x - p];
    bits[k] = ok;
  }
  return bits;
}

}  // namespace nearby_detail

class NearbyStructure {
 public:
  NearbyStructure() = default;

  /// Builds the per-block table. Blocks whose window is cut short by the text
  /// end keep an entry when the truncated window (length >= 2) is periodic;
  /// when 2*tau > n there are no full windows and every query is a direct scan.
  static NearbyStructure build(const Text& t, std::size_t tau) {
    const std::size_t n = t.size();
    detail::require(tau >= 1 && tau <= n, "build_nearby: tau outside [1, n]");
    NearbyStructure ns;
    ns.text_ = &t;
    ns.tau_ = tau;
    const std::size_t blocks = (n + tau - 1) / tau;
    ns.period_.assign(blocks, 0);
    ns.run_.assign(blocks, 0);
    const auto symbols = t.symbols();

    for (std::size_t k = 0; k < blocks; ++k) {
      const std::size_t start = k * tau;
      const std::size_t len = std::min(2 * tau, n - start);
      if (len < 2) continue;
      const std::size_t p = smallest_period(symbols.subspan(start, len));
      if (2 * p <= len) ns.period_[k] = p;
    }

    const auto bits = nearby_detail::pairwise_extension_bits(t, tau, ns.period_);
    // Right-to-left sweep; k + 2 is final before k is visited, so the even and
    // odd chains are handled by the same loop.
    for (std::size_t k = blocks; k-- > 0;) {
      const std::size_t p = ns.period_[k];
      if (p == 0) continue;
      const std::size_t start = k * tau;
      if (bits[k]) {
        ns.run_[k] = ns.run_[k + 2] + 2 * tau;
        continue;
      }
      std::size_t len = std::min(2 * tau, n - start);
      while (start + len < n && t[start + len] == t[start + len - p]) ++len;
      ns.run_[k] = len;
    }
    return ns;
  }

  std::size_t tau() const { return tau_; }
  std::size_t size() const { return text_->size(); }
  std::size_t block_count() const { return period_.size(); }

  std::optional<NearbyBlock> block(std::size_t k) const {
    if (k >= period_.size() || period_[k] == 0) return std::nullopt;
    return NearbyBlock{period_[k], run_[k]};
  }

  std::size_t query(std::size_t i, std::size_t j) const {
    QueryStats stats;
    return query(i, j, stats);
  }

  std::size_t query(std::size_t i, std::size_t j, QueryStats& stats) const {
    const std::size_t n = size();
    detail::check_index(i, n, "nearby_query");
    detail::check_index(j, n, "nearby_query");
    if (i > j) std::swap(i, j);
    detail::require(j - i <= tau_, "nearby_query: |i - j| exceeds tau");
    if (i == j) return n - i;
    const auto& t = *text_;
    const std::size_t d = j - i;

    std::size_t m = 0;
    auto compare = [&](std::size_t offset) {
      ++stats.char_comparisons;
      ++stats.nearby_comparisons;
      return t[i + offset] == t[j + offset];
    };
    // Alignment: walk i forward to the next block start.
    while ((i + m) % tau_ != 0) {
      if (j + m >= n || !compare(m)) return m;
      ++m;
    }
    for (std::size_t delta = 0; delta <= 2 * tau_; ++delta) {
      if (j + m + delta >= n || !compare(m + delta)) return m + delta;
    }
    // All 2*tau + 1 pairs matched, so d is a period of the full window T_k.
    const std::size_t k = (i + m) / tau_;
    if (period_[k] == 0 || d % period_[k] != 0) {
      ++stats.invariant_violations;
      throw std::logic_error("nearby_query: matched window without a stored period");
    }
    return m + run_[k] - d;
  }

  std::size_t stored_words() const { return period_.size() + run_.size() + 2; }

  // Raw state, for dumps.
  const std::vector<Word>& periods() const { return period_; }
  const std::vector<Word>& runs() const { return run_; }
  static NearbyStructure from_parts(const Text& t, std::size_t tau, std::vector<Word> periods,
                                    std::vector<Word> runs) {
    detail::require(tau >= 1 && tau <= t.size(), "nearby: tau outside [1, n]");
    detail::require(periods.size() == (t.size() + tau - 1) / tau && runs.size() == periods.size(),
                    "nearby: block table has the wrong size");
    NearbyStructure ns;
    ns.text_ = &t;
    ns.tau_ = tau;
    ns.period_ = std::move(periods);
    ns.run_ = std::move(runs);
    return ns;
  }

 private:
  const Text* text_ = nullptr;
  std::size_t tau_ = 1;
  std::vector<Word> period_;  // 0 marks an aperiodic block
  std::vector<Word> run_;
};

}  // namespace lce
