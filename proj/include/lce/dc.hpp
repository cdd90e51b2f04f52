// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// O(n/tau)-word structure that answers LCE(i, j) exactly in O(1) time or
// certifies LCE(i, j) <= tau^2.
//
// Sampled positions are those i with (i mod tau^2) in
//   D = {0, 1, ..., tau} u {m * tau : 2 <= m <= tau - 1}.
// For any i, j below n - tau^2 the shift
//   delta = (((i - j) mod tau) - i) mod tau^2
// moves both into the sample: (i + delta) mod tau^2 <= tau and
// (j + delta) mod tau = 0. If the reversed prefixes ending at i + delta and
// j + delta share at least delta + 1 symbols, then T[i, i+delta] equals
// T[j, j+delta] and LCE(i, j) = delta + LCE(i + delta, j + delta); otherwise
// LCE(i, j) <= delta.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lce/baseline.hpp"
#include "lce/common.hpp"
#include "lce/mc.hpp"
#include "lce/packed_vector.hpp"
#include "lce/text.hpp"

namespace lce {

/// delta(i, j) with both mods mapped into their non-negative range.
inline std::size_t dc_delta(std::size_t i, std::size_t j, std::size_t tau) {
  detail::require(tau >= 1, "dc_delta: tau must be positive");
  const auto t = static_cast<std::int64_t>(tau);
  const std::int64_t t2 = t * t;
  std::int64_t r = (static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j)) % t;
  if (r < 0) r += t;
  std::int64_t d = (r - static_cast<std::int64_t>(i)) % t2;
  if (d < 0) d += t2;
  return static_cast<std::size_t>(d);
}

/// Constant-time LCE among a fixed set of suffixes: their rank order, the LCP
/// of rank neighbours, and a range minimum over those LCPs, all bit-packed.
class SampledLceOracle {
 public:
  SampledLceOracle() = default;

  /// positions[id] is the start of sample id in the coordinates of `index`.
  SampledLceOracle(const SuffixIndex& index, const std::vector<std::size_t>& positions) {
    const std::size_t m = positions.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return index.rank()[positions[a]] < index.rank()[positions[b]];
    });
    std::vector<std::uint64_t> rank(m), lcp(m, 0);
    for (std::size_t r = 0; r < m; ++r) {
      rank[order[r]] = r;
      if (r > 0) lcp[r] = index.lce(positions[order[r - 1]], positions[order[r]]);
    }
    rank_ = PackedVector::from_values(rank);
    lcp_ = PackedVector::from_values(lcp);
    rmq_ = BlockMinTable(lcp_);
  }

  SampledLceOracle(PackedVector rank, PackedVector lcp)
      : rank_(std::move(rank)), lcp_(std::move(lcp)), rmq_(lcp_) {
    detail::require(rank_.size() == lcp_.size(), "SampledLceOracle: array sizes differ");
  }

  std::size_t size() const { return rank_.size(); }

  /// LCE of samples a != b.
  std::size_t lce(std::size_t a, std::size_t b) const {
    std::size_t ra = rank_.get(a), rb = rank_.get(b);
    if (ra > rb) std::swap(ra, rb);
    return rmq_.min(lcp_, ra + 1, rb);
  }

  const PackedVector& ranks() const { return rank_; }
  const PackedVector& lcps() const { return lcp_; }
  std::size_t stored_words() const { return rank_.stored_words() + lcp_.stored_words() + rmq_.stored_words(); }

 private:
  PackedVector rank_;
  PackedVector lcp_;
  BlockMinTable rmq_;
};

struct DcAnswer {
  bool exact;
  /// The LCE when exact, otherwise an upper bound (at most tau^2).
  std::size_t value;
};

class DcStructure {
 public:
  DcStructure() = default;

  static DcStructure build(const Text& t, std::size_t tau, const BaselineIndex& oracle) {
    detail::require(tau >= 1 && tau <= t.size(), "build_dc: tau outside [1, n]");
    DcStructure dc;
    dc.text_ = &t;
    dc.tau_ = tau;
    const std::size_t n = t.size();
    if (!dc.active()) return dc;  // tau^2 > n: every query certifies
    std::vector<std::size_t> fwd, rev;
    for (std::size_t i = 0; i < n; ++i) {
      if (dc.sampled(i)) {
        fwd.push_back(i);
        rev.push_back(n - 1 - i);
      }
    }
    dc.forward_ = SampledLceOracle(oracle.forward(), fwd);
    dc.reverse_ = SampledLceOracle(oracle.reverse(), rev);
    return dc;
  }

  std::size_t tau() const { return tau_; }
  std::size_t size() const { return text_->size(); }
  std::size_t period() const { return tau_ * tau_; }
  /// Elements of D per period.
  std::size_t cover_size() const { return 2 * tau_ - 1; }
  bool active() const { return period() <= size(); }

  bool sampled(std::size_t i) const {
    const std::size_t r = i % period();
    return r <= tau_ || r % tau_ == 0;
  }

  /// Dense id of a sampled position (order of increasing position).
  std::size_t sample_id(std::size_t i) const {
    const std::size_t r = i % period();
    return i / period() * cover_size() + (r <= tau_ ? r : tau_ + r / tau_ - 1);
  }

  std::size_t sample_count() const { return forward_.size(); }

  DcAnswer query(std::size_t i, std::size_t j) const {
    const std::size_t n = size();
    detail::check_index(i, n, "dc_query");
    detail::check_index(j, n, "dc_query");
    if (i == j) return {true, n - i};
    if (!active() || i >= n - period() || j >= n - period()) {
      return {false, std::min(period(), n - std::max(i, j))};
    }
    const std::size_t delta = dc_delta(i, j, tau_);
    const std::size_t a = i + delta, b = j + delta;
    const std::size_t ia = sample_id(a), ib = sample_id(b);
    // Reversed prefixes ending at a and b (inclusive) must share the
    // delta + 1 symbols T[i..a] and T[j..b].
    if (reverse_.lce(ia, ib) < delta + 1) return {false, delta};
    return {true, delta + forward_.lce(ia, ib)};
  }

  std::size_t stored_words() const { return forward_.stored_words() + reverse_.stored_words() + 2; }

  const SampledLceOracle& forward() const { return forward_; }
  const SampledLceOracle& reverse() const { return reverse_; }
  static DcStructure from_parts(const Text& t, std::size_t tau, SampledLceOracle forward,
                                SampledLceOracle reverse) {
    detail::require(tau >= 1 && tau <= t.size(), "dc: tau outside [1, n]");
    DcStructure dc;
    dc.text_ = &t;
    dc.tau_ = tau;
    const std::size_t expected = dc.active() ? dc.count_samples() : 0;
    detail::require(forward.size() == expected && reverse.size() == expected,
                    "dc: oracle size does not match the sample set");
    dc.forward_ = std::move(forward);
    dc.reverse_ = std::move(reverse);
    return dc;
  }

 private:
  std::size_t count_samples() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < size(); ++i) c += sampled(i) ? 1 : 0;
    return c;
  }

  const Text* text_ = nullptr;
  std::size_t tau_ = 1;
  SampledLceOracle forward_;
  SampledLceOracle reverse_;
};

/// Difference-cover first; on a certificate the Monte Carlo search runs, and
/// since the answer is then at most tau^2 it costs O(tau).
inline std::size_t combined_query(const McStructure& mc, const DcStructure& dc, std::size_t i,
                                  std::size_t j, QueryStats& stats) {
  const DcAnswer a = dc.query(i, j);
  stats.long_path = a.exact;
  if (a.exact) return a.value;
  return mc.query(i, j, stats);
}

class CombinedStructure {
 public:
  CombinedStructure() = default;
  CombinedStructure(DcStructure dc, McStructure mc) : dc_(std::move(dc)), mc_(std::move(mc)) {}

  const DcStructure& dc() const { return dc_; }
  const McStructure& mc() const { return mc_; }

  std::size_t query(std::size_t i, std::size_t j) const {
    QueryStats stats;
    return query(i, j, stats);
  }
  std::size_t query(std::size_t i, std::size_t j, QueryStats& stats) const {
    return combined_query(mc_, dc_, i, j, stats);
  }

  std::size_t stored_words() const { return dc_.stored_words() + mc_.stored_words(); }

 private:
  DcStructure dc_;
  McStructure mc_;
};

}  // namespace lce
