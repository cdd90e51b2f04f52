// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Deterministic LCE structure with O((n/tau) log(n/tau)) words and
// O(tau log(n/tau)) query time.
//
// The text positions are split recursively into halves. A node over [a, b)
// with left half [a, mid) and right half [mid, b) samples the right-half
// positions s_k = (b-1) - k*tau and stores, for each, the left-half position
// with the longest common extension with s_k (smallest index on ties) and that
// extension's length. A query whose indices straddle mid compares fewer than
// tau symbol pairs until it either finds a mismatch, moves both indices into
// the right half, or lands on a sampled s_k; in the last case
//
//   LCE(x, s_k) = min(LCE(x, partner_k), length_k)    for any x in [a, mid)
//
// turns the query into one with both indices in the left half. Pairs at
// distance <= tau go to the nearby-indices structure.

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lce/baseline.hpp"
#include "lce/common.hpp"
#include "lce/nearby.hpp"
#include "lce/text.hpp"

namespace lce {

class DetStructure {
 public:
  struct Sample {
    std::size_t position;
    std::size_t partner;
    std::size_t length;
    friend bool operator==(const Sample&, const Sample&) = default;
  };

  struct NodeView {
    std::size_t begin;
    std::size_t end;
    std::vector<Sample> samples;
  };

  static constexpr Word kNoNode = std::numeric_limits<Word>::max();

  DetStructure() = default;

  static DetStructure build(const Text& t, std::size_t tau, const BaselineIndex& oracle) {
    detail::require(tau >= 1 && tau <= t.size(), "build_det: tau outside [1, n]");
    detail::require(&oracle.text() == &t || oracle.text() == t, "build_det: oracle built for another text");
    DetStructure ds;
    ds.text_ = &t;
    ds.tau_ = tau;
    ds.nearby_ = NearbyStructure::build(t, tau);
    Builder builder{t, tau, oracle.forward(), ds};
    builder.run(0, 0, t.size(), /*need_sorted=*/false);
    return ds;
  }

  std::size_t tau() const { return tau_; }
  std::size_t size() const { return text_->size(); }
  const NearbyStructure& nearby() const { return nearby_; }

  /// Nodes that store samples, in preorder.
  std::vector<NodeView> nodes() const {
    std::vector<NodeView> out;
    collect(0, 0, size(), out);
    return out;
  }

  std::size_t query(std::size_t i, std::size_t j) const {
    QueryStats stats;
    return query(i, j, stats);
  }

  std::size_t query(std::size_t i, std::size_t j, QueryStats& stats) const {
    return query_traced(i, j, stats, [](std::size_t, std::size_t, std::size_t, std::size_t) {});
  }

  /// Query with a callback on every rewrite: on_rewrite(x, s, partner, length)
  /// fires when the pair (x, s) is replaced by (x, partner) under the cap
  /// `length`.
  template <typename OnRewrite>
  std::size_t query_traced(std::size_t i, std::size_t j, QueryStats& stats,
                           OnRewrite&& on_rewrite) const {
    const std::size_t n = size();
    detail::check_index(i, n, "det_query");
    detail::check_index(j, n, "det_query");
    const auto& t = *text_;
    std::size_t base = 0;
    std::size_t cap = std::numeric_limits<std::size_t>::max();
    std::size_t v = 0, a = 0, b = n;

    while (true) {
      if (cap == 0) return base;
      if (i == j) return base + std::min(cap, n - i);
      if ((i > j ? i - j : j - i) <= tau_) {
        ++stats.reduction_rounds;
        return base + std::min(cap, nearby_.query(i, j, stats));
      }
      // Re-dispatch: descend from the current node to the smallest one
      // containing both indices.
      std::size_t mid;
      while (true) {
        mid = a + (b - a + 1) / 2;
        if (i < mid && j < mid) {
          v = 2 * v + 1;
          b = mid;
        } else if (i >= mid && j >= mid) {
          v = 2 * v + 2;
          a = mid;
        } else {
          break;
        }
      }
      if (v >= node_offset_.size() || node_offset_[v] == kNoNode) {
        ++stats.invariant_violations;
        throw std::logic_error("det_query: distant pair reached a leaf");
      }
      ++stats.reduction_rounds;
      const std::size_t x = std::min(i, j), y = std::max(i, j);
      const std::size_t last = b - 1;
      const std::size_t count = sample_count(b - a);
      const std::size_t offset = node_offset_[v];
      std::uint64_t round_comparisons = 0;
      auto finish_round = [&] {
        stats.max_round_comparisons = std::max(stats.max_round_comparisons, round_comparisons);
      };

      for (std::size_t delta = 0;; ++delta) {
        if (delta >= cap) {
          finish_round();
          return base + cap;
        }
        if (x + delta >= mid) {  // both indices now in the right half
          base += delta;
          cap -= delta;
          i = x + delta;
          j = y + delta;
          break;
        }
        const std::size_t s = y + delta;
        const std::size_t back = last - s;
        if (back % tau_ == 0 && back / tau_ < count) {
          const std::size_t idx = offset + back / tau_;
          on_rewrite(x + delta, s, static_cast<std::size_t>(partner_[idx]),
                     static_cast<std::size_t>(length_[idx]));
          base += delta;
          cap = std::min<std::size_t>(cap - delta, length_[idx]);
          i = x + delta;
          j = partner_[idx];
          break;
        }
        ++round_comparisons;
        ++stats.char_comparisons;
        if (t[x + delta] != t[y + delta]) {
          finish_round();
          return base + delta;
        }
      }
      finish_round();
    }
  }

  std::size_t stored_words() const {
    return node_offset_.size() + partner_.size() + length_.size() + nearby_.stored_words() + 2;
  }

  // Raw state, for dumps.
  const std::vector<Word>& node_offsets() const { return node_offset_; }
  const std::vector<Word>& partners() const { return partner_; }
  const std::vector<Word>& lengths() const { return length_; }
  static DetStructure from_parts(const Text& t, std::size_t tau, std::vector<Word> node_offsets,
                                 std::vector<Word> partners, std::vector<Word> lengths,
                                 NearbyStructure nearby) {
    detail::require(tau >= 1 && tau <= t.size(), "det: tau outside [1, n]");
    detail::require(partners.size() == lengths.size(), "det: sample arrays differ in length");
    for (Word off : node_offsets) {
      detail::require(off == kNoNode || off <= partners.size(), "det: node offset out of range");
    }
    DetStructure ds;
    ds.text_ = &t;
    ds.tau_ = tau;
    ds.node_offset_ = std::move(node_offsets);
    ds.partner_ = std::move(partners);
    ds.length_ = std::move(lengths);
    ds.nearby_ = std::move(nearby);
    return ds;
  }

 private:
  /// A node is internal when it can hold a pair at distance > tau.
  bool internal(std::size_t len) const { return len >= tau_ + 2; }

  /// Sampled right-half positions (b-1) - k*tau; the right half has
  /// floor(len/2) positions.
  std::size_t sample_count(std::size_t len) const { return (len / 2 - 1) / tau_ + 1; }

  void collect(std::size_t v, std::size_t a, std::size_t b, std::vector<NodeView>& out) const {
    if (!internal(b - a) || v >= node_offset_.size() || node_offset_[v] == kNoNode) return;
    NodeView node{a, b, {}};
    const std::size_t count = sample_count(b - a);
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t idx = node_offset_[v] + k;
      node.samples.push_back({b - 1 - k * tau_, static_cast<std::size_t>(partner_[idx]),
                              static_cast<std::size_t>(length_[idx])});
    }
    out.push_back(std::move(node));
    const std::size_t mid = a + (b - a + 1) / 2;
    collect(2 * v + 1, a, mid, out);
    collect(2 * v + 2, mid, b, out);
  }

  struct Builder {
    const Text& text;
    std::size_t tau;
    const SuffixIndex& index;
    DetStructure& ds;

    bool by_rank(Index p, Index q) const { return index.rank()[p] < index.rank()[q]; }

    /// Builds the subtree for [a, b) and returns its positions sorted by
    /// suffix rank (merge-sort style, O(n log n) overall).
    std::vector<Index> run(std::size_t v, std::size_t a, std::size_t b, bool need_sorted) {
      const std::size_t len = b - a;
      if (!ds.internal(len)) {
        std::vector<Index> pos;
        if (need_sorted) {
          pos.resize(len);
          for (std::size_t q = 0; q < len; ++q) pos[q] = static_cast<Index>(a + q);
          std::sort(pos.begin(), pos.end(), [&](Index p, Index q) { return by_rank(p, q); });
        }
        return pos;
      }
      if (ds.node_offset_.size() <= v) ds.node_offset_.resize(v + 1, kNoNode);
      const std::size_t mid = a + (len + 1) / 2;
      std::vector<Index> left = run(2 * v + 1, a, mid, true);
      ds.node_offset_[v] = ds.partner_.size();
      add_samples(a, b, left);
      std::vector<Index> right = run(2 * v + 2, mid, b, need_sorted);
      if (!need_sorted) return {};
      std::vector<Index> merged(left.size() + right.size());
      std::merge(left.begin(), left.end(), right.begin(), right.end(), merged.begin(),
                 [&](Index p, Index q) { return by_rank(p, q); });
      return merged;
    }

    /// For every sampled s, the left-half position maximizing LCE(., s): the
    /// candidates are the rank predecessor and successor of s among the left
    /// half; ties span a contiguous rank range whose smallest position wins.
    void add_samples(std::size_t a, std::size_t b, const std::vector<Index>& left) {
      const std::size_t m = left.size();
      std::vector<Index> left_rank(m);
      for (std::size_t u = 0; u < m; ++u) left_rank[u] = index.rank()[left[u]];
      std::optional<SparseTableMin<Index>> min_position;

      auto lce_at = [&](std::size_t u, std::size_t s) { return index.lce(left[u], s); };
      const std::size_t count = ds.sample_count(b - a);
      for (std::size_t k = 0; k < count; ++k) {
        const std::size_t s = b - 1 - k * tau;
        const Index r = index.rank()[s];
        const std::size_t t =
            std::lower_bound(left_rank.begin(), left_rank.end(), r) - left_rank.begin();
        const std::size_t below = t > 0 ? lce_at(t - 1, s) : 0;
        const std::size_t above = t < m ? lce_at(t, s) : 0;
        const std::size_t best = std::max(below, above);
        std::size_t partner = a;
        if (best > 0) {
          std::size_t lo = t, hi = t;  // candidate range [lo, hi)
          if (below == best) {
            std::size_t l = 0, h = t - 1;  // smallest u < t with lce >= best
            while (l < h) {
              const std::size_t mid = (l + h) / 2;
              if (lce_at(mid, s) >= best) h = mid; else l = mid + 1;
            }
            lo = l;
          }
          if (above == best) {
            std::size_t l = t, h = m - 1;  // largest u >= t with lce >= best
            while (l < h) {
              const std::size_t mid = (l + h + 1) / 2;
              if (lce_at(mid, s) >= best) l = mid; else h = mid - 1;
            }
            hi = l + 1;
          }
          if (hi - lo <= 64) {
            partner = *std::min_element(left.begin() + lo, left.begin() + hi);
          } else {
            if (!min_position) min_position.emplace(left);
            partner = min_position->min(lo, hi - 1);
          }
        }
        ds.partner_.push_back(partner);
        ds.length_.push_back(best);
      }
    }
  };

  const Text* text_ = nullptr;
  std::size_t tau_ = 1;
  std::vector<Word> node_offset_;  // heap-indexed; kNoNode for leaves
  std::vector<Word> partner_;
  std::vector<Word> length_;
  NearbyStructure nearby_;
};

}  // namespace lce
