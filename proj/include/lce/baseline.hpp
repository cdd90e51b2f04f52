// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Linear-space, constant-time LCE: suffix array + LCP + range minimum, over the
// text and over its reverse. Ground truth for every other structure.

#include <vector>

#include "lce/suffix_array.hpp"
#include "lce/text.hpp"

namespace lce {

/// Suffix array, its inverse, the LCP array and an RMQ over one string.
class SuffixIndex {
 public:
  SuffixIndex() = default;
  explicit SuffixIndex(std::span<const Symbol> s)
      : SuffixIndex(s, build_suffix_array(s), {}) {}

  /// Rebuilds from a stored suffix array (and LCP array when non-empty).
  SuffixIndex(std::span<const Symbol> s, std::vector<Index> sa, std::vector<Index> lcp)
      : sa_(std::move(sa)), rank_(inverse_permutation(sa_)) {
    if (lcp.empty()) lcp = build_lcp_array(s, sa_, rank_);
    rmq_ = SparseTableMin<Index>(std::move(lcp));
  }

  std::size_t size() const { return sa_.size(); }
  const std::vector<Index>& sa() const { return sa_; }
  const std::vector<Index>& rank() const { return rank_; }
  const std::vector<Index>& lcp() const { return rmq_.values(); }

  /// LCP of the suffixes starting at a and b; unchecked.
  std::size_t lce(std::size_t a, std::size_t b) const {
    if (a == b) return size() - a;
    std::size_t ra = rank_[a], rb = rank_[b];
    if (ra > rb) std::swap(ra, rb);
    return rmq_.min(ra + 1, rb);
  }

  std::size_t stored_words() const {
    return detail::words_of<Index>(sa_.size() + rank_.size()) + rmq_.stored_words();
  }

 private:
  std::vector<Index> sa_;
  std::vector<Index> rank_;
  SparseTableMin<Index> rmq_;
};

class BaselineIndex {
 public:
  explicit BaselineIndex(const Text& t) : BaselineIndex(t, SuffixIndex(t.symbols()), {}) {}

  BaselineIndex(const Text& t, SuffixIndex forward, SuffixIndex reverse)
      : text_(&t), forward_(std::move(forward)), reverse_(std::move(reverse)) {
    if (reverse_.size() == 0) {
      const auto rev = reversed();
      reverse_ = SuffixIndex(rev);
    }
  }

  static BaselineIndex build(const Text& t) { return BaselineIndex(t); }

  const Text& text() const { return *text_; }
  std::size_t size() const { return text_->size(); }

  std::size_t lce(std::size_t i, std::size_t j) const {
    detail::check_index(i, size(), "baseline_lce");
    detail::check_index(j, size(), "baseline_lce");
    return forward_.lce(i, j);
  }

  /// Longest common suffix of T[..i] and T[..j] (inclusive ends).
  std::size_t lce_r(std::size_t i, std::size_t j) const {
    detail::check_index(i, size(), "baseline_lce_r");
    detail::check_index(j, size(), "baseline_lce_r");
    const std::size_t last = size() - 1;
    return reverse_.lce(last - i, last - j);
  }

  /// Lexicographic rank of suffix T[i..].
  std::size_t rank(std::size_t i) const { return forward_.rank()[i]; }
  /// Rank of the reversed prefix T[..i]^R among all reversed prefixes.
  std::size_t reverse_rank(std::size_t i) const { return reverse_.rank()[size() - 1 - i]; }

  const SuffixIndex& forward() const { return forward_; }
  const SuffixIndex& reverse() const { return reverse_; }

  std::size_t stored_words() const { return forward_.stored_words() + reverse_.stored_words(); }

 private:
  std::vector<Symbol> reversed() const {
    auto s = text_->symbols();
    return std::vector<Symbol>(s.rbegin(), s.rend());
  }

  const Text* text_;
  SuffixIndex forward_;
  SuffixIndex reverse_;
};

}  // namespace lce
