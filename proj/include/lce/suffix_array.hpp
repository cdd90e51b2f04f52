// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "lce/common.hpp"

namespace lce {

using Index = std::uint32_t;

/// Suffix array by prefix doubling with radix sorting, O(n log n).
inline std::vector<Index> build_suffix_array(std::span<const Symbol> s) {
  const std::size_t n = s.size();
  detail::require(n < std::numeric_limits<Index>::max(), "suffix array: text too long");
  std::vector<Index> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;

  // Initial ranks: dense renumbering of the alphabet.
  {
    std::vector<Symbol> alphabet(s.begin(), s.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    for (std::size_t i = 0; i < n; ++i) {
      rank[i] = static_cast<Index>(std::lower_bound(alphabet.begin(), alphabet.end(), s[i]) -
                                   alphabet.begin());
    }
  }

  std::vector<Index> count(n + 1);
  std::vector<Index> by_second(n);
  // Keys are rank + 1 so that "past the end" sorts first as 0.
  for (std::size_t k = 1;; k <<= 1) {
    auto second = [&](std::size_t i) -> Index { return i + k < n ? rank[i + k] + 1 : 0; };
    // Sort by second key.
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++count[second(i)];
    for (std::size_t c = 1; c <= n; ++c) count[c] += count[c - 1];
    for (std::size_t i = n; i-- > 0;) by_second[--count[second(i)]] = static_cast<Index>(i);
    // Stable sort by first key.
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
    for (std::size_t c = 1; c <= n; ++c) count[c] += count[c - 1];
    for (std::size_t t = n; t-- > 0;) {
      const Index i = by_second[t];
      sa[--count[rank[i]]] = i;
    }
    tmp[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      const Index a = sa[r - 1], b = sa[r];
      const bool same = rank[a] == rank[b] && second(a) == second(b);
      tmp[b] = tmp[a] + (same ? 0 : 1);
    }
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1 || k >= n) break;
  }
  return sa;
}

inline std::vector<Index> inverse_permutation(const std::vector<Index>& sa) {
  std::vector<Index> inv(sa.size());
  for (std::size_t r = 0; r < sa.size(); ++r) inv[sa[r]] = static_cast<Index>(r);
  return inv;
}

/// Kasai et al.: lcp[r] = LCP of suffixes sa[r-1] and sa[r]; lcp[0] = 0.
inline std::vector<Index> build_lcp_array(std::span<const Symbol> s, const std::vector<Index>& sa,
                                          const std::vector<Index>& rank) {
  const std::size_t n = s.size();
  std::vector<Index> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = static_cast<Index>(h);
    if (h > 0) --h;
  }
  return lcp;
}

/// Range minimum by sparse table: O(n log n) words, O(1) query.
template <typename T>
class SparseTableMin {
 public:
  SparseTableMin() = default;
  explicit SparseTableMin(std::vector<T> values) {
    const std::size_t n = values.size();
    table_.push_back(std::move(values));
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const auto& prev = table_.back();
      std::vector<T> level(n - len + 1);
      for (std::size_t i = 0; i + len <= n; ++i) {
        level[i] = std::min(prev[i], prev[i + len / 2]);
      }
      table_.push_back(std::move(level));
    }
  }

  /// Minimum over the inclusive range [lo, hi].
  T min(std::size_t lo, std::size_t hi) const {
    const std::size_t level = std::bit_width(hi - lo + 1) - 1;
    const auto& row = table_[level];
    return std::min(row[lo], row[hi + 1 - (std::size_t{1} << level)]);
  }

  std::size_t size() const { return table_.empty() ? 0 : table_.front().size(); }
  const std::vector<T>& values() const { return table_.front(); }

  std::size_t stored_words() const {
    std::size_t cells = 0;
    for (const auto& row : table_) cells += row.size();
    return detail::words_of<T>(cells);
  }

 private:
  std::vector<std::vector<T>> table_;
};

}  // namespace lce
