// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Fixed-width bit-packed integer arrays and a range-minimum table over them
// that stores only the per-block minima at every sparse-table level.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "lce/common.hpp"

namespace lce {

class PackedVector {
 public:
  PackedVector() = default;

  PackedVector(std::size_t size, unsigned width) : size_(size), width_(width) {
    detail::require(width <= 64, "PackedVector: width above 64 bits");
    words_.assign((size * width + 63) / 64, 0);
  }

  /// Smallest width that holds every value in [0, max_value].
  static unsigned width_for(std::uint64_t max_value) {
    return static_cast<unsigned>(std::bit_width(max_value));
  }

  static PackedVector from_values(const std::vector<std::uint64_t>& values) {
    std::uint64_t top = 0;
    for (auto v : values) top = std::max(top, v);
    PackedVector pv(values.size(), width_for(top));
    for (std::size_t i = 0; i < values.size(); ++i) pv.set(i, values[i]);
    return pv;
  }

  static PackedVector from_words(std::size_t size, unsigned width, std::vector<Word> words) {
    detail::require(width <= 64, "PackedVector: width above 64 bits");
    detail::require(words.size() == (size * width + 63) / 64, "PackedVector: word count mismatch");
    PackedVector pv;
    pv.size_ = size;
    pv.width_ = width;
    pv.words_ = std::move(words);
    return pv;
  }

  std::size_t size() const { return size_; }
  unsigned width() const { return width_; }
  const std::vector<Word>& words() const { return words_; }

  std::uint64_t get(std::size_t i) const {
    if (width_ == 0) return 0;
    const std::size_t bit = i * width_;
    const std::size_t w = bit >> 6;
    const unsigned off = bit & 63;
    std::uint64_t v = words_[w] >> off;
    if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
    return v & mask();
  }

  void set(std::size_t i, std::uint64_t v) {
    if (width_ == 0) return;
    v &= mask();
    const std::size_t bit = i * width_;
    const std::size_t w = bit >> 6;
    const unsigned off = bit & 63;
    words_[w] = (words_[w] & ~(mask() << off)) | (v << off);
    if (off + width_ > 64) {
      const unsigned spill = off + width_ - 64;
      const std::uint64_t hi_mask = (std::uint64_t{1} << spill) - 1;
      words_[w + 1] = (words_[w + 1] & ~hi_mask) | (v >> (64 - off));
    }
  }

  std::uint64_t operator[](std::size_t i) const { return get(i); }

  std::size_t stored_words() const { return words_.size(); }

 private:
  std::uint64_t mask() const { return width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1; }

  std::size_t size_ = 0;
  unsigned width_ = 0;
  std::vector<Word> words_;
};

/// Range minimum over a PackedVector in O(kBlock) time: a sparse table over
/// block minima answers the full blocks, the two partial blocks are scanned.
class BlockMinTable {
 public:
  static constexpr std::size_t kBlock = 32;

  BlockMinTable() = default;

  explicit BlockMinTable(const PackedVector& values) {
    const std::size_t blocks = (values.size() + kBlock - 1) / kBlock;
    std::vector<std::uint64_t> level(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      std::uint64_t m = ~std::uint64_t{0};
      const std::size_t end = std::min(values.size(), (b + 1) * kBlock);
      for (std::size_t i = b * kBlock; i < end; ++i) m = std::min(m, values.get(i));
      level[b] = m;
    }
    const unsigned width = values.width();
    for (std::size_t len = 1; len <= blocks; len <<= 1) {
      PackedVector row(level.size(), width);
      for (std::size_t i = 0; i < level.size(); ++i) row.set(i, level[i]);
      rows_.push_back(std::move(row));
      std::vector<std::uint64_t> next;
      for (std::size_t i = 0; i + 2 * len <= blocks; ++i) next.push_back(std::min(level[i], level[i + len]));
      level = std::move(next);
    }
  }

  /// Minimum of values[lo..hi] (inclusive).
  std::uint64_t min(const PackedVector& values, std::size_t lo, std::size_t hi) const {
    const std::size_t bl = lo / kBlock, bh = hi / kBlock;
    std::uint64_t m = ~std::uint64_t{0};
    if (bh - bl <= 1) {
      for (std::size_t i = lo; i <= hi; ++i) m = std::min(m, values.get(i));
      return m;
    }
    for (std::size_t i = lo; i < (bl + 1) * kBlock; ++i) m = std::min(m, values.get(i));
    for (std::size_t i = bh * kBlock; i <= hi; ++i) m = std::min(m, values.get(i));
    const std::size_t first = bl + 1, last = bh - 1;
    const unsigned level = std::bit_width(last - first + 1) - 1;
    const auto& row = rows_[level];
    m = std::min({m, row.get(first), row.get(last + 1 - (std::size_t{1} << level))});
    return m;
  }

  std::size_t stored_words() const {
    std::size_t w = 0;
    for (const auto& r : rows_) w += r.stored_words();
    return w;
  }

 private:
  std::vector<PackedVector> rows_;
};

}  // namespace lce
