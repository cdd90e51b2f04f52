// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Monte Carlo LCE structure: O(n/tau) words, O(tau + log(l/tau)) query time,
// correct whenever the fingerprint function has no collision on the compared
// substring pairs.
//
// Positions are read as lg(n_pad) bit numbers: the high lg(n_pad/tau) bits are
// the head, the low lg(tau) bits the tail, and the significance of a position
// is the number of trailing zeros of its head. Block k (positions
// [k*tau, (k+1)*tau)) stores prefix fingerprints at b_k evenly spaced
// positions, where b_k = min(2^floor(mu_k/2), tau) and mu_k is the
// significance of the block. A query runs an exponential search whose
// comparison lengths 2^mu * tau only ever start at positions of significance
// at least mu, so every fingerprint it needs is close to a sample.

#include <array>
#include <bit>
#include <span>
#include <stdexcept>
#include <vector>

#include "lce/common.hpp"
#include "lce/fingerprint.hpp"
#include "lce/text.hpp"

namespace lce {

class BitGeometry {
 public:
  BitGeometry() = default;

  /// tau is rounded up to a power of two and capped at the padded length.
  BitGeometry(std::size_t n, std::size_t tau) {
    detail::require(n >= 1, "BitGeometry: empty text");
    detail::require(tau >= 1, "BitGeometry: tau must be positive");
    n_ = n;
    n_pad_ = std::bit_ceil(n);
    tau_ = std::min(std::bit_ceil(tau), n_pad_);
    lg_tau_ = std::countr_zero(tau_);
    lg_blocks_ = std::countr_zero(n_pad_) - lg_tau_;
  }

  std::size_t n() const { return n_; }
  std::size_t n_pad() const { return n_pad_; }
  std::size_t tau() const { return tau_; }
  unsigned lg_tau() const { return lg_tau_; }
  unsigned lg_blocks() const { return lg_blocks_; }
  std::size_t blocks() const { return n_pad_ >> lg_tau_; }
  /// Blocks that contain at least one text position.
  std::size_t text_blocks() const { return ((n_ - 1) >> lg_tau_) + 1; }

  std::size_t head(std::size_t q) const {
    detail::check_index(q, n_pad_, "head");
    return q >> lg_tau_;
  }
  std::size_t tail(std::size_t q) const {
    detail::check_index(q, n_pad_, "tail");
    return q & (tau_ - 1);
  }
  unsigned significance(std::size_t q) const {
    detail::check_index(q, n_pad_, "significance");
    return significance_unchecked(q);
  }

  /// Significance for q in [0, n_pad]; q = n_pad wraps to a zero head.
  unsigned significance_unchecked(std::size_t q) const {
    const std::size_t h = (q >> lg_tau_) & (blocks() - 1);
    return h == 0 ? lg_blocks_ : static_cast<unsigned>(std::countr_zero(h));
  }

  unsigned block_significance(std::size_t k) const { return significance_unchecked(k << lg_tau_); }

  std::size_t samples_in_block(std::size_t k) const {
    return std::min(std::size_t{1} << (block_significance(k) / 2), tau_);
  }
  std::size_t spacing(std::size_t k) const { return tau_ / samples_in_block(k); }

  friend bool operator==(const BitGeometry&, const BitGeometry&) = default;

 private:
  std::size_t n_ = 1;
  std::size_t n_pad_ = 1;
  std::size_t tau_ = 1;
  unsigned lg_tau_ = 0;
  unsigned lg_blocks_ = 0;
};

/// Sampled positions below n in increasing order (the padding region is
/// never stored).
inline std::vector<std::size_t> sample_positions(const BitGeometry& g) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.text_blocks(); ++k) {
    const std::size_t step = g.spacing(k);
    for (std::size_t q = k * g.tau(); q < (k + 1) * g.tau() && q < g.n(); q += step) out.push_back(q);
  }
  return out;
}

/// Sample count over the full padded range, padding included.
inline std::size_t padded_sample_count(const BitGeometry& g) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < g.blocks(); ++k) total += g.samples_in_block(k);
  return total;
}

class McStructure {
 public:
  McStructure() = default;

  static McStructure build(const Text& t, std::size_t tau, const PhiParams& phi) {
    return build(t, tau, std::vector<PhiParams>{phi});
  }

  /// Builds with a tuple of fingerprint functions sharing one modulus; a
  /// check passes only when every component agrees.
  static McStructure build(const Text& t, std::size_t tau, std::vector<PhiParams> phis) {
    detail::require(tau >= 1 && tau <= t.size(), "build_mc: tau outside [1, n]");
    McStructure ms;
    ms.init(t, tau, std::move(phis));
    const std::size_t k_count = ms.phis_.size();
    const std::size_t n = t.size();
    ms.values_.reserve(ms.sample_total_ * k_count);
    ms.exponents_.reserve(ms.sample_total_ * k_count);
    std::vector<PrefixFingerprint> f(k_count);
    const auto& g = ms.geometry_;
    for (std::size_t q = 0; q <= n; ++q) {
      if (q == n) {
        for (const auto& fc : f) {
          ms.end_values_.push_back(fc.value);
          ms.end_exponents_.push_back(fc.exponent);
        }
        break;
      }
      const std::size_t k = q >> g.lg_tau();
      if ((q & (g.tau() - 1)) % g.spacing(k) == 0) {
        for (const auto& fc : f) {
          ms.values_.push_back(fc.value);
          ms.exponents_.push_back(fc.exponent);
        }
      }
      for (std::size_t c = 0; c < k_count; ++c) f[c] = fp_extend(ms.phis_[c], f[c], t, 1);
    }
    return ms;
  }

  const BitGeometry& geometry() const { return geometry_; }
  const std::vector<PhiParams>& phis() const { return phis_; }
  std::size_t components() const { return phis_.size(); }
  std::size_t tau() const { return geometry_.tau(); }
  std::size_t size() const { return text_->size(); }
  const Text& text() const { return *text_; }

  /// Number of stored samples below n (the f(n) end sample is extra).
  std::size_t sample_count() const { return sample_total_; }

  std::size_t block_offset(std::size_t k) const {
    const std::size_t r = k & 63;
    std::size_t off = super_offset_[k >> 6];
    if (r != 0) off += geometry_.samples_in_block(k & ~std::size_t{63}) + intra_offset_[r];
    return off;
  }

  /// Stored fingerprint of sample `s` (index into sample_positions order).
  PrefixFingerprint stored(std::size_t s, std::size_t component) const {
    return {values_[s * components() + component], exponents_[s * components() + component], 0};
  }

  /// Nearest stored position at or before q, for q in [0, n].
  std::size_t sample_at_or_before(std::size_t q) const {
    if (q == size()) return q;
    const std::size_t k = q >> geometry_.lg_tau();
    const std::size_t base = k << geometry_.lg_tau();
    const std::size_t step = geometry_.spacing(k);
    return base + (q - base) / step * step;
  }

  /// f(q) for one component, extended forward from the nearest sample.
  PrefixFingerprint prefix(std::size_t q, std::size_t component, QueryStats& stats) const {
    detail::require(q <= size(), "mc prefix: index past text end");
    PrefixFingerprint f;
    const std::size_t at = sample_at_or_before(q);
    if (at == size()) {
      f = {end_values_[component], end_exponents_[component], at};
    } else {
      const std::size_t k = at >> geometry_.lg_tau();
      const std::size_t s = block_offset(k) + ((at & (geometry_.tau() - 1)) / geometry_.spacing(k));
      f = stored(s, component);
      f.index = at;
    }
    stats.fp_extension_steps += q - at;
    return fp_extend(phis_[component], f, *text_, static_cast<std::ptrdiff_t>(q - at));
  }

  PrefixFingerprint prefix(std::size_t q, std::size_t component = 0) const {
    QueryStats stats;
    return prefix(q, component, stats);
  }

  /// Fingerprint comparison of T[i, i+c) and T[j, j+c); false when either
  /// range runs past the text end.
  bool check(std::size_t i, std::size_t j, std::size_t c, QueryStats& stats) const {
    ++stats.check_calls;
    if (i + c > size() || j + c > size()) return false;
    ++stats.fp_evaluations;
    for (std::size_t comp = 0; comp < components(); ++comp) {
      const auto fi = prefix(i, comp, stats), fi_end = prefix(i + c, comp, stats);
      const auto fj = prefix(j, comp, stats), fj_end = prefix(j + c, comp, stats);
      if (!fp_equal(phis_[comp].p(), fi, fi_end, fj, fj_end)) return false;
    }
    return true;
  }

  bool check(std::size_t i, std::size_t j, std::size_t c) const {
    QueryStats stats;
    return check(i, j, c, stats);
  }

  std::size_t query(std::size_t i, std::size_t j) const {
    QueryStats stats;
    return query(i, j, stats);
  }

  std::size_t query(std::size_t i, std::size_t j, QueryStats& stats) const {
    const std::size_t n = size();
    detail::check_index(i, n, "mc_query");
    detail::check_index(j, n, "mc_query");
    if (i == j) return n - i;
    const auto& t = *text_;
    const auto& g = geometry_;
    const std::size_t tau = g.tau();

    // Align i to a block start by direct comparison.
    std::size_t aligned = 0;
    while ((i & (tau - 1)) != 0) {
      if (j >= n || i >= n) return aligned;
      ++stats.char_comparisons;
      if (t[i] != t[j]) return aligned;
      ++i, ++j, ++aligned;
    }

    std::array<std::uint64_t, 65> per_length{};
    auto checked = [&](unsigned e) {
      const std::uint64_t count = ++per_length[e];
      stats.max_checks_per_length = std::max(stats.max_checks_per_length, count);
      if (count > 3) ++stats.invariant_violations;
      const std::size_t c = tau << e;
      if (i + c <= n && j + c <= n) {
        // Every fingerprint endpoint lies within tau / 2^floor(e/2) of a sample.
        const std::size_t density = std::min(std::size_t{1} << (e / 2), tau);
        for (std::size_t q : {i, i + c, j, j + c}) {
          if ((q - sample_at_or_before(q)) * density >= tau) ++stats.invariant_violations;
        }
      }
      return check(i, j, c, stats);
    };

    std::size_t found = 0;  // the running lower bound on the answer
    unsigned mu = 0;
    unsigned stalls = 0;  // consecutive first-loop iterations without mu++
    while (true) {
      if (g.significance_unchecked(j) < mu) ++stats.invariant_violations;
      if (found < ((std::size_t{1} << mu) - 1) * tau) ++stats.invariant_violations;
      if (!checked(mu)) break;
      const std::size_t c = tau << mu;
      i += c, j += c, found += c;
      if (g.significance_unchecked(j) > mu && mu < g.lg_blocks()) {
        ++mu;
        stalls = 0;
      } else if (++stalls >= 2) {
        ++stats.invariant_violations;
      }
    }
    while (mu > 0) {
      if (checked(mu - 1)) {
        const std::size_t c = tau << (mu - 1);
        i += c, j += c, found += c;
      }
      --mu;
      if (g.significance_unchecked(j) < mu) ++stats.invariant_violations;
    }
    while (i < n && j < n) {
      ++stats.char_comparisons;
      if (t[i] != t[j]) break;
      ++i, ++j, ++found;
    }
    return aligned + found;
  }

  std::size_t stored_words() const {
    return values_.size() + exponents_.size() + end_values_.size() + end_exponents_.size() +
           super_offset_.size() + intra_offset_.size() + 2 * phis_.size() + 2;
  }

  // Raw state, for dumps.
  const std::vector<Word>& values() const { return values_; }
  const std::vector<Word>& exponents() const { return exponents_; }
  const std::vector<Word>& end_values() const { return end_values_; }
  const std::vector<Word>& end_exponents() const { return end_exponents_; }
  static McStructure from_parts(const Text& t, std::size_t tau, std::vector<PhiParams> phis,
                                std::vector<Word> values, std::vector<Word> exponents,
                                std::vector<Word> end_values, std::vector<Word> end_exponents) {
    detail::require(tau >= 1 && tau <= t.size(), "mc: tau outside [1, n]");
    McStructure ms;
    ms.init(t, tau, std::move(phis));
    const std::size_t k_count = ms.phis_.size();
    detail::require(values.size() == ms.sample_total_ * k_count && exponents.size() == values.size(),
                    "mc: sample table has the wrong size");
    detail::require(end_values.size() == k_count && end_exponents.size() == k_count,
                    "mc: end sample has the wrong size");
    ms.values_ = std::move(values);
    ms.exponents_ = std::move(exponents);
    ms.end_values_ = std::move(end_values);
    ms.end_exponents_ = std::move(end_exponents);
    return ms;
  }

 private:
  void init(const Text& t, std::size_t tau, std::vector<PhiParams> phis) {
    detail::require(!phis.empty(), "mc: at least one fingerprint function required");
    for (const auto& phi : phis) {
      detail::require(phi.p() == phis.front().p(), "mc: tuple components must share the modulus");
    }
    text_ = &t;
    phis_ = std::move(phis);
    geometry_ = BitGeometry(t.size(), tau);
    // Inside a group of 64 blocks starting at 64m, block 64m + r (r > 0) has
    // significance ctz(r), so one table serves every group.
    intra_offset_.assign(64, 0);
    for (std::size_t r = 2; r < 64; ++r) {
      const unsigned mu = std::countr_zero(r - 1);
      intra_offset_[r] = intra_offset_[r - 1] + std::min(std::size_t{1} << (mu / 2), geometry_.tau());
    }
    const std::size_t blocks = geometry_.text_blocks();
    super_offset_.assign((blocks + 63) / 64, 0);
    std::size_t total = 0;
    for (std::size_t k = 0; k < blocks; ++k) {
      if ((k & 63) == 0) super_offset_[k >> 6] = total;
      const std::size_t step = geometry_.spacing(k);
      const std::size_t start = k * geometry_.tau();
      const std::size_t end = std::min(start + geometry_.tau(), t.size());
      total += (end - start + step - 1) / step;
    }
    sample_total_ = total;
  }

  const Text* text_ = nullptr;
  BitGeometry geometry_;
  std::vector<PhiParams> phis_;
  std::size_t sample_total_ = 0;
  std::vector<Word> super_offset_;
  std::vector<Word> intra_offset_;
  std::vector<Word> values_;     // sample-major, component-minor
  std::vector<Word> exponents_;
  std::vector<Word> end_values_;  // f(n), one per component
  std::vector<Word> end_exponents_;
};

}  // namespace lce
