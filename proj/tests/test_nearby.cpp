// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lce/nearby.hpp"
#include "oracles.hpp"

namespace {

using lce::NearbyStructure;
using lce::Text;

oracle::Symbols ref(const Text& t) { return {t.symbols().begin(), t.symbols().end()}; }

/// Window of the block starting at k*tau, clipped to the text.
oracle::Symbols block_window(const oracle::Symbols& s, std::size_t start, std::size_t len) {
  const std::size_t end = std::min(s.size(), start + len);
  return {s.begin() + static_cast<std::ptrdiff_t>(start), s.begin() + static_cast<std::ptrdiff_t>(end)};
}

/// Length of the run of period p starting at `start`.
std::size_t extend_period(const oracle::Symbols& s, std::size_t start, std::size_t p) {
  std::size_t end = start + p;
  while (end < s.size() && s[end] == s[end - p]) ++end;
  return std::min(end, s.size()) - start;
}

TEST(Nearby, ConstantTextRuns) {
  const Text t = lce::gen::constant(16);
  const auto ns = NearbyStructure::build(t, 2);
  ASSERT_EQ(ns.block_count(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    const auto block = ns.block(k);
    ASSERT_TRUE(block.has_value()) << k;
    EXPECT_EQ(block->period, 1u);
    EXPECT_EQ(block->run, 16 - 2 * k);
  }
}

TEST(Nearby, RunsMatchDirectExtension) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Text t = lce::gen::random(400, 2, seed);
    const auto s = ref(t);
    const std::size_t tau = 4;
    const auto ns = NearbyStructure::build(t, tau);
    for (std::size_t k = 0; k < ns.block_count(); ++k) {
      const auto w = block_window(s, k * tau, 2 * tau);
      const std::size_t p = w.size() >= 2 ? oracle::period(w) : 0;
      const auto block = ns.block(k);
      if (w.size() < 2 || 2 * p > w.size()) {
        EXPECT_FALSE(block.has_value()) << "seed " << seed << " block " << k;
        continue;
      }
      ASSERT_TRUE(block.has_value()) << "seed " << seed << " block " << k;
      EXPECT_EQ(block->period, p);
      EXPECT_EQ(block->run, extend_period(s, k * tau, p));
    }
  }
}

TEST(Nearby, AperiodicBlockStoresNothing) {
  const Text t = Text::from_string("abcdefghabcdefgh");
  const auto ns = NearbyStructure::build(t, 4);
  for (std::size_t k = 0; k < ns.block_count(); ++k) EXPECT_FALSE(ns.block(k).has_value());
}

TEST(Nearby, QueryExamples) {
  const Text t = Text::from_string("ababab");
  const auto ns = NearbyStructure::build(t, 2);
  EXPECT_EQ(ns.query(0, 2), 4u);
  EXPECT_EQ(ns.query(2, 0), 4u);
  EXPECT_EQ(ns.query(3, 3), 3u);
  EXPECT_EQ(ns.query(0, 1), 0u);
  EXPECT_THROW(ns.query(0, 3), lce::PreconditionError);
  EXPECT_THROW(ns.query(0, 6), std::out_of_range);
}

TEST(Nearby, BuildRejectsBadTau) {
  const Text t = Text::from_string("abc");
  EXPECT_THROW(NearbyStructure::build(t, 0), lce::PreconditionError);
  EXPECT_THROW(NearbyStructure::build(t, 4), lce::PreconditionError);
}

class NearbySweep : public ::testing::TestWithParam<std::tuple<std::string, std::size_t>> {};

TEST_P(NearbySweep, AgreesWithOracleAndRespectsComparisonBound) {
  const auto& [spec, tau] = GetParam();
  const Text t = lce::generate(spec);
  if (tau > t.size()) GTEST_SKIP();
  const auto s = ref(t);
  const auto ns = NearbyStructure::build(t, tau);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i >= tau ? i - tau : 0; j < t.size() && j <= i + tau; ++j) {
      lce::QueryStats stats;
      ASSERT_EQ(ns.query(i, j, stats), oracle::lce(s, i, j)) << spec << " tau=" << tau << " " << i << "," << j;
      ASSERT_LE(stats.char_comparisons, 3 * tau + 2);
      ASSERT_EQ(stats.invariant_violations, 0u);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Texts, NearbySweep,
                         ::testing::Combine(::testing::Values("fibonacci:n=13", "fibonacci:n=300",
                                                              "random:n=300,sigma=2,seed=4", "thue_morse:n=256",
                                                              "constant:n=100", "periodic:motif=abcab,n=257"),
                                            ::testing::Values(1, 2, 3, 4, 8, 16)));

TEST(Nearby, PairwiseExtendableBlocksShareTheirPeriod) {
  // Whenever the block pair k, k+2 is flagged as one periodic run, the
  // concatenation has period p_k and the root of block k+2 is a rotation of
  // the root of block k.
  std::size_t flagged = 0;
  for (const char* spec : {"random:n=512,sigma=2,seed=1", "fibonacci:n=512", "thue_morse:n=512", "constant:n=512",
                           "periodic:motif=ab,n=512", "periodic:motif=aabab,n=777"}) {
    const Text t = lce::generate(spec);
    const auto s = ref(t);
    for (std::size_t tau : {1u, 2u, 3u, 4u, 8u, 16u}) {
      const auto ns = NearbyStructure::build(t, tau);
      const auto bits = lce::nearby_detail::pairwise_extension_bits(t, tau, ns.periods());
      for (std::size_t k = 0; k < bits.size(); ++k) {
        if (!bits[k]) continue;
        ++flagged;
        const std::size_t p = ns.periods()[k];
        ASSERT_EQ(oracle::period(block_window(s, k * tau, 4 * tau)), p) << spec << " tau=" << tau << " k=" << k;
        ASSERT_EQ(ns.periods()[k + 2], p);
        const auto root_k = block_window(s, k * tau, p), root_next = block_window(s, (k + 2) * tau, p);
        auto doubled = root_k;
        doubled.insert(doubled.end(), root_k.begin(), root_k.end());
        ASSERT_NE(std::search(doubled.begin(), doubled.end(), root_next.begin(), root_next.end()), doubled.end());
      }
    }
  }
  EXPECT_GT(flagged, 0u);
}

TEST(Periodicity, FineWilf) {
  // Two periods a, b with |S| >= a + b - gcd(a, b) force gcd(a, b).
  std::mt19937_64 rng(7);
  std::size_t exercised = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t len = 2 + rng() % 30;
    oracle::Symbols s(len);
    // Periodic strings are rare at random; build one from a short root half of the time.
    const std::size_t root = trial % 2 ? 1 + rng() % len : len;
    for (std::size_t q = 0; q < len; ++q) s[q] = q < root ? rng() % 2 : s[q - root];
    std::vector<std::size_t> periods;
    for (std::size_t p = 1; p <= len; ++p) {
      if (oracle::is_period(s, p)) periods.push_back(p);
    }
    for (std::size_t a : periods) {
      for (std::size_t b : periods) {
        const std::size_t g = std::gcd(a, b);
        if (len >= a + b - g) {
          ++exercised;
          ASSERT_TRUE(oracle::is_period(s, g));
        }
      }
    }
  }
  EXPECT_GT(exercised, 1000u);
}

TEST(Periodicity, SmallPeriodsAreMultiplesOfTheSmallest) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t len = 2 + rng() % 30;
    oracle::Symbols s(len);
    const std::size_t root = 1 + rng() % len;
    for (std::size_t q = 0; q < len; ++q) s[q] = q < root ? rng() % 3 : s[q - root];
    const std::size_t smallest = lce::brute_period(s).period;
    for (std::size_t p = 1; 2 * p <= len; ++p) {
      if (oracle::is_period(s, p)) ASSERT_EQ(p % smallest, 0u);
    }
  }
}

}  // namespace
