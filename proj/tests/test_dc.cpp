// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "lce/baseline.hpp"
#include "lce/dc.hpp"
#include "lce/packed_vector.hpp"
#include "oracles.hpp"

namespace {

using lce::BaselineIndex;
using lce::DcStructure;
using lce::Text;

oracle::Symbols ref(const Text& t) { return {t.symbols().begin(), t.symbols().end()}; }

/// Residues of the difference cover {0..tau} plus the multiples of tau below tau^2.
bool in_cover(std::size_t i, std::size_t tau) {
  const std::size_t r = i % (tau * tau);
  return r <= tau || r % tau == 0;
}

TEST(DcDelta, Examples) {
  EXPECT_EQ(lce::dc_delta(5, 3, 4), 13u);
  EXPECT_EQ((5 + 13) % 16, 2u);
  EXPECT_EQ((3 + 13) % 4, 0u);
  EXPECT_EQ(lce::dc_delta(0, 0, 4), 0u);
  EXPECT_EQ(lce::dc_delta(7, 7, 4), 9u);  // (-7) mod 16
  EXPECT_EQ((7 + 9) % 16, 0u);
  EXPECT_THROW(lce::dc_delta(1, 1, 0), lce::PreconditionError);
}

TEST(DcDelta, ShiftsEveryPairIntoTheCover) {
  for (std::size_t tau : {2u, 3u, 4u, 5u, 8u}) {
    const std::size_t n = 4 * tau * tau;
    for (std::size_t i = 0; i + tau * tau < n; ++i) {
      for (std::size_t j = 0; j + tau * tau < n; ++j) {
        const std::size_t d = lce::dc_delta(i, j, tau);
        ASSERT_LT(d, tau * tau);
        ASSERT_LE((i + d) % (tau * tau), tau);
        ASSERT_EQ((j + d) % tau, 0u);
        ASSERT_TRUE(in_cover(i + d, tau) && in_cover(j + d, tau));
      }
    }
  }
}

TEST(PackedVectorTest, RoundTripAndWidth) {
  EXPECT_EQ(lce::PackedVector::width_for(0), 0u);  // an all-zero array takes no space
  EXPECT_EQ(lce::PackedVector::width_for(1), 1u);
  EXPECT_EQ(lce::PackedVector::width_for(255), 8u);
  EXPECT_EQ(lce::PackedVector::width_for(256), 9u);
  std::mt19937_64 rng(4);
  for (unsigned width : {1u, 7u, 13u, 32u, 63u, 64u}) {
    std::vector<std::uint64_t> values(300);
    for (auto& v : values) v = width == 64 ? rng() : rng() & ((std::uint64_t{1} << width) - 1);
    lce::PackedVector pv(values.size(), width);
    for (std::size_t q = 0; q < values.size(); ++q) pv.set(q, values[q]);
    for (std::size_t q = 0; q < values.size(); ++q) ASSERT_EQ(pv.get(q), values[q]) << width;
    EXPECT_EQ(pv.stored_words(), (300 * width + 63) / 64);
  }
}

TEST(PackedVectorTest, BlockMinimumMatchesScan) {
  std::mt19937_64 rng(5);
  std::vector<std::uint64_t> values(1000);
  for (auto& v : values) v = rng() % 1000;
  const auto packed = lce::PackedVector::from_values(values);
  const lce::BlockMinTable table(packed);
  for (int trial = 0; trial < 5000; ++trial) {
    std::size_t lo = rng() % values.size(), hi = rng() % values.size();
    if (lo > hi) std::swap(lo, hi);
    ASSERT_EQ(table.min(packed, lo, hi), *std::min_element(values.begin() + lo, values.begin() + hi + 1));
  }
}

TEST(Dc, SampleSetOfOnePeriod) {
  const Text t = lce::gen::random(64, 2, 1);
  const BaselineIndex b(t);
  const auto dc = DcStructure::build(t, 4, b);
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < 16; ++i) {
    if (dc.sampled(i)) first.push_back(i);
  }
  EXPECT_EQ(first, (std::vector<std::size_t>{0, 1, 2, 3, 4, 8, 12}));
  EXPECT_EQ(dc.cover_size(), 7u);
  EXPECT_EQ(dc.sample_count(), 28u);
  std::size_t id = 0;
  for (std::size_t i = 0; i < 64; ++i) {
    if (dc.sampled(i)) EXPECT_EQ(dc.sample_id(i), id++);
  }
}

TEST(Dc, UnitTauSamplesEverything) {
  const Text t = lce::gen::random(50, 2, 2);
  const BaselineIndex b(t);
  const auto dc = DcStructure::build(t, 1, b);
  const auto s = ref(t);
  for (std::size_t i = 0; i < 50; ++i) {
    ASSERT_TRUE(dc.sampled(i));
    for (std::size_t j = 0; j < 50; ++j) {
      const auto a = dc.query(i, j);
      if (a.exact) {
        ASSERT_EQ(a.value, oracle::lce(s, i, j));
      } else {
        ASSERT_LE(oracle::lce(s, i, j), 1u);
      }
    }
  }
}

TEST(Dc, SampledOracleAgreesWithScan) {
  const Text t = lce::gen::fibonacci(400);
  const auto s = ref(t);
  const BaselineIndex b(t);
  const auto dc = DcStructure::build(t, 3, b);
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (dc.sampled(i)) positions.push_back(i);
  }
  for (std::size_t x = 0; x < positions.size(); ++x) {
    for (std::size_t y = 0; y < positions.size(); ++y) {
      if (x == y) continue;
      ASSERT_EQ(dc.forward().lce(x, y), oracle::lce(s, positions[x], positions[y]));
      ASSERT_EQ(dc.reverse().lce(x, y), oracle::lce_r(s, positions[x], positions[y]));
    }
  }
}

TEST(Dc, QueryExamples) {
  const Text c = lce::gen::constant(256);
  const BaselineIndex b(c);
  const auto dc = DcStructure::build(c, 4, b);
  const auto a = dc.query(5, 3);
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.value, 251u);
  const auto tail = dc.query(250, 3);
  EXPECT_FALSE(tail.exact);
  EXPECT_EQ(dc.query(7, 7).value, 249u);
  EXPECT_TRUE(dc.query(7, 7).exact);
}

TEST(Dc, InactiveWhenSquareExceedsLength) {
  const Text t = lce::gen::constant(20);
  const BaselineIndex b(t);
  const auto dc = DcStructure::build(t, 5, b);
  EXPECT_FALSE(dc.active());
  EXPECT_FALSE(dc.query(0, 1).exact);
  EXPECT_EQ(dc.sample_count(), 0u);
}

TEST(Dc, ReverseCheckMatchesSymbolComparison) {
  // LCE_R(i+d, j+d) >= d+1 exactly when T[i..i+d] equals T[j..j+d].
  const Text t = lce::gen::random(300, 2, 6);
  const auto s = ref(t);
  for (std::size_t tau : {2u, 3u, 4u}) {
    for (std::size_t i = 0; i + tau * tau < t.size(); i += 3) {
      for (std::size_t j = 0; j + tau * tau < t.size(); j += 5) {
        const std::size_t d = lce::dc_delta(i, j, tau);
        bool equal = true;
        for (std::size_t q = 0; q <= d; ++q) equal = equal && s[i + q] == s[j + q];
        ASSERT_EQ(oracle::lce_r(s, i + d, j + d) >= d + 1, equal);
      }
    }
  }
}

class DcSweep : public ::testing::TestWithParam<std::tuple<std::string, std::size_t>> {};

TEST_P(DcSweep, ExactAnswersMatchAndCertificatesHold) {
  const auto& [spec, tau] = GetParam();
  const Text t = lce::generate(spec);
  const auto s = ref(t);
  const BaselineIndex b(t);
  const auto dc = DcStructure::build(t, tau, b);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto a = dc.query(i, j);
      const std::size_t expected = oracle::lce(s, i, j);
      if (a.exact) {
        ASSERT_EQ(a.value, expected) << i << "," << j;
      } else {
        ASSERT_LE(expected, tau * tau) << i << "," << j;
      }
    }
  }
  EXPECT_LE(dc.stored_words(), 4 * t.size() / tau + 64);
}

INSTANTIATE_TEST_SUITE_P(Texts, DcSweep,
                         ::testing::Combine(::testing::Values("random:n=300,sigma=2,seed=9", "fibonacci:n=300",
                                                              "constant:n=200", "periodic:motif=abc,n=257"),
                                            ::testing::Values(2, 3, 4, 8)));

TEST(Combined, DispatchesByLength) {
  const Text t = lce::gen::constant(1024);
  const BaselineIndex b(t);
  const auto dc = DcStructure::build(t, 4, b);
  const auto mc = lce::McStructure::build(t, 4, lce::pick_random_phi(t.size(), 1.0, 0));
  const lce::CombinedStructure combined(dc, mc);
  lce::QueryStats stats;
  EXPECT_EQ(combined.query(0, 1, stats), 1023u);
  EXPECT_TRUE(stats.long_path);
  EXPECT_EQ(stats.fp_evaluations, 0u);

  const Text r = lce::gen::random(1024, 26, 1);
  const BaselineIndex br(r);
  const lce::CombinedStructure short_pairs(DcStructure::build(r, 4, br),
                                           lce::McStructure::build(r, 4, lce::pick_random_phi(r.size(), 1.0, 0)));
  lce::QueryStats s2;
  EXPECT_EQ(short_pairs.query(0, 1, s2), lce::naive_lce(r, 0, 1));
  EXPECT_FALSE(s2.long_path);
  EXPECT_LE(s2.fp_evaluations, 3u * 4u);
}

}  // namespace
