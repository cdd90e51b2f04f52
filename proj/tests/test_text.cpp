// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lce/baseline.hpp"
#include "lce/suffix_array.hpp"
#include "lce/text.hpp"
#include "oracles.hpp"

namespace {

using lce::Text;

TEST(NaiveLce, BananaValues) {
  const Text t = Text::from_string("banana");
  EXPECT_EQ(lce::naive_lce(t, 1, 3), 3u);
  EXPECT_EQ(lce::naive_lce(t, 0, 0), 6u);
  EXPECT_EQ(lce::naive_lce(t, 0, 1), 0u);
}

TEST(NaiveLce, RejectsOutOfRangeIndex) {
  const Text t = Text::from_string("banana");
  EXPECT_THROW(lce::naive_lce(t, 6, 0), std::out_of_range);
  EXPECT_THROW(lce::naive_lce(t, 0, 7), std::out_of_range);
  EXPECT_THROW(lce::naive_lce_r(t, 6, 0), std::out_of_range);
}

TEST(NaiveLce, ReverseValues) {
  EXPECT_EQ(lce::naive_lce_r(Text::from_string("banana"), 2, 4), 2u);
  EXPECT_EQ(lce::naive_lce_r(Text::from_string("banana"), 5, 5), 6u);
  EXPECT_EQ(lce::naive_lce_r(Text::from_string("ab"), 0, 1), 0u);
}

TEST(TextTest, RejectsEmpty) {
  EXPECT_THROW(Text(std::vector<lce::Symbol>{}), lce::PreconditionError);
  EXPECT_THROW(Text::from_string(""), lce::PreconditionError);
}

TEST(TextTest, WordSizedSymbols) {
  const Text t(std::vector<lce::Symbol>{~std::uint64_t{0}, 5, ~std::uint64_t{0}, 5});
  EXPECT_EQ(t.max_symbol(), ~std::uint64_t{0});
  EXPECT_EQ(lce::naive_lce(t, 0, 2), 2u);
}

TEST(Baseline, SmallExamples) {
  const Text banana = Text::from_string("banana");
  const lce::BaselineIndex b(banana);
  EXPECT_EQ(b.lce(1, 3), 3u);
  EXPECT_EQ(b.lce(0, 0), 6u);
  EXPECT_EQ(b.lce(0, 1), 0u);
  EXPECT_EQ(b.lce_r(2, 4), 2u);
  EXPECT_EQ(b.lce_r(5, 5), 6u);

  const Text a = Text::from_string("a");
  EXPECT_EQ(lce::BaselineIndex(a).lce(0, 0), 1u);
  const Text aaaa = Text::from_string("aaaa");
  EXPECT_EQ(lce::BaselineIndex(aaaa).lce(0, 2), 2u);
  EXPECT_EQ(lce::BaselineIndex(Text::from_string("ab")).lce_r(0, 1), 0u);
}

TEST(Baseline, RejectsOutOfRange) {
  const Text t = Text::from_string("abc");
  const lce::BaselineIndex b(t);
  EXPECT_THROW(b.lce(3, 0), std::out_of_range);
  EXPECT_THROW(b.lce_r(0, 3), std::out_of_range);
}

TEST(Baseline, SuffixArrayIsSortedPermutation) {
  const Text t = lce::gen::random(300, 3, 11);
  const auto sa = lce::build_suffix_array(t.symbols());
  std::vector<lce::Index> sorted = sa;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t r = 0; r < sorted.size(); ++r) ASSERT_EQ(sorted[r], r);
  const auto s = t.symbols();
  for (std::size_t r = 1; r < sa.size(); ++r) {
    ASSERT_TRUE(std::lexicographical_compare(s.begin() + sa[r - 1], s.end(), s.begin() + sa[r], s.end()));
  }
  const auto rank = lce::inverse_permutation(sa);
  for (std::size_t i = 0; i < sa.size(); ++i) ASSERT_EQ(sa[rank[i]], i);
}

class BaselineSweep : public ::testing::TestWithParam<std::string> {};

TEST_P(BaselineSweep, AgreesWithDefinitionOnAllPairs) {
  const Text t = lce::generate(GetParam());
  const auto ref = oracle::Symbols(t.symbols().begin(), t.symbols().end());
  const lce::BaselineIndex b(t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      ASSERT_EQ(b.lce(i, j), oracle::lce(ref, i, j)) << i << "," << j;
      ASSERT_EQ(b.lce_r(i, j), oracle::lce_r(ref, i, j)) << i << "," << j;
      ASSERT_EQ(lce::naive_lce(t, i, j), b.lce(j, i));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Texts, BaselineSweep,
                         ::testing::Values("random:n=200,sigma=2,seed=1", "random:n=150,sigma=26,seed=2",
                                           "fibonacci:n=233", "thue_morse:n=128", "constant:n=64",
                                           "periodic:motif=abc,n=100"));

TEST(ObservationOne, MinOfTwoExtensions) {
  // LCE(i,j) = min(LCE(i,j'), LCE(j',j)) whenever LCE(j',j) >= LCE(i,j).
  const Text t = lce::gen::random(120, 2, 5);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const std::size_t l = lce::naive_lce(t, i, j);
      for (std::size_t jp = 0; jp < t.size(); jp += 7) {
        if (lce::naive_lce(t, jp, j) >= l) {
          ASSERT_EQ(l, std::min(lce::naive_lce(t, i, jp), lce::naive_lce(t, jp, j)));
        }
      }
    }
  }
}

TEST(Period, Examples) {
  auto info = lce::brute_period(oracle::symbols("abab"));
  EXPECT_EQ(info.period, 2u);
  EXPECT_TRUE(info.periodic());
  info = lce::brute_period(oracle::symbols("aaaa"));
  EXPECT_EQ(info.period, 1u);
  EXPECT_TRUE(info.periodic());
  info = lce::brute_period(oracle::symbols("abca"));
  EXPECT_EQ(info.period, 3u);
  EXPECT_FALSE(info.periodic());
  EXPECT_THROW(lce::brute_period(std::vector<lce::Symbol>{}), lce::PreconditionError);
}

TEST(Period, BorderArrayMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t len = 1 + rng() % 40;
    const std::uint64_t sigma = 1 + rng() % 3;
    oracle::Symbols s(len);
    for (auto& c : s) c = rng() % sigma;
    ASSERT_EQ(lce::smallest_period(s), oracle::period(s));
    ASSERT_EQ(lce::brute_period(s).period, oracle::period(s));
  }
}

TEST(Generators, Examples) {
  EXPECT_EQ(lce::gen::fibonacci(13).to_string(), "abaababaabaab");
  EXPECT_EQ(lce::gen::constant(4).to_string(), "aaaa");
  EXPECT_EQ(lce::gen::periodic("ab", 5).to_string(), "ababa");
  EXPECT_EQ(lce::gen::thue_morse(8).to_string(), "abbabaab");
  for (std::size_t n : {1u, 2u, 5u, 100u, 1000u}) {
    EXPECT_EQ(lce::gen::fibonacci(n).to_string(), oracle::fibonacci_word(n));
  }
}

TEST(Generators, DeterministicAndParsed) {
  EXPECT_EQ(lce::gen::random(64, 2, 9), lce::gen::random(64, 2, 9));
  EXPECT_NE(lce::gen::random(64, 2, 9), lce::gen::random(64, 2, 10));
  EXPECT_EQ(lce::generate("random:n=64,sigma=2,seed=9"), lce::gen::random(64, 2, 9));
  EXPECT_EQ(lce::generate("periodic:motif=ab,n=5").to_string(), "ababa");
  EXPECT_EQ(lce::generate("fibonacci:n=13").to_string(), "abaababaabaab");
  const Text r = lce::gen::random(500, 4, 1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    ASSERT_GE(r[i], 'a');
    ASSERT_LT(r[i], 'a' + 4);
  }
}

TEST(Generators, RejectInvalidParameters) {
  EXPECT_THROW(lce::generate("constant:n=0"), lce::PreconditionError);
  EXPECT_THROW(lce::generate("random:sigma=2"), lce::PreconditionError);
  EXPECT_THROW(lce::generate("random:n=x"), lce::PreconditionError);
  EXPECT_THROW(lce::generate("zigzag:n=4"), lce::PreconditionError);
  EXPECT_THROW(lce::generate("random:n=4,sigma=0"), lce::PreconditionError);
  EXPECT_THROW(lce::generate("periodic:n=4"), lce::PreconditionError);
}

}  // namespace
