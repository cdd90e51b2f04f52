// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "lce/baseline.hpp"
#include "lce/derand.hpp"
#include "lce/verify.hpp"
#include "oracles.hpp"

namespace {

using lce::BaselineIndex;
using lce::PhiParams;
using lce::Text;

oracle::Symbols ref(const Text& t) { return {t.symbols().begin(), t.symbols().end()}; }

/// Pairs (a, l, i) with equal windows, counted by direct comparison.
std::uint64_t equal_pairs(const Text& t, const std::vector<std::size_t>& positions,
                          const std::vector<std::size_t>& lengths) {
  const auto s = ref(t);
  std::uint64_t total = 0;
  for (std::size_t l : lengths) {
    for (std::size_t a : positions) {
      if (a + l > s.size()) continue;
      for (std::size_t i = 0; i + l <= s.size(); ++i) total += oracle::lce(s, a, i) >= l;
    }
  }
  return total;
}

/// Pairs whose windows agree under every component, counted term by term.
std::uint64_t fingerprint_pairs(const Text& t, const std::vector<std::size_t>& positions,
                                const std::vector<std::size_t>& lengths, const std::vector<PhiParams>& tuple) {
  const auto s = ref(t);
  std::uint64_t total = 0;
  for (std::size_t l : lengths) {
    for (std::size_t a : positions) {
      if (a + l > s.size()) continue;
      for (std::size_t i = 0; i + l <= s.size(); ++i) {
        bool all = true;
        for (const auto& phi : tuple) all = all && oracle::phi(s, a, l, phi.p(), phi.x()) == oracle::phi(s, i, l, phi.p(), phi.x());
        total += all;
      }
    }
  }
  return total;
}

TEST(CountBId, Examples) {
  const Text c = lce::gen::constant(8);
  const BaselineIndex bc(c);
  const std::vector<std::size_t> a0 = {0}, l2 = {2};
  EXPECT_EQ(lce::count_b_id(c, a0, l2, bc), 7u);

  const Text r = lce::gen::random(40, 3, 1);
  const BaselineIndex br(r);
  const std::vector<std::size_t> ln = {40};
  EXPECT_EQ(lce::count_b_id(r, a0, ln, br), 1u);

  const Text banana = Text::from_string("banana");
  const BaselineIndex bb(banana);
  const std::vector<std::size_t> a1 = {1}, l3 = {3};
  EXPECT_EQ(lce::count_b_id(banana, a1, l3, bb), 2u);
}

TEST(CountBId, MatchesDirectCount) {
  const Text t = lce::gen::fibonacci(200);
  const BaselineIndex b(t);
  const std::vector<std::size_t> positions = {0, 5, 17, 64, 190}, lengths = {1, 3, 8, 21, 200};
  EXPECT_EQ(lce::count_b_id(t, positions, lengths, b), equal_pairs(t, positions, lengths));
}

TEST(CountBPhi, EmptyTupleCountsEveryPair) {
  const Text t = lce::gen::random(100, 2, 2);
  const std::vector<std::size_t> positions = {0, 10, 50, 99}, lengths = {1, 4, 60};
  std::uint64_t expected = 0;
  for (std::size_t l : lengths) {
    for (std::size_t a : positions) expected += a + l <= 100 ? 101 - l : 0;
  }
  EXPECT_EQ(lce::count_b_phi(t, positions, lengths, {}, 1), expected);
  EXPECT_EQ(lce::comparison_set_size(t, positions, lengths), expected);
}

TEST(CountBPhi, MatchesDirectCountAndIsPartitionInvariant) {
  const Text t = lce::gen::random(150, 2, 3);
  std::vector<std::size_t> positions;
  for (std::size_t a = 0; a < 150; a += 7) positions.push_back(a);
  const std::vector<std::size_t> lengths = {2, 4, 8};
  const std::vector<PhiParams> tuple = {PhiParams(13, 2), PhiParams(13, 7)};
  const std::uint64_t direct = fingerprint_pairs(t, positions, lengths, tuple);
  for (std::size_t chunk : {1u, 2u, 5u, 22u, 100u}) {
    EXPECT_EQ(lce::count_b_phi(t, positions, lengths, tuple, chunk), direct) << chunk;
  }
  EXPECT_THROW(lce::count_b_phi(t, positions, lengths, tuple, 0), lce::PreconditionError);
}

TEST(CountBPhi, AppendingComponentsNeverIncreasesTheCount) {
  const Text t = lce::gen::random(200, 2, 4);
  std::vector<std::size_t> positions;
  for (std::size_t a = 0; a < 200; a += 8) positions.push_back(a);
  const std::vector<std::size_t> lengths = {8, 16, 32};
  const BaselineIndex b(t);
  const std::uint64_t b_id = lce::count_b_id(t, positions, lengths, b);
  std::vector<PhiParams> tuple;
  std::uint64_t previous = lce::count_b_phi(t, positions, lengths, tuple, positions.size());
  for (std::uint64_t x : {2u, 3u, 5u, 7u, 11u}) {
    tuple.emplace_back(17, x);
    const std::uint64_t now = lce::count_b_phi(t, positions, lengths, tuple, positions.size());
    EXPECT_LE(now, previous);
    EXPECT_GE(now, b_id);
    previous = now;
  }
}

TEST(Derandomize, ConstantTextStopsAfterOneComponent) {
  const Text t = lce::gen::constant(64);
  const BaselineIndex b(t);
  const auto result = lce::build_derand_mc(t, 4, 0.5, b);
  EXPECT_EQ(result.derand.tuple.size(), 1u);
  EXPECT_EQ(result.derand.b_id, result.derand.comparisons);
  EXPECT_EQ(result.derand.tuple.front().x(), 1u);
}

TEST(Derandomize, CertificateOnRandomText) {
  const Text t = lce::gen::random(1024, 2, 5);
  const BaselineIndex b(t);
  const auto set = lce::mc_comparison_set(t.size(), 8);
  for (double eps : {0.5, 0.25}) {
    const auto r = lce::derandomize(t, set.positions, set.lengths, eps, set.positions.size(), b);
    EXPECT_EQ(r.b_final, r.b_id);
    EXPECT_EQ(r.b_id, equal_pairs(t, set.positions, set.lengths));
    EXPECT_EQ(lce::count_b_phi(t, set.positions, set.lengths, r.tuple, 3), r.b_id);
    EXPECT_LE(r.tuple.size(), static_cast<std::size_t>(std::ceil(4 / eps)));
    EXPECT_EQ(r.max_components, static_cast<std::size_t>(std::ceil(4 / eps)));
    const double shrink = std::pow(1024.0, eps);
    for (const auto& round : r.rounds) {
      EXPECT_LE(static_cast<double>(round.b_after - r.b_id), static_cast<double>(round.b_before - r.b_id) / shrink);
    }
    const std::uint64_t p = r.tuple.front().p();
    EXPECT_TRUE(oracle::is_prime(p));
    EXPECT_GE(static_cast<double>(p), 512.0 * std::pow(1024.0, eps));
    EXPECT_LE(static_cast<double>(p), 2 * 512.0 * std::pow(1024.0, eps));
  }
}

TEST(Derandomize, ResultVerifiesAndAnswersExactly) {
  for (const char* spec : {"random:n=300,sigma=2,seed=1", "fibonacci:n=257", "thue_morse:n=256"}) {
    const Text t = lce::generate(spec);
    const auto s = ref(t);
    const BaselineIndex b(t);
    for (std::size_t tau : {2u, 4u, 8u}) {
      const auto built = lce::build_derand_mc(t, tau, 0.5, b);
      EXPECT_TRUE(lce::verify_phi(t, tau, built.derand.tuple).collision_free());
      for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
          ASSERT_EQ(built.structure.query(i, j), oracle::lce(s, i, j)) << spec << " tau=" << tau;
        }
      }
    }
  }
}

TEST(Derandomize, Deterministic) {
  const Text t = lce::gen::random(512, 2, 8);
  const BaselineIndex b(t);
  const auto a = lce::build_derand_mc(t, 8, 0.5, b);
  const auto c = lce::build_derand_mc(t, 8, 0.5, b, 5);
  EXPECT_EQ(a.derand.tuple, c.derand.tuple);
  EXPECT_EQ(a.structure.values(), c.structure.values());
}

TEST(Derandomize, RejectsBadArguments) {
  const Text t = lce::gen::random(64, 2, 1);
  const BaselineIndex b(t);
  const std::vector<std::size_t> positions = {0}, lengths = {4}, none;
  EXPECT_THROW(lce::derandomize(t, positions, lengths, 0.0, 1, b), lce::PreconditionError);
  EXPECT_THROW(lce::derandomize(t, positions, lengths, 1.0, 1, b), lce::PreconditionError);
  EXPECT_THROW(lce::derandomize(t, positions, none, 0.5, 1, b), lce::PreconditionError);
}

}  // namespace
