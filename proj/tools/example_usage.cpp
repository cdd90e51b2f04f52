// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

// Minimal library walkthrough: one text, three structures, the same queries.

#include <cstdio>

#include "lce/lce.hpp"

int main() {
  const lce::Text text = lce::Text::from_string("abaababaabaababaababaabaababaabaab");
  const lce::BaselineIndex oracle(text);
  const std::size_t tau = 4;

  const auto det = lce::DetStructure::build(text, tau, oracle);
  const auto lv = lce::build_las_vegas(text, tau, /*seed=*/42);
  const auto dc = lce::DcStructure::build(text, tau, oracle);
  const lce::CombinedStructure combined(dc, lv.structure);

  std::printf("n=%zu tau=%zu\n", text.size(), tau);
  std::printf("stored words: det=%zu mc=%zu combined=%zu baseline=%zu\n", det.stored_words(),
              lv.structure.stored_words(), combined.stored_words(), oracle.stored_words());

  const std::pair<std::size_t, std::size_t> queries[] = {{0, 5}, {3, 16}, {1, 4}, {0, 13}};
  for (const auto& [i, j] : queries) {
    lce::QueryStats stats;
    const std::size_t answer = combined.query(i, j, stats);
    std::printf("LCE(%zu,%zu) = %zu  det=%zu  long_path=%d  fingerprint checks=%llu\n", i, j, answer,
                det.query(i, j), stats.long_path ? 1 : 0,
                static_cast<unsigned long long>(stats.fp_evaluations));
  }
  return 0;
}
