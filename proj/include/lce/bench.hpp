// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Query workloads over (structure, tau) cells with counters aggregated per
// cell. Timing columns are opt-in so the default output is reproducible byte
// for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lce/baseline.hpp"
#include "lce/structures.hpp"
#include "lce/text.hpp"

namespace lce {

inline constexpr int kBenchSchema = 1;

enum class CheckMode { oracle, invariants, none };

inline std::optional<CheckMode> parse_check_mode(std::string_view s) {
  if (s == "oracle") return CheckMode::oracle;
  if (s == "invariants") return CheckMode::invariants;
  if (s == "none") return CheckMode::none;
  return std::nullopt;
}

struct Workload {
  std::vector<std::size_t> taus;
  std::vector<StructureKind> structures;
  /// Explicit pairs; when empty, `random_queries` pairs are drawn from `seed`.
  std::vector<std::pair<std::size_t, std::size_t>> queries;
  std::size_t random_queries = 0;
  std::uint64_t seed = 0;
  CheckMode checks = CheckMode::oracle;
  BuildOptions build;  // tau is taken from `taus`
  bool timing = false;
};

struct BenchRow {
  StructureKind kind;
  std::size_t tau = 0;
  std::size_t tau_effective = 0;
  std::size_t n = 0;
  std::size_t stored_words = 0;
  std::size_t queries = 0;
  std::uint64_t max_char_comparisons = 0;
  double mean_char_comparisons = 0;
  std::uint64_t max_fp_evaluations = 0;
  double mean_fp_evaluations = 0;
  std::uint64_t max_fp_extension_steps = 0;
  std::uint64_t max_reduction_rounds = 0;
  double mean_reduction_rounds = 0;
  std::uint64_t max_round_comparisons = 0;
  std::uint64_t long_path_queries = 0;
  std::uint64_t invariant_violations = 0;
  double build_ms = 0;
  double mean_query_ns = 0;
};

/// A structure answered differently from the oracle; carries the witness.
class OracleMismatch : public std::runtime_error {
 public:
  OracleMismatch(StructureKind kind, std::size_t tau, std::size_t i, std::size_t j, std::size_t expected,
                 std::size_t got)
      : std::runtime_error(std::string(kind_name(kind)) + " tau=" + std::to_string(tau) + " query (" +
                           std::to_string(i) + "," + std::to_string(j) + "): expected " +
                           std::to_string(expected) + ", got " + std::to_string(got)),
        i(i), j(j), expected(expected), got(got) {}
  std::size_t i, j, expected, got;
};

/// A runtime-checked bound or loop invariant failed.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Query pairs for one cell. The nearby structure only accepts pairs at
/// distance <= tau, so random pairs are drawn within that band for it.
inline std::vector<std::pair<std::size_t, std::size_t>> workload_queries(const Workload& w, std::size_t n,
                                                                         StructureKind kind, std::size_t tau) {
  if (!w.queries.empty()) return w.queries;
  std::mt19937_64 rng(w.seed);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(w.random_queries);
  for (std::size_t q = 0; q < w.random_queries; ++q) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (kind == StructureKind::nearby) j = std::min(n - 1, i + j % (tau + 1));
    out.emplace_back(i, j);
  }
  return out;
}

inline std::vector<BenchRow> run_bench(std::shared_ptr<const Text> text, const Workload& w,
                                       const BaselineIndex* oracle = nullptr) {
  using clock = std::chrono::steady_clock;
  const std::size_t n = text->size();
  std::optional<BaselineIndex> own;
  if (oracle == nullptr) {
    own.emplace(*text);
    oracle = &*own;
  }
  std::vector<BenchRow> rows;
  for (StructureKind kind : w.structures) {
    for (std::size_t tau : w.taus) {
      const auto queries = workload_queries(w, n, kind, tau);
      if (queries.empty()) continue;
      BuildOptions o = w.build;
      o.tau = tau;
      const auto t0 = clock::now();
      const auto s = build_structure(kind, text, o, oracle);
      const auto t1 = clock::now();

      BenchRow row;
      row.kind = kind;
      row.tau = tau;
      row.tau_effective = s->effective_tau();
      row.n = n;
      row.stored_words = s->stored_words();
      row.queries = queries.size();
      row.build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      double sum_chars = 0, sum_fp = 0, sum_rounds = 0;
      std::chrono::nanoseconds total{0};
      const std::uint64_t round_cap =
          static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n) / static_cast<double>(tau)))) + 1;
      for (const auto& [i, j] : queries) {
        QueryStats st;
        const auto q0 = clock::now();
        const Answer a = s->query(i, j, st);
        st.wall_time = clock::now() - q0;
        total += st.wall_time;
        if (w.checks == CheckMode::oracle) {
          const std::size_t expected = oracle->lce(i, j);
          if (a.exact ? a.value != expected : expected > a.value) {
            throw OracleMismatch(kind, tau, i, j, expected, a.value);
          }
        }
        if (w.checks != CheckMode::none) {
          if (st.invariant_violations != 0) {
            throw InvariantFailure(std::string(kind_name(kind)) + ": loop invariant failed on query (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
          }
          if (kind == StructureKind::det && st.reduction_rounds > round_cap) {
            throw InvariantFailure("det: round bound exceeded on query (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
          }
        }
        row.max_char_comparisons = std::max(row.max_char_comparisons, st.char_comparisons);
        row.max_fp_evaluations = std::max(row.max_fp_evaluations, st.fp_evaluations);
        row.max_fp_extension_steps = std::max(row.max_fp_extension_steps, st.fp_extension_steps);
        row.max_reduction_rounds = std::max(row.max_reduction_rounds, st.reduction_rounds);
        row.max_round_comparisons = std::max(row.max_round_comparisons, st.max_round_comparisons);
        row.long_path_queries += st.long_path ? 1 : 0;
        row.invariant_violations += st.invariant_violations;
        sum_chars += static_cast<double>(st.char_comparisons);
        sum_fp += static_cast<double>(st.fp_evaluations);
        sum_rounds += static_cast<double>(st.reduction_rounds);
      }
      const double q = static_cast<double>(queries.size());
      row.mean_char_comparisons = sum_chars / q;
      row.mean_fp_evaluations = sum_fp / q;
      row.mean_reduction_rounds = sum_rounds / q;
      row.mean_query_ns = static_cast<double>(total.count()) / q;
      rows.push_back(row);
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream out;
  out << "schema,structure,tau,tau_effective,n,stored_words,words_per_block,queries,"
         "max_char_comparisons,mean_char_comparisons,max_fp_evaluations,mean_fp_evaluations,"
         "max_fp_extension_steps,max_reduction_rounds,mean_reduction_rounds,max_round_comparisons,"
         "long_path_queries,invariant_violations";
  if (timing) out << ",build_ms,mean_query_ns";
  out << '\n';
  auto fixed = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return std::string(buf);
  };
  for (const auto& r : rows) {
    out << kBenchSchema << ',' << kind_name(r.kind) << ',' << r.tau << ',' << r.tau_effective << ',' << r.n
        << ',' << r.stored_words << ','
        << fixed(static_cast<double>(r.stored_words) * static_cast<double>(r.tau) / static_cast<double>(r.n))
        << ',' << r.queries << ',' << r.max_char_comparisons << ',' << fixed(r.mean_char_comparisons) << ','
        << r.max_fp_evaluations << ',' << fixed(r.mean_fp_evaluations) << ',' << r.max_fp_extension_steps << ','
        << r.max_reduction_rounds << ',' << fixed(r.mean_reduction_rounds) << ',' << r.max_round_comparisons
        << ',' << r.long_path_queries << ',' << r.invariant_violations;
    if (timing) out << ',' << fixed(r.build_ms) << ',' << fixed(r.mean_query_ns);
    out << '\n';
  }
  return out.str();
}

}  // namespace lce
