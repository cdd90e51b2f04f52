// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

// lce: build, query, benchmark and certify LCE structures from the shell.
//
// Exit codes: 0 success, 1 usage or input error, 2 oracle mismatch or failed
// invariant, 3 fingerprint collision (with --fail-on-collision).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "lce/lce.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitCollision = 3;

struct TextArgs {
  std::string file;
  std::string gen;
};

void add_text_options(CLI::App* cmd, TextArgs& args) {
  auto* f = cmd->add_option("--text", args.file, "Text file, one symbol per byte");
  auto* g = cmd->add_option("--gen", args.gen, "Generator, e.g. random:n=1024,sigma=2,seed=7");
  f->excludes(g);
}

std::string source_of(const TextArgs& args) {
  if (!args.file.empty()) return "file:" + args.file;
  if (!args.gen.empty()) return "gen:" + args.gen;
  throw CLI::ValidationError("one of --text or --gen is required");
}

std::shared_ptr<const lce::Text> load_text(const std::string& source) {
  if (source.rfind("file:", 0) == 0) return std::make_shared<const lce::Text>(lce::Text::from_file(source.substr(5)));
  if (source.rfind("gen:", 0) == 0) return std::make_shared<const lce::Text>(lce::generate(source.substr(4)));
  throw std::runtime_error("unknown text source '" + source + "'");
}

std::string checksum_hex(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json stats_json(const lce::QueryStats& s) {
  return {{"char_comparisons", s.char_comparisons},
          {"fp_evaluations", s.fp_evaluations},
          {"fp_extension_steps", s.fp_extension_steps},
          {"check_calls", s.check_calls},
          {"max_checks_per_length", s.max_checks_per_length},
          {"reduction_rounds", s.reduction_rounds},
          {"max_round_comparisons", s.max_round_comparisons},
          {"nearby_comparisons", s.nearby_comparisons},
          {"invariant_violations", s.invariant_violations},
          {"long_path", s.long_path}};
}

json structure_json(const lce::Structure& s) {
  json j = {{"structure", lce::kind_name(s.kind())},
            {"n", s.text().size()},
            {"tau", s.options().tau},
            {"tau_effective", s.effective_tau()},
            {"stored_words", s.stored_words()}};
  for (const auto& [k, v] : s.describe()) j[k] = v;
  return j;
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << body;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size()) throw CLI::ValidationError("bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest common extension structures: build, query, bench, verify, derand, generate"};
  app.require_subcommand(1);

  TextArgs text_args;
  std::size_t tau = 1;
  std::string structure = "det";
  std::uint64_t seed = 0;
  double eps = 0.5;
  double c = 1.0;
  std::string out;
  std::string format = "json";

  // build
  auto* build = app.add_subcommand("build", "Build a structure and write a dump plus a JSON sidecar");
  add_text_options(build, text_args);
  build->add_option("--tau", tau, "Trade-off parameter")->required();
  build->add_option("--structure", structure, "baseline|det|nearby|mc|lv|dc|combined|derand")->required();
  build->add_option("--seed", seed, "Random seed");
  build->add_option("--eps", eps, "Derandomization exponent");
  build->add_option("--c", c, "Fingerprint modulus slack, p ~ n^(4+c)");
  build->add_option("--out", out, "Dump path")->required();
  build->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // query
  std::string dump_path;
  std::size_t qi = 0, qj = 0;
  auto* query = app.add_subcommand("query", "Answer one query from a dump");
  query->add_option("dump", dump_path, "Dump path")->required();
  query->add_option("i", qi)->required();
  query->add_option("j", qj)->required();
  query->add_option("--text", text_args.file, "Text file when it moved since the build");

  // bench
  std::string tau_list = "16";
  std::string structure_list = "det,combined";
  std::size_t query_count = 1000;
  std::vector<std::string> pairs;
  std::string checks = "oracle";
  bool timing = false;
  auto* bench = app.add_subcommand("bench", "Run a query workload and print one row per (structure, tau)");
  add_text_options(bench, text_args);
  bench->add_option("--tau", tau_list, "Comma-separated tau values");
  bench->add_option("--structure", structure_list, "Comma-separated structure names");
  bench->add_option("--queries", query_count, "Random query count");
  bench->add_option("--pair", pairs, "Explicit query i,j (repeatable; replaces random queries)");
  bench->add_option("--seed", seed, "Seed for queries and randomized builds");
  bench->add_option("--eps", eps, "Derandomization exponent");
  bench->add_option("--checks", checks)->check(CLI::IsMember({"oracle", "invariants", "none"}));
  bench->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  bench->add_flag("--timing", timing, "Add wall-clock columns (not reproducible)");
  bench->add_option("--out", out, "Output path (default stdout)");

  // verify
  std::uint64_t forced_p = 0;
  std::vector<std::uint64_t> bases;
  bool fail_on_collision = false;
  auto* verify = app.add_subcommand("verify", "Check a fingerprint function for collisions");
  add_text_options(verify, text_args);
  verify->add_option("--tau", tau)->required();
  verify->add_option("--seed", seed, "Seed for the random function");
  verify->add_option("--c", c, "Fingerprint modulus slack");
  verify->add_option("--p", forced_p, "Explicit prime modulus (with --x)");
  verify->add_option("--x", bases, "Explicit base; repeat for a tuple");
  verify->add_flag("--fail-on-collision", fail_on_collision, "Exit with code 3 on a collision");
  verify->add_option("--out", out);

  // derand
  std::size_t chunk = 0;
  auto* derand = app.add_subcommand("derand", "Deterministically pick a collision-free fingerprint tuple");
  add_text_options(derand, text_args);
  derand->add_option("--tau", tau)->required();
  derand->add_option("--eps", eps);
  derand->add_option("--chunk", chunk, "Anchors per multiset pass (0 = all)");
  derand->add_option("--out", out);

  // generate
  std::string gen_spec;
  auto* generate = app.add_subcommand("generate", "Write a generated text as raw bytes");
  generate->add_option("--gen", gen_spec)->required();
  generate->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      const auto kind = lce::parse_kind(structure);
      if (!kind) throw CLI::ValidationError("unknown structure '" + structure + "'");
      const std::string source = source_of(text_args);
      const auto text = load_text(source);
      lce::BuildOptions o;
      o.tau = tau;
      o.seed = seed;
      o.eps = eps;
      o.c = c;
      const auto s = lce::build_structure(*kind, text, o);
      const lce::Dump d = s->to_dump(source);
      d.write(out);
      json side = structure_json(*s);
      side["text_source"] = source;
      side["checksum"] = checksum_hex(text->checksum());
      side["seed"] = seed;
      side["eps"] = eps;
      side["c"] = c;
      json sections = json::array();
      for (const auto& [name, words] : d.sections()) sections.push_back({{"name", name}, {"words", words.size()}});
      side["sections"] = sections;
      write_output(out + ".json", side.dump(2) + "\n");
      const json summary = structure_json(*s);
      if (format == "csv") {
        std::string header, row;
        for (const auto& [k, v] : summary.items()) {
          header += (header.empty() ? "" : ",") + k;
          row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        std::cout << header << "\n" << row << "\n";
      } else {
        std::cout << summary.dump() << "\n";
      }
      return 0;
    }

    if (*query) {
      const lce::Dump d = lce::Dump::read(dump_path);
      const auto header = lce::read_dump_header(d);
      const auto text = load_text(text_args.file.empty() ? header.source : "file:" + text_args.file);
      const auto s = lce::load_structure(d, text);
      lce::QueryStats stats;
      const lce::Answer a = s->query(qi, qj, stats);
      json j = {{"structure", lce::kind_name(s->kind())},
                {"i", qi},
                {"j", qj},
                {"answer", a.value},
                {"exact", a.exact},
                {"stats", stats_json(stats)}};
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*bench) {
      const auto text = load_text(source_of(text_args));
      lce::Workload w;
      w.taus = parse_list(tau_list);
      std::stringstream ss(structure_list);
      for (std::string name; std::getline(ss, name, ',');) {
        const auto k = lce::parse_kind(name);
        if (!k) throw CLI::ValidationError("unknown structure '" + name + "'");
        w.structures.push_back(*k);
      }
      for (const auto& p : pairs) {
        const auto v = parse_list(p);
        if (v.size() != 2) throw CLI::ValidationError("--pair expects i,j");
        w.queries.emplace_back(v[0], v[1]);
      }
      w.random_queries = pairs.empty() ? query_count : 0;
      w.seed = seed;
      w.checks = *lce::parse_check_mode(checks);
      w.build.seed = seed;
      w.build.eps = eps;
      w.timing = timing;
      const auto rows = lce::run_bench(text, w);
      if (format == "csv" || bench->count("--format") == 0) {  // tables default to CSV
        write_output(out, lce::bench_csv(rows, timing));
      } else {
        json arr = json::array();
        for (const auto& r : rows) {
          json j = {{"schema", lce::kBenchSchema},
                    {"structure", lce::kind_name(r.kind)},
                    {"tau", r.tau},
                    {"tau_effective", r.tau_effective},
                    {"n", r.n},
                    {"stored_words", r.stored_words},
                    {"queries", r.queries},
                    {"max_char_comparisons", r.max_char_comparisons},
                    {"mean_char_comparisons", r.mean_char_comparisons},
                    {"max_fp_evaluations", r.max_fp_evaluations},
                    {"mean_fp_evaluations", r.mean_fp_evaluations},
                    {"max_fp_extension_steps", r.max_fp_extension_steps},
                    {"max_reduction_rounds", r.max_reduction_rounds},
                    {"mean_reduction_rounds", r.mean_reduction_rounds},
                    {"max_round_comparisons", r.max_round_comparisons},
                    {"long_path_queries", r.long_path_queries},
                    {"invariant_violations", r.invariant_violations}};
          if (timing) {
            j["build_ms"] = r.build_ms;
            j["mean_query_ns"] = r.mean_query_ns;
          }
          arr.push_back(j);
        }
        write_output(out, arr.dump(2) + "\n");
      }
      return 0;
    }

    if (*verify) {
      const auto text = load_text(source_of(text_args));
      std::vector<lce::PhiParams> phis;
      if (forced_p != 0 || !bases.empty()) {
        if (forced_p == 0 || bases.empty()) throw CLI::ValidationError("--p and --x go together");
        for (auto x : bases) phis.emplace_back(forced_p, x);
      } else {
        phis.push_back(lce::pick_random_phi(text->size(), c, seed));
      }
      const auto report = lce::verify_phi(*text, tau, phis);
      json levels = json::array();
      for (const auto& l : report.levels) {
        levels.push_back(
            {{"length", l.length}, {"candidates", l.candidates}, {"symbols_compared", l.symbols_compared}});
      }
      json xs = json::array();
      for (const auto& f : phis) xs.push_back(f.x());
      json j = {{"n", text->size()},
                {"tau", tau},
                {"p", phis.front().p()},
                {"x", xs},
                {"collision_free", report.collision_free()},
                {"levels", levels}};
      if (report.collision) {
        j["collision"] = {{"block_position", report.collision->block_position},
                          {"position", report.collision->position},
                          {"length", report.collision->length}};
      }
      write_output(out, j.dump(2) + "\n");
      return report.collision_free() || !fail_on_collision ? 0 : kExitCollision;
    }

    if (*derand) {
      const auto text = load_text(source_of(text_args));
      const lce::BaselineIndex oracle(*text);
      const auto set = lce::mc_comparison_set(text->size(), tau);
      const auto r = lce::derandomize(*text, set.positions, set.lengths, eps,
                                      chunk == 0 ? set.positions.size() : chunk, oracle);
      json rounds = json::array();
      for (const auto& rd : r.rounds) {
        rounds.push_back({{"x", rd.x}, {"bases_tried", rd.bases_tried}, {"b_before", rd.b_before}, {"b_after", rd.b_after}});
      }
      json xs = json::array();
      for (const auto& f : r.tuple) xs.push_back(f.x());
      json j = {{"n", text->size()},
                {"tau", tau},
                {"eps", eps},
                {"p", r.tuple.front().p()},
                {"x", xs},
                {"max_components", r.max_components},
                {"comparisons", r.comparisons},
                {"b_id", r.b_id},
                {"b_final", r.b_final},
                {"rounds", rounds}};
      write_output(out, j.dump(2) + "\n");
      return 0;
    }

    if (*generate) {
      const lce::Text t = lce::generate(gen_spec);
      if (t.max_symbol() > 255) throw lce::PreconditionError("generate: symbols do not fit in bytes");
      write_output(out, t.to_string());
      return 0;
    }
  } catch (const lce::OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const lce::InvariantFailure& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
