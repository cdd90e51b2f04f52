// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Uniform handle over every LCE structure: build by name, query, count stored
// words, and round-trip through the dump container.

#include <array>
#include <bit>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lce/baseline.hpp"
#include "lce/dc.hpp"
#include "lce/derand.hpp"
#include "lce/det.hpp"
#include "lce/dump.hpp"
#include "lce/mc.hpp"
#include "lce/nearby.hpp"
#include "lce/text.hpp"
#include "lce/verify.hpp"

namespace lce {

enum class StructureKind : std::uint32_t {
  baseline = 1,
  det = 2,
  nearby = 3,
  mc = 4,
  lv = 5,
  dc = 6,
  combined = 7,
  derand = 8,
};

inline constexpr std::array<StructureKind, 8> kAllKinds = {
    StructureKind::baseline, StructureKind::det, StructureKind::nearby,   StructureKind::mc,
    StructureKind::lv,       StructureKind::dc,  StructureKind::combined, StructureKind::derand};

inline std::string_view kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::baseline: return "baseline";
    case StructureKind::det: return "det";
    case StructureKind::nearby: return "nearby";
    case StructureKind::mc: return "mc";
    case StructureKind::lv: return "lv";
    case StructureKind::dc: return "dc";
    case StructureKind::combined: return "combined";
    case StructureKind::derand: return "derand";
  }
  return "unknown";
}

inline std::optional<StructureKind> parse_kind(std::string_view name) {
  for (auto k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

struct BuildOptions {
  std::size_t tau = 1;
  std::uint64_t seed = 0;
  double c = 1.0;                // fingerprint modulus exponent slack, p ~ n^(4+c)
  double eps = 0.5;              // derandomization shrink exponent
  std::size_t max_trials = 32;   // Las Vegas trial budget
  std::size_t chunk = 0;         // derandomization space budget; 0 means |A|
};

struct Answer {
  std::size_t value;
  /// False for a difference-cover certificate: value is then an upper bound.
  bool exact = true;
};

class Structure {
 public:
  virtual ~Structure() = default;
  virtual StructureKind kind() const = 0;
  /// tau after any internal rounding.
  virtual std::size_t effective_tau() const = 0;
  virtual Answer query(std::size_t i, std::size_t j, QueryStats& stats) const = 0;
  virtual std::size_t stored_words() const = 0;
  /// Key/value metadata for reports (modulus, trials, ...).
  virtual std::vector<std::pair<std::string, std::string>> describe() const { return {}; }

  const Text& text() const { return *text_; }
  const BuildOptions& options() const { return options_; }

  /// Serializes into the dump container; `source` names the text.
  Dump to_dump(const std::string& source) const {
    Dump d(static_cast<std::uint32_t>(kind()));
    d.add("params", {text_->size(), options_.tau, text_->checksum(), options_.seed,
                     std::bit_cast<Word>(options_.c), std::bit_cast<Word>(options_.eps),
                     options_.max_trials, options_.chunk});
    d.add_string("text_source", source);
    save(d);
    return d;
  }

 protected:
  Structure(std::shared_ptr<const Text> text, BuildOptions options)
      : text_(std::move(text)), options_(options) {}
  virtual void save(Dump& d) const = 0;

  std::shared_ptr<const Text> text_;
  BuildOptions options_;
};

namespace structures_detail {

template <typename T>
std::vector<Word> widen(const std::vector<T>& v) {
  return std::vector<Word>(v.begin(), v.end());
}

inline std::vector<Index> narrow(const std::vector<Word>& v) {
  std::vector<Index> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > std::numeric_limits<Index>::max()) throw std::runtime_error("dump: index out of range");
    out[i] = static_cast<Index>(v[i]);
  }
  return out;
}

inline void put_packed(Dump& d, const std::string& name, const PackedVector& pv) {
  std::vector<Word> w{pv.size(), pv.width()};
  w.insert(w.end(), pv.words().begin(), pv.words().end());
  d.add(name, std::move(w));
}

inline PackedVector get_packed(const Dump& d, const std::string& name) {
  const auto& w = d.at(name);
  if (w.size() < 2 || w[1] > 64) throw std::runtime_error("dump: malformed packed section '" + name + "'");
  try {
    return PackedVector::from_words(w[0], static_cast<unsigned>(w[1]), {w.begin() + 2, w.end()});
  } catch (const PreconditionError& e) {
    throw std::runtime_error(std::string("dump: ") + e.what());
  }
}

inline void put_mc(Dump& d, const McStructure& mc, const std::string& prefix) {
  std::vector<Word> phi{mc.phis().front().p()};
  for (const auto& f : mc.phis()) phi.push_back(f.x());
  d.add(prefix + "phi", std::move(phi));
  d.add(prefix + "values", mc.values());
  d.add(prefix + "exponents", mc.exponents());
  d.add(prefix + "end_values", mc.end_values());
  d.add(prefix + "end_exponents", mc.end_exponents());
}

inline McStructure get_mc(const Dump& d, const Text& t, std::size_t tau, const std::string& prefix) {
  const auto& phi = d.at(prefix + "phi");
  if (phi.size() < 2) throw std::runtime_error("dump: malformed fingerprint section");
  std::vector<PhiParams> phis;
  for (std::size_t c = 1; c < phi.size(); ++c) phis.emplace_back(phi[0], phi[c]);
  return McStructure::from_parts(t, tau, std::move(phis), d.at(prefix + "values"), d.at(prefix + "exponents"),
                                 d.at(prefix + "end_values"), d.at(prefix + "end_exponents"));
}

inline void put_dc(Dump& d, const DcStructure& dc, const std::string& prefix) {
  put_packed(d, prefix + "fwd_rank", dc.forward().ranks());
  put_packed(d, prefix + "fwd_lcp", dc.forward().lcps());
  put_packed(d, prefix + "rev_rank", dc.reverse().ranks());
  put_packed(d, prefix + "rev_lcp", dc.reverse().lcps());
}

inline DcStructure get_dc(const Dump& d, const Text& t, std::size_t tau, const std::string& prefix) {
  return DcStructure::from_parts(
      t, tau, SampledLceOracle(get_packed(d, prefix + "fwd_rank"), get_packed(d, prefix + "fwd_lcp")),
      SampledLceOracle(get_packed(d, prefix + "rev_rank"), get_packed(d, prefix + "rev_lcp")));
}

inline std::string phi_text(const std::vector<PhiParams>& phis) {
  std::string s;
  for (const auto& f : phis) s += (s.empty() ? "" : " ") + std::to_string(f.x());
  return s;
}

class BaselineImpl final : public Structure {
 public:
  BaselineImpl(std::shared_ptr<const Text> t, BuildOptions o, BaselineIndex index)
      : Structure(std::move(t), o), index_(std::move(index)) {}
  StructureKind kind() const override { return StructureKind::baseline; }
  std::size_t effective_tau() const override { return options_.tau; }
  Answer query(std::size_t i, std::size_t j, QueryStats&) const override { return {index_.lce(i, j)}; }
  std::size_t stored_words() const override { return index_.stored_words(); }
  void save(Dump& d) const override {
    d.add("fwd_sa", widen(index_.forward().sa()));
    d.add("fwd_lcp", widen(index_.forward().lcp()));
    d.add("rev_sa", widen(index_.reverse().sa()));
    d.add("rev_lcp", widen(index_.reverse().lcp()));
  }

 private:
  BaselineIndex index_;
};

class DetImpl final : public Structure {
 public:
  DetImpl(std::shared_ptr<const Text> t, BuildOptions o, DetStructure ds)
      : Structure(std::move(t), o), ds_(std::move(ds)) {}
  StructureKind kind() const override { return StructureKind::det; }
  std::size_t effective_tau() const override { return ds_.tau(); }
  Answer query(std::size_t i, std::size_t j, QueryStats& s) const override { return {ds_.query(i, j, s)}; }
  std::size_t stored_words() const override { return ds_.stored_words(); }
  void save(Dump& d) const override {
    d.add("node_offsets", ds_.node_offsets());
    d.add("partners", ds_.partners());
    d.add("lengths", ds_.lengths());
    d.add("periods", ds_.nearby().periods());
    d.add("runs", ds_.nearby().runs());
  }
  const DetStructure& get() const { return ds_; }

 private:
  DetStructure ds_;
};

class NearbyImpl final : public Structure {
 public:
  NearbyImpl(std::shared_ptr<const Text> t, BuildOptions o, NearbyStructure ns)
      : Structure(std::move(t), o), ns_(std::move(ns)) {}
  StructureKind kind() const override { return StructureKind::nearby; }
  std::size_t effective_tau() const override { return ns_.tau(); }
  Answer query(std::size_t i, std::size_t j, QueryStats& s) const override { return {ns_.query(i, j, s)}; }
  std::size_t stored_words() const override { return ns_.stored_words(); }
  void save(Dump& d) const override {
    d.add("periods", ns_.periods());
    d.add("runs", ns_.runs());
  }

 private:
  NearbyStructure ns_;
};

/// Monte Carlo, Las Vegas and derandomized builds share one query path.
class McImpl final : public Structure {
 public:
  McImpl(std::shared_ptr<const Text> t, BuildOptions o, StructureKind kind, McStructure ms,
         std::vector<std::pair<std::string, std::string>> info, std::vector<Word> extra)
      : Structure(std::move(t), o), kind_(kind), ms_(std::move(ms)), info_(std::move(info)),
        extra_(std::move(extra)) {}
  StructureKind kind() const override { return kind_; }
  std::size_t effective_tau() const override { return ms_.tau(); }
  Answer query(std::size_t i, std::size_t j, QueryStats& s) const override { return {ms_.query(i, j, s)}; }
  std::size_t stored_words() const override { return ms_.stored_words(); }
  std::vector<std::pair<std::string, std::string>> describe() const override {
    auto out = info_;
    out.emplace_back("p", std::to_string(ms_.phis().front().p()));
    out.emplace_back("x", phi_text(ms_.phis()));
    out.emplace_back("samples", std::to_string(ms_.sample_count()));
    return out;
  }
  void save(Dump& d) const override {
    put_mc(d, ms_, "");
    d.add("build_info", extra_);
  }
  const McStructure& get() const { return ms_; }

 private:
  StructureKind kind_;
  McStructure ms_;
  std::vector<std::pair<std::string, std::string>> info_;
  std::vector<Word> extra_;
};

class DcImpl final : public Structure {
 public:
  DcImpl(std::shared_ptr<const Text> t, BuildOptions o, DcStructure dc)
      : Structure(std::move(t), o), dc_(std::move(dc)) {}
  StructureKind kind() const override { return StructureKind::dc; }
  std::size_t effective_tau() const override { return dc_.tau(); }
  Answer query(std::size_t i, std::size_t j, QueryStats& s) const override {
    const DcAnswer a = dc_.query(i, j);
    s.long_path = a.exact;
    return {a.value, a.exact};
  }
  std::size_t stored_words() const override { return dc_.stored_words(); }
  std::vector<std::pair<std::string, std::string>> describe() const override {
    return {{"samples", std::to_string(dc_.sample_count())}};
  }
  void save(Dump& d) const override { put_dc(d, dc_, ""); }

 private:
  DcStructure dc_;
};

class CombinedImpl final : public Structure {
 public:
  CombinedImpl(std::shared_ptr<const Text> t, BuildOptions o, CombinedStructure cs, std::size_t trials)
      : Structure(std::move(t), o), cs_(std::move(cs)), trials_(trials) {}
  StructureKind kind() const override { return StructureKind::combined; }
  std::size_t effective_tau() const override { return cs_.mc().tau(); }
  Answer query(std::size_t i, std::size_t j, QueryStats& s) const override { return {cs_.query(i, j, s)}; }
  std::size_t stored_words() const override { return cs_.stored_words(); }
  std::vector<std::pair<std::string, std::string>> describe() const override {
    return {{"trials", std::to_string(trials_)},
            {"p", std::to_string(cs_.mc().phis().front().p())},
            {"x", phi_text(cs_.mc().phis())}};
  }
  void save(Dump& d) const override {
    put_dc(d, cs_.dc(), "dc.");
    put_mc(d, cs_.mc(), "mc.");
    d.add("build_info", {trials_});
  }

 private:
  CombinedStructure cs_;
  std::size_t trials_;
};

}  // namespace structures_detail

/// Builds a structure over `text`. `oracle` is used for construction where
/// needed and built on demand when absent.
inline std::unique_ptr<Structure> build_structure(StructureKind kind, std::shared_ptr<const Text> text,
                                                  const BuildOptions& o,
                                                  const BaselineIndex* oracle = nullptr) {
  using namespace structures_detail;
  const Text& t = *text;
  detail::require(o.tau >= 1 && o.tau <= t.size(), "build: tau outside [1, n]");
  std::optional<BaselineIndex> own;
  auto base = [&]() -> const BaselineIndex& {
    if (oracle != nullptr) return *oracle;
    if (!own) own.emplace(t);
    return *own;
  };
  const LasVegasOptions lv{o.c, o.max_trials, std::nullopt};
  switch (kind) {
    case StructureKind::baseline:
      return std::make_unique<BaselineImpl>(text, o, BaselineIndex(t));
    case StructureKind::det:
      return std::make_unique<DetImpl>(text, o, DetStructure::build(t, o.tau, base()));
    case StructureKind::nearby:
      return std::make_unique<NearbyImpl>(text, o, NearbyStructure::build(t, o.tau));
    case StructureKind::mc: {
      auto ms = McStructure::build(t, o.tau, pick_random_phi(t.size(), o.c, o.seed));
      return std::make_unique<McImpl>(text, o, kind, std::move(ms),
                                      std::vector<std::pair<std::string, std::string>>{}, std::vector<Word>{});
    }
    case StructureKind::lv: {
      auto r = build_las_vegas(t, o.tau, o.seed, lv, &base());
      return std::make_unique<McImpl>(
          text, o, kind, std::move(r.structure),
          std::vector<std::pair<std::string, std::string>>{{"trials", std::to_string(r.trials)}},
          std::vector<Word>{r.trials});
    }
    case StructureKind::dc:
      return std::make_unique<DcImpl>(text, o, DcStructure::build(t, o.tau, base()));
    case StructureKind::combined: {
      auto r = build_las_vegas(t, o.tau, o.seed, lv, &base());
      CombinedStructure cs(DcStructure::build(t, o.tau, base()), std::move(r.structure));
      return std::make_unique<CombinedImpl>(text, o, std::move(cs), r.trials);
    }
    case StructureKind::derand: {
      auto r = build_derand_mc(t, o.tau, o.eps, base(), o.chunk);
      std::vector<Word> extra{r.derand.b_id, r.derand.comparisons, r.derand.rounds.size()};
      std::vector<std::pair<std::string, std::string>> info{
          {"components", std::to_string(r.derand.tuple.size())},
          {"b_id", std::to_string(r.derand.b_id)},
          {"comparisons", std::to_string(r.derand.comparisons)}};
      return std::make_unique<McImpl>(text, o, kind, std::move(r.structure), std::move(info), std::move(extra));
    }
  }
  throw PreconditionError("build: unknown structure kind");
}

struct DumpHeader {
  StructureKind kind;
  BuildOptions options;
  std::size_t n;
  std::uint64_t checksum;
  std::string source;
};

inline DumpHeader read_dump_header(const Dump& d) {
  const auto& p = d.at("params");
  if (p.size() != 8) throw std::runtime_error("dump: malformed params section");
  bool known = false;
  for (auto k : kAllKinds) known = known || static_cast<std::uint32_t>(k) == d.kind();
  if (!known) throw std::runtime_error("dump: unknown structure kind " + std::to_string(d.kind()));
  BuildOptions o;
  o.tau = p[1];
  o.seed = p[3];
  o.c = std::bit_cast<double>(p[4]);
  o.eps = std::bit_cast<double>(p[5]);
  o.max_trials = p[6];
  o.chunk = p[7];
  return {static_cast<StructureKind>(d.kind()), o, p[0], p[2], d.string_at("text_source")};
}

/// Restores a structure from a dump over the text it was built for.
inline std::unique_ptr<Structure> load_structure(const Dump& d, std::shared_ptr<const Text> text) {
  using namespace structures_detail;
  const DumpHeader h = read_dump_header(d);
  const Text& t = *text;
  if (h.n != t.size() || h.checksum != t.checksum()) {
    throw std::runtime_error("dump: text does not match the dumped checksum");
  }
  const auto& o = h.options;
  try {
    switch (h.kind) {
      case StructureKind::baseline: {
        const auto rev = t.symbols();
        std::vector<Symbol> r(rev.rbegin(), rev.rend());
        SuffixIndex fwd(t.symbols(), narrow(d.at("fwd_sa")), narrow(d.at("fwd_lcp")));
        SuffixIndex bwd(r, narrow(d.at("rev_sa")), narrow(d.at("rev_lcp")));
        return std::make_unique<BaselineImpl>(text, o, BaselineIndex(t, std::move(fwd), std::move(bwd)));
      }
      case StructureKind::det: {
        auto ns = NearbyStructure::from_parts(t, o.tau, d.at("periods"), d.at("runs"));
        auto ds = DetStructure::from_parts(t, o.tau, d.at("node_offsets"), d.at("partners"), d.at("lengths"),
                                           std::move(ns));
        return std::make_unique<DetImpl>(text, o, std::move(ds));
      }
      case StructureKind::nearby:
        return std::make_unique<NearbyImpl>(text, o,
                                            NearbyStructure::from_parts(t, o.tau, d.at("periods"), d.at("runs")));
      case StructureKind::mc:
      case StructureKind::lv:
      case StructureKind::derand: {
        std::vector<std::pair<std::string, std::string>> info;
        const auto& extra = d.at("build_info");
        if (h.kind == StructureKind::lv && extra.size() == 1) info.emplace_back("trials", std::to_string(extra[0]));
        if (h.kind == StructureKind::derand && extra.size() == 3) {
          info.emplace_back("b_id", std::to_string(extra[0]));
          info.emplace_back("comparisons", std::to_string(extra[1]));
        }
        return std::make_unique<McImpl>(text, o, h.kind, get_mc(d, t, o.tau, ""), std::move(info), extra);
      }
      case StructureKind::dc:
        return std::make_unique<DcImpl>(text, o, get_dc(d, t, o.tau, ""));
      case StructureKind::combined: {
        const auto& extra = d.at("build_info");
        if (extra.size() != 1) throw std::runtime_error("dump: malformed build_info");
        CombinedStructure cs(get_dc(d, t, o.tau, "dc."), get_mc(d, t, o.tau, "mc."));
        return std::make_unique<CombinedImpl>(text, o, std::move(cs), extra[0]);
      }
    }
  } catch (const PreconditionError& e) {
    throw std::runtime_error(std::string("dump: inconsistent structure: ") + e.what());
  }
  throw std::runtime_error("dump: unknown structure kind");
}

}  // namespace lce
