// Copyright 2026 The lce-tradeoffs Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Binary structure container:
//
//   "LCEDUMP1"  u32 version  u32 kind  u32 section_count
//   per section: u32 name_length, name bytes, u64 word_count, words
//
// All integers are little-endian. Sections keep insertion order so a rebuild
// with the same inputs writes the same bytes.

#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lce/common.hpp"

namespace lce {

inline constexpr char kDumpMagic[8] = {'L', 'C', 'E', 'D', 'U', 'M', 'P', '1'};
inline constexpr std::uint32_t kDumpVersion = 1;

class Dump {
 public:
  Dump() = default;
  explicit Dump(std::uint32_t kind) : kind_(kind) {}

  std::uint32_t kind() const { return kind_; }
  const std::vector<std::pair<std::string, std::vector<Word>>>& sections() const { return sections_; }

  void add(std::string name, std::vector<Word> words) {
    detail::require(!find(name), "Dump: duplicate section name");
    sections_.emplace_back(std::move(name), std::move(words));
  }

  void add_string(std::string name, const std::string& s) {
    std::vector<Word> words{s.size()};
    for (std::size_t i = 0; i < s.size(); i += 8) {
      Word w = 0;
      for (std::size_t b = 0; b < 8 && i + b < s.size(); ++b) {
        w |= Word{static_cast<unsigned char>(s[i + b])} << (8 * b);
      }
      words.push_back(w);
    }
    add(std::move(name), std::move(words));
  }

  const std::vector<Word>* find(const std::string& name) const {
    for (const auto& [key, words] : sections_) {
      if (key == name) return &words;
    }
    return nullptr;
  }

  const std::vector<Word>& at(const std::string& name) const {
    const auto* w = find(name);
    if (w == nullptr) throw std::runtime_error("dump: missing section '" + name + "'");
    return *w;
  }

  std::string string_at(const std::string& name) const {
    const auto& words = at(name);
    if (words.empty() || (words[0] + 7) / 8 != words.size() - 1) {
      throw std::runtime_error("dump: malformed string section '" + name + "'");
    }
    std::string s(words[0], '\0');
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<char>(words[1 + i / 8] >> (8 * (i % 8)));
    return s;
  }

  std::string serialize() const {
    std::string out(kDumpMagic, sizeof kDumpMagic);
    auto put32 = [&](std::uint32_t v) {
      for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>(v >> (8 * b)));
    };
    auto put64 = [&](std::uint64_t v) {
      for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>(v >> (8 * b)));
    };
    put32(kDumpVersion);
    put32(kind_);
    put32(static_cast<std::uint32_t>(sections_.size()));
    for (const auto& [name, words] : sections_) {
      put32(static_cast<std::uint32_t>(name.size()));
      out += name;
      put64(words.size());
      for (Word w : words) put64(w);
    }
    return out;
  }

  static Dump parse(const std::string& bytes) {
    std::size_t pos = 0;
    auto need = [&](std::size_t count) {
      if (bytes.size() - pos < count) throw std::runtime_error("dump: truncated file");
    };
    auto get32 = [&] {
      need(4);
      std::uint32_t v = 0;
      for (int b = 0; b < 4; ++b) v |= std::uint32_t{static_cast<unsigned char>(bytes[pos++])} << (8 * b);
      return v;
    };
    auto get64 = [&] {
      need(8);
      std::uint64_t v = 0;
      for (int b = 0; b < 8; ++b) v |= std::uint64_t{static_cast<unsigned char>(bytes[pos++])} << (8 * b);
      return v;
    };
    need(sizeof kDumpMagic);
    if (std::memcmp(bytes.data(), kDumpMagic, sizeof kDumpMagic) != 0) {
      throw std::runtime_error("dump: bad magic");
    }
    pos = sizeof kDumpMagic;
    if (const auto version = get32(); version != kDumpVersion) {
      throw std::runtime_error("dump: unsupported version " + std::to_string(version));
    }
    Dump d(get32());
    const std::uint32_t count = get32();
    for (std::uint32_t s = 0; s < count; ++s) {
      const std::uint32_t len = get32();
      need(len);
      std::string name = bytes.substr(pos, len);
      pos += len;
      const std::uint64_t words = get64();
      if (words > (bytes.size() - pos) / 8) throw std::runtime_error("dump: truncated file");
      std::vector<Word> data(words);
      for (auto& w : data) w = get64();
      if (d.find(name)) throw std::runtime_error("dump: duplicate section '" + name + "'");
      d.sections_.emplace_back(std::move(name), std::move(data));
    }
    if (pos != bytes.size()) throw std::runtime_error("dump: trailing bytes");
    return d;
  }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const std::string bytes = serialize();
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
  }

  static Dump read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dump: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

 private:
  std::uint32_t kind_ = 0;
  std::vector<std::pair<std::string, std::vector<Word>>> sections_;
};

}  // namespace lce
