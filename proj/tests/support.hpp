#pragma once

// Fixture access shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "claro/dataset.hpp"
#include "claro/lexicon.hpp"
#include "claro/rules.hpp"
#include "claro/textmodel.hpp"

#ifndef CLARO_FIXTURE_DIR
#error "CLARO_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace claro::testing {

inline std::filesystem::path fixture(std::string_view relative) {
  return std::filesystem::path(CLARO_FIXTURE_DIR) / relative;
}

inline std::string fixture_text(std::string_view relative) { return read_file(fixture(relative)); }

inline Document load_fixture(std::string_view relative) {
  const auto path = fixture(relative);
  const std::string bytes = read_file(path);
  const auto ext = path.extension().string();
  return ext == ".html" ? parse_html(bytes) : parse_plain(bytes);
}

inline std::vector<Diagnostic> lint_fixture(std::string_view relative, Profile profile, int threads = 0) {
  return lint(load_fixture(relative), RuleConfig::for_profile(profile), LexiconSet::defaults(), threads);
}

inline std::vector<Diagnostic> lint_text(std::string_view text, Profile profile) {
  return lint(parse_plain(text), RuleConfig::for_profile(profile), LexiconSet::defaults());
}

inline std::size_t count_rule(const std::vector<Diagnostic>& diags, std::string_view rule) {
  return static_cast<std::size_t>(
      std::count_if(diags.begin(), diags.end(), [&](const Diagnostic& d) { return d.rule_id == rule; }));
}

/// Every fixture file below `sub` (recursive), sorted, optionally filtered by extension.
inline std::vector<std::string> fixture_files(std::string_view sub = {}, std::string_view ext = {}) {
  std::vector<std::string> out;
  const auto root = std::filesystem::path(CLARO_FIXTURE_DIR);
  for (const auto& e : std::filesystem::recursive_directory_iterator(root / sub)) {
    if (!e.is_regular_file()) continue;
    const auto x = e.path().extension().string();
    if (x != ".txt" && x != ".html") continue;
    if (!ext.empty() && x != ext) continue;
    out.push_back(std::filesystem::relative(e.path(), root).generic_string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// "a b c ..." with exactly `n` words and no connectors, commas or -ción nouns.
inline std::string synthetic_sentence(std::size_t n, std::size_t seed = 0) {
  static const char* kWords[] = {"revisa", "el", "libro", "nuevo", "en", "casa", "con", "calma",
                                 "cada", "tarde", "junto", "al", "patio", "verde", "del", "barrio"};
  std::string s = "Ana";
  for (std::size_t i = 1; i < n; ++i) {
    s += ' ';
    s += kWords[(i + seed) % std::size(kWords)];
  }
  return s + ".";
}

}  // namespace claro::testing
