#pragma once

// Word and phrase tables behind the lexical rules and the exclusion lists.
//
// Table file format (UTF-8, one entry per line):
//   # comment
//   @table difficult              switch the target table
//   de acuerdo con<TAB>según      phrase with replacement
//   si<TAB>en caso de|siempre que  alternative replacements
//   efectu*<TAB>realizar          trailing '*': last word matches as a prefix
//   débito<TAB>deuda
//   !tarjeta de débito            context exclusion for the current table
//   hecho                         bare phrase

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "claro/textmodel.hpp"

namespace claro {

struct PhraseEntry {
  std::vector<std::string> words;  // lowercased token surfaces
  bool stem = false;
  std::vector<std::string> replacements;
};

struct PhraseMatch {
  Span span;
  std::size_t first_token = 0;  // index into Sentence::tokens
  std::size_t last_token = 0;   // exclusive
  const PhraseEntry* entry = nullptr;
};

class PhraseTable {
 public:
  void add(PhraseEntry entry);
  void add_exclusion(std::vector<std::string> words);

  const std::vector<PhraseEntry>& entries() const noexcept { return entries_; }
  const std::vector<std::vector<std::string>>& exclusions() const noexcept { return exclusions_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Single-word lookup (exact or stem), case-insensitive.
  const PhraseEntry* find_word(std::string_view lower_word) const;
  bool contains(std::string_view lower_word) const { return find_word(lower_word) != nullptr; }

  /// Leftmost-longest matches over consecutive tokens, minus excluded contexts.
  std::vector<PhraseMatch> match(const std::vector<Token>& tokens) const;

 private:
  std::vector<PhraseEntry> entries_;
  std::vector<std::vector<std::string>> exclusions_;
  std::multimap<std::string, std::size_t, std::less<>> by_first_;
  std::vector<std::size_t> stems_;  // single-word stem entries
};

class LexiconSet {
 public:
  /// Names of every table the rules consult.
  static const std::vector<std::string>& table_names();

  /// Embedded seed tables.
  static const LexiconSet& defaults();

  /// Defaults with override files merged on top, in order.
  static LexiconSet load(const std::vector<std::filesystem::path>& overrides);

  /// Merges entries in the table file format. `default_table` applies until
  /// the first @table directive; `origin` is used in error messages.
  void merge(std::string_view content, const std::string& origin,
             const std::string& default_table = {});
  void merge_file(const std::filesystem::path& path);

  bool has_table(std::string_view name) const;
  const PhraseTable& table(std::string_view name) const;

  std::vector<PhraseMatch> match_phrases(const Sentence& sentence, std::string_view table) const {
    return this->table(table).match(sentence.tokens);
  }
  bool contains(std::string_view table, std::string_view lower_word) const {
    return this->table(table).contains(lower_word);
  }
  /// Value of a spelled-out number word, if known.
  std::optional<long> number_value(std::string_view lower_word) const;

  AbbreviationSet abbreviations() const;

 private:
  std::map<std::string, PhraseTable, std::less<>> tables_;
};

/// Embedded default table text (same format as override files).
std::string_view default_lexicon_source();

}  // namespace claro
