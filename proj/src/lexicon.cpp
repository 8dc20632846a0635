#include "claro/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "claro/error.hpp"
#include "claro/unicode.hpp"

namespace claro {

namespace {

std::string_view trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Lowercased token surfaces of a phrase, tokenized like document text.
std::vector<std::string> phrase_words(std::string_view phrase) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(phrase)) out.push_back(t.lower);
  return out;
}

bool token_matches(std::string_view token_lower, std::string_view word, bool prefix) {
  if (!prefix) return token_lower == word;
  return token_lower.size() > word.size() && token_lower.compare(0, word.size(), word) == 0;
}

}  // namespace

void PhraseTable::add(PhraseEntry entry) {
  // A later entry with the same key replaces the earlier one.
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].words == entry.words && entries_[i].stem == entry.stem) {
      entries_[i] = std::move(entry);
      return;
    }
  }
  const std::size_t idx = entries_.size();
  if (entry.stem && entry.words.size() == 1) {
    stems_.push_back(idx);
  } else {
    by_first_.emplace(entry.words.front(), idx);
  }
  entries_.push_back(std::move(entry));
}

void PhraseTable::add_exclusion(std::vector<std::string> words) {
  if (std::find(exclusions_.begin(), exclusions_.end(), words) == exclusions_.end()) {
    exclusions_.push_back(std::move(words));
  }
}

const PhraseEntry* PhraseTable::find_word(std::string_view lower_word) const {
  for (auto [it, end] = by_first_.equal_range(lower_word); it != end; ++it) {
    const PhraseEntry& e = entries_[it->second];
    if (e.words.size() == 1) return &e;
  }
  for (std::size_t idx : stems_) {
    if (token_matches(lower_word, entries_[idx].words.front(), true)) return &entries_[idx];
  }
  return nullptr;
}

std::vector<PhraseMatch> PhraseTable::match(const std::vector<Token>& tokens) const {
  auto length_at = [&](const PhraseEntry& e, std::size_t i) -> std::size_t {
    if (i + e.words.size() > tokens.size()) return 0;
    for (std::size_t k = 0; k < e.words.size(); ++k) {
      const bool prefix = e.stem && k + 1 == e.words.size();
      if (!token_matches(tokens[i + k].lower, e.words[k], prefix) &&
          !(prefix && tokens[i + k].lower == e.words[k])) {
        return 0;
      }
    }
    return e.words.size();
  };

  // Spans covered by context exclusions.
  std::vector<Span> excluded;
  for (const auto& ex : exclusions_) {
    for (std::size_t i = 0; i + ex.size() <= tokens.size(); ++i) {
      bool ok = true;
      for (std::size_t k = 0; k < ex.size() && ok; ++k) ok = tokens[i + k].lower == ex[k];
      if (ok) excluded.push_back({tokens[i].span.start, tokens[i + ex.size() - 1].span.end});
    }
  }

  std::vector<PhraseMatch> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const PhraseEntry* best = nullptr;
    std::size_t best_len = 0;
    auto consider = [&](const PhraseEntry& e) {
      const std::size_t len = length_at(e, i);
      if (len > best_len) {
        best = &e;
        best_len = len;
      }
    };
    for (auto [it, end] = by_first_.equal_range(tokens[i].lower); it != end; ++it) {
      consider(entries_[it->second]);
    }
    // Multiword stem entries are indexed by their first word; single-word
    // stems need a prefix scan.
    for (std::size_t idx : stems_) consider(entries_[idx]);
    if (!best) {
      ++i;
      continue;
    }
    PhraseMatch m;
    m.first_token = i;
    m.last_token = i + best_len;
    m.span = {tokens[i].span.start, tokens[i + best_len - 1].span.end};
    m.entry = best;
    const bool suppressed = std::any_of(excluded.begin(), excluded.end(),
                                        [&](const Span& s) { return s.contains(m.span); });
    if (!suppressed) out.push_back(m);
    i += best_len;
  }
  return out;
}

const std::vector<std::string>& LexiconSet::table_names() {
  static const std::vector<std::string> kNames = {
      "subjectivity",       "transparent",        "difficult",
      "inaccurate",         "redundant",          "long_words",
      "superfluous",        "foreign",            "accepted_loanwords",
      "nominalization_exclusions", "false_participles", "irregular_participles",
      "acronym_exclusions", "acronym_glosses",    "number_words",
      "connectors",         "negation_markers",   "abbreviations",
      "future_subjunctive_exclusions", "gerund_exclusions", "infinitive_exclusions",
      "plural_verb_exclusions"};
  return kNames;
}

const LexiconSet& LexiconSet::defaults() {
  static const LexiconSet kDefaults = [] {
    LexiconSet set;
    for (const auto& name : table_names()) set.tables_[name];
    set.merge(default_lexicon_source(), "<embedded>");
    return set;
  }();
  return kDefaults;
}

LexiconSet LexiconSet::load(const std::vector<std::filesystem::path>& overrides) {
  LexiconSet set = defaults();
  for (const auto& path : overrides) set.merge_file(path);
  return set;
}

void LexiconSet::merge_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read lexicon file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  merge(buf.str(), path.string(), path.stem().string());
}

void LexiconSet::merge(std::string_view content, const std::string& origin,
                       const std::string& default_table) {
  std::string current = default_table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const auto nl = content.find('\n', pos);
    const std::string_view raw =
        content.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) { throw LexiconParseError(origin, line_no, why); };

    try {
      unicode::decode_utf8(line);
    } catch (const MalformedEncoding&) {
      fail("invalid UTF-8");
    }

    if (line.front() == '@') {
      const std::string_view rest = trim(line.substr(1));
      if (rest.substr(0, 5) != "table") fail("unknown directive");
      const std::string name(trim(rest.substr(5)));
      if (name.empty()) fail("@table needs a name");
      if (!tables_.contains(name)) fail("unknown table '" + name + "'");
      current = name;
      continue;
    }
    if (current.empty() || !tables_.contains(current)) {
      fail(current.empty() ? "entry before any @table directive"
                           : "unknown table '" + current + "'");
    }
    PhraseTable& table = tables_.find(current)->second;

    if (line.front() == '!') {
      auto words = phrase_words(trim(line.substr(1)));
      if (words.empty()) fail("empty exclusion phrase");
      table.add_exclusion(std::move(words));
      continue;
    }

    const auto tab = line.find('\t');
    std::string_view key = trim(line.substr(0, tab));
    PhraseEntry entry;
    if (!key.empty() && key.back() == '*') {
      entry.stem = true;
      key = trim(key.substr(0, key.size() - 1));
    }
    if (key.find('*') != std::string_view::npos) fail("'*' is only allowed at the end");
    entry.words = phrase_words(key);
    if (entry.words.empty()) fail("empty phrase");
    if (tab != std::string_view::npos) {
      const std::string_view repl = line.substr(tab + 1);
      if (repl.find('\t') != std::string_view::npos) fail("more than one tab");
      std::size_t start = 0;
      while (start <= repl.size()) {
        const auto bar = repl.find('|', start);
        const std::string_view alt =
            trim(repl.substr(start, bar == std::string_view::npos ? std::string_view::npos
                                                                   : bar - start));
        if (alt.empty()) fail("empty replacement");
        entry.replacements.emplace_back(alt);
        if (bar == std::string_view::npos) break;
        start = bar + 1;
      }
    }
    table.add(std::move(entry));
  }
}

bool LexiconSet::has_table(std::string_view name) const { return tables_.find(name) != tables_.end(); }

const PhraseTable& LexiconSet::table(std::string_view name) const {
  const auto it = tables_.find(name);
  if (it == tables_.end()) throw UnknownTable(std::string(name));
  return it->second;
}

std::optional<long> LexiconSet::number_value(std::string_view lower_word) const {
  const PhraseEntry* e = table("number_words").find_word(lower_word);
  if (!e || e->replacements.empty()) return std::nullopt;
  try {
    return std::stol(e->replacements.front());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

AbbreviationSet LexiconSet::abbreviations() const {
  AbbreviationSet out = default_abbreviations();
  for (const auto& e : table("abbreviations").entries()) {
    if (e.words.size() == 1) out.insert(e.words.front());
  }
  return out;
}

}  // namespace claro
