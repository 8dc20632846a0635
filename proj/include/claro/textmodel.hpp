#pragma once

// Structured view of a text: blocks (paragraphs, headings, list items),
// sentences and tokens, all anchored to code point offsets of Document::text.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace claro {

/// Half-open range of code point offsets.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start; }
  bool empty() const noexcept { return start == end; }
  bool contains(const Span& other) const noexcept {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const Span& other) const noexcept {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

enum class Shape { lowercase, capitalized, all_caps, mixed, non_alpha };

struct Token {
  std::string surface;
  std::string lower;
  Span span;
  bool is_word = false;
  Shape shape = Shape::non_alpha;
};

struct Sentence {
  std::vector<Token> tokens;
  Span span;
  std::size_t word_count = 0;
};

enum class BlockKind { paragraph, heading, list_item, list_intro };

struct Block {
  BlockKind kind = BlockKind::paragraph;
  int level = 0;  // heading level 1..6, 0 otherwise
  std::vector<Sentence> sentences;
  /// Whole block including any structural marker ("- ", "## ").
  Span span;
  /// Block text without the structural marker.
  Span content;
  /// Markup-provided expansions, keyed by acronym surface.
  std::map<std::string, std::string> html_attrs;

  std::size_t word_count() const noexcept;
};

enum class SourceFormat { plain, html };

/// Byte range in the original source for one code point of Document::text.
struct SourceRange {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Document {
  std::u32string text;
  std::vector<Block> blocks;
  SourceFormat source_format = SourceFormat::plain;
  /// One entry per code point of `text` (html only; empty for plain text).
  std::vector<SourceRange> source_map;

  std::string slice(Span span) const;
  std::size_t word_count() const noexcept;
  /// Maps a text span to source bytes; only meaningful for html documents.
  SourceRange source_span(Span span) const;
};

using AbbreviationSet = std::set<std::string, std::less<>>;

/// Seed list of abbreviations whose trailing period never ends a sentence.
/// Entries are lowercase and carry no period.
const AbbreviationSet& default_abbreviations();

Document parse_plain(std::string_view utf8_text,
                     const AbbreviationSet& abbreviations = default_abbreviations());

/// Parses HTML bytes. Throws MalformedEncoding when the bytes cannot be decoded.
Document parse_html(std::string_view html_bytes,
                    const AbbreviationSet& abbreviations = default_abbreviations());

/// Sentence spans relative to `block_text` (trimmed, non-empty, ordered).
std::vector<Span> segment_sentences(std::u32string_view block_text,
                                    const AbbreviationSet& abbreviations = default_abbreviations());

/// Tokens of `text`; spans are offset by `base`.
std::vector<Token> tokenize(std::u32string_view text, std::size_t base = 0);
std::vector<Token> tokenize(std::string_view utf8_text);

Shape classify_shape(std::u32string_view surface);

}  // namespace claro
