#include "claro/textmodel.hpp"

#include <algorithm>

#include "claro/unicode.hpp"

namespace claro {

namespace uc = unicode;

namespace {

bool is_word_joiner(char32_t c) { return c == U'-' || c == U'\'' || c == U'’'; }

bool is_terminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?' || c == U'…'; }

bool is_closer(char32_t c) {
  return c == U'"' || c == U'\'' || c == U'»' || c == U'”' || c == U'’' ||
         c == U')' || c == U']';
}

Span trim(std::u32string_view text, std::size_t start, std::size_t end) {
  while (start < end && uc::is_space(text[start])) ++start;
  while (end > start && uc::is_space(text[end - 1])) --end;
  return {start, end};
}

std::vector<Sentence> build_sentences(std::u32string_view text, Span content,
                                      const AbbreviationSet& abbreviations) {
  std::vector<Sentence> out;
  const auto block_text = text.substr(content.start, content.size());
  for (const Span& rel : segment_sentences(block_text, abbreviations)) {
    Sentence s;
    s.span = {content.start + rel.start, content.start + rel.end};
    s.tokens = tokenize(text.substr(s.span.start, s.span.size()), s.span.start);
    s.word_count = static_cast<std::size_t>(
        std::count_if(s.tokens.begin(), s.tokens.end(), [](const Token& t) { return t.is_word; }));
    out.push_back(std::move(s));
  }
  return out;
}

// Length of a list marker plus its trailing space at text[pos..end), or 0.
std::size_t list_marker_length(std::u32string_view text, std::size_t pos, std::size_t end) {
  auto followed_by_space = [&](std::size_t i) {
    return i < end && uc::is_space(text[i]);
  };
  const char32_t c = text[pos];
  if (c == U'-' || c == U'*' || c == U'•') {
    return followed_by_space(pos + 1) ? 2 : 0;
  }
  if (uc::is_digit(c)) {
    std::size_t i = pos;
    while (i < end && uc::is_digit(text[i])) ++i;
    if (i < end && text[i] == U'.' && followed_by_space(i + 1)) return i + 2 - pos;
    return 0;
  }
  if (uc::is_letter(c) && pos + 1 < end && text[pos + 1] == U')' && followed_by_space(pos + 2)) {
    return 3;
  }
  return 0;
}

std::size_t heading_marker_level(std::u32string_view text, std::size_t pos, std::size_t end) {
  std::size_t i = pos;
  while (i < end && text[i] == U'#') ++i;
  const std::size_t level = i - pos;
  if (level == 0 || level > 6 || i >= end || !uc::is_space(text[i])) return 0;
  return level;
}

}  // namespace

std::size_t Block::word_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.word_count;
  return n;
}

std::string Document::slice(Span span) const {
  const std::size_t end = std::min(span.end, text.size());
  const std::size_t start = std::min(span.start, end);
  return uc::encode_utf8(std::u32string_view(text).substr(start, end - start));
}

std::size_t Document::word_count() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.word_count();
  return n;
}

SourceRange Document::source_span(Span span) const {
  if (source_map.empty() || span.start >= source_map.size()) return {};
  if (span.empty()) return {source_map[span.start].begin, source_map[span.start].begin};
  const std::size_t last = std::min(span.end, source_map.size()) - 1;
  return {source_map[span.start].begin, std::max(source_map[span.start].begin, source_map[last].end)};
}

const AbbreviationSet& default_abbreviations() {
  static const AbbreviationSet kSeed = {
      "art", "arts", "núm", "núms", "pág", "págs", "sr", "sres", "sra", "sras", "srta", "dña",
      "dª",  "dr",   "dra", "ud",   "uds", "apdo", "aprox", "tel", "ej", "vol", "cap", "admón"};
  return kSeed;
}

Shape classify_shape(std::u32string_view surface) {
  std::size_t letters = 0;
  std::size_t upper = 0;
  bool first_upper = false;
  bool rest_lower = true;
  for (char32_t c : surface) {
    if (!uc::is_letter(c)) continue;
    const bool up = uc::is_upper(c);
    if (letters == 0) {
      first_upper = up;
    } else if (up) {
      rest_lower = false;
    }
    if (up) ++upper;
    ++letters;
  }
  if (letters == 0) return Shape::non_alpha;
  if (upper == 0) return Shape::lowercase;
  if (upper == letters) return letters >= 2 ? Shape::all_caps : Shape::capitalized;
  if (first_upper && rest_lower) return Shape::capitalized;
  return Shape::mixed;
}

std::vector<Token> tokenize(std::u32string_view text, std::size_t base) {
  std::vector<Token> out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t c = text[i];
    if (uc::is_space(c)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    const bool word = uc::is_alnum(c);
    if (word) {
      while (j < n && uc::is_alnum(text[j])) ++j;
      for (;;) {
        if (j + 1 < n && is_word_joiner(text[j]) && uc::is_alnum(text[j + 1])) {
          j += 1;
          while (j < n && uc::is_alnum(text[j])) ++j;
        } else if (j + 1 < n && (text[j] == U'.' || text[j] == U',') &&
                   uc::is_digit(text[j - 1]) && uc::is_digit(text[j + 1])) {
          j += 1;
          while (j < n && uc::is_digit(text[j])) ++j;
        } else {
          break;
        }
      }
    } else {
      while (j < n && text[j] == c) ++j;
    }
    Token t;
    const auto surface = text.substr(i, j - i);
    t.surface = uc::encode_utf8(surface);
    std::u32string lowered(surface);
    for (auto& ch : lowered) ch = uc::to_lower(ch);
    t.lower = uc::encode_utf8(lowered);
    t.span = {base + i, base + j};
    t.is_word = word;
    t.shape = classify_shape(surface);
    out.push_back(std::move(t));
    i = j;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view utf8_text) {
  return tokenize(uc::decode_utf8(utf8_text), 0);
}

std::vector<Span> segment_sentences(std::u32string_view text,
                                    const AbbreviationSet& abbreviations) {
  std::vector<Span> out;
  const std::size_t n = text.size();
  std::size_t start = 0;
  std::size_t i = 0;
  auto emit = [&](std::size_t end) {
    const Span s = trim(text, start, end);
    if (!s.empty()) out.push_back(s);
    start = end;
  };
  while (i < n) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_terminal(text[j])) ++j;
    std::size_t k = j;
    while (k < n && is_closer(text[k])) ++k;
    if (k < n && !uc::is_space(text[k])) {
      i = k;
      continue;
    }
    bool abbreviation = false;
    if (text[i] == U'.' && j == i + 1) {
      std::size_t w = i;
      while (w > 0 && uc::is_letter(text[w - 1])) --w;
      if (w < i) {
        std::u32string word(text.substr(w, i - w));
        for (auto& ch : word) ch = uc::to_lower(ch);
        abbreviation = abbreviations.contains(uc::encode_utf8(word));
      }
    }
    if (!abbreviation) emit(k);
    i = k;
  }
  emit(n);
  return out;
}

Document parse_plain(std::string_view utf8_text, const AbbreviationSet& abbreviations) {
  Document doc;
  doc.text = uc::decode_utf8(utf8_text);
  const std::u32string_view text = doc.text;
  const std::size_t n = text.size();

  Span paragraph{};
  bool in_paragraph = false;
  auto flush_paragraph = [&] {
    if (!in_paragraph) return;
    Block b;
    b.kind = BlockKind::paragraph;
    b.span = paragraph;
    b.content = paragraph;
    b.sentences = build_sentences(text, b.content, abbreviations);
    doc.blocks.push_back(std::move(b));
    in_paragraph = false;
  };

  std::size_t line_start = 0;
  while (line_start <= n) {
    std::size_t line_end = line_start;
    while (line_end < n && text[line_end] != U'\n') ++line_end;
    const Span line = trim(text, line_start, line_end);

    if (line.empty()) {
      flush_paragraph();
    } else if (const std::size_t level = heading_marker_level(text, line.start, line.end);
               level > 0 && !trim(text, line.start + level, line.end).empty()) {
      flush_paragraph();
      Block b;
      b.kind = BlockKind::heading;
      b.level = static_cast<int>(level);
      b.span = line;
      b.content = trim(text, line.start + level, line.end);
      b.sentences = build_sentences(text, b.content, abbreviations);
      doc.blocks.push_back(std::move(b));
    } else if (const std::size_t marker = list_marker_length(text, line.start, line.end);
               marker > 0 && !trim(text, line.start + marker, line.end).empty()) {
      flush_paragraph();
      Block b;
      b.kind = BlockKind::list_item;
      b.span = line;
      b.content = trim(text, line.start + marker, line.end);
      b.sentences = build_sentences(text, b.content, abbreviations);
      doc.blocks.push_back(std::move(b));
    } else if (in_paragraph) {
      paragraph.end = line.end;
    } else {
      paragraph = line;
      in_paragraph = true;
    }
    if (line_end >= n) break;
    line_start = line_end + 1;
  }
  flush_paragraph();
  return doc;
}

}  // namespace claro
