// Tolerant HTML extraction. The markup is scanned once, text runs are
// collected per block element, and the blocks are rendered into a plain-text
// form that parse_plain understands ("# " headings, "- " list items, blank
// lines between blocks). Every code point of that text keeps the byte range it
// came from, so diagnostics can be traced back to the source file.

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "claro/error.hpp"
#include "claro/textmodel.hpp"
#include "claro/unicode.hpp"

namespace claro {

namespace uc = unicode;

namespace {

struct Source {
  std::u32string text;
  std::vector<std::size_t> offsets;  // byte offset per code point, plus end
};

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Looks for a latin-1 style <meta charset> declaration in the first bytes.
bool declares_latin1(std::string_view bytes) {
  const std::string head = ascii_lower(bytes.substr(0, 2048));
  const auto pos = head.find("charset=");
  if (pos == std::string::npos) return false;
  std::size_t i = pos + 8;
  while (i < head.size() && (head[i] == '"' || head[i] == '\'' || head[i] == ' ')) ++i;
  std::size_t j = i;
  while (j < head.size() && (std::isalnum(static_cast<unsigned char>(head[j])) || head[j] == '-' ||
                             head[j] == '_')) {
    ++j;
  }
  const std::string name = head.substr(i, j - i);
  static const std::unordered_set<std::string> kLatin = {
      "iso-8859-1", "iso8859-1", "latin1", "latin-1", "windows-1252", "cp1252", "iso-8859-15"};
  return kLatin.contains(name);
}

Source decode(std::string_view bytes) {
  Source src;
  if (declares_latin1(bytes)) {
    src.text = uc::decode_latin1(bytes);
    src.offsets.resize(bytes.size() + 1);
    for (std::size_t i = 0; i <= bytes.size(); ++i) src.offsets[i] = i;
  } else {
    src.text = uc::decode_utf8(bytes, src.offsets);
  }
  return src;
}

const std::unordered_map<std::string, char32_t>& named_entities() {
  static const std::unordered_map<std::string, char32_t> kTable = {
      {"amp", U'&'},     {"lt", U'<'},       {"gt", U'>'},      {"quot", U'"'},
      {"apos", U'\''},   {"nbsp", 0xA0},     {"aacute", U'á'},  {"eacute", U'é'},
      {"iacute", U'í'},  {"oacute", U'ó'},   {"uacute", U'ú'},  {"Aacute", U'Á'},
      {"Eacute", U'É'},  {"Iacute", U'Í'},   {"Oacute", U'Ó'},  {"Uacute", U'Ú'},
      {"ntilde", U'ñ'},  {"Ntilde", U'Ñ'},   {"uuml", U'ü'},    {"Uuml", U'Ü'},
      {"iexcl", U'¡'},   {"iquest", U'¿'},   {"laquo", U'«'},   {"raquo", U'»'},
      {"ordf", U'ª'},    {"ordm", U'º'},     {"euro", U'€'},    {"hellip", U'…'},
      {"ndash", U'–'},   {"mdash", U'—'},    {"lsquo", U'‘'},   {"rsquo", U'’'},
      {"ldquo", U'“'},   {"rdquo", U'”'},    {"middot", U'·'},  {"deg", U'°'},
      {"copy", U'©'},    {"reg", U'®'},      {"bull", U'•'},    {"ccedil", U'ç'},
      {"agrave", U'à'},  {"egrave", U'è'},   {"ograve", U'ò'},  {"shy", 0xAD},
  };
  return kTable;
}

// Elements whose content never reaches the document.
bool is_skipped(std::string_view tag) {
  static const std::unordered_set<std::string_view> kSkip = {
      "head", "script", "style", "nav", "footer", "aside", "noscript", "template", "svg"};
  return kSkip.contains(tag);
}

bool is_raw_text(std::string_view tag) { return tag == "script" || tag == "style"; }

bool is_block(std::string_view tag) {
  static const std::unordered_set<std::string_view> kBlock = {
      "p",       "div",  "h1",      "h2",     "h3",     "h4",    "h5",     "h6",
      "li",      "ul",   "ol",      "table",  "tr",     "td",    "th",     "thead",
      "tbody",   "section", "article", "header", "main", "blockquote", "dl", "dt",
      "dd",      "pre",  "form",    "body",   "html",   "figure", "figcaption", "address",
      "fieldset", "legend", "caption", "hr",  "details", "summary"};
  return kBlock.contains(tag);
}

int heading_level(std::string_view tag) {
  if (tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6') return tag[1] - '0';
  return 0;
}

struct Tag {
  std::string name;  // lowercase
  bool closing = false;
  bool self_closing = false;
  std::unordered_map<std::string, std::u32string> attrs;
};

struct Draft {
  BlockKind kind = BlockKind::paragraph;
  int level = 0;
  std::u32string text;
  std::vector<SourceRange> ranges;
  std::map<std::string, std::string> attrs;
};

class Extractor {
 public:
  explicit Extractor(const Source& src) : src_(src) {}

  std::vector<Draft> run() {
    const std::u32string& t = src_.text;
    std::size_t i = 0;
    while (i < t.size()) {
      if (t[i] == U'<' && parse_markup(i)) continue;
      if (t[i] == U'&') {
        i = entity(i);
        continue;
      }
      emit(t[i], range(i, i + 1));
      ++i;
    }
    flush();
    return std::move(drafts_);
  }

 private:
  SourceRange range(std::size_t from, std::size_t to) const {
    return {src_.offsets[from], src_.offsets[to]};
  }

  void emit(char32_t c, SourceRange r) {
    if (skip_depth_ > 0) return;
    if (uc::is_space(c) || c == 0xA0) {
      pending_space_ = true;
      if (!pending_space_range_) space_range_ = r;
      pending_space_range_ = true;
      return;
    }
    if (c == 0xAD) return;  // soft hyphen
    if (pending_space_ && !current_.text.empty()) {
      current_.text.push_back(U' ');
      current_.ranges.push_back(space_range_);
    }
    pending_space_ = false;
    pending_space_range_ = false;
    current_.text.push_back(c);
    current_.ranges.push_back(r);
    if (acronym_open_) acronym_text_.push_back(c);
  }

  void flush() {
    pending_space_ = false;
    pending_space_range_ = false;
    if (!current_.text.empty()) {
      current_.kind = effective_kind();
      current_.level = current_.kind == BlockKind::heading ? effective_level() : 0;
      drafts_.push_back(std::move(current_));
    }
    current_ = Draft{};
  }

  BlockKind effective_kind() const {
    for (auto it = block_stack_.rbegin(); it != block_stack_.rend(); ++it) {
      if (heading_level(*it) > 0) return BlockKind::heading;
      if (*it == "li") return BlockKind::list_item;
    }
    return BlockKind::paragraph;
  }

  int effective_level() const {
    for (auto it = block_stack_.rbegin(); it != block_stack_.rend(); ++it) {
      if (const int lv = heading_level(*it); lv > 0) return lv;
    }
    return 1;
  }

  // Decodes a character reference starting at '&'; returns the next index.
  std::size_t entity(std::size_t i) {
    const std::u32string& t = src_.text;
    std::size_t j = i + 1;
    while (j < t.size() && j - i <= 10 && (uc::is_alnum(t[j]) || t[j] == U'#')) ++j;
    if (j < t.size() && t[j] == U';' && j > i + 1) {
      const std::string name = uc::encode_utf8(t.substr(i + 1, j - i - 1));
      char32_t cp = 0;
      if (name[0] == '#') {
        try {
          const bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
          const unsigned long v = std::stoul(name.substr(hex ? 2 : 1), nullptr, hex ? 16 : 10);
          if (v > 0 && v <= 0x10FFFF && (v < 0xD800 || v > 0xDFFF)) cp = static_cast<char32_t>(v);
        } catch (const std::exception&) {
          cp = 0;
        }
      } else if (auto it = named_entities().find(name); it != named_entities().end()) {
        cp = it->second;
      }
      if (cp != 0) {
        emit(cp, range(i, j + 1));
        return j + 1;
      }
    }
    emit(U'&', range(i, i + 1));
    return i + 1;
  }

  std::u32string decode_attr(std::u32string_view raw) const {
    std::u32string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == U'&') {
        std::size_t j = i + 1;
        while (j < raw.size() && j - i <= 10 && raw[j] != U';') ++j;
        if (j < raw.size() && raw[j] == U';') {
          const std::string name = uc::encode_utf8(raw.substr(i + 1, j - i - 1));
          if (auto it = named_entities().find(name); it != named_entities().end()) {
            out.push_back(it->second);
            i = j;
            continue;
          }
        }
      }
      out.push_back(raw[i]);
    }
    return out;
  }

  // Tries to consume a tag, comment or declaration at '<'. Returns false when
  // the '<' is literal text.
  bool parse_markup(std::size_t& i) {
    const std::u32string& t = src_.text;
    const std::size_t n = t.size();
    if (t.compare(i, 4, U"<!--") == 0) {
      const auto end = t.find(U"-->", i + 4);
      i = end == std::u32string::npos ? n : end + 3;
      return true;
    }
    if (i + 1 < n && (t[i + 1] == U'!' || t[i + 1] == U'?')) {
      const auto end = t.find(U'>', i);
      i = end == std::u32string::npos ? n : end + 1;
      return true;
    }
    std::size_t j = i + 1;
    Tag tag;
    if (j < n && t[j] == U'/') {
      tag.closing = true;
      ++j;
    }
    if (j >= n || !(t[j] < 0x80 && std::isalpha(static_cast<int>(t[j])))) return false;
    const std::size_t name_start = j;
    while (j < n && t[j] < 0x80 && (std::isalnum(static_cast<int>(t[j])) || t[j] == U'-')) ++j;
    tag.name = ascii_lower(uc::encode_utf8(t.substr(name_start, j - name_start)));
    // Attributes.
    while (j < n && t[j] != U'>') {
      if (uc::is_space(t[j])) {
        ++j;
        continue;
      }
      if (t[j] == U'/') {
        tag.self_closing = true;
        ++j;
        continue;
      }
      const std::size_t a = j;
      while (j < n && !uc::is_space(t[j]) && t[j] != U'=' && t[j] != U'>' && t[j] != U'/') ++j;
      std::string attr = ascii_lower(uc::encode_utf8(t.substr(a, j - a)));
      while (j < n && uc::is_space(t[j])) ++j;
      std::u32string value;
      if (j < n && t[j] == U'=') {
        ++j;
        while (j < n && uc::is_space(t[j])) ++j;
        if (j < n && (t[j] == U'"' || t[j] == U'\'')) {
          const char32_t q = t[j++];
          const std::size_t v = j;
          while (j < n && t[j] != q) ++j;
          value = t.substr(v, j - v);
          if (j < n) ++j;
        } else {
          const std::size_t v = j;
          while (j < n && !uc::is_space(t[j]) && t[j] != U'>') ++j;
          value = t.substr(v, j - v);
        }
      }
      if (!attr.empty()) tag.attrs.emplace(std::move(attr), decode_attr(value));
      if (j == a) ++j;
    }
    i = j < n ? j + 1 : n;
    handle(tag, i);
    return true;
  }

  void handle(const Tag& tag, std::size_t& i) {
    const std::string& name = tag.name;
    if (!tag.closing && is_raw_text(name)) {
      // Raw text elements: jump past the matching close tag.
      const std::u32string close = U"</" + std::u32string(name.begin(), name.end());
      std::size_t k = i;
      const std::u32string& t = src_.text;
      while (k < t.size()) {
        const auto pos = t.find(U"</", k);
        if (pos == std::u32string::npos) {
          k = t.size();
          break;
        }
        std::string cand;
        for (std::size_t m = pos + 2; m < t.size() && m < pos + 2 + name.size(); ++m) {
          cand.push_back(t[m] < 0x80 ? static_cast<char>(std::tolower(static_cast<int>(t[m]))) : '?');
        }
        if (cand == name) {
          const auto end = t.find(U'>', pos);
          k = end == std::u32string::npos ? t.size() : end + 1;
          break;
        }
        k = pos + 2;
      }
      i = k;
      return;
    }
    if (name == "body" && !tag.closing) skip_stack_.clear(), skip_depth_ = 0;
    if (is_skipped(name)) {
      if (tag.self_closing) return;
      if (!tag.closing) {
        skip_stack_.push_back(name);
        ++skip_depth_;
      } else if (auto it = std::find(skip_stack_.rbegin(), skip_stack_.rend(), name);
                 it != skip_stack_.rend()) {
        skip_stack_.erase(std::next(it).base(), skip_stack_.end());
        skip_depth_ = static_cast<int>(skip_stack_.size());
      }
      return;
    }
    if (skip_depth_ > 0) return;
    if (name == "br") {
      emit(U' ', {src_.offsets[i > 0 ? i - 1 : 0], src_.offsets[i]});
      return;
    }
    if (name == "acronym" || name == "abbr") {
      if (!tag.closing) {
        acronym_open_ = true;
        acronym_text_.clear();
        acronym_title_.clear();
        if (auto it = tag.attrs.find("title"); it != tag.attrs.end()) acronym_title_ = it->second;
      } else if (acronym_open_) {
        acronym_open_ = false;
        record_acronym();
      }
      return;
    }
    if (!is_block(name)) return;
    flush();
    if (tag.self_closing || name == "hr") return;
    if (!tag.closing) {
      block_stack_.push_back(name);
    } else if (auto it = std::find(block_stack_.rbegin(), block_stack_.rend(), name);
               it != block_stack_.rend()) {
      block_stack_.erase(std::next(it).base(), block_stack_.end());
    }
  }

  static std::string collapse(std::u32string_view s) {
    std::u32string out;
    bool space = false;
    for (char32_t c : s) {
      if (uc::is_space(c) || c == 0xA0) {
        space = !out.empty();
        continue;
      }
      if (space) out.push_back(U' ');
      space = false;
      out.push_back(c);
    }
    return uc::encode_utf8(out);
  }

  void record_acronym() {
    const std::string surface = collapse(acronym_text_);
    const std::string title = collapse(acronym_title_);
    if (!surface.empty() && !title.empty()) current_.attrs.emplace(surface, title);
  }

  const Source& src_;
  std::vector<Draft> drafts_;
  Draft current_;
  std::vector<std::string> block_stack_;
  std::vector<std::string> skip_stack_;
  int skip_depth_ = 0;
  bool pending_space_ = false;
  bool pending_space_range_ = false;
  SourceRange space_range_;
  bool acronym_open_ = false;
  std::u32string acronym_text_;
  std::u32string acronym_title_;
};

}  // namespace

Document parse_html(std::string_view html_bytes, const AbbreviationSet& abbreviations) {
  const Source src = decode(html_bytes);
  std::vector<Draft> drafts = Extractor(src).run();

  std::u32string text;
  std::vector<SourceRange> map;
  auto push_marker = [&](std::u32string_view marker, std::size_t anchor) {
    for (char32_t c : marker) {
      text.push_back(c);
      map.push_back({anchor, anchor});
    }
  };
  for (std::size_t k = 0; k < drafts.size(); ++k) {
    const Draft& d = drafts[k];
    const std::size_t anchor = d.ranges.front().begin;
    if (k > 0) push_marker(U"\n\n", anchor);
    if (d.kind == BlockKind::heading) {
      push_marker(std::u32string(static_cast<std::size_t>(d.level), U'#') + U" ", anchor);
    } else if (d.kind == BlockKind::list_item) {
      push_marker(U"- ", anchor);
    }
    text += d.text;
    map.insert(map.end(), d.ranges.begin(), d.ranges.end());
  }

  Document doc = parse_plain(uc::encode_utf8(text), abbreviations);
  doc.source_format = SourceFormat::html;
  doc.source_map = std::move(map);
  // Every draft renders to exactly one block, so attributes line up by index.
  for (std::size_t k = 0; k < doc.blocks.size() && k < drafts.size(); ++k) {
    doc.blocks[k].html_attrs = std::move(drafts[k].attrs);
  }
  return doc;
}

}  // namespace claro
