#include "claro/unicode.hpp"

#include <array>

#include "claro/error.hpp"

namespace claro::unicode {

namespace {

// Windows-1252 code points for bytes 0x80..0x9F; zero marks undefined bytes,
// which fall back to the Latin-1 control code point.
constexpr std::array<char32_t, 32> kCp1252High = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021, 0x02C6, 0x2030, 0x0160,
    0x2039, 0x0152, 0,      0x017D, 0,      0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022,
    0x2013, 0x2014, 0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};

std::u32string decode_impl(std::string_view bytes, std::vector<std::size_t>* offsets) {
  std::u32string out;
  out.reserve(bytes.size());
  if (offsets) {
    offsets->clear();
    offsets->reserve(bytes.size() + 1);
  }
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw MalformedEncoding(i);
    }
    if (i + len > n) throw MalformedEncoding(i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) throw MalformedEncoding(i);
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms, surrogates and out-of-range values.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      throw MalformedEncoding(i);
    }
    if (offsets) offsets->push_back(i);
    out.push_back(cp);
    i += len;
  }
  if (offsets) offsets->push_back(n);
  return out;
}

}  // namespace

std::u32string decode_utf8(std::string_view bytes) { return decode_impl(bytes, nullptr); }

std::u32string decode_utf8(std::string_view bytes, std::vector<std::size_t>& offsets) {
  return decode_impl(bytes, &offsets);
}

std::u32string decode_latin1(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  for (char ch : bytes) {
    const auto b = static_cast<unsigned char>(ch);
    if (b >= 0x80 && b <= 0x9F && kCp1252High[b - 0x80] != 0) {
      out.push_back(kCp1252High[b - 0x80]);
    } else {
      out.push_back(b);
    }
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) append_utf8(out, c);
  return out;
}

bool is_upper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return true;
  if (c >= 0x100 && c <= 0x17F) {
    // Latin Extended-A alternates upper/lower, with an offset around U+0138.
    if (c == 0x138 || c == 0x149 || c == 0x17F) return false;
    if (c >= 0x139 && c <= 0x148) return (c % 2) == 1;
    if (c >= 0x179 && c <= 0x17E) return (c % 2) == 1;
    return (c % 2) == 0;
  }
  if (c >= 0x391 && c <= 0x3A9) return true;  // Greek
  if (c >= 0x410 && c <= 0x42F) return true;  // Cyrillic
  return false;
}

bool is_lower(char32_t c) {
  if (c >= U'a' && c <= U'z') return true;
  if (c >= 0xDF && c <= 0xFF && c != 0xF7) return true;
  if (c >= 0x100 && c <= 0x17F) return !is_upper(c);
  if (c >= 0x3B1 && c <= 0x3C9) return true;
  if (c >= 0x430 && c <= 0x44F) return true;
  return false;
}

bool is_letter(char32_t c) {
  if (is_upper(c) || is_lower(c)) return true;
  if (c == 0xAA || c == 0xBA || c == 0xB5) return true;  // ª º µ
  if (c >= 0x180 && c <= 0x24F) return true;             // Latin Extended-B
  if (c >= 0x370 && c <= 0x3FF) return c != 0x37E && c != 0x387;
  if (c >= 0x400 && c <= 0x4FF) return true;
  return false;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_space(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0xA0:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  if (c >= 0x100 && c <= 0x17F && is_upper(c)) return c + 1;
  if (c >= 0x391 && c <= 0x3A9) return c + 32;
  if (c >= 0x410 && c <= 0x42F) return c + 32;
  return c;
}

char32_t to_upper(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - 32;
  if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 32;
  if (c == 0xFF) return 0x178;
  if (c >= 0x100 && c <= 0x17F && is_lower(c) && c != 0x138 && c != 0x149 && c != 0x17F) {
    return c - 1;
  }
  if (c >= 0x3B1 && c <= 0x3C9 && c != 0x3C2) return c - 32;
  if (c >= 0x430 && c <= 0x44F) return c - 32;
  return c;
}

char32_t strip_accent(char32_t c) {
  switch (c) {
    case 0xE1: case 0xE0: case 0xE2: case 0xE4: return U'a';
    case 0xC1: case 0xC0: case 0xC2: case 0xC4: return U'A';
    case 0xE9: case 0xE8: case 0xEA: case 0xEB: return U'e';
    case 0xC9: case 0xC8: case 0xCA: case 0xCB: return U'E';
    case 0xED: case 0xEC: case 0xEE: case 0xEF: return U'i';
    case 0xCD: case 0xCC: case 0xCE: case 0xCF: return U'I';
    case 0xF3: case 0xF2: case 0xF4: case 0xF6: return U'o';
    case 0xD3: case 0xD2: case 0xD4: case 0xD6: return U'O';
    case 0xFA: case 0xF9: case 0xFB: case 0xFC: return U'u';
    case 0xDA: case 0xD9: case 0xDB: case 0xDC: return U'U';
    default: return c;
  }
}

std::string to_lower(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (char32_t c : decode_utf8(utf8)) append_utf8(out, to_lower(c));
  return out;
}

std::string fold(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (char32_t c : decode_utf8(utf8)) append_utf8(out, strip_accent(to_lower(c)));
  return out;
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0;
  for (char ch : utf8) {
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace claro::unicode
