#pragma once

// Minimal UTF-8 / code point helpers tuned for Spanish text: Latin-1 and
// Latin Extended-A get proper case mapping, everything else is passed through.

#include <string>
#include <string_view>
#include <vector>

namespace claro::unicode {

/// Decodes UTF-8. Throws MalformedEncoding on invalid sequences.
std::u32string decode_utf8(std::string_view bytes);

/// Decodes UTF-8 and records the byte offset where each code point starts.
/// `offsets` receives size()+1 entries; the last one is bytes.size().
std::u32string decode_utf8(std::string_view bytes, std::vector<std::size_t>& offsets);

/// Decodes ISO-8859-1 / Windows-1252 bytes (one byte per code point).
std::u32string decode_latin1(std::string_view bytes);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view text);

bool is_letter(char32_t c);
bool is_digit(char32_t c);
inline bool is_alnum(char32_t c) { return is_letter(c) || is_digit(c); }
bool is_space(char32_t c);
bool is_upper(char32_t c);
bool is_lower(char32_t c);

char32_t to_lower(char32_t c);
char32_t to_upper(char32_t c);
/// Drops the diacritic from accented Latin vowels (ñ is kept).
char32_t strip_accent(char32_t c);

std::string to_lower(std::string_view utf8);
/// Lowercase + accent stripping, for lenient comparisons.
std::string fold(std::string_view utf8);

/// Number of code points in a UTF-8 string (assumes valid input).
std::size_t length(std::string_view utf8);

}  // namespace claro::unicode
