#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace claro {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input bytes are not valid in the detected encoding.
class MalformedEncoding : public Error {
 public:
  explicit MalformedEncoding(std::size_t byte_offset)
      : Error("malformed UTF-8 at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

class LexiconParseError : public Error {
 public:
  LexiconParseError(std::string file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(std::move(file)),
        line_(line) {}
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

class UnknownTable : public Error {
 public:
  explicit UnknownTable(const std::string& name) : Error("unknown lexicon table '" + name + "'") {}
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class MissingVersion : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace claro
