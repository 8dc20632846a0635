#pragma once

// Corpus directories of "<n>_<version>.html" trios.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "claro/textmodel.hpp"

namespace claro {

enum class Version { original, artext, lengclaro };

std::string_view to_string(Version version);
std::optional<Version> parse_version(std::string_view name);
inline constexpr Version kAllVersions[] = {Version::original, Version::artext, Version::lengclaro};

struct DatasetEntry {
  unsigned doc_number = 0;
  Version version = Version::original;
  std::filesystem::path path;
  friend bool operator==(const DatasetEntry&, const DatasetEntry&) = default;
};

struct NamingViolation {
  std::filesystem::path path;
  std::string reason;
};

struct IncompleteTrio {
  unsigned doc_number = 0;
  std::vector<Version> missing;
};

struct ScanResult {
  std::vector<DatasetEntry> entries;         // sorted by (doc_number, version)
  std::vector<NamingViolation> violations;   // sorted by path
  std::vector<IncompleteTrio> incomplete;    // sorted by doc_number
};

/// Parses a file name against the convention; nullopt if it does not conform.
std::optional<DatasetEntry> parse_entry_name(const std::filesystem::path& path);

/// Lists `dir` (non-recursive). Throws IoError if it cannot be read.
ScanResult scan(const std::filesystem::path& dir);

struct Trio {
  unsigned doc_number = 0;
  std::map<Version, Document> documents;
  std::vector<Version> missing;
};

/// Entries of one document number, grouped.
std::map<unsigned, std::vector<DatasetEntry>> group_by_document(const std::vector<DatasetEntry>& entries);

/// Parses every version as HTML. Errors are rethrown as IoError naming the file.
Trio load_trio(const std::vector<DatasetEntry>& entries,
               const AbbreviationSet& abbreviations = default_abbreviations());

/// Reads a whole file; throws IoError naming the path.
std::string read_file(const std::filesystem::path& path);

}  // namespace claro
