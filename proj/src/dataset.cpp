#include "claro/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "claro/error.hpp"

namespace claro {

namespace fs = std::filesystem;

std::string_view to_string(Version version) {
  switch (version) {
    case Version::original: return "original";
    case Version::artext: return "artext";
    case Version::lengclaro: return "lengclaro";
  }
  return "";
}

std::optional<Version> parse_version(std::string_view name) {
  for (Version v : kAllVersions) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

std::optional<DatasetEntry> parse_entry_name(const fs::path& path) {
  static const std::regex kName(R"(^([1-9][0-9]{0,8})_(original|artext|lengclaro)\.html$)");
  const std::string name = path.filename().string();
  std::smatch m;
  if (!std::regex_match(name, m, kName)) return std::nullopt;
  return DatasetEntry{static_cast<unsigned>(std::stoul(m[1].str())), *parse_version(m[2].str()), path};
}

namespace {

std::string lower_ascii(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string violation_reason(const std::string& name) {
  static const std::regex kShape(R"(^([0-9]+)_([^.]*)\.[Hh][Tt][Mm][Ll]$)");
  std::smatch m;
  if (!std::regex_match(name, m, kShape)) return "name does not follow <number>_<version>.html";
  if (m[1].str().front() == '0') return "document number must be a positive integer without leading zeros";
  if (parse_version(lower_ascii(m[2].str())) && !parse_version(m[2].str())) {
    return "version tag must be lowercase";
  }
  if (!parse_version(m[2].str())) return "unknown version tag '" + m[2].str() + "'";
  return "extension must be lowercase .html";
}

}  // namespace

ScanResult scan(const fs::path& dir) {
  std::error_code ec;
  fs::directory_iterator it(dir, ec);
  if (ec) throw IoError("cannot read directory " + dir.string() + ": " + ec.message());
  ScanResult out;
  for (const auto& entry : it) {
    if (!entry.is_regular_file(ec)) continue;
    const fs::path& p = entry.path();
    if (lower_ascii(p.extension().string()) != ".html") continue;
    if (auto e = parse_entry_name(p)) {
      out.entries.push_back(*e);
    } else {
      out.violations.push_back({p, violation_reason(p.filename().string())});
    }
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const DatasetEntry& a, const DatasetEntry& b) {
    return std::tie(a.doc_number, a.version) < std::tie(b.doc_number, b.version);
  });
  std::sort(out.violations.begin(), out.violations.end(),
            [](const NamingViolation& a, const NamingViolation& b) { return a.path < b.path; });
  for (const auto& [n, group] : group_by_document(out.entries)) {
    IncompleteTrio gap{n, {}};
    for (Version v : kAllVersions) {
      if (std::none_of(group.begin(), group.end(), [v](const DatasetEntry& e) { return e.version == v; })) {
        gap.missing.push_back(v);
      }
    }
    if (!gap.missing.empty()) out.incomplete.push_back(std::move(gap));
  }
  return out;
}

std::map<unsigned, std::vector<DatasetEntry>> group_by_document(const std::vector<DatasetEntry>& entries) {
  std::map<unsigned, std::vector<DatasetEntry>> out;
  for (const auto& e : entries) out[e.doc_number].push_back(e);
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buf.str();
}

Trio load_trio(const std::vector<DatasetEntry>& entries, const AbbreviationSet& abbreviations) {
  if (entries.empty()) throw MissingVersion("load_trio needs at least one entry");
  Trio trio;
  trio.doc_number = entries.front().doc_number;
  for (const auto& e : entries) {
    try {
      trio.documents.emplace(e.version, parse_html(read_file(e.path), abbreviations));
    } catch (const IoError&) {
      throw;
    } catch (const std::exception& ex) {
      throw IoError(e.path.string() + ": " + ex.what());
    }
  }
  for (Version v : kAllVersions) {
    if (!trio.documents.contains(v)) trio.missing.push_back(v);
  }
  return trio;
}

}  // namespace claro
