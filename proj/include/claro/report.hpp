#pragma once

// JSON and human-readable renderings shared by the CLI and the service.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "claro/dataset.hpp"
#include "claro/metrics.hpp"
#include "claro/rules.hpp"

namespace claro {

using Json = nlohmann::ordered_json;

std::string_view library_version();

Json to_json(const Diagnostic& diagnostic);
Json to_json(const std::vector<Diagnostic>& diagnostics);

/// {"version", "profile", "diagnostics": [...]}
Json lint_report(Profile profile, const std::vector<Diagnostic>& diagnostics);

/// Rule catalog with per-profile defaults and threshold defaults.
Json catalog_json();

Json to_json(const DocMetrics& metrics);
Json to_json(const TrioReport& report);
Json to_json(const ScanResult& scan);

/// "<file>:<start>-<end> <rule_id> <message>"
std::string human_line(std::string_view file, const Diagnostic& diagnostic);

}  // namespace claro
