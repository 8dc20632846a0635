// claro: command-line front end (lint, corpus, rules, serve).
//
// Exit codes: 0 clean, 1 warnings (lint) or naming violations (corpus),
// 2 usage or input errors.

#include <cstdio>
#include <future>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "claro/dataset.hpp"
#include "claro/error.hpp"
#include "claro/metrics.hpp"
#include "claro/report.hpp"
#include "claro/rules.hpp"
#include "claro/service.hpp"

namespace {

using namespace claro;

struct CommonOptions {
  std::string profile = "lengclaro";
  std::string format = "human";
  std::vector<std::string> rules;
  std::vector<std::string> lexicons;
  std::vector<std::string> thresholds;
  int threads = 0;
};

void add_common(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--profile", o.profile, "Rule profile")->check(CLI::IsMember({"artext", "lengclaro"}));
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  cmd.add_option("--rules", o.rules, "Run only these rule ids (comma separated)")->delimiter(',')->allow_extra_args(false);
  cmd.add_option("--lexicon", o.lexicons, "Lexicon override file (repeatable)")->allow_extra_args(false);
  cmd.add_option("--threshold", o.thresholds, "Threshold override name=value (repeatable)")->allow_extra_args(false);
  cmd.add_option("--threads", o.threads, "Worker threads (0 = automatic)")->check(CLI::NonNegativeNumber);
}

RuleConfig build_config(const CommonOptions& o) {
  RuleConfig cfg = RuleConfig::for_profile(parse_profile(o.profile));
  for (const auto& t : o.thresholds) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw InvalidConfig("threshold must be name=value: " + t);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(t.substr(eq + 1), &used);
      if (used != t.size() - eq - 1) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw InvalidConfig("threshold value must be an integer: " + t);
    }
    cfg.set_threshold(t.substr(0, eq), value);
  }
  if (!o.rules.empty()) cfg.restrict_to(o.rules);
  cfg.validate();
  return cfg;
}

LexiconSet build_lexicons(const CommonOptions& o) {
  std::vector<std::filesystem::path> files(o.lexicons.begin(), o.lexicons.end());
  return LexiconSet::load(files);
}

bool looks_like_html(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) return false;
  std::string ext = path.substr(dot + 1);
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == "html" || ext == "htm";
}

struct FileResult {
  std::string path;
  std::vector<Diagnostic> diagnostics;
  std::string error;
};

int cmd_lint(const std::vector<std::string>& paths, const CommonOptions& o, bool force_html) {
  const RuleConfig cfg = build_config(o);
  const LexiconSet lex = build_lexicons(o);
  const AbbreviationSet abbrevs = lex.abbreviations();

  std::vector<std::string> inputs = paths.empty() ? std::vector<std::string>{"-"} : paths;
  std::string stdin_text;
  if (std::find(inputs.begin(), inputs.end(), "-") != inputs.end()) {
    stdin_text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  // Files are linted concurrently; results are printed in input order.
  const int per_file_threads = inputs.size() > 1 ? 1 : o.threads;
  std::vector<std::future<FileResult>> jobs;
  for (const auto& path : inputs) {
    jobs.push_back(std::async(std::launch::async, [&, path] {
      FileResult r{path == "-" ? "<stdin>" : path, {}, {}};
      try {
        const std::string content = path == "-" ? stdin_text : read_file(path);
        const bool html = force_html || looks_like_html(path);
        const Document doc = html ? parse_html(content, abbrevs) : parse_plain(content, abbrevs);
        r.diagnostics = lint(doc, cfg, lex, per_file_threads);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      return r;
    }));
  }
  std::vector<FileResult> results;
  for (auto& j : jobs) results.push_back(j.get());

  bool failed = false;
  bool warned = false;
  for (const auto& r : results) {
    if (!r.error.empty()) {
      std::cerr << "claro: " << r.path << ": " << r.error << "\n";
      failed = true;
    }
    for (const auto& d : r.diagnostics) warned = warned || d.severity == Severity::warn;
  }
  if (o.format == "json") {
    if (results.size() == 1) {
      std::cout << lint_report(cfg.profile, results.front().diagnostics).dump(2) << "\n";
    } else {
      Json j;
      j["version"] = library_version();
      j["profile"] = to_string(cfg.profile);
      j["files"] = Json::array();
      for (const auto& r : results) j["files"].push_back({{"path", r.path}, {"diagnostics", to_json(r.diagnostics)}});
      std::cout << j.dump(2) << "\n";
    }
  } else {
    for (const auto& r : results) {
      for (const auto& d : r.diagnostics) std::cout << human_line(r.path, d) << "\n";
    }
  }
  if (failed) return 2;
  return warned ? 1 : 0;
}

int cmd_corpus(const std::string& dir, const CommonOptions& o) {
  const RuleConfig cfg = build_config(o);
  const LexiconSet lex = build_lexicons(o);
  const ScanResult scan = claro::scan(dir);

  std::vector<TrioReport> reports;
  for (const auto& [n, entries] : group_by_document(scan.entries)) {
    if (entries.size() < 2) continue;
    reports.push_back(compare(load_trio(entries, lex.abbreviations()), cfg, lex));
  }
  if (o.format == "json") {
    Json j;
    j["version"] = library_version();
    j["profile"] = to_string(cfg.profile);
    j["scan"] = to_json(scan);
    j["trios"] = Json::array();
    for (const auto& r : reports) j["trios"].push_back(to_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& v : scan.violations) std::cout << "violation " << v.path.string() << ": " << v.reason << "\n";
    for (const auto& t : scan.incomplete) {
      std::cout << "incomplete " << t.doc_number << ": missing";
      for (Version v : t.missing) std::cout << " " << to_string(v);
      std::cout << "\n";
    }
    // One row per document: diagnostics and mean sentence length per version,
    // then the drop in diagnostics relative to the baseline.
    std::cout << "doc\tdiags_original\tdiags_artext\tdiags_lengclaro\tdelta_artext\tdelta_lengclaro"
                 "\tmean_original\tmean_artext\tmean_lengclaro\n";
    for (const auto& r : reports) {
      std::string row = std::to_string(r.doc_number);
      for (Version v : kAllVersions) {
        const auto it = r.metrics.find(v);
        row += "\t" + (it == r.metrics.end() ? std::string("-") : std::to_string(it->second.diagnostic_count));
      }
      for (Version v : {Version::artext, Version::lengclaro}) {
        const auto it = r.deltas.find(v);
        if (it == r.deltas.end()) {
          row += "\t-";
          continue;
        }
        long delta = 0;
        for (const auto& [id, d] : it->second) delta += d;
        row += "\t" + std::to_string(delta);
      }
      for (Version v : kAllVersions) {
        const auto it = r.metrics.find(v);
        char mean[32] = "-";
        if (it != r.metrics.end()) std::snprintf(mean, sizeof mean, "%.1f", it->second.mean_sentence_words);
        row += std::string("\t") + mean;
      }
      std::cout << row << "\n";
    }
  }
  return scan.violations.empty() ? 0 : 1;
}

int cmd_rules(const std::string& format) {
  if (format == "json") {
    std::cout << catalog_json().dump(2) << "\n";
    return 0;
  }
  const RuleConfig a = RuleConfig::for_profile(Profile::artext);
  const RuleConfig l = RuleConfig::for_profile(Profile::lengclaro);
  for (const auto& r : rule_catalog()) {
    std::cout << r.id << "\t" << to_string(r.category) << "\t" << (a.is_enabled(r.id) ? "artext" : "-") << "\t"
              << (l.is_enabled(r.id) ? "lengclaro" : "-") << "\t" << r.description << "\n";
  }
  return 0;
}

int cmd_serve(const std::string& host, int port, const ServiceConfig& scfg, const CommonOptions& o) {
  const LintService service(scfg, build_lexicons(o));
  HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "claro: cannot bind " << host << ":" << port << "\n";
    return 2;
  }
  std::cerr << "claro: listening on http://" << host << ":" << bound << "\n";
  return server.listen() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanish plain-language linter"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(claro::library_version()));

  CommonOptions lint_opts;
  std::vector<std::string> paths;
  bool force_html = false;
  auto* lint_cmd = app.add_subcommand("lint", "Lint text or HTML files ('-' reads standard input)");
  lint_cmd->add_option("paths", paths, "Input files");
  lint_cmd->add_flag("--html", force_html, "Parse every input as HTML");
  add_common(*lint_cmd, lint_opts);

  CommonOptions corpus_opts;
  std::string corpus_dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Check and compare a <n>_<version>.html corpus directory");
  corpus_cmd->add_option("dir", corpus_dir, "Corpus directory")->required();
  add_common(*corpus_cmd, corpus_opts);

  std::string rules_format = "human";
  auto* rules_cmd = app.add_subcommand("rules", "Print the rule catalog");
  rules_cmd->add_option("--format", rules_format)->check(CLI::IsMember({"human", "json"}));

  CommonOptions serve_opts;
  std::string host = "127.0.0.1";
  int port = 8080;
  claro::ServiceConfig scfg;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service (POST /lint, GET /rules)");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--cors-origin", scfg.cors_origin);
  serve_cmd->add_option("--max-body", scfg.max_body_bytes, "Request size limit in bytes");
  serve_cmd->add_option("--lexicon", serve_opts.lexicons, "Lexicon override file (repeatable)")->allow_extra_args(false);
  serve_cmd->add_option("--threads", scfg.threads)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*lint_cmd) return cmd_lint(paths, lint_opts, force_html);
    if (*corpus_cmd) return cmd_corpus(corpus_dir, corpus_opts);
    if (*rules_cmd) return cmd_rules(rules_format);
    if (*serve_cmd) return cmd_serve(host, port, scfg, serve_opts);
  } catch (const std::exception& e) {
    std::cerr << "claro: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
