#include "claro/report.hpp"

#ifndef CLARO_VERSION
#define CLARO_VERSION "0.0.0"
#endif

namespace claro {

std::string_view library_version() { return CLARO_VERSION; }

Json to_json(const Diagnostic& d) {
  Json j;
  j["rule_id"] = d.rule_id;
  j["category"] = to_string(d.category);
  j["severity"] = to_string(d.severity);
  j["span"] = {{"start", d.span.start}, {"end", d.span.end}};
  if (d.source_span) {
    j["source_span"] = {{"start", d.source_span->begin}, {"end", d.source_span->end}};
  } else {
    j["source_span"] = nullptr;
  }
  j["message"] = d.message;
  j["suggestions"] = d.suggestions;
  j["snippet"] = d.snippet;
  return j;
}

Json to_json(const std::vector<Diagnostic>& diagnostics) {
  Json arr = Json::array();
  for (const auto& d : diagnostics) arr.push_back(to_json(d));
  return arr;
}

Json lint_report(Profile profile, const std::vector<Diagnostic>& diagnostics) {
  Json j;
  j["version"] = library_version();
  j["profile"] = to_string(profile);
  j["diagnostics"] = to_json(diagnostics);
  return j;
}

Json catalog_json() {
  Json rules = Json::array();
  for (const auto& r : rule_catalog()) {
    Json e;
    e["id"] = r.id;
    e["category"] = to_string(r.category);
    e["defaults"] = {{"artext", r.artext}, {"lengclaro", r.lengclaro}};
    e["thresholds"] = r.thresholds;
    e["description"] = r.description;
    rules.push_back(std::move(e));
  }
  Json profiles;
  for (Profile p : {Profile::artext, Profile::lengclaro}) {
    const RuleConfig cfg = RuleConfig::for_profile(p);
    Json enabled = Json::array();
    for (const auto& r : rule_catalog()) {
      if (cfg.is_enabled(r.id)) enabled.push_back(r.id);
    }
    profiles[std::string(to_string(p))] = {{"enabled", enabled}};
  }
  Json thresholds;
  const RuleConfig defaults = RuleConfig::for_profile(Profile::lengclaro);
  for (const auto& name : threshold_names()) thresholds[name] = defaults.threshold(name);

  Json j;
  j["version"] = library_version();
  j["rules"] = std::move(rules);
  j["profiles"] = std::move(profiles);
  j["thresholds"] = std::move(thresholds);
  return j;
}

Json to_json(const DocMetrics& m) {
  Json j;
  j["word_count"] = m.word_count;
  j["sentence_count"] = m.sentence_count;
  j["mean_sentence_words"] = m.mean_sentence_words;
  j["max_sentence_words"] = m.max_sentence_words;
  j["paragraph_count"] = m.paragraph_count;
  j["mean_paragraph_words"] = m.mean_paragraph_words;
  j["diagnostic_count"] = m.diagnostic_count;
  j["diagnostics_by_rule"] = Json::object();
  for (const auto& [id, n] : m.diagnostics_by_rule) j["diagnostics_by_rule"][id] = n;
  j["diagnostics_per_1000_words"] = m.diagnostics_per_1000_words;
  return j;
}

Json to_json(const TrioReport& r) {
  Json j;
  j["doc_number"] = r.doc_number;
  j["baseline"] = to_string(r.baseline);
  j["metrics"] = Json::object();
  for (const auto& [v, m] : r.metrics) j["metrics"][std::string(to_string(v))] = to_json(m);
  j["missing"] = Json::array();
  for (Version v : r.missing) j["missing"].push_back(to_string(v));
  j["deltas"] = Json::object();
  for (const auto& [v, d] : r.deltas) {
    Json per = Json::object();
    for (const auto& [id, n] : d) per[id] = n;
    j["deltas"][std::string(to_string(v))] = std::move(per);
  }
  return j;
}

Json to_json(const ScanResult& s) {
  Json j;
  j["entries"] = Json::array();
  for (const auto& e : s.entries) {
    j["entries"].push_back({{"doc_number", e.doc_number}, {"version", to_string(e.version)}, {"path", e.path.string()}});
  }
  j["violations"] = Json::array();
  for (const auto& v : s.violations) j["violations"].push_back({{"path", v.path.string()}, {"reason", v.reason}});
  j["incomplete"] = Json::array();
  for (const auto& t : s.incomplete) {
    Json missing = Json::array();
    for (Version v : t.missing) missing.push_back(to_string(v));
    j["incomplete"].push_back({{"doc_number", t.doc_number}, {"missing", missing}});
  }
  return j;
}

std::string human_line(std::string_view file, const Diagnostic& d) {
  return std::string(file) + ":" + std::to_string(d.span.start) + "-" + std::to_string(d.span.end) + " " + d.rule_id +
         " " + d.message;
}

}  // namespace claro
