#pragma once

// Per-document clarity figures and trio comparisons.

#include <map>
#include <string>
#include <vector>

#include "claro/dataset.hpp"
#include "claro/rules.hpp"

namespace claro {

struct DocMetrics {
  std::size_t word_count = 0;
  std::size_t sentence_count = 0;
  double mean_sentence_words = 0.0;  // paragraph sentences only
  std::size_t max_sentence_words = 0;
  std::size_t paragraph_count = 0;
  double mean_paragraph_words = 0.0;
  std::size_t diagnostic_count = 0;
  std::map<std::string, std::size_t> diagnostics_by_rule;
  double diagnostics_per_1000_words = 0.0;
};

DocMetrics measure(const Document& document, const RuleConfig& config,
                   const LexiconSet& lexicons = LexiconSet::defaults());

/// Same figures from an already computed diagnostic list.
DocMetrics measure(const Document& document, const std::vector<Diagnostic>& diagnostics);

struct TrioReport {
  unsigned doc_number = 0;
  Version baseline = Version::original;
  std::map<Version, DocMetrics> metrics;
  std::vector<Version> missing;
  /// For each non-baseline version: baseline count minus version count, per rule.
  std::map<Version, std::map<std::string, long>> deltas;
};

/// Throws MissingVersion when fewer than two versions are present.
TrioReport compare(const Trio& trio, const RuleConfig& config,
                   const LexiconSet& lexicons = LexiconSet::defaults());

}  // namespace claro
