#include "claro/metrics.hpp"

#include "claro/error.hpp"

namespace claro {

DocMetrics measure(const Document& document, const std::vector<Diagnostic>& diagnostics) {
  DocMetrics m;
  std::size_t para_sentences = 0;
  std::size_t para_sentence_words = 0;
  std::size_t para_words = 0;
  for (const Block& b : document.blocks) {
    for (const Sentence& s : b.sentences) {
      ++m.sentence_count;
      m.word_count += s.word_count;
      m.max_sentence_words = std::max(m.max_sentence_words, s.word_count);
      if (b.kind == BlockKind::paragraph) {
        ++para_sentences;
        para_sentence_words += s.word_count;
      }
    }
    if (b.kind == BlockKind::paragraph) {
      ++m.paragraph_count;
      para_words += b.word_count();
    }
  }
  if (para_sentences) m.mean_sentence_words = static_cast<double>(para_sentence_words) / para_sentences;
  if (m.paragraph_count) m.mean_paragraph_words = static_cast<double>(para_words) / m.paragraph_count;
  m.diagnostic_count = diagnostics.size();
  for (const auto& d : diagnostics) ++m.diagnostics_by_rule[d.rule_id];
  if (m.word_count) m.diagnostics_per_1000_words = 1000.0 * diagnostics.size() / m.word_count;
  return m;
}

DocMetrics measure(const Document& document, const RuleConfig& config, const LexiconSet& lexicons) {
  return measure(document, lint(document, config, lexicons));
}

TrioReport compare(const Trio& trio, const RuleConfig& config, const LexiconSet& lexicons) {
  if (trio.documents.size() < 2) {
    std::string missing;
    for (Version v : kAllVersions) {
      if (!trio.documents.contains(v)) missing += (missing.empty() ? "" : ", ") + std::string(to_string(v));
    }
    throw MissingVersion("document " + std::to_string(trio.doc_number) + " needs two versions; missing " + missing);
  }
  TrioReport r;
  r.doc_number = trio.doc_number;
  r.missing = trio.missing;
  for (const auto& [v, doc] : trio.documents) r.metrics.emplace(v, measure(doc, config, lexicons));
  r.baseline = r.metrics.begin()->first;  // original when present
  const DocMetrics& base = r.metrics.at(r.baseline);
  for (const auto& [v, m] : r.metrics) {
    if (v == r.baseline) continue;
    auto& delta = r.deltas[v];
    for (const auto& id : config.enabled) delta[id] = 0;
    for (const auto& [id, n] : base.diagnostics_by_rule) delta[id] += static_cast<long>(n);
    for (const auto& [id, n] : m.diagnostics_by_rule) delta[id] -= static_cast<long>(n);
  }
  return r;
}

}  // namespace claro
