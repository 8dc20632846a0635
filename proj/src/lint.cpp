// Lint drivers: a serial reference and the OpenMP block-parallel kernel.
// Both evaluate the same per-block function into per-block slots and then
// run the document pass, so the output never depends on scheduling.

#include <algorithm>

#include <omp.h>

#include "rules_internal.hpp"

namespace claro {

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  if (a.rule_id != b.rule_id) return a.rule_id < b.rule_id;
  if (a.span.end != b.span.end) return a.span.end < b.span.end;
  return a.message < b.message;
}

namespace {

std::vector<Diagnostic> finish(const Document& doc, const std::vector<detail::BlockFindings>& slots,
                               const RuleConfig& config, const LexiconSet& lex) {
  std::vector<Diagnostic> out = detail::evaluate_document(doc, slots, config, lex);
  for (const auto& s : slots) out.insert(out.end(), s.diagnostics.begin(), s.diagnostics.end());
  std::stable_sort(out.begin(), out.end(), diagnostic_less);
  return out;
}

}  // namespace

std::vector<Diagnostic> lint_serial(const Document& document, const RuleConfig& config, const LexiconSet& lexicons) {
  std::vector<detail::BlockFindings> slots(document.blocks.size());
  for (std::size_t b = 0; b < document.blocks.size(); ++b) {
    slots[b] = detail::evaluate_block(document, b, config, lexicons);
  }
  return finish(document, slots, config, lexicons);
}

std::vector<Diagnostic> lint(const Document& document, const RuleConfig& config, const LexiconSet& lexicons,
                             int threads) {
  const auto n = static_cast<long>(document.blocks.size());
  std::vector<detail::BlockFindings> slots(document.blocks.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team) if (n > 1)
  for (long b = 0; b < n; ++b) {
    slots[static_cast<std::size_t>(b)] =
        detail::evaluate_block(document, static_cast<std::size_t>(b), config, lexicons);
  }
  return finish(document, slots, config, lexicons);
}

}  // namespace claro
