#pragma once

// Shared plumbing between the per-block pass and the document pass.

#include <optional>
#include <string>
#include <vector>

#include "claro/morphology.hpp"
#include "claro/rules.hpp"

namespace claro::detail {

/// Everything one block contributes: its own diagnostics plus the markers
/// the document-level rules aggregate afterwards.
struct BlockFindings {
  std::vector<Diagnostic> diagnostics;
  std::vector<PersonMatch> persons;
  std::vector<AcronymMatch> acronyms;
};

Diagnostic make_diagnostic(const Document& doc, std::string_view rule_id, Severity severity, Span span,
                           std::string message, std::vector<std::string> suggestions = {});

/// Index of the first word token, if the sentence has one.
std::optional<std::size_t> first_word(const Sentence& sentence);

BlockFindings evaluate_block(const Document& doc, std::size_t block_index, const RuleConfig& config,
                             const LexiconSet& lex);

std::vector<Diagnostic> evaluate_document(const Document& doc, const std::vector<BlockFindings>& blocks,
                                          const RuleConfig& config, const LexiconSet& lex);

}  // namespace claro::detail
