#pragma once

// Rule catalog, profiles and the lint entry points.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "claro/lexicon.hpp"
#include "claro/textmodel.hpp"

namespace claro {

enum class Profile { artext, lengclaro };
enum class Category { discourse, morphosyntactic, lexical, orthography };
enum class Severity { warn, info };

std::string_view to_string(Profile profile);
std::string_view to_string(Category category);
std::string_view to_string(Severity severity);

/// Throws InvalidConfig for anything but "artext" / "lengclaro".
Profile parse_profile(std::string_view name);

struct Thresholds {
  int long_paragraph_words = 135;
  int long_sentence_words = 25;
  int avg_sentence_words_target = 20;
  int hard_sentence_cap_words = 35;
  int min_list_items = 4;
  int parenthetical_min_words = 5;
  int negation_min_count = 2;
};

/// Names accepted by RuleConfig::set_threshold, in declaration order.
const std::vector<std::string>& threshold_names();

struct RuleConfig {
  Profile profile = Profile::lengclaro;
  std::set<std::string, std::less<>> enabled;
  Thresholds thresholds;

  static RuleConfig for_profile(Profile profile);

  bool is_enabled(std::string_view rule_id) const { return enabled.find(rule_id) != enabled.end(); }
  int threshold(std::string_view name) const;
  /// Throws InvalidConfig on an unknown name or a value < 1.
  void set_threshold(std::string_view name, int value);
  /// Enable-only override: exactly these rules run. Unknown ids throw InvalidConfig.
  void restrict_to(const std::vector<std::string>& rule_ids);
  /// Thresholds >= 1 and hard cap above the average target.
  void validate() const;
};

struct RuleInfo {
  std::string id;
  Category category;
  bool artext = false;     // enabled by default in the artext profile
  bool lengclaro = false;  // enabled by default in the lengclaro profile
  std::vector<std::string> thresholds;
  std::string description;
};

const std::vector<RuleInfo>& rule_catalog();
const RuleInfo* find_rule(std::string_view id);

struct Diagnostic {
  std::string rule_id;
  Category category = Category::discourse;
  Severity severity = Severity::warn;
  Span span;
  std::string message;
  std::vector<std::string> suggestions;
  std::string snippet;
  std::optional<SourceRange> source_span;  // html input only

  friend bool operator==(const Diagnostic& a, const Diagnostic& b) {
    return a.rule_id == b.rule_id && a.category == b.category && a.severity == b.severity &&
           a.span == b.span && a.message == b.message && a.suggestions == b.suggestions &&
           a.snippet == b.snippet && a.source_span.has_value() == b.source_span.has_value() &&
           (!a.source_span ||
            (a.source_span->begin == b.source_span->begin && a.source_span->end == b.source_span->end));
  }
};

/// Canonical diagnostic order: span start, rule id, span end, message.
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);

/// Runs every enabled rule. Blocks are evaluated in parallel (`threads` = 0
/// lets OpenMP decide); the result does not depend on the thread count.
std::vector<Diagnostic> lint(const Document& document, const RuleConfig& config,
                             const LexiconSet& lexicons = LexiconSet::defaults(), int threads = 0);

/// Single-threaded reference implementation of lint.
std::vector<Diagnostic> lint_serial(const Document& document, const RuleConfig& config,
                                    const LexiconSet& lexicons = LexiconSet::defaults());

/// Imperfect-subjunctive replacements for a future-subjunctive form
/// ("solicitare" -> {"solicitase", "solicitara"}).
std::vector<std::string> imperfect_subjunctive(std::string_view surface);

}  // namespace claro
