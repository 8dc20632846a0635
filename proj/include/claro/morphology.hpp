#pragma once

// Suffix- and list-driven Spanish morphology. Nothing here is a tagger: each
// predicate answers one narrow question the rules need, and exclusion lists
// always win over suffix evidence.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "claro/lexicon.hpp"
#include "claro/textmodel.hpp"

namespace claro {

enum class VerbFormKind {
  gerund,
  participle,
  future_subjunctive,
  finite_1p_plural,
  finite_explicit_1p_singular,
  infinitive,
  other
};

enum class Gender { masculine, feminine };
enum class GrammaticalNumber { singular, plural };

struct Agreement {
  Gender gender = Gender::masculine;
  GrammaticalNumber number = GrammaticalNumber::singular;
  friend bool operator==(const Agreement&, const Agreement&) = default;
};

struct VerbFormTag {
  VerbFormKind kind = VerbFormKind::other;
  std::optional<Agreement> agreement;  // participles only
};

/// Tags tokens[index] using its neighbours for the context-dependent classes.
VerbFormTag tag_verb_form(const std::vector<Token>& tokens, std::size_t index,
                          const LexiconSet& lex = LexiconSet::defaults());

/// Tags of every token, in order. Rules tag a sentence once and share the result.
std::vector<VerbFormTag> tag_tokens(const std::vector<Token>& tokens,
                                    const LexiconSet& lex = LexiconSet::defaults());

/// Context-free convenience wrapper for a single word.
VerbFormTag tag_word(std::string_view word, const LexiconSet& lex = LexiconSet::defaults());

/// Removes up to two enclitic pronouns ("hallándose" -> "hallando") and the
/// accent they force. Returns the input unchanged when nothing was stripped.
std::string strip_enclitics(std::string_view lower_word);

/// Agreement implied by a noun or adjective ending, if any (-o/-a/-os/-as/-es).
std::optional<Agreement> nominal_agreement(std::string_view lower_word);

enum class PassiveKind { periphrastic, periphrastic_in_periphrasis, reflexive, reflexive_with_agent };

std::string_view to_string(PassiveKind kind);

struct PassiveMatch {
  PassiveKind kind = PassiveKind::periphrastic;
  Span span;
  std::optional<Span> agent_span;
  std::size_t first_token = 0;  // inclusive
  std::size_t last_token = 0;   // exclusive
};

/// Leftmost-longest, non-overlapping passive constructions of one sentence.
std::vector<PassiveMatch> find_passives(const Sentence& sentence,
                                        const LexiconSet& lex = LexiconSet::defaults());
/// Same, reusing tags from tag_tokens(sentence.tokens).
std::vector<PassiveMatch> find_passives(const Sentence& sentence, const std::vector<VerbFormTag>& tags,
                                        const LexiconSet& lex = LexiconSet::defaults());

/// Word classes the passive grammar is written over. Exposed so tests can
/// check find_passives against an exhaustive window enumeration.
namespace passive_class {
enum : unsigned {
  ser_singular = 1u << 0,   // es, fue, será, sea...
  ser_plural = 1u << 1,     // son, fueron, serán, sean...
  sido = 1u << 2,
  haber_singular = 1u << 3,
  haber_plural = 1u << 4,
  haber_infinitive = 1u << 5,
  modal_singular = 1u << 6,  // debe, deberá, puede, tiene...
  modal_plural = 1u << 7,
  link = 1u << 8,            // a, de, que between modal and infinitive
  ser_infinitive = 1u << 9,
  adverb = 1u << 10,
  participle_singular = 1u << 11,
  participle_plural = 1u << 12,
  se = 1u << 13,
  object_clitic = 1u << 14,  // le, les, lo, la...
  finite_third = 1u << 15,
  infinitive = 1u << 16,
  por = 1u << 17,
  de = 1u << 18,             // de, del
  determiner = 1u << 19,
  np_stop = 1u << 20,        // words that end an agent phrase
  clause_stop = 1u << 21,    // que, and the punctuation , ; :
  pronominal = 1u << 22,     // verbs whose "se ... de" is not an agent
  parte = 1u << 23,
  word = 1u << 24,
};
}  // namespace passive_class

unsigned passive_classes(const std::vector<Token>& tokens, std::size_t index,
                         const LexiconSet& lex = LexiconSet::defaults());
unsigned passive_classes(const std::vector<Token>& tokens, std::size_t index, const VerbFormTag& tag,
                         const LexiconSet& lex = LexiconSet::defaults());

/// Longest agent phrase allowed after the preposition, in word tokens.
inline constexpr std::size_t kMaxAgentWords = 6;
/// Word tokens allowed between the verb group and "por".
inline constexpr std::size_t kAgentWindow = 8;

struct Nominalization {
  Span span;
  std::size_t token = 0;
  bool has_de_complement = false;
};

std::vector<Nominalization> find_nominalizations(const Sentence& sentence,
                                                 const LexiconSet& lex = LexiconSet::defaults());

struct AcronymMatch {
  Span span;
  std::string surface;
  bool clarified_by_markup = false;
  std::size_t sentence = 0;
  std::size_t token = 0;
};

/// 2-6 characters, capitals (digits allowed after the first), at least two letters.
bool is_acronym_shaped(const Token& token);
/// True for all-caps tokens that sit next to another all-caps word (shouting, not an acronym).
bool in_caps_run(const std::vector<Token>& tokens, std::size_t index);

std::vector<AcronymMatch> find_acronyms(const Block& block,
                                        const LexiconSet& lex = LexiconSet::defaults());

/// Initials of the content words spell the acronym (case- and accent-insensitive).
bool initials_match(const std::vector<std::string>& words, std::string_view acronym);
bool initials_match(std::string_view full_form, std::string_view acronym);

enum class PersonMarker { first_plural, first_singular_explicit, tu_form, usted_form };

std::string_view to_string(PersonMarker marker);

struct PersonMatch {
  Span span;
  PersonMarker marker = PersonMarker::first_plural;
};

std::vector<PersonMatch> find_person_markers(const Sentence& sentence,
                                             const LexiconSet& lex = LexiconSet::defaults());
std::vector<PersonMatch> find_person_markers(const Sentence& sentence, const std::vector<VerbFormTag>& tags,
                                             const LexiconSet& lex = LexiconSet::defaults());

}  // namespace claro
