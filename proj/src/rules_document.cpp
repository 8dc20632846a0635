// Rules that aggregate over the whole document: average sentence length,
// person consistency and acronym introduction.

#include <algorithm>
#include <cstdio>
#include <map>
#include <unordered_set>

#include "claro/unicode.hpp"
#include "rules_internal.hpp"

namespace claro::detail {

namespace {

namespace uc = unicode;

// Position of a token in reading order.
struct Pos {
  std::size_t block = 0;
  std::size_t sentence = 0;
  std::size_t token = 0;
  friend auto operator<=>(const Pos&, const Pos&) = default;
};

void rule_a5_average(const Document& doc, const RuleConfig& cfg, std::vector<Diagnostic>& out) {
  std::size_t sentences = 0;
  std::size_t words = 0;
  for (const Block& b : doc.blocks) {
    if (b.kind != BlockKind::paragraph) continue;
    for (const Sentence& s : b.sentences) {
      ++sentences;
      words += s.word_count;
    }
  }
  if (sentences == 0) return;
  const double mean = static_cast<double>(words) / static_cast<double>(sentences);
  if (mean <= cfg.thresholds.avg_sentence_words_target) return;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", mean);
  std::string shown(buf);
  std::replace(shown.begin(), shown.end(), '.', ',');
  out.push_back(make_diagnostic(doc, "a5", Severity::warn, Span{0, doc.text.size()},
                                "Longitud media de las oraciones: " + shown + " palabras (máximo " +
                                    std::to_string(cfg.thresholds.avg_sentence_words_target) + ")."));
}

// Flags the less frequent of two competing marker classes; `tie_flags_a`
// decides which side loses a tie.
void flag_minority(const Document& doc, const std::vector<PersonMatch>& all, PersonMarker a, PersonMarker b,
                   bool tie_flags_a, std::string_view rule_id, const std::string& message,
                   std::vector<Diagnostic>& out) {
  std::size_t na = 0;
  std::size_t nb = 0;
  for (const auto& m : all) {
    na += m.marker == a ? 1 : 0;
    nb += m.marker == b ? 1 : 0;
  }
  if (na == 0 || nb == 0) return;
  const PersonMarker loser = na < nb ? a : nb < na ? b : (tie_flags_a ? a : b);
  for (const auto& m : all) {
    if (m.marker == loser) out.push_back(make_diagnostic(doc, rule_id, Severity::warn, m.span, message));
  }
}

// ------------------------------------------------------------------ acronyms

const std::unordered_set<std::string_view>& expansion_skip_words() {
  static const std::unordered_set<std::string_view> k = {"de", "del", "la", "los", "las", "y", "e", "para", "el"};
  return k;
}

bool initial_capital(const Token& t) { return t.shape == Shape::capitalized || t.shape == Shape::all_caps; }

std::size_t acronym_letters(std::string_view surface) {
  std::size_t n = 0;
  for (char32_t c : uc::decode_utf8(surface)) n += uc::is_alnum(c) ? 1 : 0;
  return n;
}

struct FullForm {
  Pos pos;  // first token
  std::size_t last = 0;  // exclusive token index
  Span span;
};

// Capitalised word sequences whose initials spell the acronym.
std::vector<FullForm> find_full_forms(const Document& doc, std::string_view acronym) {
  std::vector<FullForm> out;
  const std::size_t letters = acronym_letters(acronym);
  for (std::size_t b = 0; b < doc.blocks.size(); ++b) {
    for (std::size_t si = 0; si < doc.blocks[b].sentences.size(); ++si) {
      const auto& tokens = doc.blocks[b].sentences[si].tokens;
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!tokens[i].is_word || !initial_capital(tokens[i]) || expansion_skip_words().contains(tokens[i].lower) ||
            tokens[i].surface == acronym) {
          continue;
        }
        std::vector<std::string> words;
        std::size_t content = 0;
        std::size_t j = i;
        for (; j < tokens.size() && content < letters; ++j) {
          const Token& t = tokens[j];
          if (!t.is_word) break;
          if (expansion_skip_words().contains(t.lower) && t.shape == Shape::lowercase) {
            words.push_back(t.surface);
            continue;
          }
          if (!initial_capital(t)) break;
          words.push_back(t.surface);
          ++content;
        }
        if (content == letters && initials_match(words, acronym)) {
          out.push_back({{b, si, i}, j, {tokens[i].span.start, tokens[j - 1].span.end}});
        }
      }
    }
  }
  return out;
}

bool is_open(const Token& t) { return !t.is_word && t.surface == "("; }
bool is_close(const Token& t) { return !t.is_word && t.surface == ")"; }

// Expansion right before the acronym ("Full Form (ACR)" or "Full Form ACR"),
// or right after it in parentheses ("ACR (Full Form)"). Returns the span of
// the whole introduction.
std::optional<Span> introduction_at(const std::vector<Token>& tokens, std::size_t k) {
  const std::string& acronym = tokens[k].surface;
  // Preceding words, up to six.
  std::size_t j = k;
  const bool parenthesised = j > 0 && is_open(tokens[j - 1]);
  if (parenthesised) --j;
  std::vector<std::string> before;
  for (std::size_t i = j; i-- > 0 && before.size() < 6;) {
    if (!tokens[i].is_word) break;
    before.insert(before.begin(), tokens[i].surface);
    if (initials_match(before, acronym)) {
      std::size_t end = k;
      if (parenthesised && k + 1 < tokens.size() && is_close(tokens[k + 1])) end = k + 1;
      return Span{tokens[i].span.start, tokens[end].span.end};
    }
  }
  // Following parenthesised expansion.
  if (k + 1 < tokens.size() && is_open(tokens[k + 1])) {
    std::vector<std::string> inner;
    for (std::size_t i = k + 2; i < tokens.size(); ++i) {
      if (is_close(tokens[i])) {
        if (initials_match(inner, acronym)) return Span{tokens[k].span.start, tokens[i].span.end};
        break;
      }
      if (tokens[i].is_word) inner.push_back(tokens[i].surface);
    }
  }
  return std::nullopt;
}

void rule_acronyms(const Document& doc, const std::vector<BlockFindings>& blocks, const RuleConfig& cfg,
                   const LexiconSet& lex, std::vector<Diagnostic>& out) {
  struct Occurrence {
    Pos pos;
    const AcronymMatch* match;
    std::optional<Span> intro;
  };
  std::map<std::string, std::vector<Occurrence>> by_surface;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const AcronymMatch& m : blocks[b].acronyms) {
      const auto& tokens = doc.blocks[b].sentences[m.sentence].tokens;
      by_surface[m.surface].push_back({{b, m.sentence, m.token}, &m, introduction_at(tokens, m.token)});
    }
  }
  const bool c2 = cfg.is_enabled("c2");
  const bool c3 = cfg.is_enabled("c3");

  for (const auto& [surface, occurrences] : by_surface) {
    const auto full_forms = find_full_forms(doc, surface);
    auto inside_intro = [&](const FullForm& f) {
      return std::any_of(occurrences.begin(), occurrences.end(),
                         [&](const Occurrence& o) { return o.intro && o.intro->contains(f.span); });
    };

    // Events in reading order: acronym uses and free-standing full forms.
    struct Event {
      Pos pos;
      const Occurrence* occ = nullptr;
      const FullForm* full = nullptr;
    };
    std::vector<Event> events;
    for (const auto& o : occurrences) events.push_back({o.pos, &o, nullptr});
    for (const auto& f : full_forms) {
      if (!inside_intro(f)) events.push_back({f.pos, nullptr, &f});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.pos < b.pos; });

    bool seen = false;
    bool introduced = false;
    bool full_form_seen = false;
    for (const Event& e : events) {
      if (e.full) {
        if (introduced && c3) {
          out.push_back(make_diagnostic(doc, "c3", Severity::warn, e.full->span,
                                        "La sigla " + surface + " ya se ha presentado: úsela de forma sistemática.",
                                        {surface}));
        }
        full_form_seen = true;
        continue;
      }
      const Occurrence& o = *e.occ;
      if (!seen) {
        seen = true;
        if (o.intro || full_form_seen) {
          introduced = true;
        } else if (o.match->clarified_by_markup) {
          introduced = true;
          if (c2) {
            out.push_back(make_diagnostic(
                doc, "c2", Severity::info, o.match->span,
                "La sigla " + surface + " solo se explica en el marcado (\"" +
                    doc.blocks[o.pos.block].html_attrs.at(surface) +
                    "\"): los lectores pueden no ver la explicación; escriba la forma completa la primera vez."));
          }
        } else if (c2) {
          std::vector<std::string> sugg;
          if (const PhraseEntry* g = lex.table("acronym_glosses").find_word(uc::to_lower(surface))) {
            sugg = g->replacements;
          }
          out.push_back(make_diagnostic(doc, "c2", Severity::warn, o.match->span,
                                        "Sigla " + surface + " sin forma completa: escríbala completa la primera vez.",
                                        std::move(sugg)));
        }
        continue;
      }
      if (o.intro && !introduced) {
        introduced = true;
        if (c3) {
          out.push_back(make_diagnostic(doc, "c3", Severity::warn, *o.intro,
                                        "La sigla " + surface +
                                            " se presenta después de haberla usado: explíquela en su primera aparición."));
        }
      }
    }
  }
}

}  // namespace

std::vector<Diagnostic> evaluate_document(const Document& doc, const std::vector<BlockFindings>& blocks,
                                          const RuleConfig& cfg, const LexiconSet& lex) {
  std::vector<Diagnostic> out;
  if (cfg.is_enabled("a5") && cfg.profile == Profile::lengclaro) rule_a5_average(doc, cfg, out);

  std::vector<PersonMatch> persons;
  for (const auto& b : blocks) persons.insert(persons.end(), b.persons.begin(), b.persons.end());
  if (cfg.is_enabled("b5")) {
    flag_minority(doc, persons, PersonMarker::first_singular_explicit, PersonMarker::first_plural, true, "b5",
                  "Persona del emisor inconsistente: alterna primera persona del singular y del plural.", out);
  }
  if (cfg.is_enabled("b8")) {
    flag_minority(doc, persons, PersonMarker::usted_form, PersonMarker::tu_form, true, "b8",
                  "Tratamiento inconsistente: el texto alterna tú y usted.", out);
  }
  if (cfg.is_enabled("c2") || cfg.is_enabled("c3")) rule_acronyms(doc, blocks, cfg, lex, out);
  return out;
}

}  // namespace claro::detail
