// Rules that only need one block (plus a peek at its neighbours).

#include <algorithm>
#include <map>
#include <unordered_set>

#include "claro/unicode.hpp"
#include "rules_internal.hpp"

namespace claro {

namespace uc = unicode;

std::vector<std::string> imperfect_subjunctive(std::string_view surface) {
  static const std::pair<std::string_view, std::pair<std::string_view, std::string_view>> kEndings[] = {
      {"áremos", {"ásemos", "áramos"}}, {"éremos", {"ésemos", "éramos"}}, {"reis", {"seis", "rais"}},
      {"ren", {"sen", "ran"}},          {"res", {"ses", "ras"}},          {"re", {"se", "ra"}}};
  for (const auto& [ending, repl] : kEndings) {
    if (surface.size() > ending.size() && surface.substr(surface.size() - ending.size()) == ending) {
      const std::string stem(surface.substr(0, surface.size() - ending.size()));
      return {stem + std::string(repl.first), stem + std::string(repl.second)};
    }
  }
  return {};
}

namespace detail {

namespace {

using WordSet = std::unordered_set<std::string_view>;

std::string snippet_of(const Document& doc, Span span) {
  constexpr std::size_t kMax = 80;
  const bool cut = span.size() > kMax;
  std::string out = uc::encode_utf8(std::u32string_view(doc.text).substr(span.start, cut ? kMax : span.size()));
  if (cut) out += "…";
  return out;
}

std::string quoted(const Document& doc, Span span) { return "«" + doc.slice(span) + "»"; }

bool is_punct(const Token& t, char c) {
  return !t.is_word && !t.surface.empty() &&
         std::all_of(t.surface.begin(), t.surface.end(), [c](char x) { return x == c; });
}

// Previous word token before index i, if any.
std::optional<std::size_t> prev_word(const std::vector<Token>& tokens, std::size_t i) {
  while (i > 0) {
    --i;
    if (tokens[i].is_word) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> next_word(const std::vector<Token>& tokens, std::size_t i) {
  for (++i; i < tokens.size(); ++i) {
    if (tokens[i].is_word) return i;
  }
  return std::nullopt;
}

bool single_sentence_paragraph(const Document& doc, std::size_t b) {
  const Block& blk = doc.blocks[b];
  if (blk.kind != BlockKind::paragraph || blk.sentences.size() != 1) return false;
  // A paragraph that introduces a list is part of the list, not a lone sentence.
  return !(b + 1 < doc.blocks.size() && doc.blocks[b + 1].kind == BlockKind::list_item);
}

// ------------------------------------------------------------------ a1 a2 a3

void rule_a1(const Document& doc, std::size_t b, const RuleConfig& cfg, BlockFindings& out) {
  if (!single_sentence_paragraph(doc, b)) return;
  const Block& blk = doc.blocks[b];
  if (cfg.profile == Profile::artext) {
    out.diagnostics.push_back(make_diagnostic(doc, "a1", Severity::warn, blk.content,
                                              "Párrafo de una sola oración: cada párrafo debería incluir "
                                              "al menos dos oraciones."));
    return;
  }
  // A single-sentence paragraph is fine on its own; a chain of them reads as
  // an unstructured list.
  const bool chained = (b > 0 && single_sentence_paragraph(doc, b - 1)) ||
                       (b + 1 < doc.blocks.size() && single_sentence_paragraph(doc, b + 1));
  if (chained) {
    out.diagnostics.push_back(make_diagnostic(
        doc, "a1", Severity::info, blk.content,
        "Varios párrafos seguidos de una sola oración: valore agruparlos o convertirlos en una lista."));
  }
}

void rule_a2(const Document& doc, std::size_t b, const RuleConfig& cfg, BlockFindings& out) {
  const Block& blk = doc.blocks[b];
  if (blk.kind != BlockKind::paragraph) return;
  const std::size_t words = blk.word_count();
  const auto limit = static_cast<std::size_t>(cfg.thresholds.long_paragraph_words);
  if (words <= limit) return;
  out.diagnostics.push_back(make_diagnostic(doc, "a2", Severity::warn, blk.content,
                                            "Párrafo demasiado largo: " + std::to_string(words) +
                                                " palabras (máximo " + std::to_string(limit) + ")."));
}

// Connector phrase starting exactly at token `at`, if any.
const PhraseMatch* connector_at(const std::vector<PhraseMatch>& matches, std::size_t at) {
  for (const auto& m : matches) {
    if (m.first_token == at) return &m;
  }
  return nullptr;
}

void rule_a3(const Document& doc, std::size_t b, const LexiconSet& lex, BlockFindings& out) {
  const Block& blk = doc.blocks[b];
  if (blk.kind != BlockKind::paragraph || blk.sentences.empty()) return;
  // Only paragraphs that continue an earlier paragraph of the same section.
  bool continues = false;
  for (std::size_t j = b; j-- > 0;) {
    if (doc.blocks[j].kind == BlockKind::heading) break;
    if (doc.blocks[j].kind == BlockKind::paragraph) {
      continues = true;
      break;
    }
  }
  if (!continues) return;
  const Sentence& s = blk.sentences.front();
  const auto first = first_word(s);
  if (!first) return;
  const auto matches = lex.match_phrases(s, "connectors");
  if (connector_at(matches, *first)) return;
  out.diagnostics.push_back(make_diagnostic(doc, "a3", Severity::info, s.tokens[*first].span,
                                            "El párrafo no empieza con un conector discursivo que lo "
                                            "enlace con el anterior."));
}

void rule_a6(const Document& doc, std::size_t b, const LexiconSet& lex, BlockFindings& out) {
  const Block& blk = doc.blocks[b];
  if (blk.kind != BlockKind::paragraph) return;
  std::map<std::string, int> seen;
  for (const Sentence& s : blk.sentences) {
    const auto matches = lex.match_phrases(s, "connectors");
    // Clause openers: sentence start and the word after , ; :
    std::vector<std::size_t> openers;
    if (auto f = first_word(s)) openers.push_back(*f);
    for (std::size_t k = 0; k + 1 < s.tokens.size(); ++k) {
      if (is_punct(s.tokens[k], ',') || is_punct(s.tokens[k], ';') || is_punct(s.tokens[k], ':')) {
        if (auto n = next_word(s.tokens, k); n && *n == k + 1) openers.push_back(*n);
      }
    }
    for (std::size_t at : openers) {
      const PhraseMatch* m = connector_at(matches, at);
      if (!m) continue;
      std::string key;
      for (const auto& w : m->entry->words) key += (key.empty() ? "" : " ") + w;
      if (++seen[key] < 2) continue;
      out.diagnostics.push_back(make_diagnostic(doc, "a6", Severity::info, m->span,
                                                "Conector repetido " + quoted(doc, m->span) +
                                                    ": varíe los conectores del párrafo.",
                                                m->entry->replacements));
    }
  }
}

// --------------------------------------------------------------- a4 a5 a7

bool sentence_is_long(const Sentence& s, const RuleConfig& cfg) {
  const int limit = cfg.profile == Profile::artext ? cfg.thresholds.long_sentence_words
                                                   : cfg.thresholds.hard_sentence_cap_words;
  return s.word_count > static_cast<std::size_t>(limit);
}

void rule_a4(const Document& doc, const Block& blk, const RuleConfig& cfg, BlockFindings& out) {
  const int limit = cfg.profile == Profile::artext ? cfg.thresholds.long_sentence_words
                                                   : cfg.thresholds.hard_sentence_cap_words;
  for (const Sentence& s : blk.sentences) {
    if (!sentence_is_long(s, cfg)) continue;
    out.diagnostics.push_back(make_diagnostic(doc, "a4", Severity::warn, s.span,
                                              "Oración demasiado larga: " + std::to_string(s.word_count) +
                                                  " palabras (máximo " + std::to_string(limit) + ")."));
  }
}

// Compound sentence: long and split by at least two commas or semicolons.
void rule_a5_compound(const Document& doc, const Block& blk, const RuleConfig& cfg, BlockFindings& out) {
  for (const Sentence& s : blk.sentences) {
    if (s.word_count <= static_cast<std::size_t>(cfg.thresholds.long_sentence_words)) continue;
    std::size_t separators = 0;
    for (const Token& t : s.tokens) {
      if (is_punct(t, ',') || is_punct(t, ';')) separators += t.surface.size();
    }
    if (separators < 2) continue;
    out.diagnostics.push_back(make_diagnostic(doc, "a5", Severity::warn, s.span,
                                              "Oración compuesta larga: divídala en oraciones más breves."));
  }
}

// Items of the enumeration "A, B, C y D": top-level comma/semicolon segments
// up to the last one holding a coordinator, plus the coordinated item. Items
// may contain their own "y" ("Nacimiento y cuidado de menor").
std::size_t enumeration_items(const Sentence& s) {
  static const WordSet kCoordinators = {"y", "e", "o", "u"};
  long depth = 0;
  std::size_t segment = 0;
  std::size_t items = 0;
  for (const Token& t : s.tokens) {
    if (is_punct(t, '(')) depth += static_cast<long>(t.surface.size());
    else if (is_punct(t, ')')) depth = std::max(0L, depth - static_cast<long>(t.surface.size()));
    else if (depth == 0 && (is_punct(t, ',') || is_punct(t, ';'))) segment += t.surface.size();
    else if (depth == 0 && t.is_word && kCoordinators.contains(t.lower)) items = segment + 2;
  }
  return items;
}

void rule_a7(const Document& doc, const Block& blk, const RuleConfig& cfg, BlockFindings& out) {
  if (blk.kind != BlockKind::paragraph) return;
  const auto needed = static_cast<std::size_t>(cfg.thresholds.min_list_items);
  for (const Sentence& s : blk.sentences) {
    if (!sentence_is_long(s, cfg) || enumeration_items(s) < needed) continue;
    out.diagnostics.push_back(make_diagnostic(
        doc, "a7", Severity::info, s.span,
        "La oración contiene una enumeración larga: preséntela como lista.",
        {"Introduzca la lista con una frase que termine en dos puntos y redacte todos los elementos "
         "con la misma estructura."}));
  }
}

// ---------------------------------------------------------------- b1 - b4

using Tags = std::vector<VerbFormTag>;

void rule_b1(const Document& doc, const Sentence& s, const Tags& tags, const RuleConfig& cfg, const LexiconSet& lex,
             BlockFindings& out) {
  for (const PassiveMatch& m : find_passives(s, tags, lex)) {
    std::string what;
    switch (m.kind) {
      case PassiveKind::periphrastic: what = "Pasiva perifrástica (ser + participio)"; break;
      case PassiveKind::periphrastic_in_periphrasis:
        if (cfg.profile == Profile::artext) continue;
        what = "Pasiva perifrástica dentro de una perífrasis verbal";
        break;
      case PassiveKind::reflexive_with_agent:
        if (cfg.profile == Profile::artext) continue;
        what = "Pasiva refleja con complemento agente";
        break;
      case PassiveKind::reflexive: continue;
    }
    out.diagnostics.push_back(make_diagnostic(doc, "b1", Severity::warn, m.span,
                                              what + " " + quoted(doc, m.span) + ": prefiera la voz activa."));
  }
}

bool progressive_auxiliary(std::string_view w) {
  static const WordSet kAux = {
      "estar",   "estoy",    "estás",     "está",     "estamos",   "están",    "estaba",   "estaban",
      "estuvo",  "estuvieron", "estará",  "estarán",  "estaría",   "estarían", "esté",     "estén",
      "estuviera", "estuvieran", "estado", "estando",
      "seguir",  "sigo",     "sigues",    "sigue",    "seguimos",  "siguen",   "seguía",   "seguían",
      "siguió",  "siguieron", "seguirá",  "seguirán", "seguiría",  "siga",     "sigan",    "seguido",
      "continuar", "continúo", "continúas", "continúa", "continuamos", "continúan", "continuaba",
      "continuaban", "continuó", "continuará", "continuarán", "continuaría", "continúe", "continúen",
      "continuado",
      "ir",      "voy",      "vas",       "va",       "vamos",     "van",      "iba",      "iban",
      "irá",     "irán",     "iría",      "vaya",     "vayan",     "ido",
      "llevar",  "llevo",    "llevas",    "lleva",    "llevamos",  "llevan",   "llevaba",  "llevaban",
      "llevará", "llevarán", "llevaría",  "lleve",    "lleven",    "llevado"};
  return kAux.contains(w);
}

void rule_b2(const Document& doc, const Sentence& s, const Tags& tags, const RuleConfig& cfg, BlockFindings& out) {
  for (std::size_t k = 0; k < s.tokens.size(); ++k) {
    if (!s.tokens[k].is_word || tags[k].kind != VerbFormKind::gerund) continue;
    if (cfg.profile == Profile::lengclaro) {
      const auto p = prev_word(s.tokens, k);
      if (p && *p + 1 == k && progressive_auxiliary(s.tokens[*p].lower)) continue;
    }
    out.diagnostics.push_back(make_diagnostic(doc, "b2", Severity::warn, s.tokens[k].span,
                                              "Gerundio " + quoted(doc, s.tokens[k].span) +
                                                  ": valore sustituirlo por una forma personal del verbo."));
  }
}

bool auxiliary_before_participle(std::string_view w) {
  static const WordSet kAux = {
      "ha",    "han",    "he",    "has",    "hemos",   "había",   "habían",  "habrá",   "habrán",
      "haya",  "hayan",  "hubo",  "haber",  "habiendo", "hubiera", "hubieran", "habría", "habrían",
      "es",    "son",    "era",   "eran",   "fue",     "fueron",  "será",    "serán",   "sea",
      "sean",  "ser",    "sido",  "siendo", "sería",   "serían",  "fuera",   "fueran",
      "está",  "están",  "estaba", "estaban", "estará", "estarán", "esté",   "estén",   "estar",
      "estado", "estuvo", "estuvieron", "estaría", "estarían"};
  return kAux.contains(w);
}

void rule_b3(const Document& doc, const Sentence& s, const Tags& tags, const RuleConfig& cfg, BlockFindings& out) {
  auto flag = [&](std::size_t k) {
    out.diagnostics.push_back(make_diagnostic(doc, "b3", Severity::warn, s.tokens[k].span,
                                              "Participio " + quoted(doc, s.tokens[k].span) +
                                                  ": valore una construcción con verbo conjugado."));
  };
  if (cfg.profile == Profile::artext) {
    for (std::size_t k = 0; k < s.tokens.size(); ++k) {
      if (!s.tokens[k].is_word || s.tokens[k].lower == "sido") continue;
      if (tags[k].kind == VerbFormKind::participle) flag(k);
    }
    return;
  }
  // Absolute constructions only: "Finalizado el proceso...", "Una vez presentada...".
  auto k = first_word(s);
  if (!k) return;
  if (s.tokens[*k].lower == "una") {
    const auto v = next_word(s.tokens, *k);
    if (!v || s.tokens[*v].lower != "vez") return;
    k = next_word(s.tokens, *v);
    if (!k) return;
  }
  const VerbFormTag& tag = tags[*k];
  if (tag.kind != VerbFormKind::participle || s.tokens[*k].lower == "sido") return;
  // Part of a compound tense or passive, or an adjective after its noun.
  std::optional<std::size_t> p = *k;
  for (int back = 0; back < 2; ++back) {
    p = prev_word(s.tokens, *p);
    if (!p) break;
    if (auxiliary_before_participle(s.tokens[*p].lower)) return;
  }
  if (const auto noun = prev_word(s.tokens, *k)) {
    const auto agr = nominal_agreement(s.tokens[*noun].lower);
    if (agr && tag.agreement && *agr == *tag.agreement && s.tokens[*noun].lower != "una") return;
  }
  flag(*k);
}

void rule_b4(const Document& doc, const Sentence& s, const Tags& tags, BlockFindings& out) {
  for (std::size_t k = 0; k < s.tokens.size(); ++k) {
    if (!s.tokens[k].is_word || tags[k].kind != VerbFormKind::future_subjunctive) continue;
    const Token& t = s.tokens[k];
    std::vector<std::string> sugg = imperfect_subjunctive(t.lower);
    if (t.shape == Shape::capitalized) {
      for (auto& x : sugg) {
        std::u32string cps = uc::decode_utf8(x);
        cps[0] = uc::to_upper(cps[0]);
        x = uc::encode_utf8(cps);
      }
    }
    out.diagnostics.push_back(make_diagnostic(doc, "b4", Severity::warn, t.span,
                                              "Futuro de subjuntivo " + quoted(doc, t.span) +
                                                  ": forma arcaica, use el pretérito imperfecto de subjuntivo.",
                                              std::move(sugg)));
  }
}

// ---------------------------------------------------------------- b6 b7 b9

void rule_b6(const Document& doc, const Sentence& s, const RuleConfig& cfg, const LexiconSet& lex,
             BlockFindings& out) {
  for (const Nominalization& n : find_nominalizations(s, lex)) {
    if (cfg.profile == Profile::lengclaro && !n.has_de_complement) continue;
    out.diagnostics.push_back(make_diagnostic(doc, "b6", Severity::warn, n.span,
                                              "Nominalización " + quoted(doc, n.span) +
                                                  ": valore expresar la acción con un verbo."));
  }
}

void rule_b7(const Document& doc, const Sentence& s, const RuleConfig& cfg, const LexiconSet& lex,
             BlockFindings& out) {
  const auto markers = lex.match_phrases(s, "negation_markers");
  if (markers.size() < static_cast<std::size_t>(cfg.thresholds.negation_min_count)) return;
  const Span span{markers.front().span.start, markers.back().span.end};
  out.diagnostics.push_back(make_diagnostic(doc, "b7", Severity::warn, span,
                                            std::to_string(markers.size()) +
                                                " negaciones en la misma oración: formúlela en positivo."));
}

std::vector<std::string> words_between(const std::vector<Token>& tokens, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t k = from; k < to; ++k) {
    if (tokens[k].is_word) out.push_back(tokens[k].surface);
  }
  return out;
}

// "(INSS)" after its expansion, or "INSS (Instituto ...)" after the acronym.
bool acronym_gloss_parenthetical(const std::vector<Token>& tokens, std::size_t open, std::size_t close) {
  const auto inner = words_between(tokens, open + 1, close);
  if (inner.empty()) return false;
  if (inner.size() == 1) {
    std::size_t k = open + 1;
    while (!tokens[k].is_word) ++k;
    if (!is_acronym_shaped(tokens[k])) return false;
    std::vector<std::string> before;
    for (std::size_t j = open; j-- > 0 && before.size() < 8;) {
      if (!tokens[j].is_word) break;
      before.insert(before.begin(), tokens[j].surface);
      if (initials_match(before, tokens[k].surface)) return true;
    }
    return false;
  }
  if (open > 0 && is_acronym_shaped(tokens[open - 1])) return initials_match(inner, tokens[open - 1].surface);
  return false;
}

void rule_b9(const Document& doc, const Sentence& s, const RuleConfig& cfg, BlockFindings& out) {
  const auto& tokens = s.tokens;
  const auto min_words = static_cast<std::size_t>(cfg.thresholds.parenthetical_min_words);
  const std::string advice = "Mueva el contenido a una oración aparte o al final de la oración.";
  std::size_t k = 0;
  while (k < tokens.size()) {
    if (!is_punct(tokens[k], '(')) {
      ++k;
      continue;
    }
    // Find the matching close, counting every parenthesis character.
    long depth = 0;
    std::optional<std::size_t> close;
    for (std::size_t j = k; j < tokens.size(); ++j) {
      if (is_punct(tokens[j], '(')) depth += static_cast<long>(tokens[j].surface.size());
      if (is_punct(tokens[j], ')')) {
        depth -= static_cast<long>(tokens[j].surface.size());
        if (depth <= 0) {
          close = j;
          break;
        }
      }
    }
    const std::size_t end = close ? *close : tokens.size() - 1;
    const std::size_t words = words_between(tokens, k + 1, close ? *close : tokens.size()).size();
    if (words >= min_words && !(close && acronym_gloss_parenthetical(tokens, k, *close))) {
      // Unbalanced: run to the end of the sentence, but never include the final period.
      std::size_t last = end;
      if (!close) {
        while (last > k && !tokens[last].is_word && !is_punct(tokens[last], ')')) --last;
      }
      const Span span{tokens[k].span.start, tokens[last].span.end};
      if (close) {
        out.diagnostics.push_back(make_diagnostic(doc, "b9", Severity::warn, span,
                                                  "Inciso entre paréntesis de " + std::to_string(words) +
                                                      " palabras: evite los incisos.",
                                                  {advice}));
      } else {
        out.diagnostics.push_back(make_diagnostic(doc, "b9", Severity::info, span,
                                                  "Paréntesis sin cerrar que abre un inciso de " +
                                                      std::to_string(words) + " palabras.",
                                                  {advice}));
      }
    }
    k = end + 1;
  }
}

// ------------------------------------------------------------- lexical

struct LexicalRule {
  std::string_view id;
  std::string_view table;
  std::string_view message;
};

constexpr LexicalRule kLexicalRules[] = {
    {"c1", "subjectivity", "puede transmitir una valoración subjetiva."},
    {"c4", "transparent", "palabra de registro elevado; prefiera un sinónimo más común."},
    {"c5", "difficult", "expresión que dificulta la comprensión."},
    {"c6", "inaccurate", "palabra poco precisa; concrete el significado."},
    {"c7", "redundant", "expresión redundante."},
    {"c8", "long_words", "palabra larga; existe una alternativa más breve."},
    {"c9", "superfluous", "no aporta información; elimínela o simplifíquela."},
};

void rule_lexical(const Document& doc, const Sentence& s, const RuleConfig& cfg, const LexiconSet& lex,
                  BlockFindings& out) {
  for (const auto& rule : kLexicalRules) {
    if (!cfg.is_enabled(rule.id)) continue;
    for (const PhraseMatch& m : lex.match_phrases(s, rule.table)) {
      out.diagnostics.push_back(make_diagnostic(doc, rule.id, Severity::warn, m.span,
                                                quoted(doc, m.span) + ": " + std::string(rule.message),
                                                m.entry->replacements));
    }
  }
}

void rule_c10(const Document& doc, const Sentence& s, const LexiconSet& lex, BlockFindings& out) {
  const auto& tokens = s.tokens;
  const PhraseTable& foreign = lex.table("foreign");
  const auto first = first_word(s);
  auto foreign_word = [&](std::optional<std::size_t> k) {
    return k && foreign.contains(tokens[*k].lower) && !lex.contains("accepted_loanwords", tokens[*k].lower);
  };
  for (const PhraseMatch& m : foreign.match(tokens)) {
    const Token& head = tokens[m.first_token];
    if (lex.contains("accepted_loanwords", head.lower)) continue;
    if (head.shape == Shape::all_caps) continue;
    if (head.shape == Shape::capitalized && m.first_token != first) {
      // Likely a proper name, unless it sits inside a run of foreign words.
      const bool in_run =
          (m.first_token > 0 && tokens[m.first_token - 1].is_word && foreign_word(m.first_token - 1)) ||
          (m.last_token < tokens.size() && tokens[m.last_token].is_word && foreign_word(m.last_token));
      if (!in_run) continue;
    }
    out.diagnostics.push_back(make_diagnostic(doc, "c10", Severity::warn, m.span,
                                              "Extranjerismo " + quoted(doc, m.span) +
                                                  ": use un equivalente en español.",
                                              m.entry->replacements));
  }
}

// ------------------------------------------------------------------ f1 f2

bool shouted(const Token& t) {
  if (!t.is_word) return false;
  std::size_t letters = 0;
  for (char32_t c : uc::decode_utf8(t.surface)) {
    if (uc::is_letter(c)) {
      if (!uc::is_upper(c)) return false;
      ++letters;
    }
  }
  return letters >= 1;
}

std::size_t letter_count(const Token& t) {
  std::size_t n = 0;
  for (char32_t c : uc::decode_utf8(t.surface)) n += uc::is_letter(c) ? 1 : 0;
  return n;
}

void rule_f1(const Document& doc, const Block& blk, BlockFindings& out) {
  if (blk.kind == BlockKind::heading) {
    std::size_t words = 0;
    bool all = true;
    std::size_t letters = 0;
    for (const Sentence& s : blk.sentences) {
      for (const Token& t : s.tokens) {
        if (!t.is_word) continue;
        ++words;
        letters += letter_count(t);
        all = all && (shouted(t) || letter_count(t) == 0);
      }
    }
    if (words > 0 && all && letters >= 4 && !(words == 1 && blk.sentences.front().tokens.size() == 1 &&
                                               is_acronym_shaped(blk.sentences.front().tokens.front()))) {
      out.diagnostics.push_back(make_diagnostic(doc, "f1", Severity::warn, blk.content,
                                                "Título escrito enteramente en mayúsculas: use minúsculas "
                                                "salvo en la inicial."));
      return;
    }
  }
  for (const Sentence& s : blk.sentences) {
    for (std::size_t k = 0; k < s.tokens.size(); ++k) {
      const Token& t = s.tokens[k];
      if (!shouted(t) || letter_count(t) < 4) continue;
      if (is_acronym_shaped(t) && !in_caps_run(s.tokens, k)) continue;
      out.diagnostics.push_back(make_diagnostic(doc, "f1", Severity::warn, t.span,
                                                "Palabra en mayúsculas " + quoted(doc, t.span) +
                                                    ": limite el uso de mayúsculas."));
    }
  }
}

std::string digits_only(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c >= '0' && c <= '9') out += c;
  }
  return out;
}

void rule_f2(const Document& doc, const Sentence& s, const LexiconSet& lex, BlockFindings& out) {
  const auto& tokens = s.tokens;
  std::size_t k = 0;
  while (k < tokens.size()) {
    const Token& t = tokens[k];
    if (!t.is_word) {
      ++k;
      continue;
    }
    // Long digit strings: "3000000", "3.000.000".
    if (std::all_of(t.surface.begin(), t.surface.end(), [](char c) { return (c >= '0' && c <= '9') || c == '.'; })) {
      const std::string digits = digits_only(t.surface);
      if (digits.size() > 6 && digits.front() != '0') {
        std::vector<std::string> sugg;
        const std::string whole = digits.substr(0, digits.size() - 6);
        const std::string rest = digits.substr(digits.size() - 6);
        if (rest == "000000") {
          sugg.push_back(whole + (whole == "1" ? " millón" : " millones"));
        } else if (rest.substr(1) == "00000") {
          sugg.push_back(whole + "," + rest.substr(0, 1) + " millones");
        }
        out.diagnostics.push_back(make_diagnostic(doc, "f2", Severity::warn, t.span,
                                                  "Cifra de muchos dígitos " + quoted(doc, t.span) +
                                                      ": exprésela con «millones».",
                                                  std::move(sugg)));
      }
      ++k;
      continue;
    }
    if (!lex.number_value(t.lower)) {
      ++k;
      continue;
    }
    // "por ciento" is a percentage, not a figure.
    if (t.lower == "ciento" && k > 0) {
      const auto p = prev_word(tokens, k);
      if (p && tokens[*p].lower == "por") {
        ++k;
        continue;
      }
    }
    // Spelled-out number: number words, optionally joined by "y".
    long total = 0;
    long current = 0;
    std::size_t last = k;
    std::size_t j = k;
    while (j < tokens.size()) {
      if (!tokens[j].is_word) break;
      if (tokens[j].lower == "y" && j > k) {
        const auto n = next_word(tokens, j);
        if (n && *n == j + 1 && lex.number_value(tokens[*n].lower)) {
          ++j;
          continue;
        }
        break;
      }
      const auto v = lex.number_value(tokens[j].lower);
      if (!v) break;
      if (tokens[j].lower == "ciento" && j > k) {
        const auto p = prev_word(tokens, j);
        if (p && tokens[*p].lower == "por") break;
      }
      if (*v == 1000) {
        total += (current == 0 ? 1 : current) * 1000;
        current = 0;
      } else {
        current += *v;
      }
      last = j;
      ++j;
    }
    const long value = total + current;
    if (value >= 11 && value <= 9999) {
      const Span span{tokens[k].span.start, tokens[last].span.end};
      out.diagnostics.push_back(make_diagnostic(doc, "f2", Severity::warn, span,
                                                "Número escrito con letras " + quoted(doc, span) +
                                                    ": use cifras.",
                                                {std::to_string(value)}));
    }
    k = last + 1;
  }
}

}  // namespace

Diagnostic make_diagnostic(const Document& doc, std::string_view rule_id, Severity severity, Span span,
                           std::string message, std::vector<std::string> suggestions) {
  Diagnostic d;
  d.rule_id = std::string(rule_id);
  const RuleInfo* info = find_rule(rule_id);
  d.category = info ? info->category : Category::discourse;
  d.severity = severity;
  d.span = span;
  d.message = std::move(message);
  d.suggestions = std::move(suggestions);
  d.snippet = snippet_of(doc, span);
  if (doc.source_format == SourceFormat::html && !doc.source_map.empty()) d.source_span = doc.source_span(span);
  return d;
}

std::optional<std::size_t> first_word(const Sentence& sentence) {
  for (std::size_t k = 0; k < sentence.tokens.size(); ++k) {
    if (sentence.tokens[k].is_word) return k;
  }
  return std::nullopt;
}

BlockFindings evaluate_block(const Document& doc, std::size_t b, const RuleConfig& cfg, const LexiconSet& lex) {
  BlockFindings out;
  const Block& blk = doc.blocks[b];
  const bool artext = cfg.profile == Profile::artext;
  if (cfg.is_enabled("a1")) rule_a1(doc, b, cfg, out);
  if (cfg.is_enabled("a2")) rule_a2(doc, b, cfg, out);
  if (cfg.is_enabled("a3")) rule_a3(doc, b, lex, out);
  if (cfg.is_enabled("a4")) rule_a4(doc, blk, cfg, out);
  if (cfg.is_enabled("a5") && artext) rule_a5_compound(doc, blk, cfg, out);
  if (cfg.is_enabled("a6")) rule_a6(doc, b, lex, out);
  if (cfg.is_enabled("a7")) rule_a7(doc, blk, cfg, out);
  if (cfg.is_enabled("f1")) rule_f1(doc, blk, out);
  const bool b1 = cfg.is_enabled("b1"), b2 = cfg.is_enabled("b2"), b3 = cfg.is_enabled("b3"),
             b4 = cfg.is_enabled("b4"), persons = cfg.is_enabled("b5") || cfg.is_enabled("b8");
  for (const Sentence& s : blk.sentences) {
    const Tags tags = (b1 || b2 || b3 || b4 || persons) ? tag_tokens(s.tokens, lex) : Tags{};
    if (b1) rule_b1(doc, s, tags, cfg, lex, out);
    if (b2) rule_b2(doc, s, tags, cfg, out);
    if (b3) rule_b3(doc, s, tags, cfg, out);
    if (b4) rule_b4(doc, s, tags, out);
    if (cfg.is_enabled("b6")) rule_b6(doc, s, cfg, lex, out);
    if (cfg.is_enabled("b7")) rule_b7(doc, s, cfg, lex, out);
    if (cfg.is_enabled("b9")) rule_b9(doc, s, cfg, out);
    rule_lexical(doc, s, cfg, lex, out);
    if (cfg.is_enabled("c10")) rule_c10(doc, s, lex, out);
    if (cfg.is_enabled("f2")) rule_f2(doc, s, lex, out);
    if (persons) {
      auto found = find_person_markers(s, tags, lex);
      out.persons.insert(out.persons.end(), found.begin(), found.end());
    }
  }
  if (cfg.is_enabled("c2") || cfg.is_enabled("c3")) out.acronyms = find_acronyms(blk, lex);
  return out;
}

}  // namespace detail
}  // namespace claro
