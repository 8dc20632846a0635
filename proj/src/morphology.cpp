#include "claro/morphology.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "claro/unicode.hpp"

namespace claro {

namespace uc = unicode;

namespace {

using WordSet = std::unordered_set<std::string_view>;

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

// Code points left once `suffix` (a suffix of s) is removed.
std::size_t stem_length(std::string_view s, std::string_view suffix) {
  return uc::length(s.substr(0, s.size() - suffix.size()));
}

bool has_accent(std::string_view s) {
  for (char32_t c : uc::decode_utf8(s)) {
    if (uc::strip_accent(c) != c) return true;
  }
  return false;
}

bool all_letters(std::string_view s) {
  for (char32_t c : uc::decode_utf8(s)) {
    if (!uc::is_letter(c)) return false;
  }
  return !s.empty();
}

const WordSet& function_words() {
  static const WordSet k = {
      "de",    "del",   "la",    "el",     "los",   "las",   "un",     "una",    "unos",
      "unas",  "que",   "en",    "a",      "al",    "y",     "o",      "u",      "e",
      "ni",    "con",   "por",   "para",   "sin",   "le",    "les",    "lo",     "me",
      "te",    "nos",   "se",    "su",     "sus",   "este",  "esta",   "ese",    "esa",
      "esto",  "eso",   "ante",  "entre",  "sobre", "como",  "cuando", "donde",  "mientras",
      "también", "ya",  "no",    "si",     "sí",    "más",   "muy",    "cada",   "todo",
      "toda",  "todos", "todas", "otra",   "otro",  "otras", "otros",  "mi",     "mis",
      "tu",    "tus",   "yo",    "tú",     "usted", "ustedes", "él",   "ella",   "ellos",
      "ellas", "nosotros", "nosotras", "aquí", "ahí", "allí", "hasta", "desde", "hacia",
      "según", "tras",  "contra", "durante", "mediante", "pero", "sino", "aunque", "porque",
      "pues",  "cuya",  "cuyo",  "cuyas",  "cuyos", "quien", "quienes", "cual", "cuales",
      "bien",  "mal",   "solo",  "sólo",   "tanto", "tanta", "ambos", "ambas", "dicho",
      "dicha", "dichos", "dichas", "misma", "mismo", "mismas", "mismos", "nuestra", "nuestro",
      "nuestras", "nuestros", "alguna", "alguno", "algunas", "algunos", "ninguna", "ninguno",
      "cualquier", "cualquiera", "menos", "casi", "antes", "después", "luego", "entonces"};
  return k;
}

const WordSet& determiners() {
  static const WordSet k = {
      "el",      "la",      "los",     "las",      "un",     "una",      "unos",     "unas",
      "este",    "esta",    "estos",   "estas",    "ese",    "esa",      "esos",     "esas",
      "aquel",   "aquella", "aquellos", "aquellas", "dicho", "dicha",    "dichos",   "dichas",
      "su",      "sus",     "cada",    "nuestro",  "nuestra", "nuestros", "nuestras", "mis",
      "tus",     "muchos",  "muchas",  "pocos",    "pocas",  "varios",   "varias",   "algunos",
      "algunas", "otros",   "otras",   "sendos",   "sendas", "ambos",    "ambas"};
  return k;
}

// ---------------------------------------------------------------- gerunds

bool gerund_shape(std::string_view folded) {
  for (std::string_view suf : {"ando", "iendo", "yendo"}) {
    if (ends_with(folded, suf) && stem_length(folded, suf) >= 1) return true;
  }
  return false;
}

constexpr std::array<std::string_view, 10> kClitics = {"les", "los", "las", "nos", "se",
                                                       "me",  "te",  "le",  "lo",  "la"};

}  // namespace

std::string strip_enclitics(std::string_view lower_word) {
  std::string base(lower_word);
  bool stripped = false;
  for (int round = 0; round < 2; ++round) {
    bool hit = false;
    for (std::string_view cl : kClitics) {
      if (ends_with(base, cl) && uc::length(base) >= cl.size() + 2) {
        base.resize(base.size() - cl.size());
        hit = stripped = true;
        break;
      }
    }
    if (!hit) break;
  }
  return stripped ? uc::fold(base) : std::string(lower_word);
}

namespace {

bool is_gerund(std::string_view w, const LexiconSet& lex) {
  if (lex.contains("gerund_exclusions", w)) return false;
  if (gerund_shape(uc::fold(w))) return true;
  // Enclitic forms: strip one clitic, then a second one.
  std::string base(w);
  for (int round = 0; round < 2; ++round) {
    bool hit = false;
    for (std::string_view cl : kClitics) {
      if (ends_with(base, cl) && uc::length(base) >= cl.size() + 4) {
        base.resize(base.size() - cl.size());
        hit = true;
        break;
      }
    }
    if (!hit) return false;
    const std::string folded = uc::fold(base);
    if (gerund_shape(folded) && !lex.contains("gerund_exclusions", folded)) return true;
  }
  return false;
}

// ------------------------------------------------------------ infinitives

bool infinitive_shape(std::string_view folded) {
  static const WordSet kShort = {"ser", "ir", "ver", "dar", "oir", "reir", "leer", "caer"};
  if (!(ends_with(folded, "ar") || ends_with(folded, "er") || ends_with(folded, "ir"))) return false;
  const std::size_t len = uc::length(folded);
  return len >= 4 || kShort.contains(folded);
}

bool is_infinitive(std::string_view w, const LexiconSet& lex) {
  if (lex.contains("infinitive_exclusions", w)) return false;
  if (infinitive_shape(uc::fold(w))) return true;
  std::string base(w);
  for (int round = 0; round < 2; ++round) {
    bool hit = false;
    for (std::string_view cl : kClitics) {
      if (ends_with(base, cl) && uc::length(base) >= cl.size() + 2) {
        base.resize(base.size() - cl.size());
        hit = true;
        break;
      }
    }
    if (!hit) return false;
    const std::string folded = uc::fold(base);
    if (infinitive_shape(folded) && !lex.contains("infinitive_exclusions", folded)) return true;
  }
  return false;
}

// ------------------------------------------------------------ participles

struct SuffixAgreement {
  std::string_view suffix;
  Agreement agreement;
};

constexpr Agreement kMS{Gender::masculine, GrammaticalNumber::singular};
constexpr Agreement kFS{Gender::feminine, GrammaticalNumber::singular};
constexpr Agreement kMP{Gender::masculine, GrammaticalNumber::plural};
constexpr Agreement kFP{Gender::feminine, GrammaticalNumber::plural};

std::optional<Agreement> participle_agreement(std::string_view w, const LexiconSet& lex) {
  if (lex.contains("false_participles", w)) return std::nullopt;
  if (w == "sido") return kMS;
  // Irregular participles are listed in the masculine singular.
  static const std::array<SuffixAgreement, 4> kIrregular = {
      {{"o", kMS}, {"a", kFS}, {"os", kMP}, {"as", kFP}}};
  for (const auto& [suf, agr] : kIrregular) {
    if (!ends_with(w, suf)) continue;
    const std::string base = std::string(w.substr(0, w.size() - suf.size())) + "o";
    if (lex.contains("irregular_participles", base)) return agr;
  }
  static const std::array<SuffixAgreement, 12> kRegular = {{{"ados", kMP},
                                                             {"adas", kFP},
                                                             {"idos", kMP},
                                                             {"idas", kFP},
                                                             {"ídos", kMP},
                                                             {"ídas", kFP},
                                                             {"ado", kMS},
                                                             {"ada", kFS},
                                                             {"ido", kMS},
                                                             {"ida", kFS},
                                                             {"ído", kMS},
                                                             {"ída", kFS}}};
  for (const auto& [suf, agr] : kRegular) {
    if (ends_with(w, suf) && stem_length(w, suf) >= 2 && !has_accent(w.substr(0, w.size() - suf.size()))) {
      return agr;
    }
  }
  return std::nullopt;
}

// --------------------------------------------------- future subjunctive

const WordSet& subjunctive_triggers() {
  static const WordSet k = {"si",    "cuando", "que",   "quien", "quienes", "donde",
                            "mientras", "como", "tú",  "aunque", "cuanto",  "lo"};
  return k;
}

bool is_future_subjunctive(const std::vector<Token>& tokens, std::size_t i, const LexiconSet& lex) {
  const std::string& w = tokens[i].lower;
  if (lex.contains("future_subjunctive_exclusions", w)) return false;
  static const WordSet kIrregular = {
      "fuere",     "fueres",     "fuéremos",  "fuereis",  "fueren",    "diere",    "dieres",
      "diéremos",  "diereis",    "dieren",    "viere",    "vieren",    "dijere",   "dijeren",
      "trajere",   "trajeren",   "condujere", "condujeren", "produjere", "produjeren",
      "redujere",  "redujeren",  "dedujere",  "introdujere", "introdujeren", "tradujere"};
  if (kIrregular.contains(w)) return true;
  // Second person singular forms need a clause-opening trigger before them:
  // plural nouns and adjectives in -ares/-ieres are far more frequent.
  static const std::array<std::string_view, 2> kSecondPerson = {"ares", "ieres"};
  for (std::string_view suf : kSecondPerson) {
    if (ends_with(w, suf) && stem_length(w, suf) >= 3) {
      return i > 0 && tokens[i - 1].is_word && subjunctive_triggers().contains(tokens[i - 1].lower);
    }
  }
  static const std::array<std::string_view, 8> kSuffixes = {"áremos", "iéremos", "areis", "iereis",
                                                           "aren",   "ieren",   "are",   "iere"};
  for (std::string_view suf : kSuffixes) {
    if (ends_with(w, suf) && stem_length(w, suf) >= 3) return true;
  }
  return false;
}

// --------------------------------------------------------- 1st plural

bool is_first_plural(const std::vector<Token>& tokens, std::size_t i, const LexiconSet& lex) {
  const std::string& w = tokens[i].lower;
  if (lex.contains("plural_verb_exclusions", w)) return false;
  const std::string folded = uc::fold(w);
  if (!(ends_with(folded, "amos") || ends_with(folded, "emos") || ends_with(folded, "imos"))) {
    return false;
  }
  if (uc::length(folded) < 5) return false;
  // Written accents before the ending mark proparoxytone adjectives
  // (últimos, próximos) unless they are the verbal ones.
  if (has_accent(w)) {
    static const std::array<std::string_view, 10> kAccented = {
        "íamos", "ábamos", "áramos", "éramos", "ásemos", "ésemos", "áremos", "éremos", "ímos", "ámos"};
    if (std::none_of(kAccented.begin(), kAccented.end(),
                     [&](std::string_view s) { return ends_with(w, s); })) {
      return false;
    }
  }
  if (i > 0 && tokens[i - 1].is_word && determiners().contains(tokens[i - 1].lower)) return false;
  return true;
}

}  // namespace

VerbFormTag tag_verb_form(const std::vector<Token>& tokens, std::size_t index, const LexiconSet& lex) {
  const Token& t = tokens.at(index);
  VerbFormTag tag;
  if (!t.is_word || !all_letters(t.lower)) return tag;
  const std::string& w = t.lower;
  if (is_gerund(w, lex)) {
    tag.kind = VerbFormKind::gerund;
  } else if (auto agr = participle_agreement(w, lex)) {
    tag.kind = VerbFormKind::participle;
    tag.agreement = agr;
  } else if (is_future_subjunctive(tokens, index, lex)) {
    tag.kind = VerbFormKind::future_subjunctive;
  } else if (is_infinitive(w, lex)) {
    tag.kind = VerbFormKind::infinitive;
  } else if (is_first_plural(tokens, index, lex)) {
    tag.kind = VerbFormKind::finite_1p_plural;
  } else if (index > 0 && tokens[index - 1].is_word && tokens[index - 1].lower == "yo" &&
             !function_words().contains(w)) {
    tag.kind = VerbFormKind::finite_explicit_1p_singular;
  }
  return tag;
}

std::vector<VerbFormTag> tag_tokens(const std::vector<Token>& tokens, const LexiconSet& lex) {
  std::vector<VerbFormTag> tags(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) tags[k] = tag_verb_form(tokens, k, lex);
  return tags;
}

VerbFormTag tag_word(std::string_view word, const LexiconSet& lex) {
  const auto tokens = tokenize(word);
  if (tokens.size() != 1) return {};
  return tag_verb_form(tokens, 0, lex);
}

std::optional<Agreement> nominal_agreement(std::string_view w) {
  if (ends_with(w, "os")) return kMP;
  if (ends_with(w, "as")) return kFP;
  if (ends_with(w, "o")) return kMS;
  if (ends_with(w, "a")) return kFS;
  return std::nullopt;
}

// ================================================================ passives

std::string_view to_string(PassiveKind kind) {
  switch (kind) {
    case PassiveKind::periphrastic: return "periphrastic";
    case PassiveKind::periphrastic_in_periphrasis: return "periphrastic_in_periphrasis";
    case PassiveKind::reflexive: return "reflexive";
    case PassiveKind::reflexive_with_agent: return "reflexive_with_agent";
  }
  return "";
}

unsigned passive_classes(const std::vector<Token>& tokens, std::size_t i, const LexiconSet& lex) {
  return passive_classes(tokens, i, tag_verb_form(tokens, i, lex), lex);
}

unsigned passive_classes(const std::vector<Token>& tokens, std::size_t i, const VerbFormTag& tag,
                         const LexiconSet&) {
  namespace pc = passive_class;
  const Token& t = tokens.at(i);
  if (!t.is_word) {
    static const WordSet kStops = {",", ";", ":", ".", "!", "?", "(", ")", "…", "¿", "¡", "\"",
                                   "«", "»", "“", "”"};
    return kStops.contains(t.surface) || t.surface.front() == '.' ? pc::clause_stop : 0u;
  }
  const std::string& w = t.lower;
  unsigned c = pc::word;

  static const WordSet kSerSg = {"es", "era", "fue", "será", "sería", "sea", "fuera", "fuese", "fuere"};
  static const WordSet kSerPl = {"son",    "eran",   "fueron", "serán", "serían",
                                 "sean",   "fueran", "fuesen", "fueren"};
  static const WordSet kHaberSg = {"ha",      "había",   "habrá", "habría", "haya",
                                   "hubiera", "hubiese", "hubo",  "he",     "has"};
  static const WordSet kHaberPl = {"han",      "habían",   "habrán",    "habrían", "hayan",
                                   "hubieran", "hubiesen", "hubieron",  "hemos",   "habéis"};
  static const WordSet kModalSg = {
      "debe", "debía", "deberá", "debería", "deba", "debiera", "debió", "puede", "podía",
      "podrá", "podría", "pueda", "pudiera", "pudo", "tiene", "tenía", "tendrá", "tendría",
      "tenga", "tuviera", "suele", "solía", "necesita", "ha", "habrá", "va", "iba", "irá", "hay"};
  static const WordSet kModalPl = {
      "deben", "debían", "deberán", "deberían", "deban", "debieran", "pueden", "podían", "podrán",
      "podrían", "puedan", "pudieran", "tienen", "tenían", "tendrán", "tendrían", "tengan",
      "suelen", "solían", "necesitan", "han", "habrán", "van", "iban", "irán"};
  static const WordSet kAdverbs = {"ya",     "también", "siempre", "nunca",  "luego",
                                   "después", "antes",  "así",     "bien",   "mal",
                                   "solo",   "sólo",    "además",  "igualmente"};
  static const WordSet kObjectClitics = {"le", "les", "lo", "la", "los", "las", "me", "te", "nos"};
  static const WordSet kNpStops = {
      "que",    "conforme", "a",     "al",    "en",      "con",   "para",  "por",    "sin",
      "según",  "y",        "o",     "u",     "e",       "ni",    "cuando", "si",    "como",
      "mediante", "durante", "desde", "hasta", "entre",  "sobre", "tras",  "ante",   "se",
      "no",     "donde",    "cuyo",  "cuya",  "cuyos",   "cuyas", "hacia", "contra", "quien",
      "quienes", "cual",    "cuales", "pero", "aunque",  "porque"};
  static const std::array<std::string_view, 20> kPronominalStems = {
      "trat",  "dispon", "compon", "encarg", "ocup",   "olvid",    "acuerd", "quej",   "aprovech",
      "benefici", "deriv", "desprend", "inform", "enter", "despid", "refier", "dedic", "compromet",
      "preocup", "acord"};

  if (kSerSg.contains(w)) c |= pc::ser_singular;
  if (kSerPl.contains(w)) c |= pc::ser_plural;
  if (w == "sido") c |= pc::sido;
  if (kHaberSg.contains(w)) c |= pc::haber_singular;
  if (kHaberPl.contains(w)) c |= pc::haber_plural;
  if (w == "haber" || w == "habiendo") c |= pc::haber_infinitive;
  if (kModalSg.contains(w)) c |= pc::modal_singular;
  if (kModalPl.contains(w)) c |= pc::modal_plural;
  if (w == "a" || w == "de" || w == "que") c |= pc::link;
  if (w == "ser") c |= pc::ser_infinitive;
  if (kAdverbs.contains(w) || (ends_with(w, "mente") && uc::length(w) > 6)) c |= pc::adverb;
  if (w == "se") c |= pc::se;
  if (kObjectClitics.contains(w)) c |= pc::object_clitic;
  if (w == "por") c |= pc::por;
  if (w == "de" || w == "del") c |= pc::de;
  if (w == "parte") c |= pc::parte;
  if (determiners().contains(w)) c |= pc::determiner;
  if (kNpStops.contains(w)) c |= pc::np_stop;
  if (w == "que") c |= pc::clause_stop;
  const std::string folded = uc::fold(w);
  if (std::any_of(kPronominalStems.begin(), kPronominalStems.end(),
                  [&](std::string_view s) { return starts_with(folded, s); })) {
    c |= pc::pronominal;
  }

  if (tag.kind == VerbFormKind::participle && w != "sido") {
    c |= tag.agreement->number == GrammaticalNumber::plural ? pc::participle_plural
                                                            : pc::participle_singular;
  }
  if (tag.kind == VerbFormKind::infinitive) c |= pc::infinitive;
  if (tag.kind == VerbFormKind::other && !function_words().contains(w) && t.shape != Shape::all_caps &&
      (c & (pc::ser_singular | pc::ser_plural | pc::haber_singular | pc::haber_plural)) == 0) {
    static const std::array<std::string_view, 13> kThird = {
        "aron", "ieron", "ían", "ía", "án", "én", "an", "en", "á", "é", "ó", "a", "e"};
    if (std::any_of(kThird.begin(), kThird.end(), [&](std::string_view s) { return ends_with(w, s); }) &&
        uc::length(w) >= 3) {
      c |= pc::finite_third;
    }
  }
  return c;
}

namespace {

namespace pc = passive_class;

struct Cursor {
  const std::vector<unsigned>& cls;
  bool has(std::size_t k, unsigned mask) const { return k < cls.size() && (cls[k] & mask) != 0; }
};

// Participle at k (optionally after one adverb) agreeing with `number_mask`.
// Returns the end index or 0.
std::size_t participle_end(const Cursor& c, std::size_t k, unsigned number_mask) {
  std::size_t best = 0;
  if (c.has(k, number_mask)) best = k + 1;
  if (c.has(k, pc::adverb) && c.has(k + 1, number_mask)) best = std::max(best, k + 2);
  return best;
}

unsigned participle_mask_for(unsigned cls, unsigned sg, unsigned pl) {
  unsigned m = 0;
  if (cls & sg) m |= pc::participle_singular;
  if (cls & pl) m |= pc::participle_plural;
  return m;
}

std::size_t match_periphrastic(const Cursor& c, std::size_t i) {
  std::size_t best = 0;
  const unsigned ci = c.cls[i];
  if (ci & (pc::ser_singular | pc::ser_plural)) {
    best = std::max(best, participle_end(c, i + 1, participle_mask_for(ci, pc::ser_singular, pc::ser_plural)));
  }
  if ((ci & (pc::haber_singular | pc::haber_plural | pc::haber_infinitive)) && c.has(i + 1, pc::sido)) {
    unsigned mask = participle_mask_for(ci, pc::haber_singular, pc::haber_plural);
    if (ci & pc::haber_infinitive) mask = pc::participle_singular | pc::participle_plural;
    best = std::max(best, participle_end(c, i + 2, mask));
  }
  if (ci & pc::sido) {
    best = std::max(best, participle_end(c, i + 1, pc::participle_singular | pc::participle_plural));
  }
  return best;
}

std::size_t match_in_periphrasis(const Cursor& c, std::size_t i) {
  const unsigned ci = c.cls[i];
  if (!(ci & (pc::modal_singular | pc::modal_plural))) return 0;
  const unsigned mask = participle_mask_for(ci, pc::modal_singular, pc::modal_plural);
  std::size_t best = 0;
  for (std::size_t k : {i + 1, i + 2}) {
    if (k == i + 2 && !c.has(i + 1, pc::link)) continue;
    if (c.has(k, pc::ser_infinitive)) best = std::max(best, participle_end(c, k + 1, mask));
    if (c.has(k, pc::haber_infinitive) && c.has(k + 1, pc::sido)) {
      best = std::max(best, participle_end(c, k + 2, mask));
    }
  }
  return best;
}

// End of the verb group starting at k, or 0; `verb` receives the lexical verb.
std::size_t verb_group_end(const Cursor& c, std::size_t k, std::size_t& verb) {
  std::size_t best = 0;
  if (c.has(k, pc::haber_singular | pc::haber_plural) &&
      c.has(k + 1, pc::participle_singular | pc::participle_plural)) {
    best = k + 2;
    verb = k + 1;
  }
  if (c.has(k, pc::modal_singular | pc::modal_plural)) {
    if (c.has(k + 1, pc::infinitive) && k + 2 > best) {
      best = k + 2;
      verb = k + 1;
    }
    if (c.has(k + 1, pc::link) && c.has(k + 2, pc::infinitive) && k + 3 > best) {
      best = k + 3;
      verb = k + 2;
    }
  }
  if (best == 0 && c.has(k, pc::finite_third)) {
    best = k + 1;
    verb = k;
  }
  return best;
}

// Maximal agent noun phrase starting at k, trailing function words trimmed.
// Returns the end index, or 0 if no content word was found.
std::size_t agent_np_end(const Cursor& c, std::size_t k) {
  std::size_t q = k;
  std::size_t words = 0;
  while (q < c.cls.size() && words < kMaxAgentWords && c.has(q, pc::word) &&
         !c.has(q, pc::np_stop | pc::clause_stop)) {
    ++q;
    ++words;
  }
  while (q > k && c.has(q - 1, pc::de | pc::determiner)) --q;
  return q > k ? q : 0;
}

// Agent phrase starting exactly at p; returns its end or 0.
std::size_t agent_at(const Cursor& c, std::size_t p, bool right_after_verb, bool pronominal_verb) {
  if (c.has(p, pc::por)) {
    if (c.has(p + 1, pc::parte) && c.has(p + 2, pc::de)) return agent_np_end(c, p + 3);
    if (c.has(p + 1, pc::determiner)) return agent_np_end(c, p + 2);
    return 0;
  }
  if (right_after_verb && !pronominal_verb && c.has(p, pc::de) && c.has(p + 1, pc::determiner)) {
    return agent_np_end(c, p + 2);
  }
  return 0;
}

struct ReflexiveResult {
  std::size_t end = 0;
  std::size_t agent_start = 0;
  std::size_t agent_end = 0;
};

ReflexiveResult match_reflexive(const Cursor& c, std::size_t i) {
  ReflexiveResult best;
  if (!c.has(i, pc::se)) return best;
  for (std::size_t k : {i + 1, i + 2}) {
    if (k == i + 2 && !c.has(i + 1, pc::object_clitic)) continue;
    std::size_t verb = 0;
    const std::size_t e = verb_group_end(c, k, verb);
    if (e == 0) continue;
    ReflexiveResult r;
    r.end = e;
    // Look for the agent within the window, stopping at clause boundaries.
    std::size_t gap = 0;
    for (std::size_t p = e; p < c.cls.size() && gap <= kAgentWindow; ++p) {
      if (c.has(p, pc::clause_stop)) break;
      const std::size_t a = agent_at(c, p, p == e, c.has(verb, pc::pronominal));
      if (a != 0) {
        r.end = a;
        r.agent_start = p;
        r.agent_end = a;
        break;
      }
      if (c.has(p, pc::word)) ++gap;
    }
    if (r.end > best.end) best = r;
  }
  return best;
}

}  // namespace

std::vector<PassiveMatch> find_passives(const Sentence& sentence, const LexiconSet& lex) {
  return find_passives(sentence, tag_tokens(sentence.tokens, lex), lex);
}

std::vector<PassiveMatch> find_passives(const Sentence& sentence, const std::vector<VerbFormTag>& tags,
                                        const LexiconSet& lex) {
  const auto& tokens = sentence.tokens;
  std::vector<unsigned> cls(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) cls[k] = passive_classes(tokens, k, tags.at(k), lex);
  const Cursor c{cls};

  std::vector<PassiveMatch> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    PassiveMatch m;
    std::size_t end = 0;
    if (const std::size_t e = match_in_periphrasis(c, i); e > end) {
      end = e;
      m.kind = PassiveKind::periphrastic_in_periphrasis;
    }
    if (const std::size_t e = match_periphrastic(c, i); e > end) {
      end = e;
      m.kind = PassiveKind::periphrastic;
    }
    if (const ReflexiveResult r = match_reflexive(c, i); r.end > end) {
      end = r.end;
      if (r.agent_end != 0) {
        m.kind = PassiveKind::reflexive_with_agent;
        m.agent_span = Span{tokens[r.agent_start].span.start, tokens[r.agent_end - 1].span.end};
      } else {
        m.kind = PassiveKind::reflexive;
      }
    }
    if (end == 0) {
      ++i;
      continue;
    }
    m.first_token = i;
    m.last_token = end;
    m.span = {tokens[i].span.start, tokens[end - 1].span.end};
    out.push_back(m);
    i = end;
  }
  return out;
}

// ========================================================= nominalizations

std::vector<Nominalization> find_nominalizations(const Sentence& sentence, const LexiconSet& lex) {
  const auto& tokens = sentence.tokens;
  const PhraseTable& exclusions = lex.table("nominalization_exclusions");
  const auto excluded = exclusions.match(tokens);
  std::vector<Nominalization> out;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const Token& t = tokens[k];
    if (!t.is_word || t.shape != Shape::lowercase) continue;
    const std::string& w = t.lower;
    bool shaped = false;
    for (std::string_view suf : {"ción", "ciones", "sión", "siones"}) {
      if (ends_with(w, suf) && stem_length(w, suf) >= 2) shaped = true;
    }
    if (!shaped) continue;
    if (std::any_of(excluded.begin(), excluded.end(),
                    [&](const PhraseMatch& m) { return m.first_token <= k && k < m.last_token; })) {
      continue;
    }
    Nominalization n;
    n.span = t.span;
    n.token = k;
    n.has_de_complement =
        k + 1 < tokens.size() && (tokens[k + 1].lower == "de" || tokens[k + 1].lower == "del");
    out.push_back(n);
  }
  return out;
}

// ================================================================ acronyms

namespace {

bool caps_word(const Token& t) {
  if (!t.is_word) return false;
  bool letter = false;
  for (char32_t ch : uc::decode_utf8(t.surface)) {
    if (uc::is_letter(ch)) {
      if (!uc::is_upper(ch)) return false;
      letter = true;
    }
  }
  return letter;
}

}  // namespace

bool is_acronym_shaped(const Token& token) {
  if (!token.is_word) return false;
  const std::u32string s = uc::decode_utf8(token.surface);
  if (s.size() < 2 || s.size() > 6 || !uc::is_letter(s.front())) return false;
  std::size_t letters = 0;
  for (char32_t ch : s) {
    if (uc::is_letter(ch)) {
      if (!uc::is_upper(ch)) return false;
      ++letters;
    } else if (!uc::is_digit(ch)) {
      return false;
    }
  }
  return letters >= 2;
}

bool in_caps_run(const std::vector<Token>& tokens, std::size_t index) {
  if (!caps_word(tokens[index])) return false;
  return (index > 0 && caps_word(tokens[index - 1])) ||
         (index + 1 < tokens.size() && caps_word(tokens[index + 1]));
}

std::vector<AcronymMatch> find_acronyms(const Block& block, const LexiconSet& lex) {
  std::vector<AcronymMatch> out;
  for (std::size_t s = 0; s < block.sentences.size(); ++s) {
    const auto& tokens = block.sentences[s].tokens;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      const Token& t = tokens[k];
      if (!is_acronym_shaped(t) || in_caps_run(tokens, k)) continue;
      if (lex.contains("acronym_exclusions", t.lower)) continue;
      AcronymMatch m;
      m.span = t.span;
      m.surface = t.surface;
      m.clarified_by_markup = block.html_attrs.contains(t.surface);
      m.sentence = s;
      m.token = k;
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool initials_match(const std::vector<std::string>& words, std::string_view acronym) {
  static const WordSet kSkip = {"de", "del", "la", "los", "las", "y", "e", "para", "el"};
  std::u32string initials;
  for (const auto& w : words) {
    const std::string lower = uc::to_lower(w);
    if (kSkip.contains(lower)) continue;
    const std::u32string cps = uc::decode_utf8(w);
    if (cps.empty() || !uc::is_alnum(cps.front())) continue;
    initials.push_back(uc::to_upper(uc::strip_accent(cps.front())));
  }
  std::u32string target;
  for (char32_t ch : uc::decode_utf8(acronym)) {
    if (uc::is_alnum(ch)) target.push_back(uc::to_upper(uc::strip_accent(ch)));
  }
  return !target.empty() && initials == target;
}

bool initials_match(std::string_view full_form, std::string_view acronym) {
  std::vector<std::string> words;
  for (const Token& t : tokenize(full_form)) {
    if (t.is_word) words.push_back(t.surface);
  }
  return initials_match(words, acronym);
}

// ========================================================== person markers

std::string_view to_string(PersonMarker marker) {
  switch (marker) {
    case PersonMarker::first_plural: return "first_plural";
    case PersonMarker::first_singular_explicit: return "first_singular_explicit";
    case PersonMarker::tu_form: return "tu_form";
    case PersonMarker::usted_form: return "usted_form";
  }
  return "";
}

std::vector<PersonMatch> find_person_markers(const Sentence& sentence, const LexiconSet& lex) {
  return find_person_markers(sentence, tag_tokens(sentence.tokens, lex), lex);
}

std::vector<PersonMatch> find_person_markers(const Sentence& sentence, const std::vector<VerbFormTag>& tags,
                                             const LexiconSet&) {
  static const WordSet kTuPronouns = {"tú", "te", "ti", "contigo"};
  static const WordSet kTuVerbs = {
      "puedes", "debes", "tienes", "necesitas", "quieres", "estás", "eres",  "has",
      "vas",    "sabes", "haces",  "accedes",   "recibes", "solicitas", "consultas", "dispones",
      "cumples", "vives", "trabajas", "perteneces", "prefieres", "sigue", "olvides", "elijas"};
  static const WordSet kSubordinators = {"que", "cuando", "si", "cuanto", "mientras", "aunque"};
  static const WordSet kNotFuture = {"atrás", "detrás", "jamás", "demás", "además", "quizás", "más"};

  const auto& tokens = sentence.tokens;
  std::vector<PersonMatch> out;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const Token& t = tokens[k];
    if (!t.is_word) continue;
    const std::string& w = t.lower;
    const bool prev_word = k > 0 && tokens[k - 1].is_word;
    std::optional<PersonMarker> marker;
    if (w == "yo") {
      marker = PersonMarker::first_singular_explicit;
    } else if (w == "nosotros" || w == "nosotras") {
      marker = PersonMarker::first_plural;
    } else if (w == "usted" || w == "ustedes") {
      marker = PersonMarker::usted_form;
    } else if (kTuPronouns.contains(w) || kTuVerbs.contains(w)) {
      marker = PersonMarker::tu_form;
    } else if ((w == "tu" || w == "tus") && k + 1 < tokens.size() && tokens[k + 1].is_word) {
      marker = PersonMarker::tu_form;
    } else if (ends_with(w, "zcas") && stem_length(w, "zcas") >= 3) {
      marker = PersonMarker::tu_form;
    } else if (ends_with(w, "rás") && uc::length(w) >= 5 && !kNotFuture.contains(w)) {
      marker = PersonMarker::tu_form;
    } else if ((ends_with(w, "as") || ends_with(w, "es")) && uc::length(w) >= 5 && prev_word &&
               kSubordinators.contains(tokens[k - 1].lower) && !function_words().contains(w) &&
               !determiners().contains(w) && t.shape == Shape::lowercase) {
      marker = PersonMarker::tu_form;
    } else if (tags.at(k).kind == VerbFormKind::finite_1p_plural) {
      marker = PersonMarker::first_plural;
    }
    if (marker) out.push_back({t.span, *marker});
  }
  return out;
}

}  // namespace claro
