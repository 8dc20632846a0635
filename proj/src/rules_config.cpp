#include <algorithm>

#include "claro/error.hpp"
#include "claro/rules.hpp"

namespace claro {

std::string_view to_string(Profile profile) {
  return profile == Profile::artext ? "artext" : "lengclaro";
}

std::string_view to_string(Category category) {
  switch (category) {
    case Category::discourse: return "discourse";
    case Category::morphosyntactic: return "morphosyntactic";
    case Category::lexical: return "lexical";
    case Category::orthography: return "orthography";
  }
  return "";
}

std::string_view to_string(Severity severity) { return severity == Severity::warn ? "warn" : "info"; }

Profile parse_profile(std::string_view name) {
  if (name == "artext") return Profile::artext;
  if (name == "lengclaro") return Profile::lengclaro;
  throw InvalidConfig("unknown profile '" + std::string(name) + "' (expected artext or lengclaro)");
}

const std::vector<std::string>& threshold_names() {
  static const std::vector<std::string> kNames = {
      "long_paragraph_words", "long_sentence_words",     "avg_sentence_words_target",
      "hard_sentence_cap_words", "min_list_items",       "parenthetical_min_words",
      "negation_min_count"};
  return kNames;
}

const std::vector<RuleInfo>& rule_catalog() {
  using C = Category;
  static const std::vector<RuleInfo> kCatalog = {
      {"a1", C::discourse, true, true, {}, "Párrafos de una sola oración"},
      {"a2", C::discourse, true, true, {"long_paragraph_words"}, "Párrafos demasiado largos"},
      {"a3", C::discourse, true, false, {}, "Párrafos que no empiezan con un conector"},
      {"a4", C::discourse, true, true, {"long_sentence_words", "hard_sentence_cap_words"},
       "Oraciones demasiado largas"},
      {"a5", C::discourse, true, true, {"long_sentence_words", "avg_sentence_words_target"},
       "Oraciones compuestas largas / longitud media excesiva"},
      {"a6", C::discourse, true, false, {}, "Conectores repetidos en un mismo párrafo"},
      {"a7", C::discourse, true, true,
       {"min_list_items", "long_sentence_words", "hard_sentence_cap_words"},
       "Enumeraciones que funcionarían mejor como lista"},
      {"b1", C::morphosyntactic, true, true, {}, "Voz pasiva"},
      {"b2", C::morphosyntactic, true, true, {}, "Gerundios"},
      {"b3", C::morphosyntactic, true, true, {}, "Participios"},
      {"b4", C::morphosyntactic, true, true, {}, "Formas verbales arcaicas (futuro de subjuntivo)"},
      {"b5", C::morphosyntactic, true, true, {}, "Persona gramatical del emisor inconsistente"},
      {"b6", C::morphosyntactic, true, true, {}, "Nominalizaciones"},
      {"b7", C::morphosyntactic, true, true, {"negation_min_count"}, "Varias negaciones en una oración"},
      {"b8", C::morphosyntactic, false, true, {}, "Mezcla de tú y usted"},
      {"b9", C::morphosyntactic, false, true, {"parenthetical_min_words"}, "Incisos entre paréntesis"},
      {"c1", C::lexical, true, true, {}, "Expresiones de subjetividad"},
      {"c2", C::lexical, true, true, {}, "Siglas sin forma completa"},
      {"c3", C::lexical, true, true, {}, "Uso inconsistente de siglas"},
      {"c4", C::lexical, true, true, {}, "Palabras de registro elevado"},
      {"c5", C::lexical, true, true, {}, "Expresiones difíciles"},
      {"c6", C::lexical, true, false, {}, "Palabras poco precisas"},
      {"c7", C::lexical, true, true, {}, "Expresiones redundantes"},
      {"c8", C::lexical, true, true, {}, "Palabras largas con sinónimo breve"},
      {"c9", C::lexical, false, true, {}, "Palabras y expresiones superfluas"},
      {"c10", C::lexical, false, true, {}, "Extranjerismos"},
      {"f1", C::orthography, false, true, {}, "Exceso de mayúsculas"},
      {"f2", C::orthography, false, true, {}, "Cifras escritas con letras"},
  };
  return kCatalog;
}

const RuleInfo* find_rule(std::string_view id) {
  const auto& cat = rule_catalog();
  const auto it = std::find_if(cat.begin(), cat.end(), [&](const RuleInfo& r) { return r.id == id; });
  return it == cat.end() ? nullptr : &*it;
}

RuleConfig RuleConfig::for_profile(Profile profile) {
  RuleConfig cfg;
  cfg.profile = profile;
  for (const auto& r : rule_catalog()) {
    if (profile == Profile::artext ? r.artext : r.lengclaro) cfg.enabled.insert(r.id);
  }
  return cfg;
}

namespace {

int* threshold_slot(Thresholds& t, std::string_view name) {
  if (name == "long_paragraph_words") return &t.long_paragraph_words;
  if (name == "long_sentence_words") return &t.long_sentence_words;
  if (name == "avg_sentence_words_target") return &t.avg_sentence_words_target;
  if (name == "hard_sentence_cap_words") return &t.hard_sentence_cap_words;
  if (name == "min_list_items") return &t.min_list_items;
  if (name == "parenthetical_min_words") return &t.parenthetical_min_words;
  if (name == "negation_min_count") return &t.negation_min_count;
  return nullptr;
}

}  // namespace

int RuleConfig::threshold(std::string_view name) const {
  int* slot = threshold_slot(const_cast<Thresholds&>(thresholds), name);
  if (!slot) throw InvalidConfig("unknown threshold '" + std::string(name) + "'");
  return *slot;
}

void RuleConfig::set_threshold(std::string_view name, int value) {
  int* slot = threshold_slot(thresholds, name);
  if (!slot) throw InvalidConfig("unknown threshold '" + std::string(name) + "'");
  if (value < 1) throw InvalidConfig("threshold " + std::string(name) + " must be >= 1");
  *slot = value;
}

void RuleConfig::restrict_to(const std::vector<std::string>& rule_ids) {
  std::set<std::string, std::less<>> chosen;
  for (const auto& id : rule_ids) {
    if (!find_rule(id)) throw InvalidConfig("unknown rule id '" + id + "'");
    chosen.insert(id);
  }
  enabled = std::move(chosen);
}

void RuleConfig::validate() const {
  for (const auto& name : threshold_names()) {
    if (threshold(name) < 1) throw InvalidConfig("threshold " + name + " must be >= 1");
  }
  if (thresholds.hard_sentence_cap_words <= thresholds.avg_sentence_words_target) {
    throw InvalidConfig("hard_sentence_cap_words must exceed avg_sentence_words_target");
  }
  for (const auto& id : enabled) {
    if (!find_rule(id)) throw InvalidConfig("unknown rule id '" + id + "'");
  }
}

}  // namespace claro
