#include <doctest.h>

#include "claro/error.hpp"
#include "claro/lexicon.hpp"
#include "claro/rules.hpp"
#include "support.hpp"

using namespace claro;
using testing::count_rule;

namespace {

std::vector<Diagnostic> run(std::string_view text, Profile p, std::vector<std::string> only = {}) {
  RuleConfig cfg = RuleConfig::for_profile(p);
  if (!only.empty()) cfg.restrict_to(only);
  return lint(parse_plain(text), cfg, LexiconSet::defaults());
}

std::vector<std::string> flagged(std::string_view text, Profile p, std::string_view rule) {
  const Document d = parse_plain(text);
  std::vector<std::string> out;
  for (const auto& diag : lint(d, RuleConfig::for_profile(p), LexiconSet::defaults())) {
    if (diag.rule_id == rule) out.push_back(d.slice(diag.span));
  }
  return out;
}

const Diagnostic* first_of(const std::vector<Diagnostic>& diags, std::string_view rule) {
  for (const auto& d : diags) {
    if (d.rule_id == rule) return &d;
  }
  return nullptr;
}

constexpr auto A = Profile::artext;
constexpr auto L = Profile::lengclaro;

}  // namespace

TEST_CASE("profiles enable the documented rule sets") {
  const auto a = RuleConfig::for_profile(A);
  const auto l = RuleConfig::for_profile(L);
  for (const char* id : {"a3", "a6", "c6"}) {
    CHECK(a.is_enabled(id));
    CHECK_FALSE(l.is_enabled(id));
  }
  for (const char* id : {"b8", "b9", "c9", "c10", "f1", "f2"}) {
    CHECK(l.is_enabled(id));
    CHECK_FALSE(a.is_enabled(id));
  }
  CHECK(a.enabled.size() == 22);
  CHECK(l.enabled.size() == 25);
  CHECK(rule_catalog().size() == 28);
}

TEST_CASE("config validation") {
  RuleConfig cfg = RuleConfig::for_profile(L);
  CHECK(cfg.threshold("long_paragraph_words") == 135);
  CHECK(cfg.threshold("hard_sentence_cap_words") == 35);
  CHECK_THROWS_AS(cfg.set_threshold("nope", 3), InvalidConfig);
  CHECK_THROWS_AS(cfg.set_threshold("min_list_items", 0), InvalidConfig);
  cfg.set_threshold("avg_sentence_words_target", 40);
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
  CHECK_THROWS_AS(cfg.restrict_to({"z9"}), InvalidConfig);
  CHECK_THROWS_AS(parse_profile("plain"), InvalidConfig);
}

TEST_CASE("empty document yields nothing") {
  for (Profile p : {A, L}) CHECK(run("", p).empty());
}

TEST_CASE("a1 sentence-paragraphs") {
  CHECK(count_rule(run("La Seguridad Social limita en todo caso el acceso y utilización de los datos personales.", A), "a1") == 1);
  CHECK(count_rule(run("Intro:\n- Nacimiento y cuidado de menor", A), "a1") == 0);
  CHECK(count_rule(run("Una frase aquí. Otra frase allí.", A), "a1") == 0);
  // lengclaro only reports runs of them, as information.
  CHECK(run("Hola.", L).empty());
  const auto two = run("Primera idea completa.\n\nSegunda idea completa.", L);
  REQUIRE(count_rule(two, "a1") >= 1);
  CHECK(first_of(two, "a1")->severity == Severity::info);
}

TEST_CASE("a2 on the long quoted paragraph") {
  CHECK(count_rule(testing::lint_fixture("pairs/long_paragraph.before.txt", A), "a2") == 1);
  CHECK(count_rule(testing::lint_fixture("pairs/long_paragraph.after.txt", A), "a2") == 0);
}

TEST_CASE("a4 modes") {
  const std::string s30 = testing::synthetic_sentence(30);
  CHECK(count_rule(run(s30 + " " + testing::synthetic_sentence(6), A), "a4") == 1);
  CHECK(count_rule(run(s30 + " " + testing::synthetic_sentence(6), L), "a4") == 0);
  CHECK(count_rule(run("Hola.", A), "a4") == 0);
  for (Profile p : {A, L}) CHECK(count_rule(testing::lint_fixture("pairs/long_sentence.before.txt", p), "a4") == 1);
}

TEST_CASE("a5 average is one document-level diagnostic") {
  const std::string text = testing::synthetic_sentence(24) + " " + testing::synthetic_sentence(24);
  const auto d = run(text, L);
  REQUIRE(count_rule(d, "a5") == 1);
  const auto* a5 = first_of(d, "a5");
  CHECK(a5->span.start == 0);
  CHECK(a5->message.find("24,0") != std::string::npos);
  RuleConfig relaxed = RuleConfig::for_profile(L);
  relaxed.set_threshold("avg_sentence_words_target", 24);
  CHECK(count_rule(lint(parse_plain(text), relaxed, LexiconSet::defaults()), "a5") == 0);
}

TEST_CASE("a7 list suggestion") {
  CHECK(count_rule(testing::lint_fixture("pairs/long_sentence.before.txt", L), "a7") == 1);
  CHECK(count_rule(run("Compra y venta de inmuebles.", L), "a7") == 0);
  // Three items stay below the default of four even in a long sentence.
  const std::string three = "Para completar el trámite en la sede electrónica de la Seguridad Social debe presentar el "
                            "formulario oficial de solicitud, el certificado de empadronamiento del domicilio familiar y "
                            "el libro de familia completo.";
  CHECK(count_rule(run(three, A), "a7") == 0);
  CHECK(count_rule(run(three, A), "a4") == 1);
  RuleConfig cfg = RuleConfig::for_profile(L);
  cfg.set_threshold("min_list_items", 5);
  CHECK(count_rule(lint(testing::load_fixture("pairs/long_sentence.before.txt"), cfg, LexiconSet::defaults()), "a7") == 1);
  cfg.set_threshold("min_list_items", 6);
  CHECK(count_rule(lint(testing::load_fixture("pairs/long_sentence.before.txt"), cfg, LexiconSet::defaults()), "a7") == 0);
}

TEST_CASE("a3 and a6 connectors, artext only") {
  const std::string text = "Primera frase del texto. Segunda frase aquí.\n\nAdemás, las víctimas pueden pedirlo. Es fácil.";
  CHECK(count_rule(run(text, A), "a3") == 0);
  CHECK(count_rule(run("Primera frase. Otra más.\n\nLas víctimas pueden pedirlo. Es fácil.", A), "a3") == 1);
  const auto a6 = run("Si llueve, salga pronto; si nieva, quédese en casa. Es todo.", A);
  REQUIRE(count_rule(a6, "a6") >= 1);
  const auto& s = first_of(a6, "a6")->suggestions;
  CHECK(std::find(s.begin(), s.end(), "en caso de") != s.end());
  CHECK(count_rule(run(text, L), "a3") + count_rule(run("Si llueve, salga; si nieva, quédese.", L), "a6") == 0);
}

TEST_CASE("b1 passive modes") {
  const std::string text = "La fe de vida deberá ser presentada en la oficina. La información ha sido comunicada a todos.";
  CHECK(flagged(text, A, "b1") == std::vector<std::string>{"ha sido comunicada"});
  CHECK(flagged(text, L, "b1") == std::vector<std::string>{"deberá ser presentada", "ha sido comunicada"});
  const std::string agent = "El control se realizará por la entidad gestora conforme a la ley.";
  CHECK(flagged(agent, A, "b1").empty());
  CHECK(flagged(agent, L, "b1") == std::vector<std::string>{"se realizará por la entidad gestora"});
}

TEST_CASE("b2 gerunds") {
  CHECK(flagged("Personas que, no hallándose impedidos, lo pidan.", L, "b2") == std::vector<std::string>{"hallándose"});
  CHECK(flagged("El sistema está procesando la solicitud.", L, "b2").empty());
  CHECK(flagged("El sistema está procesando la solicitud.", A, "b2").size() == 1);
  CHECK(flagged("No hay nada que hacer.", L, "b2").empty());
}

TEST_CASE("b3 participles") {
  const std::string finalizado = "Finalizado el proceso de cumplimentación se le indicará los documentos.";
  for (Profile p : {A, L}) CHECK(flagged(finalizado, p, "b3").front() == "Finalizado");
  CHECK(flagged("La información ha sido comunicada.", A, "b3") == std::vector<std::string>{"comunicada"});
  CHECK(flagged("La información ha sido comunicada.", L, "b3").empty());
  CHECK(flagged("Revise los documentos presentados hoy.", A, "b3") == std::vector<std::string>{"presentados"});
  CHECK(flagged("Revise los documentos presentados hoy.", L, "b3").empty());
  CHECK(flagged("Es requisito imprescindible.", A, "b3").empty());
}

TEST_CASE("b4 archaic future subjunctive with suggestions") {
  const auto d = run("Cuando uno de ellos solicitare el ingreso.", L);
  REQUIRE(count_rule(d, "b4") == 1);
  CHECK(first_of(d, "b4")->suggestions.front() == "solicitase");
  CHECK(count_rule(run("Cuando uno de ellos solicitase el ingreso.", L), "b4") == 0);
  const auto f = run("Si fuere necesario, llame.", L);
  REQUIRE(count_rule(f, "b4") == 1);
  CHECK(first_of(f, "b4")->suggestions.front() == "fuese");
}

TEST_CASE("b5 first-person consistency") {
  const auto d = run("Nosotros ofrecemos ayuda. Ofrecemos apoyo. Yo confirmo el dato.", L);
  CHECK(flagged("Nosotros ofrecemos ayuda. Ofrecemos apoyo. Yo confirmo el dato.", L, "b5") ==
        std::vector<std::string>{"Yo"});
  CHECK(count_rule(run("Ofrecemos ayuda. Enviamos la carta.", L), "b5") == 0);
}

TEST_CASE("b8 tú/usted mixing") {
  const std::string text =
      "Los datos que introduzcas en el formulario deben coincidir. Cuando usted finalice el proceso, "
      "usted recibirá un aviso. Usted podrá descargarlo.";
  CHECK(flagged(text, L, "b8") == std::vector<std::string>{"introduzcas"});
  CHECK(flagged(text, A, "b8").empty());
  CHECK(flagged("Cuando usted finalice, usted recibirá un aviso.", L, "b8").empty());
}

TEST_CASE("b6 nominalizations by mode") {
  const std::string inscripcion = "Se acredita mediante la inscripción en el registro central.";
  CHECK(flagged(inscripcion, A, "b6") == std::vector<std::string>{"inscripción"});
  CHECK(flagged(inscripcion, L, "b6").empty());
  const std::string util = "La utilización de este servicio es totalmente gratuita.";
  for (Profile p : {A, L}) {
    CHECK(flagged(util, p, "b6") == std::vector<std::string>{"utilización"});
    CHECK(flagged("Tenga la autorización de residencia.", p, "b6").empty());
    CHECK(flagged("Pida la prestación de ingreso mínimo vital.", p, "b6").empty());
  }
}

TEST_CASE("b7 negations") {
  CHECK(count_rule(run("Si no son coincidentes, no será posible obtener el certificado.", L), "b7") == 1);
  CHECK(count_rule(run("No será posible obtenerlo.", L), "b7") == 0);
  CHECK(count_rule(run("Ni lo pide ni lo paga sin motivo.", L), "b7") == 1);
  RuleConfig cfg = RuleConfig::for_profile(L);
  cfg.set_threshold("negation_min_count", 3);
  CHECK(count_rule(lint(parse_plain("Si no son coincidentes, no será posible."), cfg, LexiconSet::defaults()), "b7") == 0);
}

TEST_CASE("b9 parentheticals") {
  const auto before = flagged(testing::fixture_text("pairs/parenthetical.before.txt"), L, "b9");
  CHECK(before == std::vector<std::string>{"(rendimientos inferiores al 75% del salario mínimo interprofesional)",
                                           "(hasta entonces era el 100%)"});
  CHECK(flagged("El Instituto Nacional de la Seguridad Social (INSS) paga.", L, "b9").empty());
  CHECK(flagged("Traiga el DNI (original).", L, "b9").empty());
  const auto open = run("Traiga el documento (original y copia compulsada por la oficina.", L);
  REQUIRE(count_rule(open, "b9") == 1);
  CHECK(first_of(open, "b9")->severity == Severity::info);
}

TEST_CASE("c2 and c3 acronyms") {
  const auto sms = run("Recibirá un SMS con el código.", L);
  REQUIRE(count_rule(sms, "c2") == 1);
  CHECK(first_of(sms, "c2")->suggestions == std::vector<std::string>{"mensaje de texto"});
  CHECK(count_rule(testing::lint_fixture("acronyms/inss_introduced.txt", L), "c2") == 0);
  CHECK(count_rule(testing::lint_fixture("acronyms/inss_introduced.txt", L), "c3") == 0);
  const auto cea = testing::lint_fixture("acronyms/cea_late.txt", L);
  CHECK(count_rule(cea, "c2") == 1);
  CHECK(count_rule(cea, "c3") == 1);
  // Full form used again after the acronym was introduced.
  CHECK(count_rule(run("El Código Electrónico de Autenticidad (CEA) figura abajo. Copie el Código Electrónico de "
                       "Autenticidad en el campo.",
                       L),
                   "c3") == 1);
  CHECK(count_rule(run("Descargue VIVESS y abra la APP.", L), "c2") == 0);
}

TEST_CASE("lexical substitutions") {
  const auto c4 = run("Puede efectuar el pago.", L);
  REQUIRE(count_rule(c4, "c4") == 1);
  CHECK(first_of(c4, "c4")->suggestions == std::vector<std::string>{"realizar"});
  CHECK(count_rule(run("El pago con tarjeta de débito.", L), "c4") == 0);
  const auto c5 = run("De acuerdo con la norma, pague.", L);
  REQUIRE(count_rule(c5, "c5") == 1);
  CHECK(first_of(c5, "c5")->suggestions == std::vector<std::string>{"según"});
  CHECK(flagged("El funcionamiento de la APP es muy sencillo.", L, "c1") == std::vector<std::string>{"sencillo"});
  CHECK(count_rule(run("La matrícula es gratuita. La revisión es gratuita.", A), "c8") == 2);
  CHECK(count_rule(run("Es la pareja de hecho del titular.", A), "c6") == 0);
  CHECK(count_rule(run("Se ha hecho la entrega.", A), "c6") == 1);
  CHECK(flagged("Presente, en su caso, el justificante.", L, "c9") == std::vector<std::string>{"en su caso"});
}

TEST_CASE("c7 ships empty but takes override entries") {
  LexiconSet lex = LexiconSet::defaults();
  CHECK(lex.table("redundant").empty());
  lex.merge("@table redundant\nsubir arriba\tsubir\n", "extra");
  const auto d = lint(parse_plain("Hay que subir arriba."), RuleConfig::for_profile(L), lex);
  CHECK(count_rule(d, "c7") == 1);
}

TEST_CASE("c10 foreign words") {
  CHECK(flagged("Haga click aquí.", L, "c10") == std::vector<std::string>{"click"});
  CHECK(first_of(run("Haga click aquí.", L), "c10")->suggestions == std::vector<std::string>{"clic"});
  CHECK(flagged("Descargue el software.", L, "c10").empty());
  CHECK(flagged("Un SMS (Short Message Service) llegará.", L, "c10").size() == 3);
}

TEST_CASE("f1 capitals") {
  CHECK(count_rule(run("# SOLICITUD Y RENOVACIÓN\n\nTexto normal aquí. Y más.", L), "f1") == 1);
  CHECK(flagged("Lea el aviso del INSS.", L, "f1").empty());
  CHECK(flagged("IMPORTANTE aviso para todos.", L, "f1") == std::vector<std::string>{"IMPORTANTE"});
}

TEST_CASE("f2 figures") {
  const auto n = run("El plazo es de noventa días.", L);
  REQUIRE(count_rule(n, "f2") == 1);
  CHECK(first_of(n, "f2")->suggestions == std::vector<std::string>{"90"});
  CHECK(count_rule(run("Tiene dos días.", L), "f2") == 0);
  const auto m = run("El importe es de 3000000 euros.", L);
  REQUIRE(count_rule(m, "f2") == 1);
  CHECK(first_of(m, "f2")->suggestions == std::vector<std::string>{"3 millones"});
  const auto t = run("Son treinta y cinco euros.", L);
  REQUIRE(count_rule(t, "f2") == 1);
  CHECK(first_of(t, "f2")->suggestions == std::vector<std::string>{"35"});
}

TEST_CASE("restricting rules and diagnostics ordering") {
  const std::string text = testing::fixture_text("pairs/long_paragraph.before.txt");
  const auto only = run(text, L, {"a2", "b3"});
  for (const auto& d : only) CHECK((d.rule_id == "a2" || d.rule_id == "b3"));
  const auto all = run(text, L);
  CHECK(std::is_sorted(all.begin(), all.end(), diagnostic_less));
  const Document doc = parse_plain(text);
  for (const auto& d : all) {
    CHECK(d.span.end <= doc.text.size());
    CHECK(d.span.start < d.span.end);
    CHECK_FALSE(d.source_span.has_value());
    CHECK_FALSE(d.message.empty());
    CHECK(d.category == find_rule(d.rule_id)->category);
  }
}
