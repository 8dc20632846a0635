// Runs the built command-line binary and checks output and exit codes.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "claro/report.hpp"
#include "support.hpp"

#ifndef CLARO_CLI_PATH
#error "CLARO_CLI_PATH must name the claro binary"
#endif

using namespace claro;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_file = {}) {
  std::string cmd = std::string(CLARO_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_file(std::string_view name, std::string_view content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("cli lint exit codes") {
  const auto hola = temp_file("claro_cli_hola.txt", "Hola.");
  const auto b4 = temp_file("claro_cli_b4.txt", "Cuando uno de ellos solicitare el ingreso.");
  CHECK(run("lint " + hola).status == 0);
  CHECK(run("lint " + hola).out.empty());

  const Run a = run("lint --profile artext --format json " + b4);
  CHECK(a.status == 1);
  const Json j = Json::parse(a.out);
  CHECK(j["profile"] == "artext");
  CHECK(std::count_if(j["diagnostics"].begin(), j["diagnostics"].end(),
                      [](const Json& d) { return d["rule_id"] == "b4"; }) == 1);

  const Run only = run("lint --profile artext --rules b4 --format json " + b4);
  for (const auto& d : Json::parse(only.out)["diagnostics"]) CHECK(d["rule_id"] == "b4");

  const Run human = run("lint --profile artext --rules b4 " + b4);
  CHECK(human.out.find(b4 + ":20-30 b4 ") == 0);
}

TEST_CASE("cli usage errors exit 2") {
  const auto hola = temp_file("claro_cli_hola.txt", "Hola.");
  CHECK(run("lint --profile plain " + hola).status == 2);
  CHECK(run("lint --rules zz " + hola).status == 2);
  CHECK(run("lint --bogus " + hola).status == 2);
  CHECK(run("lint --threshold long_sentence_words=abc " + hola).status == 2);
  CHECK(run("lint --threshold nope=3 " + hola).status == 2);
  CHECK(run("lint /nonexistent/file.txt").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("cli reads stdin, forces html and applies thresholds") {
  const auto b7 = temp_file("claro_cli_b7.txt", "Si no son coincidentes, no será posible obtener el certificado.");
  CHECK(run("lint --rules b7 -", b7).status == 1);
  CHECK(run("lint --rules b7 --threshold negation_min_count=3 -", b7).status == 0);
  const auto html = temp_file("claro_cli_page.txt", "<p>Haga <b>click</b> aquí.</p>");
  const Run r = run("lint --html --rules c10 --format json " + html);
  const Json j = Json::parse(r.out);
  REQUIRE(j["diagnostics"].size() == 1);
  CHECK(j["diagnostics"][0]["source_span"]["start"] == 11);
}

TEST_CASE("cli lexicon overrides") {
  const auto lex = temp_file("claro_cli_lex.tsv", "@table difficult\na cuyo efecto\tpara lo cual\n");
  const auto text = temp_file("claro_cli_c5.txt", "Presente el impreso, a cuyo efecto se habilita la sede.");
  CHECK(run("lint --rules c5 " + text).status == 0);
  const Run r = run("lint --rules c5 --format json --lexicon " + lex + " " + text);
  CHECK(r.status == 1);
  CHECK(Json::parse(r.out)["diagnostics"][0]["suggestions"][0] == "para lo cual");
}

TEST_CASE("cli lints several files in input order") {
  const auto b4 = temp_file("claro_cli_b4.txt", "Cuando uno de ellos solicitare el ingreso.");
  const auto hola = temp_file("claro_cli_hola.txt", "Hola.");
  const Run r = run("lint --format json --rules b4 " + hola + " " + b4 + " " + hola);
  const Json j = Json::parse(r.out);
  REQUIRE(j["files"].size() == 3);
  CHECK(j["files"][0]["path"] == hola);
  CHECK(j["files"][1]["diagnostics"].size() == 1);
  CHECK(j["files"][2]["diagnostics"].empty());
}

TEST_CASE("cli corpus") {
  const Run r = run("corpus " + quoted(testing::fixture("corpus")));
  CHECK(r.status == 1);
  CHECK(r.out.find("2_Original.html") != std::string::npos);
  CHECK(r.out.find("incomplete 2: missing artext") != std::string::npos);

  const fs::path good = fs::temp_directory_path() / "claro_cli_corpus";
  fs::remove_all(good);
  fs::create_directories(good);
  for (const char* n : {"1_original.html", "1_artext.html", "1_lengclaro.html", "2_original.html",
                        "2_artext.html", "2_lengclaro.html"}) {
    std::ofstream(good / n) << "<p>Texto de prueba. Otra frase.</p>";
  }
  const Run ok = run("corpus " + quoted(good));
  CHECK(ok.status == 0);
  std::size_t rows = 0;
  for (char c : ok.out) rows += c == '\n' ? 1 : 0;
  CHECK(rows == 3);  // header + one row per trio

  const Run js = run("corpus --format json " + quoted(good));
  CHECK(Json::parse(js.out)["trios"].size() == 2);

  fs::remove_all(good);
  fs::create_directories(good);
  const Run empty = run("corpus " + quoted(good));
  CHECK(empty.status == 0);
  CHECK(run("corpus " + quoted(good / "missing")).status == 2);
  fs::remove_all(good);
}

TEST_CASE("cli rules catalog") {
  const Run r = run("rules --format json");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out) == catalog_json());
  CHECK(run("--version").status == 0);
}
