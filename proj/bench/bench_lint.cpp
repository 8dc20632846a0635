// Serial reference vs OpenMP block-parallel lint on a synthetic document built
// from the before/after fixtures. Run from the repository root.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "claro/dataset.hpp"
#include "claro/lexicon.hpp"
#include "claro/rules.hpp"

namespace {

const claro::Document& corpus_document() {
  static const claro::Document doc = [] {
    std::string one;
    const std::filesystem::path dir = "tests/fixtures/pairs";
    if (std::filesystem::is_directory(dir)) {
      for (const auto& e : std::filesystem::directory_iterator(dir)) one += claro::read_file(e.path()) + "\n\n";
    } else {
      one = "Cuando uno de ellos solicitare el ingreso, la solicitud deberá ser presentada por la entidad gestora.\n\n";
    }
    std::string text;
    for (int i = 0; i < 40; ++i) text += one;
    return claro::parse_plain(text);
  }();
  return doc;
}

void BM_LintSerial(benchmark::State& state) {
  const auto cfg = claro::RuleConfig::for_profile(claro::Profile::lengclaro);
  const auto& doc = corpus_document();
  for (auto _ : state) benchmark::DoNotOptimize(claro::lint_serial(doc, cfg, claro::LexiconSet::defaults()));
  state.counters["words"] = static_cast<double>(doc.word_count());
  state.SetItemsProcessed(state.iterations() * static_cast<long>(doc.word_count()));
}

void BM_LintParallel(benchmark::State& state) {
  const auto cfg = claro::RuleConfig::for_profile(claro::Profile::lengclaro);
  const auto& doc = corpus_document();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(claro::lint(doc, cfg, claro::LexiconSet::defaults(), threads));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(doc.word_count()));
}

}  // namespace

BENCHMARK(BM_LintSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LintParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
