#include <benchmark/benchmark.h>

#include <filesystem>

#include "legfront/constructions.hpp"
#include "legfront/invariants.hpp"
#include "legfront/io.hpp"
#include "legfront/moves.hpp"
#include "legfront/oracles.hpp"

using namespace legfront;

namespace {

OrientedFront corpus_front(const char* name) {
  return orient(parse_front(read_text_file(std::filesystem::path(LEGFRONT_CORPUS_DIR) / name)));
}

OrientedFront trefoil_double(int n) {
  return whitehead_double(corpus_front("trefoil.front"), n);
}

}  // namespace

static void BM_InvariantReportWhiteheadDouble(benchmark::State& state) {
  const OrientedFront of = trefoil_double(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_report(of));
  state.counters["events"] = static_cast<double>(of.diagram().size());
}
BENCHMARK(BM_InvariantReportWhiteheadDouble)->DenseRange(1, 4);

static void BM_WhiteheadDouble(benchmark::State& state) {
  const OrientedFront tre = corpus_front("trefoil.front");
  for (auto _ : state) benchmark::DoNotOptimize(whitehead_double(tre, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WhiteheadDouble)->DenseRange(1, 3);

static void BM_PushOff(benchmark::State& state) {
  const OrientedFront k = trefoil_double(1);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(push_off(k, r));
}
BENCHMARK(BM_PushOff)->Arg(-4)->Arg(0)->Arg(1);

static void BM_Fuzz(benchmark::State& state) {
  const OrientedFront fig = corpus_front("figure_eight.front");
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fuzz(fig, static_cast<std::size_t>(state.range(0)), ++seed));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Fuzz)->Arg(100)->Arg(1000);

static void BM_ParseSerialize(benchmark::State& state) {
  const std::string text = serialize_front(trefoil_double(3).diagram());
  for (auto _ : state) benchmark::DoNotOptimize(serialize_front(parse_front(text)));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseSerialize);

static void BM_KauffmanBracket(benchmark::State& state) {
  const GenericCode code = to_generic_code(corpus_front(
      state.range(0) == 0 ? "trefoil.front" : "figure_eight.front"));
  for (auto _ : state) benchmark::DoNotOptimize(oracles::kauffman_bracket(code));
  state.counters["crossings"] = static_cast<double>(code.crossings.size());
}
BENCHMARK(BM_KauffmanBracket)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
