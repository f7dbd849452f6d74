#include <benchmark/benchmark.h>

#include "lef/appendix.hpp"
#include "lef/approx.hpp"
#include "lef/fsg.hpp"
#include "lef/oracle.hpp"
#include "lef/rewrite.hpp"
#include "lef/search.hpp"
#include "lef/systems.hpp"

namespace {

  lef::Execution mode(benchmark::State const& s) {
    return s.range(0) == 0 ? lef::Execution::serial : lef::Execution::parallel;
  }

  void enumerate(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(lef::enumerate_semigroups(4, lef::ClassFilter::any, mode(state)));
    }
  }
  BENCHMARK(enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void confluence_q(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(lef::check_local_confluence(lef::q_system(), 3, mode(state)));
    }
  }
  BENCHMARK(confluence_q)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void appendix_a(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(lef::verify_appendix(lef::AppendixTable::a, 3, 0, mode(state)));
    }
  }
  BENCHMARK(appendix_a)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void census_q(benchmark::State& state) {
    std::vector<lef::MulTable> tables;
    for (std::size_t k = 1; k <= 4; ++k) {
      auto more = lef::enumerate_semigroups(k, lef::ClassFilter::j_trivial);
      tables.insert(tables.end(), more.begin(), more.end());
    }
    auto q = lef::preset_presentation(lef::PresetId::parse("q"));
    for (auto _ : state) {
      benchmark::DoNotOptimize(lef::assignment_census(tables, q.relations, {{"xax", "xex"}}, mode(state)));
    }
  }
  BENCHMARK(census_q)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void closures_t(benchmark::State& state) {
    auto t     = lef::preset_presentation(lef::PresetId::parse("t"));
    auto words = t.generators.words_up_to(3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(lef::closures(t, words, 7, 100000, mode(state)));
    }
  }
  BENCHMARK(closures_t)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void embed_bicyclic(benchmark::State& state) {
    auto pt = lef::bicyclic4();
    for (auto _ : state) {
      benchmark::DoNotOptimize(lef::embed_partial_table(pt, 6, lef::ClassFilter::any, mode(state)));
    }
  }
  BENCHMARK(embed_bicyclic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void approx_random(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(lef::approx_campaign(50, 1, mode(state)));
    }
  }
  BENCHMARK(approx_random)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
