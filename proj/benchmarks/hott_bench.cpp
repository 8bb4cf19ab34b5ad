#include <benchmark/benchmark.h>

#include <random>

#include "hott/kernel/eval.hpp"
#include "hott/loopcalc/loopcalc.hpp"
#include "hott/stdlib/corpus.hpp"
#include "hott/stdlib/prelude.hpp"

namespace {

using namespace hott;

std::string stdlib_dir() { return HOTT_BENCH_STDLIB_DIR; }

Session& checked_corpus() {
  static Session s = [] {
    Session out;
    auto m = stdlib::read_manifest(stdlib_dir() + "/MANIFEST");
    stdlib::check_corpus(out, m, stdlib_dir(), stdlib::read_name_list(stdlib_dir() + "/SANCTIONED"));
    return out;
  }();
  return s;
}

void BM_CheckCorpus(benchmark::State& state) {
  auto m = stdlib::read_manifest(stdlib_dir() + "/MANIFEST");
  auto sanctioned = stdlib::read_name_list(stdlib_dir() + "/SANCTIONED");
  for (auto _ : state) {
    Session s;
    auto r = stdlib::check_corpus(s, m, stdlib_dir(), sanctioned, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(r.declarations);
  }
}
BENCHMARK(BM_CheckCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LoadPrelude(benchmark::State& state) {
  for (auto _ : state) {
    Session s;
    benchmark::DoNotOptimize(stdlib::load_prelude(s).declared.size());
  }
}
BENCHMARK(BM_LoadPrelude)->Unit(benchmark::kMillisecond);

void BM_WindingPower(benchmark::State& state) {
  const auto& env = checked_corpus().environment();
  Term t = loopcalc::loop_power_term(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(loopcalc::winding(loopcalc::recognize(t, env)));
}
BENCHMARK(BM_WindingPower)->Arg(1)->Arg(10)->Arg(50);

void BM_WindingRandomWords(benchmark::State& state) {
  const auto& env = checked_corpus().environment();
  std::mt19937_64 rng(1);
  std::vector<Term> terms;
  for (int i = 0; i < 64; ++i) terms.push_back(loopcalc::to_term(loopcalc::random_word(rng, 12)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(loopcalc::winding(loopcalc::recognize(terms[i++ % terms.size()], env)));
}
BENCHMARK(BM_WindingRandomWords);

void BM_NormalizeCorpus(benchmark::State& state) {
  const auto& env = checked_corpus().environment();
  kernel::Evaluator ev(env);
  for (auto _ : state) {
    std::size_t size = 0;
    for (const auto& d : env.in_order())
      if (d->kind == kernel::DeclKind::Definition && d->body) size += term_size(ev.normalize(d->body));
    benchmark::DoNotOptimize(size);
  }
}
BENCHMARK(BM_NormalizeCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
