#include <benchmark/benchmark.h>

#include <random>

#include "gtg/permrep.hpp"
#include "gtg/poly.hpp"
#include "gtg/search.hpp"
#include "gtg/smallcancel.hpp"
#include "gtg/word.hpp"

namespace {

gtg::Word random_word(std::mt19937& rng, gtg::FactorSpec spec, int k) {
  std::vector<uint8_t> exps;
  for (int i = 0; i < k; ++i) {
    exps.push_back(spec.p == 2 ? 1 : static_cast<uint8_t>(1 + rng() % 2));
    exps.push_back(static_cast<uint8_t>(1 + rng() % 2));
  }
  return gtg::word_from_exponents(exps, spec);
}

void BM_TracePolynomial232(benchmark::State& state) {
  std::mt19937 rng(1);
  int k = static_cast<int>(state.range(0));
  gtg::Word w = random_word(rng, gtg::FactorSpec::z2z3(), k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtg::trace_polynomial(w));
  }
}
BENCHMARK(BM_TracePolynomial232)->Arg(8)->Arg(20)->Arg(40);

void BM_TracePolynomial332(benchmark::State& state) {
  std::mt19937 rng(2);
  gtg::Word w = random_word(rng, gtg::FactorSpec::z3z3(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtg::trace_polynomial(w));
  }
}
BENCHMARK(BM_TracePolynomial332)->Arg(8)->Arg(20);

void BM_EvalTraceInt(benchmark::State& state) {
  std::mt19937 rng(3);
  gtg::Word w = random_word(rng, gtg::FactorSpec::z2z3(), 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtg::eval_trace_int(w, 2));
  }
}
BENCHMARK(BM_EvalTraceInt);

void BM_PermFilter(benchmark::State& state) {
  gtg::RepFilter filter(gtg::requirements_of(gtg::TargetForm{gtg::Case::C232, 1, 1, 9}));
  uint8_t codes[40];
  uint64_t x = 88172645463325252ull;
  for (auto _ : state) {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    for (int i = 0; i < 40; ++i) codes[i] = (x >> (i % 32)) & 1;
    benchmark::DoNotOptimize(filter.passes_codes(codes, 40));
  }
}
BENCHMARK(BM_PermFilter);

void BM_Canonicalize(benchmark::State& state) {
  std::mt19937 rng(4);
  gtg::Word w = random_word(rng, gtg::FactorSpec::z2z3(), 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtg::canonicalize(w));
  }
}
BENCHMARK(BM_Canonicalize);

void BM_SearchForm(benchmark::State& state) {
  // full pipeline over a mid-size form; reports candidates/second
  gtg::TargetForm f{gtg::Case::C232, 1, 1, static_cast<int>(state.range(0))};
  uint64_t candidates = 0;
  for (auto _ : state) {
    auto r = gtg::run_case(gtg::Case::C232, f, {});
    candidates += r.stats.enumerated;
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<int64_t>(candidates));
}
BENCHMARK(BM_SearchForm)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  gtg::Word w = gtg::parse_word("xyxyxy2x2y2xyx2yx2y2", gtg::FactorSpec::z3z3());
  for (auto _ : state) {
    benchmark::DoNotOptimize(gtg::certify(w, gtg::Case::C332));
  }
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

void BM_Oracle332(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gtg::brute_force_oracle(gtg::Case::C332, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Oracle332)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
