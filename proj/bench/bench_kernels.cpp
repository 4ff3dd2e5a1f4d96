// Serial reference vs OpenMP variant for each parallel kernel.
#include <benchmark/benchmark.h>

#include "csync/classifier.hpp"
#include "csync/solver.hpp"
#include "csync/syntax.hpp"

namespace {

using namespace csync;

Dcsa cerny(std::size_t n) {
  std::vector<State> table(n * 2);
  for (State q = 0; q < n; ++q) {
    table[q * 2] = static_cast<State>((q + 1) % n);
    table[q * 2 + 1] = q == 0 ? 1 : q;
  }
  return Dcsa(Alphabet("ab"), n, std::move(table));
}

Exec mode(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void shortest_sync(benchmark::State& st) {
  Dcsa a = cerny(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(shortest_sync_word(a, kDefaultSearchCap, mode(st)));
}
BENCHMARK(shortest_sync)->ArgsProduct({{10, 14, 16}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

void brute(benchmark::State& st) {
  Dcsa a = cerny(static_cast<std::size_t>(st.range(0)));
  Pdfa b = compile_regex("(a|b)*b(a|b)*", a.alphabet());
  for (auto _ : st) benchmark::DoNotOptimize(solve_brute(a, b, kDefaultSearchCap, mode(st)));
}
BENCHMARK(brute)->ArgsProduct({{10, 14}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

void classify(benchmark::State& st) {
  // Long bounding sequence, many triples, all P.
  std::string re, seq;
  for (int i = 0; i < st.range(0); ++i) {
    char c = static_cast<char>('a' + i % 4);
    re += std::string(1, c) + "^2";
    seq += c;
  }
  Pdfa b = compile_regex(re + "|" + std::string(1, seq[0]) + "*");
  for (auto _ : st) benchmark::DoNotOptimize(classify_letter_bounded(b, seq, mode(st)));
}
BENCHMARK(classify)->ArgsProduct({{8, 16}, {0, 1}})->ArgNames({"k", "parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
