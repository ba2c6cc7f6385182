// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "cp1calc/equiv.hpp"
#include "cp1calc/transitions.hpp"

using namespace cp1;

namespace {

InvariantSystem rank_n_system(std::size_t r) {
  InvariantSystem s = mk_system(2);
  while (s.rank() < r) s = connected_sum(s, s.rank() + 2 <= r ? mk_system(1) : cp3bar_system());
  return s;
}

InvariantSystem shuffled(const InvariantSystem& s) {
  IntMatrix a = IntMatrix::identity(s.rank());
  for (std::size_t i = 0; i + 1 < s.rank(); ++i) a(i, i + 1) = 1;
  return transport(s, a);
}

void BM_Fingerprint(benchmark::State& state) {
  const auto s = rank_n_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(s, 7));
}

void BM_FingerprintSerial(benchmark::State& state) {
  const auto s = rank_n_system(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint_serial(s, 7));
}

void BM_Search(benchmark::State& state) {
  const auto s = rank_n_system(static_cast<std::size_t>(state.range(0)));
  const auto t = shuffled(s);
  SearchOptions opts;
  opts.bound = 2;
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(s, t, opts));
}

void BM_SearchSerial(benchmark::State& state) {
  const auto s = rank_n_system(static_cast<std::size_t>(state.range(0)));
  const auto t = shuffled(s);
  SearchOptions opts;
  opts.bound = 2;
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism_serial(s, t, opts));
}

}  // namespace

BENCHMARK(BM_Fingerprint)->DenseRange(3, 5);
BENCHMARK(BM_FingerprintSerial)->DenseRange(3, 5);
BENCHMARK(BM_Search)->DenseRange(2, 4);
BENCHMARK(BM_SearchSerial)->DenseRange(2, 4);

BENCHMARK_MAIN();
