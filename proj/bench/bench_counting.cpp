// Point counting on x^4 + y^3 z + z^4: OpenMP kernel vs serial reference vs
// pair enumeration.

#include <benchmark/benchmark.h>

#include <map>

#include "qj/counting.hpp"

namespace {

const qj::CurveContext& curve(std::uint32_t p) {
  static std::map<std::uint32_t, qj::CurveContext> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, qj::curve_validate(qj::reference_quartic(qj::Field::prime(p)))).first;
  return it->second;
}

template <auto Count>
void run(benchmark::State& state) {
  const auto& ctx = curve(static_cast<std::uint32_t>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  qj::CountOptions opts;
  opts.budget = 100'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(Count(ctx, k, opts));
}

void BM_CountOpenMP(benchmark::State& s) { run<qj::count_points>(s); }
void BM_CountSerial(benchmark::State& s) { run<qj::count_points_serial>(s); }
void BM_CountNaive(benchmark::State& s) { run<qj::count_points_naive>(s); }

}  // namespace

BENCHMARK(BM_CountOpenMP)->Args({31, 1})->Args({31, 2})->Args({11, 3})->Args({31, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountSerial)->Args({31, 1})->Args({31, 2})->Args({11, 3})->Args({31, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountNaive)->Args({31, 1})->Args({31, 2})->Args({11, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
