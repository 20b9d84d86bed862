#include <benchmark/benchmark.h>

#include <map>

#include "krc/energy.hpp"
#include "krc/reduced_form.hpp"
#include "krc/shape_maps.hpp"
#include "krc/verify.hpp"

using namespace krc;

namespace {

const AffineCrystal& cached(int n, int s) {
  static std::map<std::pair<int, int>, AffineCrystal> cache;
  auto key = std::make_pair(n, s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, assemble(n, s)).first;
  return it->second;
}

}  // namespace

static void BM_generate_component(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto c = generate_component(n, k);
    benchmark::DoNotOptimize(c.vertices.size());
  }
}
BENCHMARK(BM_generate_component)->Args({4, 2})->Args({4, 3})->Args({5, 3});

static void BM_assemble(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int s = static_cast<int>(state.range(1));
  for (auto _ : state) {
    AffineCrystal c = assemble(n, s);
    benchmark::DoNotOptimize(c.size());
  }
}
BENCHMARK(BM_assemble)->Args({4, 1})->Args({4, 2})->Args({4, 3})->Args({5, 2});

static void BM_rmatrix(benchmark::State& state) {
  const auto& c = cached(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RMatrix r = rmatrix(c, c, /*verify=*/false);
    benchmark::DoNotOptimize(r.H.back());
  }
}
BENCHMARK(BM_rmatrix)->Arg(1)->Arg(2);

static void BM_reduced_form(benchmark::State& state) {
  const auto& c = cached(4, 3);
  for (auto _ : state)
    for (int v = 0; v < c.size(); v += 7)
      benchmark::DoNotOptimize(reduced_form(c.dropped[v]).rank);
}
BENCHMARK(BM_reduced_form);

static void BM_iota_up(benchmark::State& state) {
  const auto& c = cached(4, 3);
  for (auto _ : state)
    for (int v = 0; v < c.size(); v += 7) {
      int k = c.component[v];
      if (k == 3) continue;
      benchmark::DoNotOptimize(iota(c.filled[v], k, 3, 3));
    }
}
BENCHMARK(BM_iota_up);

static void BM_check_perfect(benchmark::State& state) {
  const auto& c = cached(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Report rep = check_perfect(c);
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(BM_check_perfect)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
