#include <benchmark/benchmark.h>

#include "bstab/charge.hpp"
#include "bstab/interlace.hpp"
#include "bstab/quadform.hpp"
#include "bstab/restrict.hpp"
#include "bstab/walls.hpp"

using namespace bstab;

namespace {

RootTuple spaced(int n, long offset) {
  RationalVec t;
  for (int i = 0; i < n; ++i) t.push_back(Rational(2 * i + offset));
  return RootTuple(t, false);
}

Pencil line(int n) { return Pencil(roots_to_poly(spaced(n, 0)), roots_to_poly(spaced(n, 1))); }

void BM_IsInterlaced(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Polynomial f = roots_to_poly(spaced(n, 0)), g = roots_to_poly(spaced(n, 1));
  for (auto _ : st) benchmark::DoNotOptimize(is_interlaced(f, g));
}
BENCHMARK(BM_IsInterlaced)->DenseRange(2, 8, 2);

void BM_ReducedCharge(benchmark::State& st) {
  RootTuple t = spaced(static_cast<int>(st.range(0)), 0);
  for (auto _ : st) benchmark::DoNotOptimize(reduced_charge(t));
}
BENCHMARK(BM_ReducedCharge)->DenseRange(2, 8, 2);

void BM_SepPencil(benchmark::State& st) {
  Pencil l = line(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(sep_pencil(l));
}
BENCHMARK(BM_SepPencil)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_QTilde(benchmark::State& st) {
  Pencil l = line(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(q_tilde(l));
}
BENCHMARK(BM_QTilde)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_HilbBounds(benchmark::State& st) {
  long long m = 1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(hilb_bounds(m));
    m = m % 10000 + 1;
  }
}
BENCHMARK(BM_HilbBounds);

void BM_Xi(benchmark::State& st) {
  RootTuple t = spaced(static_cast<int>(st.range(0)), 0);
  for (auto _ : st) benchmark::DoNotOptimize(xi(t, 1));
}
BENCHMARK(BM_Xi)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
