#include <benchmark/benchmark.h>

#include <functional>
#include <map>

#include "modrad/ring.hpp"
#include "modrad/scan.hpp"

namespace {

using modrad::Ring;
using modrad::RingPtr;

long serial_find_first(long n, const std::function<bool(long)>& pred) {
  for (long i = 0; i < n; ++i)
    if (pred(i)) return i;
  return -1;
}

const RingPtr& bench_ring(int n) {
  static std::map<int, RingPtr> rings;
  auto it = rings.find(n);
  if (it == rings.end()) it = rings.emplace(n, Ring::residue({long(n)})).first;
  return it->second;
}

// full pair sweep with no witness: the J-ideal condition on the zero ideal
// of a prime-order ring never fires
bool j_zero_violation(const RingPtr& R, long idx) {
  const int n = R->n;
  const int a = int(idx / n), b = int(idx % n);
  if (a == R->zero || b == R->zero) return false;
  return R->mulv(a, b) == R->zero;
}

void BM_pair_sweep_serial(benchmark::State& state) {
  const RingPtr& R = bench_ring(int(state.range(0)));
  const long n2 = long(R->n) * R->n;
  for (auto _ : state) {
    long hit = serial_find_first(n2, [&](long i) { return j_zero_violation(R, i); });
    benchmark::DoNotOptimize(hit);
  }
  state.SetItemsProcessed(state.iterations() * n2);
}

void BM_pair_sweep_parallel(benchmark::State& state) {
  const RingPtr& R = bench_ring(int(state.range(0)));
  const long n2 = long(R->n) * R->n;
  for (auto _ : state) {
    long hit = modrad::scan::find_first(n2, [&](long i) { return j_zero_violation(R, i); });
    benchmark::DoNotOptimize(hit);
  }
  state.SetItemsProcessed(state.iterations() * n2);
}

// witness deep in the range: lex-min selection still has to agree with the
// serial order, the parallel kernel just reaches it block by block
void BM_late_hit_serial(benchmark::State& state) {
  const long n = state.range(0);
  const long target = n - n / 16;
  for (auto _ : state) {
    long hit = serial_find_first(n, [&](long i) { return i >= target && i % 7 == target % 7; });
    benchmark::DoNotOptimize(hit);
  }
}

void BM_late_hit_parallel(benchmark::State& state) {
  const long n = state.range(0);
  const long target = n - n / 16;
  for (auto _ : state) {
    long hit =
        modrad::scan::find_first(n, [&](long i) { return i >= target && i % 7 == target % 7; });
    benchmark::DoNotOptimize(hit);
  }
}

}  // namespace

BENCHMARK(BM_pair_sweep_serial)->Arg(251)->Arg(1021);
BENCHMARK(BM_pair_sweep_parallel)->Arg(251)->Arg(1021);
BENCHMARK(BM_late_hit_serial)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(BM_late_hit_parallel)->Arg(1 << 20)->Arg(1 << 24);

BENCHMARK_MAIN();
