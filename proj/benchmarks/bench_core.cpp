#include <cmath>
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "divbound/arith.hpp"
#include "divbound/hull.hpp"
#include "divbound/primes.hpp"
#include "divbound/rho.hpp"
#include "divbound/verify/cases.hpp"
#include "divbound/verify/hk.hpp"
#include "divbound/verify/scan.hpp"

namespace {

using namespace divbound;

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(20000);
  return t;
}

void BM_Hk(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const double x = 1.4 * std::log(static_cast<double>(k));
  for (auto _ : state) benchmark::DoNotOptimize(hk(table(), k, x));
}
BENCHMARK(BM_Hk)->Arg(44)->Arg(1000)->Arg(10999);

void BM_VerifyCaseMid(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_case_mid(table(), k));
}
BENCHMARK(BM_VerifyCaseMid)->Arg(44)->Arg(10999)->Unit(benchmark::kMillisecond);

void BM_ScanSegment(benchmark::State& state) {
  const auto length = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t lo = 100000000 - length;
  const std::vector<std::uint64_t> base = sieve_primes_upto(10000);
  for (auto _ : state) benchmark::DoNotOptimize(scan_segment(lo, lo + length - 1, base));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * length));
}
BENCHMARK(BM_ScanSegment)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_EnumeratePrimary(benchmark::State& state) {
  const double limit = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primary_log(limit, table()));
}
BENCHMARK(BM_EnumeratePrimary)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);

void BM_Factorize(benchmark::State& state) {
  std::uint64_t n = 1000000000000000003ULL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
    n += 2;
  }
}
BENCHMARK(BM_Factorize);

void BM_Rho(benchmark::State& state) {
  const Factorization f = parse_factored("2^26*3^16");
  for (auto _ : state) benchmark::DoNotOptimize(rho(f));
}
BENCHMARK(BM_Rho);

void BM_Hull(benchmark::State& state) {
  const HullFunction f = HullFunction::build(50);
  double t = 0.02;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(t));
    t = t > 0.99 ? 0.02 : t + 0.0137;
  }
}
BENCHMARK(BM_Hull);

}  // namespace
BENCHMARK_MAIN();
