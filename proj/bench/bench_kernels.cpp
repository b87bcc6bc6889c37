// Parallel kernels against their serial references.
//
//   ./build/bench/bench_kernels --benchmark_filter=Rref

#include <benchmark/benchmark.h>

#include <vector>

#include "llab/matrix.hpp"
#include "llab/root_scan.hpp"

namespace {

using llab::Matrix;
using llab::PrimeField;

Matrix<PrimeField> random_matrix(const PrimeField& f, std::size_t n) {
  llab::Rng rng(n);
  Matrix<PrimeField> m(n, n + n / 4);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.random(rng);
  return m;
}

template <bool Parallel>
void BM_Rref(benchmark::State& state) {
  const PrimeField f;
  const auto m = random_matrix(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? llab::rref(f, m) : llab::rref_serial(f, m);
    benchmark::DoNotOptimize(r.rank);
  }
}

template <bool Parallel>
void BM_ScanRoots(benchmark::State& state) {
  const PrimeField f(static_cast<std::uint32_t>(state.range(0)));
  llab::Rng rng(9);
  std::vector<std::uint32_t> coeffs(12);
  for (auto& c : coeffs) c = f.random(rng);
  for (auto _ : state) {
    auto roots = Parallel ? llab::scan_roots(f, coeffs) : llab::scan_roots_serial(f, coeffs);
    benchmark::DoNotOptimize(roots.data());
  }
}

}  // namespace

BENCHMARK(BM_Rref<false>)->Arg(64)->Arg(192)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref<true>)->Arg(64)->Arg(192)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanRoots<false>)->Arg(31991)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanRoots<true>)->Arg(31991)->Arg(1000003)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
