// OpenMP sweep kernels against their serial references on D(A) at d = 3.

#include <benchmark/benchmark.h>

#include "hopfoid/examples.hpp"

using namespace hopfoid;

namespace {

const Slq2Tower& tower() {
  static const Slq2Tower t = build_slq2(3);
  return t;
}

/// (e_i e_j) e_k != e_i (e_j e_k) for every k, pair index ij.
bool assoc_fails(const StructAlgebra& a, std::size_t ij) {
  const std::size_t n = a.dim();
  const Index i = static_cast<Index>(ij / n), j = static_cast<Index>(ij % n);
  const Vec& eij = a.product(i, j);
  for (Index k = 0; k < n; ++k)
    if (a.mul(eij, Vec::unit(k)) != a.mul(Vec::unit(i), a.product(j, k))) return true;
  return false;
}

void BM_AssociativityParallel(benchmark::State& state) {
  const StructAlgebra& a = tower().tower.dbl->hopf().alg();
  par::set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(par::first_failure(a.dim() * a.dim(), [&](std::size_t ij) { return assoc_fails(a, ij); }));
  par::set_num_threads(0);
}
BENCHMARK(BM_AssociativityParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AssociativitySerial(benchmark::State& state) {
  const StructAlgebra& a = tower().tower.dbl->hopf().alg();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        par::first_failure_serial(a.dim() * a.dim(), [&](std::size_t ij) { return assoc_fails(a, ij); }));
}
BENCHMARK(BM_AssociativitySerial)->Unit(benchmark::kMillisecond);

/// Delta is multiplicative: Delta(e_i e_j) against Delta(e_i) Delta(e_j).
Vec coproduct_defect(const HopfAlgebra& h, std::size_t ij) {
  const std::size_t n = h.dim();
  const Index i = static_cast<Index>(ij / n), j = static_cast<Index>(ij % n);
  return h.delta(h.alg().product(i, j)) - h.square().mul(h.delta_basis(i), h.delta_basis(j));
}

void BM_CoproductMapParallel(benchmark::State& state) {
  const HopfAlgebra& h = tower().tower.dbl->hopf();
  par::set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(par::map<Vec>(h.dim() * h.dim(), [&](std::size_t ij) { return coproduct_defect(h, ij); }));
  par::set_num_threads(0);
}
BENCHMARK(BM_CoproductMapParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CoproductMapSerial(benchmark::State& state) {
  const HopfAlgebra& h = tower().tower.dbl->hopf();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        par::map_serial<Vec>(h.dim() * h.dim(), [&](std::size_t ij) { return coproduct_defect(h, ij); }));
}
BENCHMARK(BM_CoproductMapSerial)->Unit(benchmark::kMillisecond);

void BM_VerifyHopfDouble(benchmark::State& state) {
  const HopfAlgebra& h = tower().tower.dbl->hopf();
  par::set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(h).all_passed());
  par::set_num_threads(0);
}
BENCHMARK(BM_VerifyHopfDouble)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
