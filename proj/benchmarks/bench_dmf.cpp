/*
   Copyright 2026 The dmf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>

#include <dmf/dmf.hpp>

namespace {

using namespace dmf;

const FqField& F3() { return FqField::of_order(3); }

USeries random_series(int prec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  USeries s(RatFuncK(F3()), prec);
  for (int i = 0; i < prec; ++i) {
    s.set(i, RatFuncK(PolyA(F3(), {static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3), 1})));
  }
  return s;
}

void BM_PolyMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::uint32_t> a, b;
  for (int i = 0; i <= state.range(0); ++i) {
    a.push_back(static_cast<std::uint32_t>(rng() % 3));
    b.push_back(static_cast<std::uint32_t>(rng() % 3));
  }
  const PolyA x(F3(), a), y(F3(), b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(128)->Arg(1024);

void BM_IsIrreducible(benchmark::State& state) {
  const auto polys = monic_polynomials(F3(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int n = 0;
    for (const auto& p : polys) n += is_irreducible(p);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_IsIrreducible)->Arg(3)->Arg(5);

void BM_SeriesMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const USeries a = random_series(n, 1), b = random_series(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SeriesInverse(benchmark::State& state) {
  const USeries a = random_series(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_SeriesInverse)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_UParameter(benchmark::State& state) {
  const PolyA a = parse_poly(F3(), "T^3 + 2*T + 1");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(u_sub_a(a, n));
}
BENCHMARK(BM_UParameter)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

void BM_Hyperderivative(benchmark::State& state) {
  const USeries g = g_series(F3(), 600);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperderivative(g, n));
}
BENCHMARK(BM_Hyperderivative)->Arg(1)->Arg(2)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_WronskianSeries(benchmark::State& state) {
  const int n = wronskian_precision(3);
  std::vector<USeries> ex;
  for (const auto& f : special_basis(F3())) ex.push_back(expand(f, n));
  for (auto _ : state) benchmark::DoNotOptimize(wronskian_series(ex));
}
BENCHMARK(BM_WronskianSeries)->Unit(benchmark::kMillisecond);

void BM_WronskianSerre(benchmark::State& state) {
  const FqField& F = FqField::of_order(static_cast<std::uint64_t>(state.range(0)));
  const auto basis = special_basis(F);
  for (auto _ : state) benchmark::DoNotOptimize(wronskian_serre(basis));
}
BENCHMARK(BM_WronskianSerre)->Arg(3)->Arg(5)->Arg(7);

void BM_SupersingularBruteForce(benchmark::State& state) {
  const PrimeContext ctx(monic_irreducibles(F3(), static_cast<int>(state.range(0))).front());
  for (auto _ : state) benchmark::DoNotOptimize(ss_bruteforce(ctx));
}
BENCHMARK(BM_SupersingularBruteForce)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SupersingularPolynomial(benchmark::State& state) {
  const PrimeContext ctx(monic_irreducibles(F3(), 3).front());
  for (auto _ : state) benchmark::DoNotOptimize(ss_poly(ctx));
}
BENCHMARK(BM_SupersingularPolynomial);

void BM_Filtration(benchmark::State& state) {
  const PrimeContext ctx(monic_irreducibles(F3(), 3).front());
  const IsobaricForm f = g_d_form(ctx).pow(2) * form_h(F3());
  for (auto _ : state) benchmark::DoNotOptimize(filtration(f, ctx));
}
BENCHMARK(BM_Filtration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
