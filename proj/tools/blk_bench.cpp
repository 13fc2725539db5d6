#include <benchmark/benchmark.h>

#include <random>

#include "blk/brieskorn.hpp"
#include "blk/parse.hpp"
#include "blk/series.hpp"

using namespace blk;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = frac(num(rng), den(rng));
  return m;
}

SeriesMatrix random_series(std::size_t n, int prec, unsigned seed) {
  SeriesMatrix a(n, n, prec);
  for (int k = 0; k < prec; ++k) a.coeff(k) = random_matrix(n, seed + static_cast<unsigned>(k));
  return a;
}

void BM_MatrixMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}

void BM_MatrixMultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a, b));
}

void BM_SeriesMultiply(benchmark::State& state) {
  SeriesMatrix a = random_series(12, static_cast<int>(state.range(0)), 3);
  SeriesMatrix b = random_series(12, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}

void BM_SeriesMultiplySerial(benchmark::State& state) {
  SeriesMatrix a = random_series(12, static_cast<int>(state.range(0)), 3);
  SeriesMatrix b = random_series(12, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(a, b));
}

const char* kJetPoly = "x^2*y^2+x^6+y^7";

void BM_TMatrixJet(benchmark::State& state) {
  MilnorData md = milnor_data(parse_poly(kJetPoly).f);
  for (auto _ : state) benchmark::DoNotOptimize(t_matrix_jet(md, static_cast<int>(state.range(0))));
}

void BM_TMatrixJetSerial(benchmark::State& state) {
  MilnorData md = milnor_data(parse_poly(kJetPoly).f);
  for (auto _ : state) benchmark::DoNotOptimize(t_matrix_jet_serial(md, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_MatrixMultiply)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_MatrixMultiplySerial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_SeriesMultiply)->Arg(8)->Arg(16);
BENCHMARK(BM_SeriesMultiplySerial)->Arg(8)->Arg(16);
BENCHMARK(BM_TMatrixJet)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TMatrixJetSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
