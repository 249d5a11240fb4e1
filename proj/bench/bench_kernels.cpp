// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to taste.
#include <benchmark/benchmark.h>

#include <random>

#include "tau/kernels.hpp"
#include "tau/opmatrix.hpp"

using namespace tau;

namespace {

DenseMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = u(rng);
  return m;
}

template <DenseMatrix (*F)(const DenseMatrix&, const DenseMatrix&)>
void bm_multiply(benchmark::State& state) {
  auto n = std::size_t(state.range(0));
  auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
  state.SetComplexityN(state.range(0));
}

template <std::size_t (*F)(DenseMatrix&, std::vector<std::size_t>&)>
void bm_lu(benchmark::State& state) {
  auto n = std::size_t(state.range(0));
  auto a = random_matrix(n, 3);
  std::vector<std::size_t> perm;
  for (auto _ : state) {
    state.PauseTiming();
    auto work = a;
    state.ResumeTiming();
    benchmark::DoNotOptimize(F(work, perm));
  }
}

template <DenseMatrix (*F)(const DenseMatrix&, std::span<const ThreeTerm>)>
void bm_integral(benchmark::State& state) {
  auto s = std::size_t(state.range(0));
  auto basis = RecurrenceBasis::legendre();
  auto d = derivative_matrix(basis, s + 1).data;
  auto coeffs = basis.coeff_table(s + 2);
  for (auto _ : state) benchmark::DoNotOptimize(F(d, coeffs));
}

template <std::vector<double> (*F)(const RecurrenceBasis&, std::span<const double>,
                                   std::span<const double>)>
void bm_eval(benchmark::State& state) {
  auto n = std::size_t(state.range(0));
  auto basis = RecurrenceBasis::laguerre();
  std::vector<double> coeffs(n + 1), xs(1201);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& c : coeffs) c = u(rng);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 60.0 * double(i) / 1200.0;
  for (auto _ : state) benchmark::DoNotOptimize(F(basis, coeffs, xs));
}

}  // namespace

BENCHMARK(bm_multiply<kernels::serial::multiply>)->Name("multiply/serial")->Arg(128)->Arg(512);
BENCHMARK(bm_multiply<kernels::parallel::multiply>)->Name("multiply/omp")->Arg(128)->Arg(512);
BENCHMARK(bm_lu<kernels::serial::lu_factor>)->Name("lu_factor/serial")->Arg(256)->Arg(1024);
BENCHMARK(bm_lu<kernels::parallel::lu_factor>)->Name("lu_factor/omp")->Arg(256)->Arg(1024);
BENCHMARK(bm_integral<kernels::serial::integral_columns>)
    ->Name("integral_columns/serial")
    ->Arg(256)
    ->Arg(1024);
BENCHMARK(bm_integral<kernels::parallel::integral_columns>)
    ->Name("integral_columns/omp")
    ->Arg(256)
    ->Arg(1024);
BENCHMARK(bm_eval<kernels::serial::eval_series>)->Name("eval_series/serial")->Arg(500)->Arg(2000);
BENCHMARK(bm_eval<kernels::parallel::eval_series>)->Name("eval_series/omp")->Arg(500)->Arg(2000);

BENCHMARK_MAIN();
