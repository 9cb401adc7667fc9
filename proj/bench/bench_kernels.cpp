// OpenMP kernels against the serial reference versions, at MLP batch shapes.
#include <benchmark/benchmark.h>

#include "pe/kernels.hpp"
#include "pe/rng.hpp"
#include "pe/rntn.hpp"

namespace {

pe::DenseArray random_matrix(std::size_t r, std::size_t c, std::uint64_t seed, double zero_rate = 0.0) {
  pe::DenseArray a = pe::DenseArray::matrix(r, c);
  pe::RngStream rng(seed, 0);
  for (double& v : a.values()) v = rng.uniform() < zero_rate ? 0.0 : rng.normal();
  return a;
}

template <void (*Gemm)(const pe::DenseArray&, const pe::DenseArray&, pe::DenseArray&)>
void forward_layer(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto width = static_cast<std::size_t>(state.range(1));
  const auto x = random_matrix(batch, 784, 1, 0.8);  // MNIST-like sparsity
  const auto w = random_matrix(784, width, 2);
  pe::DenseArray out = pe::DenseArray::matrix(batch, width);
  for (auto _ : state) {
    Gemm(x, w, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * batch * 784 * width));
}

template <void (*Gemm)(const pe::DenseArray&, const pe::DenseArray&, pe::DenseArray&)>
void weight_gradient(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto width = static_cast<std::size_t>(state.range(1));
  const auto a = random_matrix(batch, width, 3, 0.5);
  const auto d = random_matrix(batch, width, 4);
  pe::DenseArray out = pe::DenseArray::matrix(width, width);
  for (auto _ : state) {
    Gemm(a, d, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <void (*Gemm)(const pe::DenseArray&, const pe::DenseArray&, pe::DenseArray&)>
void input_gradient(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const auto width = static_cast<std::size_t>(state.range(1));
  const auto d = random_matrix(batch, width, 5);
  const auto w = random_matrix(width, width, 6);
  pe::DenseArray out = pe::DenseArray::matrix(batch, width);
  for (auto _ : state) {
    Gemm(d, w, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <std::size_t (*Clip)(pe::DenseArray&, double)>
void max_norm(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto w = random_matrix(784, width, 7);
  for (auto _ : state) {
    pe::DenseArray copy = w;
    benchmark::DoNotOptimize(Clip(copy, 3.5));
  }
}

void rntn_compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto model = pe::CompactRNTN::init(n, 5, 2, pe::RngStream(8, 0));
  std::vector<std::size_t> dims(k);
  for (std::size_t i = 0; i < k; ++i) dims[i] = i;
  const auto p = pe::slice_parameters(model, dims);
  std::vector<double> a(k, 0.3), b(k, -0.2);
  for (auto _ : state) benchmark::DoNotOptimize(pe::compose(a, b, p));
}

}  // namespace

BENCHMARK(forward_layer<pe::kernels::gemm_nn>)->Name("gemm_nn/omp")->Args({100, 256})->Args({100, 800});
BENCHMARK(forward_layer<pe::reference::gemm_nn>)->Name("gemm_nn/serial")->Args({100, 256})->Args({100, 800});
BENCHMARK(weight_gradient<pe::kernels::gemm_tn>)->Name("gemm_tn/omp")->Args({100, 256})->Args({100, 800});
BENCHMARK(weight_gradient<pe::reference::gemm_tn>)->Name("gemm_tn/serial")->Args({100, 256})->Args({100, 800});
BENCHMARK(input_gradient<pe::kernels::gemm_nt>)->Name("gemm_nt/omp")->Args({100, 256})->Args({100, 800});
BENCHMARK(input_gradient<pe::reference::gemm_nt>)->Name("gemm_nt/serial")->Args({100, 256})->Args({100, 800});
BENCHMARK(max_norm<pe::kernels::clip_column_norms>)->Name("max_norm/omp")->Arg(256)->Arg(800);
BENCHMARK(max_norm<pe::reference::clip_column_norms>)->Name("max_norm/serial")->Arg(256)->Arg(800);
BENCHMARK(rntn_compose)->Args({30, 30})->Args({30, 15});

BENCHMARK_MAIN();
