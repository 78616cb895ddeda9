#include <benchmark/benchmark.h>

#include "qconcav/bounds.hpp"
#include "qconcav/critical.hpp"
#include "qconcav/rng.hpp"

using namespace qconcav;

namespace {

HermitianMatrix random_hermitian(int dim, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  return HermitianMatrix(ComplexMatrix(0.5 * (m + m.adjoint())));
}

MixtureProblem sample_problem(int dim, std::uint64_t seed) {
  return MixtureProblem(Rng(derive_seed(seed, 0)).uniform(1e-3, 1 - 1e-3),
                        random_density({dim, dim, derive_seed(seed, 1)}),
                        random_density({dim, dim, derive_seed(seed, 2)}));
}

void BM_EigHermitian(benchmark::State& state) {
  const HermitianMatrix h = random_hermitian(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(16)->Arg(64);

void BM_RelativeEntropy(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density({dim, dim, 1});
  const DensityMatrix gamma = random_density({dim, dim, 2});
  for (auto _ : state) benchmark::DoNotOptimize(relative_entropy(rho, gamma));
}
BENCHMARK(BM_RelativeEntropy)->Arg(2)->Arg(8);

void BM_Sandwiched(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density({dim, dim, 3});
  const DensityMatrix gamma = random_density({dim, dim, 4});
  const RenyiParam a = RenyiParam::sandwiched(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(sandwiched(a, rho, gamma));
}
BENCHMARK(BM_Sandwiched)->Arg(2)->Arg(8);

void BM_FullReport(benchmark::State& state) {
  const MixtureProblem p = sample_problem(static_cast<int>(state.range(0)), 99);
  for (auto _ : state) benchmark::DoNotOptimize(full_report(p));
}
BENCHMARK(BM_FullReport)->Arg(2)->Arg(4)->Arg(8);

void BM_CriticalSearch(benchmark::State& state) {
  const MixtureProblem p = sample_problem(2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_critical_params(p));
}
BENCHMARK(BM_CriticalSearch);

}  // namespace
