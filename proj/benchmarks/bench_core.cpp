#include <benchmark/benchmark.h>

#include <random>

#include "witnesslab/optim.hpp"
#include "witnesslab/readout.hpp"
#include "witnesslab/relax.hpp"
#include "witnesslab/states.hpp"
#include "witnesslab/witness.hpp"

namespace {

using namespace witnesslab;

DensityMatrix random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = Complex(n(rng), n(rng));
  ComplexMatrix m = g * g.adjoint();
  m *= Complex(1.0 / m.trace().real());
  return DensityMatrix((m + m.adjoint()) * Complex(0.5));
}

void BM_EigHermitian(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const HermitianOp op = HermitianOp(random_state(rng).matrix());
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(op));
}
BENCHMARK(BM_EigHermitian);

void BM_PartialTransposeMinEig(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const DensityMatrix rho = random_state(rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_ppt(rho));
}
BENCHMARK(BM_PartialTransposeMinEig);

void BM_OptimalWitnessLp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimal_witness(BellKind::PhiMinus));
}
BENCHMARK(BM_OptimalWitnessLp);

void BM_RobustnessBellDiagonal(benchmark::State& state) {
  const DensityMatrix rho = bell_diagonal({-0.2, 1.0, 0.2});
  for (auto _ : state) benchmark::DoNotOptimize(generalized_robustness(rho));
}
BENCHMARK(BM_RobustnessBellDiagonal)->Unit(benchmark::kMicrosecond);

void BM_RobustnessRandom(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<DensityMatrix> states;
  while (states.size() < 16) {
    DensityMatrix rho = random_state(rng);
    if (!is_ppt(rho)) states.push_back(std::move(rho));
  }
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generalized_robustness(states[k++ % states.size()]));
}
BENCHMARK(BM_RobustnessRandom)->Unit(benchmark::kMicrosecond);

void BM_RelaxChannel(benchmark::State& state) {
  const DensityMatrix rho = bell_state(BellKind::PhiMinus);
  const RelaxationParams p = RelaxationParams::from_t2(0.31, 0.11);
  for (auto _ : state) benchmark::DoNotOptimize(relax_channel(rho, 0.2, p));
}
BENCHMARK(BM_RelaxChannel);

void BM_RelaxSweep(benchmark::State& state) {
  const DensityMatrix rho = bell_state(BellKind::PhiMinus);
  const RelaxationParams p = RelaxationParams::from_t2(0.31, 0.11);
  const PauliWitness w = table1_witness(BellKind::PhiMinus);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(rho, p, w, 1.0, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_RelaxSweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_DetectionGrid(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detection_region_grid(res));
}
BENCHMARK(BM_DetectionGrid)->Arg(21)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_PauliTomography(benchmark::State& state) {
  const PauliVector v = add_noise(pauli_vector(bell_state(BellKind::PsiPlus)), 0.02, 7);
  for (auto _ : state) benchmark::DoNotOptimize(pauli_tomography(v));
}
BENCHMARK(BM_PauliTomography);

}  // namespace

BENCHMARK_MAIN();
