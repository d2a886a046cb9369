// Microbenchmarks for the hot paths: ladder-operator application, joint-state
// construction, basis reordering, the negativity pipeline, and the survey
// engine (exact census and one Monte Carlo batch).

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "fermiwedge/density_matrix.hpp"
#include "fermiwedge/fock_ops.hpp"
#include "fermiwedge/measures.hpp"
#include "fermiwedge/rindler_states.hpp"
#include "fermiwedge/survey.hpp"

namespace fw = fermiwedge;

namespace {

constexpr double kQr = 0.7071067811865476;  // 1/sqrt(2)

fw::SparseState dense_random_state(const fw::ModeOrdering& ordering, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };
  fw::SparseState psi(ordering);
  const fw::OccupationKey keys = fw::OccupationKey(1) << ordering.size();
  for (fw::OccupationKey k = 0; k < keys; ++k) {
    psi = psi + fw::SparseState::basis_state(ordering, k).scaled({unit(), unit()});
  }
  return psi.normalized();
}

void bench_apply_creation(benchmark::State& state) {
  const fw::FieldSpec field = fw::FieldSpec::dirac();
  const fw::ModeOrdering ordering = field.joint_ordering();
  const fw::SparseState psi = dense_random_state(ordering, 17);
  const fw::ModeId mode = ordering.mode_at(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fw::apply_creation(mode, psi));
  }
}
BENCHMARK(bench_apply_creation);

void bench_build_joint_state(benchmark::State& state) {
  const fw::FieldSpec field = fw::FieldSpec::dirac();
  const fw::JointStateSpec spec =
      fw::singlet_analogue_spec(field, fw::UnruhWeights::from_qr(kQr));
  const fw::SqueezeParameter rho(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fw::build_joint_state(spec, field, rho));
  }
}
BENCHMARK(bench_build_joint_state);

void bench_reorder_basis(benchmark::State& state) {
  const fw::FieldSpec field = fw::FieldSpec::dirac();
  const fw::SparseState psi = dense_random_state(field.joint_ordering(), 29);
  const fw::ModeOrdering target =
      fw::region_separated_ordering(field).to_mode_ordering(field);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fw::reorder_basis(psi, target));
  }
}
BENCHMARK(bench_reorder_basis);

void bench_negativity(benchmark::State& state) {
  const fw::FieldSpec field = fw::FieldSpec::dirac();
  const fw::JointStateSpec spec =
      fw::singlet_analogue_spec(field, fw::UnruhWeights::from_qr(kQr));
  const fw::SparseState psi = fw::build_joint_state(spec, field, fw::SqueezeParameter(0.5));
  const fw::PartitionSpec partition = fw::PartitionSpec::from_ordering(psi.ordering());
  for (auto _ : state) {
    benchmark::DoNotOptimize(fw::negativity(fw::partial_trace(psi, partition)));
  }
}
BENCHMARK(bench_negativity);

void bench_negativity_curve_spin32(benchmark::State& state) {
  const fw::FieldSpec field = fw::FieldSpec::spin(3);
  const fw::JointStateSpec spec =
      fw::singlet_analogue_spec(field, fw::UnruhWeights::from_qr(kQr));
  const fw::ModeOrdering ordering = field.joint_ordering();
  const std::vector<double> grid = {0.0, M_PI / 8.0, M_PI / 4.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fw::negativity_curve(spec, field, ordering, grid));
  }
}
BENCHMARK(bench_negativity_curve_spin32);

void bench_survey_full_grassmann(benchmark::State& state) {
  const fw::FieldSpec field = fw::FieldSpec::grassmann();
  const fw::JointStateSpec spec =
      fw::vacuum_excitation_spec(fw::UnruhWeights::from_qr(kQr));
  const std::vector<double> grid = fw::default_classification_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fw::survey_full(spec, field, grid));
  }
}
BENCHMARK(bench_survey_full_grassmann);

void bench_survey_mc_dirac(benchmark::State& state) {
  const fw::FieldSpec field = fw::FieldSpec::dirac();
  const fw::JointStateSpec spec =
      fw::singlet_analogue_spec(field, fw::UnruhWeights::from_qr(kQr));
  const std::vector<double> grid = fw::default_classification_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fw::survey_monte_carlo(spec, field, grid, fw::kDefaultQuantum, 200, 7));
  }
}
BENCHMARK(bench_survey_mc_dirac);

}  // namespace

BENCHMARK_MAIN();
