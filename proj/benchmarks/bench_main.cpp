// Copyright the gchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Microbenchmarks for the hot kernels: Hermitian eigensolves, matrix
// powers, the diagonal Fock kernels, dense Kraus application, and the
// two norm routes.

#include <cstdint>
#include <random>

#include <benchmark/benchmark.h>

#include "gchan/channel.hpp"
#include "gchan/fockoracle.hpp"
#include "gchan/interpbound.hpp"
#include "gchan/matcore.hpp"
#include "gchan/thermal.hpp"
#include "gchan/types.hpp"
#include "support/random_inputs.hpp"

namespace {

using namespace gchan;

void BM_eig_hermitian(benchmark::State& state) {
  const Eigen::Index d = state.range(0);
  std::mt19937_64 rng(1);
  const ComplexMatrix A = testing::random_psd(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian(A));
  }
}
BENCHMARK(BM_eig_hermitian)->Arg(8)->Arg(64)->Arg(256);

void BM_psd_power(benchmark::State& state) {
  const Eigen::Index d = state.range(0);
  std::mt19937_64 rng(2);
  const ComplexMatrix A = testing::random_psd(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psd_power(A, 0.35));
  }
}
BENCHMARK(BM_psd_power)->Arg(8)->Arg(64)->Arg(256);

void BM_attenuator_diag(benchmark::State& state) {
  const Eigen::Index cutoff = state.range(0);
  const RealVector probs =
      fock::thermal_matrix(static_cast<double>(cutoff) / 30.0, cutoff)
          .matrix.diagonal()
          .real();
  const fock::SingleModeDecomposition dec =
      fock::single_mode_decompose(0.64, 0.18);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::channel_diag(dec, probs, cutoff));
  }
}
BENCHMARK(BM_attenuator_diag)->Arg(128)->Arg(1024)->Arg(2828);

void BM_amplifier_diag(benchmark::State& state) {
  const Eigen::Index cutoff = state.range(0);
  const RealVector probs =
      fock::thermal_matrix(static_cast<double>(cutoff) / 30.0, cutoff)
          .matrix.diagonal()
          .real();
  const fock::SingleModeDecomposition dec =
      fock::single_mode_decompose(2.0, 0.5);
  const Eigen::Index out = cutoff + fock::amplifier_lmax(2.0, cutoff, 1e-12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::channel_diag(dec, probs, out));
  }
}
BENCHMARK(BM_amplifier_diag)->Arg(128)->Arg(1024);

void BM_dense_apply_channel(benchmark::State& state) {
  const Eigen::Index cutoff = state.range(0);
  const fock::KrausChannel att = fock::attenuator_kraus(0.64, cutoff);
  const fock::FockOperator rho = fock::thermal_matrix(1.0, cutoff);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::apply_channel(att, rho));
  }
}
BENCHMARK(BM_dense_apply_channel)->Arg(16)->Arg(64)->Arg(128);

void BM_output_schatten_norm(benchmark::State& state) {
  const Eigen::Index s = state.range(0);
  std::mt19937_64 rng(3);
  const ChannelParams params = testing::random_cp_channel(s, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(output_schatten_norm(params, 10.0, 2.5));
  }
}
BENCHMARK(BM_output_schatten_norm)->Arg(1)->Arg(4)->Arg(16);

void BM_norm_lower_bound(benchmark::State& state) {
  const Eigen::Index d = state.range(0);
  const interp::PositiveMapRep map = interp::random_map(d, false, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(interp::norm_lower_bound(
        map, 2.5, interp::kDefaultTrials, interp::kDefaultIters, 5));
  }
}
BENCHMARK(BM_norm_lower_bound)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
