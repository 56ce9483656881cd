// Copyright 2026 The symrand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "benchmark/benchmark.h"
#include "symrand/channel.h"
#include "symrand/circuit.h"
#include "symrand/mitigation.h"
#include "symrand/random_models.h"
#include "symrand/symmetry.h"

using namespace symrand;

namespace {

PauliChannel bench_channel(int n) {
    ChannelSampler sampler(R1Model{n, 0.5 / static_cast<double>(pauli_count(n)), 0.1 / pauli_count(n)}, 1);
    return sampler.next();
}

}  // namespace

static void BM_apply_channel(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    auto channel = bench_channel(n);
    auto rho = DensityMatrix::maximally_mixed(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_channel(rho, channel));
    }
}
BENCHMARK(BM_apply_channel)->DenseRange(2, 6, 2);

static void BM_sampler_draw(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    ChannelSampler sampler(R1Model{n, 0.5 / static_cast<double>(pauli_count(n)), 0.1 / pauli_count(n)}, 2);
    std::vector<double> out(pauli_count(n));
    for (auto _ : state) {
        sampler.draw(out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}
BENCHMARK(BM_sampler_draw)->Arg(2)->Arg(4);

static void BM_burnside(benchmark::State &state) {
    auto group = make_group(SymmetryKind::Permutation, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(burnside_orbit_count(group, 4));
    }
}
BENCHMARK(BM_burnside)->DenseRange(4, 8, 2);

static void BM_enumerate_orbits(benchmark::State &state) {
    auto group = make_group(SymmetryKind::Dihedral, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_orbit_count(group, 4));
    }
}
BENCHMARK(BM_enumerate_orbits)->DenseRange(4, 8, 2);

static void BM_symmetrize(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    auto group = make_group(SymmetryKind::ReflectionRotation, n);
    auto channel = bench_channel(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetrize_channel(channel, group));
    }
}
BENCHMARK(BM_symmetrize)->DenseRange(4, 8, 2);

static void BM_calibrate_symmetric(benchmark::State &state) {
    auto noise = ReadoutNoiseModel::loop_correlated(4, 0.05, 0.02);
    auto group = make_group(SymmetryKind::Dihedral, 4);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(calibrate_symmetric(noise, group, 10000, seed++));
    }
}
BENCHMARK(BM_calibrate_symmetric);

BENCHMARK_MAIN();
