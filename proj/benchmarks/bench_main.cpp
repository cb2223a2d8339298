// Copyright 2026 The dcegbs Authors
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


#include <random>

#include <benchmark/benchmark.h>

#include "dcegbs/combinatorics.hpp"
#include "dcegbs/compiler.hpp"
#include "dcegbs/gaussian.hpp"
#include "dcegbs/scattershot.hpp"

namespace {

using namespace dcegbs;

ComplexMatrix random_matrix(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    ComplexMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = {normal(rng), normal(rng)};
    return m;
}

void BM_Permanent(benchmark::State& state) {
    const auto w = random_matrix(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(permanent(w));
}
BENCHMARK(BM_Permanent)->DenseRange(4, 16, 4);

void BM_Hafnian(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    ComplexMatrix b = random_matrix(n, 2);
    b = (b + b.transpose()).eval();
    for (auto _ : state) benchmark::DoNotOptimize(hafnian(b));
}
BENCHMARK(BM_Hafnian)->DenseRange(4, 12, 4);

void BM_PhotonDistribution(benchmark::State& state) {
    const auto pairs = static_cast<int>(state.range(0));
    auto s = prepare_scattershot_state(pairs, 0.5);
    s = s.transformed(SymplecticTransform::from_unitary(haar_random_unitary(2 * pairs, 3)));
    for (auto _ : state) benchmark::DoNotOptimize(photon_distribution_total(s, 4));
}
BENCHMARK(BM_PhotonDistribution)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
