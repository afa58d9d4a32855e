// Copyright 2026 The seqent Authors
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

#include <seqent/experiments.hpp>
#include <seqent/sequences.hpp>
#include <seqent/state.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace seqent;

// Sequence path: the reshape is built from the support only.
void BM_SequenceSpectrum(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    Rng rng(1);
    const auto seq = random_sequence(n, static_cast<std::uint64_t>(predicted_mn(n)), rng);
    const auto part = Bipartition::natural(n);
    for (auto _ : st) benchmark::DoNotOptimize(entanglement_entropy(seq, part));
}
BENCHMARK(BM_SequenceSpectrum)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_DenseSpectrum(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    Rng rng(2);
    const auto state = haar_state(n, rng);
    const auto part = Bipartition::natural(n);
    for (auto _ : st) benchmark::DoNotOptimize(entanglement_entropy(state, part));
}
BENCHMARK(BM_DenseSpectrum)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

void BM_Qft(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    Rng rng(3);
    const auto state = haar_state(n, rng);
    for (auto _ : st) benchmark::DoNotOptimize(qft(state));
}
BENCHMARK(BM_Qft)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

void BM_SieveOmega(benchmark::State& st) {
    const auto limit = std::uint64_t{1} << st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(sieve_omega(limit));
}
BENCHMARK(BM_SieveOmega)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AverageEntropy(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(average_entropy(14, 716, 20, PartitionMode::natural, RunOptions{1, 1}));
}
BENCHMARK(BM_AverageEntropy)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
