// Copyright 2026 The ria Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "ria/channel.hpp"
#include "ria/index_assignment.hpp"
#include "ria/quantizer.hpp"
#include "ria/rearrange.hpp"

namespace {

using namespace ria;

std::vector<double> ramp(std::size_t m) {
    std::vector<double> v(m);
    std::iota(v.begin(), v.end(), 1.0);
    return v;
}

void BM_BruteForceMax(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const Kernel k = awgn_transition(m, 3.0).transition();
    const ValueVector v(ramp(m));
    BruteForceOptions opt;
    opt.threads = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_max(v, v, k, TiePolicy::first, opt).best_value);
}
BENCHMARK(BM_BruteForceMax)->ArgsProduct({{4, 5, 6}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_BruteForceBest(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto decoder = state.range(1) ? Decoder::mmse : Decoder::ml;
    const Codebook cb = max_entropy_codebook(UniformSource{0, 1}, m);
    const ChannelModel ch = awgn_transition(m, 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_best(cb, ch, decoder).best_msd);
}
BENCHMARK(BM_BruteForceBest)->ArgsProduct({{6, 7, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_AwgnTransition(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(awgn_transition(m, 10.0).probability(0, 0));
}
BENCHMARK(BM_AwgnTransition)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_MsdMmse(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    const Codebook cb = max_entropy_codebook(GaussianSource{0, 1}, m);
    const ChannelModel ch = awgn_transition(m, 10.0);
    const Assignment a = zigzag(m);
    for (auto _ : state) benchmark::DoNotOptimize(msd_mmse(cb, a, ch).msd);
}
BENCHMARK(BM_MsdMmse)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
