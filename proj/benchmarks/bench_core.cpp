// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/capacity.hpp>
#include <zicr/gaussian.hpp>
#include <zicr/geometry.hpp>
#include <zicr/oracle.hpp>

#include <benchmark/benchmark.h>

using namespace zicr;

static void BM_WiFeasible(benchmark::State &state) {
    const SnrSextet s = symmetric_snr(1.0, 0.01, 1e6);
    for (auto _ : state) benchmark::DoNotOptimize(wi_feasible(s));
}
BENCHMARK(BM_WiFeasible);

static void BM_SumRateViaLogdet(benchmark::State &state) {
    const SnrSextet s{2.0, 0.5, 3.0, 1.5, 0.25, 4.0};
    const InputConfig inp{0.8, 0.6, 0.9, cplx(0.0, 0.7)};
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sum_rate_via_logdet(s, inp, points));
}
BENCHMARK(BM_SumRateViaLogdet)->Arg(64)->Arg(512);

static void BM_FullJointEntropy(benchmark::State &state) {
    const SnrSextet s{2.0, 0.5, 3.0, 1.5, 0.25, 4.0};
    const GenieParams g{cplx(1.2, 0.1), 0.8, 0.4, cplx(0.0, 0.5)};
    const JointGaussian jg = build_joint(s, {0.7, 0.4, 0.9, cplx(0.3, 0.2)}, g, {0.1, 0.7, 2.0, 3.1, 4.2, 5.9});
    const LabelSet all{Var::X1, Var::X2, Var::X3, Var::Y1, Var::Y2, Var::Y3, Var::S1, Var::S2};
    for (auto _ : state) benchmark::DoNotOptimize(logdet_entropy(jg, all));
}
BENCHMARK(BM_FullJointEntropy);

static void BM_RelayRegion(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(relay_region(NodeLayout{}, {-1.0, 3.0, -1.0, 3.0, n, n}).count());
}
BENCHMARK(BM_RelayRegion)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_KktSolve(benchmark::State &state) {
    const KktProblem p{1.0, 10.0, 0.01, 1.0, 0.4, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(kkt_solve(p).objective);
}
BENCHMARK(BM_KktSolve)->Arg(4)->Arg(16);

static void BM_Prop1BruteForce(benchmark::State &state) {
    Prop1Setup setup;
    setup.snr = symmetric_snr(1.0, 0.01, 1e6);
    setup.genie = make_genie(setup.snr, {0.5, 0.5});
    setup.grid_resolution = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(prop1_bruteforce(setup).best);
}
BENCHMARK(BM_Prop1BruteForce)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
