#include <benchmark/benchmark.h>

#include "derivlab/jordan.hpp"
#include "derivlab/localcheck.hpp"

using namespace derivlab;

namespace {

void BM_CheckInnerExhaustive(benchmark::State& state) {
    const Ring f2(RingSpec::prime_field(2));
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const AdditiveMap f = map_from_inner(random_matrix(f2, n, n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_local_inner(f, PointSet::exhaustive(), 1));
    }
}

void BM_CheckPatchedExhaustive(benchmark::State& state) {
    const Ring f2(RingSpec::prime_field(2));
    Rng rng(5);
    std::vector<Matrix> impls;
    for (int i = 0; i < 4; ++i) impls.push_back(random_matrix(f2, 2, 2, rng));
    const AdditiveMap f = gen_basis_patched(f2, 2, impls);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_local_inner(f, PointSet::exhaustive(), 1));
    }
}

void BM_CheckInnerSampledQ(benchmark::State& state) {
    const Ring q(RingSpec::rationals());
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(7);
    const AdditiveMap f = map_from_inner(random_matrix(q, n, n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_local_inner(f, PointSet::sampled(1000, 1), 1));
    }
}

void BM_JordanGlobalize(benchmark::State& state) {
    const Ring z5(RingSpec::integers_mod(5));
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(9);
    const AdditiveMap f = jordan_map_from_skew(random_skew(z5, n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(globalize_jordan(f));
    }
}

} // namespace

BENCHMARK(BM_CheckInnerExhaustive)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckPatchedExhaustive);
BENCHMARK(BM_CheckInnerSampledQ)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JordanGlobalize)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
