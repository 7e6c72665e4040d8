#include <benchmark/benchmark.h>

#include "derivlab/derivations.hpp"

using namespace derivlab;

namespace {

Ring ring_of(const std::string& name) {
    if (name == "gf2") return Ring(RingSpec::prime_field(2));
    if (name == "gf5") return Ring(RingSpec::prime_field(5));
    if (name == "q") return Ring(RingSpec::rationals());
    if (name == "z") return Ring(RingSpec::integers());
    return Ring(RingSpec::integers_mod(6));
}

void BM_SylvesterSolve(benchmark::State& state, const std::string& ring_name) {
    const Ring ring = ring_of(ring_name);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(7);
    const Matrix a = random_matrix(ring, n, n, rng);
    const Matrix x = random_matrix(ring, n, n, rng);
    const Matrix y = inner_apply(a, x);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sylvester_solve(x, y));
    }
}

void BM_JointBasisSolve(benchmark::State& state, const std::string& ring_name) {
    const Ring ring = ring_of(ring_name);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(11);
    const Matrix a = random_matrix(ring, n, n, rng);
    WitnessSystem sys;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix u = unit(ring, n, i, j);
            sys.constraints.emplace_back(u, inner_apply(a, u));
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(joint_solve(sys));
    }
}

void BM_SmithNormalForm(benchmark::State& state) {
    const Ring z = ring_of("z");
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(13);
    const Matrix a = random_matrix(z, n, n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(a));
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_SylvesterSolve, gf5, "gf5")->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_SylvesterSolve, rationals, "q")->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_SylvesterSolve, zmod6, "z6")->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_JointBasisSolve, gf5, "gf5")->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_JointBasisSolve, rationals, "q")->Arg(2)->Arg(3);
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
