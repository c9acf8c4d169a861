#include <benchmark/benchmark.h>

#include "momcert/chebyshev.hpp"
#include "momcert/decomp.hpp"
#include "momcert/instance.hpp"
#include "momcert/moments.hpp"

namespace {

using namespace momcert;

RationalPoly z_minus_1() { return RationalPoly{Rational(-1), Rational(1)}; }

void BM_MomentSequencePower(benchmark::State& state) {
    const Instance inst = build_power_case({.m = 2, .n = 3, .r = z_minus_1()});
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(moment_sequence(inst.p, inst.q, inst.a, inst.b, n));
}
BENCHMARK(BM_MomentSequencePower)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_MomentSequenceCheby(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    const Instance inst = build_cheby_case({.n = 2, .m = m});
    for (auto _ : state) benchmark::DoNotOptimize(moment_sequence(inst.p, inst.q, inst.a, inst.b, 20));
}
BENCHMARK(BM_MomentSequenceCheby)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CommonRightFactors(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const RationalPoly p = chebyshev(k);
    const RationalPoly q = chebyshev(2) + chebyshev(k / 2);
    for (auto _ : state) benchmark::DoNotOptimize(common_right_factors(p, q));
}
BENCHMARK(BM_CommonRightFactors)->Arg(12)->Arg(24)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_RightFactor(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const RationalPoly p = compose(chebyshev(5), chebyshev(d));
    for (auto _ : state) benchmark::DoNotOptimize(right_factor(p, d));
}
BENCHMARK(BM_RightFactor)->Arg(2)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
