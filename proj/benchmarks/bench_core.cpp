#include <benchmark/benchmark.h>

#include "isodual/constructions.hpp"

using namespace isodual;

namespace {

void BM_FactorXnMinus1(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(factor_xn_minus_1(n, 2));
}
BENCHMARK(BM_FactorXnMinus1)->Arg(31)->Arg(63)->Arg(127);

void BM_HenselLift(benchmark::State& state) {
    const RingSpec spec(2, static_cast<unsigned>(state.range(0)));
    const auto factors = factor_xn_minus_1(63, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hensel_lift_factorization(factors, 63, spec));
}
BENCHMARK(BM_HenselLift)->Arg(2)->Arg(4)->Arg(8);

void BM_Dual(benchmark::State& state) {
    const RingSpec z9(3, 2);
    const auto r = duadic_lift(23, z9, find_splittings(23, 3).at(0));
    const auto& code = r.at("E_1").code;
    for (auto _ : state) benchmark::DoNotOptimize(dual(code));
}
BENCHMARK(BM_Dual);

void BM_MinWeight(benchmark::State& state) {
    const RingSpec z9(3, 2);
    const auto code = split_cofactor_isodual(5, 1, z9).codes.at(0).code;
    WeightOptions o;
    o.strategy = state.range(0) == 0 ? WeightStrategy::direct : WeightStrategy::residue;
    o.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(min_hamming_weight(code, o));
}
BENCHMARK(BM_MinWeight)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
