#include <benchmark/benchmark.h>

#include "pisen/module.hpp"
#include "pisen/verify.hpp"

using namespace pisen;

namespace {

const PadicContext ctx{5, 24};

PhiNData single_chain(long d) {
    PhiNData data;
    data.dim = d;
    data.monodromy = RationalMatrix(d, d);
    for (long j = 0; j + 1 < d; ++j) data.monodromy.at(j + 1, j) = 1;
    for (long j = 0; j < d; ++j) data.weights.push_back(j);
    data.twists.assign(d, 0);
    return data;
}

void bm_build_from_phin(benchmark::State& state) {
    const PhiNData data = single_chain(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_from_phin(data, ctx));
}
BENCHMARK(bm_build_from_phin)->Arg(2)->Arg(4)->Arg(8);

void bm_mat_log(benchmark::State& state) {
    const long d = state.range(0);
    PadicMatrix a = PadicMatrix::identity(d, ctx.p);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            a.at(i, j) = a.at(i, j) +
                PadicScalar::from_integer(5 * ((i * 7 + j * 3) % 11 - 5), ctx);
    for (auto _ : state) benchmark::DoNotOptimize(mat_log(a));
}
BENCHMARK(bm_mat_log)->Arg(2)->Arg(4)->Arg(8);

void bm_scalar_log(benchmark::State& state) {
    const PadicScalar x = PadicScalar::from_integer(1 + 5 * 12345, ctx);
    for (auto _ : state) benchmark::DoNotOptimize(x.log());
}
BENCHMARK(bm_scalar_log);

void bm_full_verify(benchmark::State& state) {
    const PhiNData data = single_chain(6);
    const PiSenModule mod = build_from_phin(data, ctx);
    for (auto _ : state)
        benchmark::DoNotOptimize(full_report(mod, &data, 5, ctx));
}
BENCHMARK(bm_full_verify);

} // namespace

BENCHMARK_MAIN();
