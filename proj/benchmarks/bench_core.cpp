#include <benchmark/benchmark.h>

#include "muinv/envelope.hpp"
#include "muinv/expr.hpp"
#include "muinv/hilton.hpp"
#include "muinv/hopf.hpp"
#include "muinv/normalize.hpp"
#include "muinv/transform.hpp"

using namespace muinv;

namespace {

void BM_Normalize(benchmark::State& state)
{
    WedgeSignature sig(2, {2, 3, 4});
    lie::LieElement x = lie::parse_lie("[[[i1,i0],[i2,i0]],[[i0,i0],[i0,i3]]]", sig);
    for (auto _ : state)
        benchmark::DoNotOptimize(lie::normalize(x, sig));
}
BENCHMARK(BM_Normalize);

void BM_EnvelopeExpand(benchmark::State& state)
{
    WedgeSignature sig(2, {2, 3, 4});
    lie::LieElement x = lie::parse_lie("[[[i1,i0],[i2,i0]],[[i0,i0],[i0,i3]]]", sig);
    for (auto _ : state)
        benchmark::DoNotOptimize(lie::envelope_expand(x));
}
BENCHMARK(BM_EnvelopeExpand);

void BM_EnumerateBasic(benchmark::State& state)
{
    WedgeSignature sig(2, {2, 2, 2, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(hilton::enumerate_basic(sig, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateBasic)->Arg(6)->Arg(8);

void BM_BasisMatrix(benchmark::State& state)
{
    WedgeSignature sig(2, {2, 3, 4});
    for (auto _ : state)
        benchmark::DoNotOptimize(hopf::basis_matrix_D(sig, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BasisMatrix)->Arg(1)->Arg(2)->Arg(3);

void BM_DetM(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(transform::det_M(static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_DetM)->Arg(8)->Arg(12);

void BM_InvertDprime(benchmark::State& state)
{
    const AbelianGroup z = AbelianGroup::make(1, {});
    transform::Box box{{{-2, 2}, {-2, 2}}};
    transform::SupportedSequence a;
    a.arity = 2;
    a.group = z;
    a.window = box;
    int fill = 0;
    for (long long g1 = -2; g1 <= 2; ++g1)
        for (long long g2 = -2; g2 <= 2; ++g2)
            a.insert({g1, g2}, GroupElement{{Int(++fill % 7 - 3)}, {}});
    auto values = transform::forward_Dprime(a, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(transform::invert_Dprime(values, box, z));
}
BENCHMARK(BM_InvertDprime);

void BM_EnumerateMonotone(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hopf::enumerate_monotone(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_EnumerateMonotone)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
