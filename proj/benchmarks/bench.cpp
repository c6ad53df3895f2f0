// Benchmarks for the hot paths: inverse Cartan table fill, quantum torus
// multiplication, KR q-characters, KL decomposition, and dictionary transport.

#include <benchmark/benchmark.h>

#include "qtb/ab_corr.hpp"
#include "qtb/qtchar.hpp"

using namespace qtb;

static void BM_InverseCartanFill(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CartanData cd = build_cartan(Kind::B, n);
    for (auto _ : state) {
        InverseQCartanTable tab(cd, 40 * n);
        benchmark::DoNotOptimize(tab.at(1, 1, -2));
    }
}
BENCHMARK(BM_InverseCartanFill)->Arg(2)->Arg(5)->Arg(8);

static void BM_TorusMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CartanData cd = build_cartan(Kind::B, n);
    const QCharEngine eng(cd, 60 * n);
    const TorusElement a = eng.ft_kr(1, 2, 0);
    const TorusElement b = eng.ft_kr(n, 2, 1);
    for (auto _ : state) {
        TorusElement p = eng.torus().mul(a, b);
        benchmark::DoNotOptimize(p);
    }
    state.counters["terms"] = static_cast<double>(a.size() * b.size());
}
BENCHMARK(BM_TorusMul)->Arg(2)->Arg(3);

static void BM_QCharKR(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CartanData cd = build_cartan(Kind::B, n);
    for (auto _ : state) {
        // fresh engine each iteration so the memo does not hide the work
        QCharEngine eng(cd, 60 * n);
        auto ch = eng.qchar_kr(1, 2, 0);
        benchmark::DoNotOptimize(ch);
    }
}
BENCHMARK(BM_QCharKR)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_KLDecompose(benchmark::State& state) {
    const int n = 2;
    const CartanData cd = build_cartan(Kind::B, n);
    const QCharEngine eng(cd, 60 * n);
    const int p = static_cast<int>(state.range(0));
    const YMonomial m = YMonomial::var(n, 0) * YMonomial::var(n, 2 * p);
    for (auto _ : state) {
        auto kl = eng.kl_decompose(m);
        benchmark::DoNotOptimize(kl);
    }
}
BENCHMARK(BM_KLDecompose)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_DictionaryTransport(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto dict = fundamental_dictionary(n, ABDirection::BtoA);
    for (auto _ : state) {
        for (const auto& [src, dst] : dict) {
            YMonomial back = transport(n, dst, ABDirection::AtoB);
            benchmark::DoNotOptimize(back);
        }
    }
    state.counters["vars"] = static_cast<double>(dict.size());
}
BENCHMARK(BM_DictionaryTransport)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
