#include <benchmark/benchmark.h>

#include <vector>

#include "tenstruct/cauchy.hpp"
#include "tenstruct/cauchy_hankel.hpp"
#include "tenstruct/hankel.hpp"
#include "tenstruct/spectra.hpp"
#include "tenstruct/unipoly.hpp"

using namespace tenstruct;

namespace {

std::vector<double> ramp(int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[i] = 1.0 / (i + 1.0);
    return x;
}

void BM_Apply(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const auto t = cauchy::dense(cauchy::build(ramp(n), m));
    const auto x = ramp(n);
    for (auto _ : state) benchmark::DoNotOptimize(tenstruct::apply(t, x));
    state.counters["entries"] = static_cast<double>(t.size());
}
BENCHMARK(BM_Apply)->Args({4, 3})->Args({4, 8})->Args({6, 8})->Args({4, 16});

void BM_Contract(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const auto t = cauchy::dense(cauchy::build(ramp(n), m));
    const auto x = ramp(n);
    for (auto _ : state) benchmark::DoNotOptimize(contract(t, x));
}
BENCHMARK(BM_Contract)->Args({4, 3})->Args({4, 8})->Args({6, 8});

void BM_RealRoots(benchmark::State& state) {
    std::vector<double> c{1.0};
    for (int r = 1; r <= state.range(0); ++r) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= (r - 0.5 * static_cast<double>(state.range(0))) * c[k];
        }
        c = next;
    }
    const UnivariatePoly p(c);
    for (auto _ : state) benchmark::DoNotOptimize(real_roots(p));
}
BENCHMARK(BM_RealRoots)->Arg(4)->Arg(8)->Arg(12);

void BM_PronyMinimal(benchmark::State& state) {
    std::vector<VandermondeTerm> terms;
    for (int k = 0; k < state.range(0); ++k) terms.push_back({1.0 + k, -0.5 + 0.25 * k});
    const auto spec = hankel::vandermonde_compose(VandermondeDecomposition(terms, 3), 4);
    for (auto _ : state) benchmark::DoNotOptimize(hankel::vandermonde_decompose_minimal(spec));
}
BENCHMARK(BM_PronyMinimal)->Arg(1)->Arg(2)->Arg(4);

void BM_VandermondePsd(benchmark::State& state) {
    const auto spec = hankel::build({1, -1, 1, 0, 0, 0, 0, 0, 0}, 4, 3);
    for (auto _ : state) benchmark::DoNotOptimize(hankel::is_vandermonde_psd(spec));
}
BENCHMARK(BM_VandermondePsd);

void BM_Nqz(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto t = cauchy::dense(cauchy::build(ramp(n), 4));
    for (auto _ : state) benchmark::DoNotOptimize(h_eigen_nqz(t));
}
BENCHMARK(BM_Nqz)->Arg(3)->Arg(6);

void BM_Sshopm(benchmark::State& state) {
    const auto t = cauchy_hankel::dense(cauchy_hankel::build(1.0, 1.0, 4, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(z_eigen_sshopm(t));
}
BENCHMARK(BM_Sshopm)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PsdProbe(benchmark::State& state) {
    const auto t = cauchy::dense(cauchy::build({1.0, 2.0, 3.0}, 4));
    for (auto _ : state) benchmark::DoNotOptimize(psd_probe(t, static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_PsdProbe)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
