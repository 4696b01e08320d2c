#include <benchmark/benchmark.h>

#include <random>

#include "stackyaut/normal_form.hpp"
#include "stackyaut/stacky_fan.hpp"
#include "stackyaut/weighted.hpp"

namespace {

using namespace stackyaut;

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void BM_snf(benchmark::State& state) {
    std::mt19937 rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 32; ++i) inputs.push_back(random_matrix(rng, n, n, 9));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(snf(inputs[k++ % inputs.size()]));
    }
}
BENCHMARK(BM_snf)->Arg(4)->Arg(8)->Arg(12);

void BM_wps_pipeline(benchmark::State& state) {
    IntVector q{4, 6, 8};
    for (auto _ : state) benchmark::DoNotOptimize(verify_weighted_stack(q));
}
BENCHMARK(BM_wps_pipeline);

void BM_symmetry_search(benchmark::State& state) {
    StackyFan p2 = build_stacky_fan(IntVector{1, 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(find_symmetries(p2));
}
BENCHMARK(BM_symmetry_search);

}  // namespace

BENCHMARK_MAIN();
