#include <benchmark/benchmark.h>

#include "rsperm/permgroup.hpp"
#include "rsperm/random.hpp"

using namespace rsperm;

namespace {

EvaluationSet full_field(std::uint32_t q) {
    const Field F = Field::of_order(q);
    return EvaluationSet(F, F.elements());
}

void run_search(benchmark::State& state, SearchMode mode) {
    const auto A = full_field(static_cast<std::uint32_t>(state.range(0)));
    const auto C = rs_code(A, static_cast<std::size_t>(state.range(1)));
    SearchOptions o;
    o.mode = mode;
    for (auto _ : state) benchmark::DoNotOptimize(permutation_group(C, o));
}

void BM_ExhaustiveSearch(benchmark::State& state) { run_search(state, SearchMode::exhaustive); }
void BM_BacktrackSearch(benchmark::State& state) { run_search(state, SearchMode::backtrack); }

void BM_Rref(benchmark::State& state) {
    Rng rng(1);
    const Field F = Field::of_order(16);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Vector> rows(n / 2);
    for (auto& row : rows)
        for (std::size_t i = 0; i < n; ++i) row.push_back(random_element(F, rng));
    const GeneratorMatrix G(F, n, rows);
    for (auto _ : state) benchmark::DoNotOptimize(rref(G));
}

void BM_AffineGroup(benchmark::State& state) {
    const auto A = full_field(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(affine_group(A));
}

void BM_ComposeModA(benchmark::State& state) {
    Rng rng(2);
    const auto A = full_field(13);
    const auto p1 = perm_to_poly(random_permutation(13, rng), A);
    const auto p2 = perm_to_poly(random_permutation(13, rng), A);
    for (auto _ : state) benchmark::DoNotOptimize(compose_mod_A(p1, p2, A));
}

}  // namespace

BENCHMARK(BM_ExhaustiveSearch)->Args({7, 3})->Args({8, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BacktrackSearch)->Args({7, 3})->Args({8, 3})->Args({9, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref)->Arg(8)->Arg(16);
BENCHMARK(BM_AffineGroup)->Arg(16)->Arg(64);
BENCHMARK(BM_ComposeModA);
BENCHMARK_MAIN();
