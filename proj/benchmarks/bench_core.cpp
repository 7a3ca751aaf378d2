#include <benchmark/benchmark.h>

#include "specsketch/eigensolver.hpp"
#include "specsketch/rng.hpp"
#include "specsketch/sketch.hpp"
#include "specsketch/sparse_embedding.hpp"
#include "specsketch/spectrum_spec.hpp"
#include "specsketch/wishart.hpp"

namespace {

using namespace specsketch;

SymmetricMatrix power_law_matrix(std::size_t d, std::uint64_t seed) {
    SpectrumSpec spec;
    spec.kind = SpectrumKind::PowerLaw;
    spec.dim = d;
    return generate_matrix(spec, seed);
}

SymmetricMatrix sparse_power_law(std::size_t d, std::size_t block, std::uint64_t seed) {
    SpectrumSpec spec;
    spec.kind = SpectrumKind::PowerLaw;
    spec.dim = d;
    spec.rotation = RotationKind::Block;
    spec.block_size = block;
    return generate_matrix(spec, seed);
}

void BM_EstimateSpectrum(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    const std::size_t k = static_cast<std::size_t>(state.range(1));
    const SymmetricMatrix a = power_law_matrix(d, 1);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_spectrum(a, k, seed++));
    }
}
BENCHMARK(BM_EstimateSpectrum)
    ->Args({256, 64})
    ->Args({256, 256})
    ->Args({1024, 64})
    ->Args({1024, 256});

void BM_SymEigenvalues(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const SymmetricMatrix a = power_law_matrix(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sym_eigenvalues(a));
    }
}
BENCHMARK(BM_SymEigenvalues)->Arg(64)->Arg(256)->Arg(512);

void BM_SparseEmbeddingApply(benchmark::State& state) {
    const std::size_t d = 4096;
    const std::size_t block = static_cast<std::size_t>(state.range(0));
    const SymmetricMatrix a = sparse_power_law(d, block, 3);
    const auto e = sample_sparse_embedding(512, d, 4, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_sparse_embedding(e, a, EmbeddingSide::Left));
    }
    state.counters["nnz"] = static_cast<double>(a.nnz());
}
BENCHMARK(BM_SparseEmbeddingApply)->Arg(8)->Arg(12)->Arg(17)->Arg(24);

void BM_WishartSample(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const std::size_t r = static_cast<std::size_t>(state.range(1));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_wishart(n, r, seed++));
    }
}
BENCHMARK(BM_WishartSample)->Args({30, 300})->Args({300, 300});

}  // namespace

BENCHMARK_MAIN();
