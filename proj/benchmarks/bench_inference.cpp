#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "sire/condag.hpp"
#include "sire/conminer.hpp"
#include "sire/lang.hpp"

namespace {

// Uniform random words over n symbols "s0".."s{n-1}".
sire::ExampleSet random_words(std::size_t n, std::size_t count, std::size_t length, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::vector<std::string>> words(count);
    for (auto& w : words)
        for (std::size_t i = 0; i < length; ++i)
            w.push_back("s" + std::to_string(pick(rng)));
    return sire::ExampleSet(words);
}

// Words that interleave k fixed chains, so the result has real structure.
sire::ExampleSet interleaved_words(std::size_t chains, std::size_t per_chain, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::string>> words;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::size_t> next(chains, 0);
        std::vector<std::string> w;
        std::size_t left = chains * per_chain;
        while (left > 0) {
            std::size_t c = std::uniform_int_distribution<std::size_t>(0, chains - 1)(rng);
            if (next[c] == per_chain)
                continue;
            w.push_back("c" + std::to_string(c) + "_" + std::to_string(next[c]++));
            --left;
        }
        words.push_back(std::move(w));
    }
    return sire::ExampleSet(words);
}

void BM_ConDagRandom(benchmark::State& state)
{
    auto sample = random_words(50, static_cast<std::size_t>(state.range(0)), 40, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sire::con_dag(sample));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConDagRandom)->RangeMultiplier(2)->Range(25, 400)->Complexity()->Unit(benchmark::kMillisecond);

void BM_ConDagInterleaved(benchmark::State& state)
{
    auto sample = interleaved_words(5, 10, static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(sire::con_dag(sample));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConDagInterleaved)->RangeMultiplier(2)->Range(25, 400)->Complexity()->Unit(benchmark::kMillisecond);

void BM_ConMinerApprox(benchmark::State& state)
{
    auto sample = random_words(static_cast<std::size_t>(state.range(0)), 200, 40, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(sire::con_miner(sample, sire::MisMode::Approx));
}
BENCHMARK(BM_ConMinerApprox)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ConMinerExact(benchmark::State& state)
{
    auto sample = interleaved_words(static_cast<std::size_t>(state.range(0)), 3, 100, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(sire::con_miner(sample, sire::MisMode::Exact));
}
BENCHMARK(BM_ConMinerExact)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state)
{
    auto sample = interleaved_words(5, 10, 200, 5);
    sire::SireMatcher matcher(sire::con_dag(sample));
    std::vector<std::vector<std::string>> words;
    for (const auto& w : sample.words())
        words.push_back(sample.spell(w));
    for (auto _ : state)
        for (const auto& w : words)
            benchmark::DoNotOptimize(matcher.accepts(w));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_Membership);

} // namespace

BENCHMARK_MAIN();
