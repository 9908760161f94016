#include <benchmark/benchmark.h>

#include <random>

#include "torelli/derivations.hpp"
#include "torelli/fox.hpp"
#include "torelli/free_lie.hpp"
#include "torelli/linalg.hpp"
#include "torelli/resonance.hpp"
#include "torelli/word.hpp"

using namespace torelli;

namespace {

Word random_word(std::size_t rank, std::size_t length, std::mt19937_64& rng) {
  std::vector<int> letters;
  std::uniform_int_distribution<int> pick(1, static_cast<int>(rank));
  for (std::size_t k = 0; k < length; ++k) letters.push_back(rng() % 2 ? pick(rng) : -pick(rng));
  return reduce(rank, letters);
}

// Nested commutator of weight `depth`, so the class lands in a known degree.
Word nested_commutator(std::size_t rank, std::size_t depth) {
  Word w = reduce(rank, {1});
  for (std::size_t k = 1; k < depth; ++k) w = commutator(w, reduce(rank, {static_cast<int>(k % rank) + 1}));
  return w;
}

void BM_MagnusClass(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const Word w = nested_commutator(3, s);
  for (auto _ : state) benchmark::DoNotOptimize(magnus_class(w, s));
}
BENCHMARK(BM_MagnusClass)->DenseRange(2, 5);

void BM_JohnsonImage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Endo a = commutator(magnus_gen(MagnusGenerator::conj(1, 2), n), magnus_gen(MagnusGenerator::conj(2, 3), n));
  for (auto _ : state) benchmark::DoNotOptimize(johnson_image(a, 2));
}
BENCHMARK(BM_JohnsonImage)->DenseRange(3, 5);

void BM_PettetRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pettet_rank(n));
}
BENCHMARK(BM_PettetRank)->DenseRange(3, 4);

void BM_SmithAd(benchmark::State& state) {
  const auto m = ad_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::smith_normal_form(m));
}
BENCHMARK(BM_SmithAd)->DenseRange(3, 5);

void BM_AlexanderPolynomial(benchmark::State& state) {
  std::mt19937_64 rng(7);
  Presentation p;
  p.generators = 3;
  for (int r = 0; r < state.range(0); ++r) p.relators.push_back(random_word(3, 12, rng));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(p));
}
BENCHMARK(BM_AlexanderPolynomial)->DenseRange(1, 2);

void BM_OanCupData(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oan_cup_data(n));
}
BENCHMARK(BM_OanCupData)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

void BM_BinfGradedOA4(benchmark::State& state) {
  const auto pres = binf_from_cup(oan_cup_data(4).cup);
  const auto q = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binf_graded_dim(pres, q));
}
BENCHMARK(BM_BinfGradedOA4)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
