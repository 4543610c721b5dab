#include <benchmark/benchmark.h>

#include <random>

#include "bsdh/character.hpp"
#include "bsdh/picard.hpp"
#include "bsdh/root_system.hpp"
#include "bsdh/weyl.hpp"

using namespace bsdh;

static void BM_ReducedWordsA3(benchmark::State& state) {
  RootSystem rs(DynkinType::parse("A3"));
  WeylElement w0 = longest_element(rs);
  for (auto _ : state) {
    auto words = all_reduced_words(rs, w0);
    benchmark::DoNotOptimize(words);
  }
}
BENCHMARK(BM_ReducedWordsA3);

static void BM_ReducedWordsA4(benchmark::State& state) {
  RootSystem rs(DynkinType::parse("A4"));
  WeylElement w0 = longest_element(rs);
  for (auto _ : state) {
    auto words = all_reduced_words(rs, w0);
    benchmark::DoNotOptimize(words);
  }
}
BENCHMARK(BM_ReducedWordsA4);

static void BM_MVector(benchmark::State& state) {
  RootSystem rs(DynkinType::parse("D4"));
  std::mt19937 rng(7);
  Word word;
  do {
    word = random_reduced_word(rs, rng);
  } while (word.size() < 8);
  for (auto _ : state) {
    PicardClass m = anticanonical_o_coeffs(rs, word);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MVector);

static void BM_BasisRoundTrip(benchmark::State& state) {
  RootSystem rs(DynkinType::parse("B3"));
  WeylElement w0 = longest_element(rs);
  Word word = w0.canonical_word;
  PicardClass o{Basis::O, std::vector<long long>(word.letters.size(), 3), word};
  for (auto _ : state) {
    PicardClass back = x_to_o(rs, word, o_to_x(rs, word, o));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_BasisRoundTrip);

static void BM_CharacterA3(benchmark::State& state) {
  RootSystem rs(DynkinType::parse("A3"));
  Word word = longest_element(rs).canonical_word;
  for (auto _ : state) {
    Character chi = anticanonical_character(rs, word);
    benchmark::DoNotOptimize(chi);
  }
}
BENCHMARK(BM_CharacterA3);

static void BM_CoxeterCensusF4(benchmark::State& state) {
  RootSystem rs(DynkinType::parse("F4"));
  for (auto _ : state) {
    auto census = coxeter_census(rs);
    benchmark::DoNotOptimize(census);
  }
}
BENCHMARK(BM_CoxeterCensusF4);

BENCHMARK_MAIN();
