#include <benchmark/benchmark.h>

#include <random>

#include "lsb/breadth.hpp"
#include "lsb/catalog.hpp"
#include "lsb/invariants.hpp"
#include "lsb/lsa_io.hpp"
#include "lsb/search.hpp"

using namespace lsb;

namespace {

Matrix random_matrix(Field f, std::mt19937_64& rng, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = f.from_int(static_cast<std::int64_t>(rng() % f.modulus()));
  return m;
}

void BM_RankF5(benchmark::State& state) {
  Field f = Field::prime(5);
  std::mt19937_64 rng(1);
  std::vector<Matrix> mats;
  for (int i = 0; i < 64; ++i) mats.push_back(random_matrix(f, rng, 6));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(mats[i++ % mats.size()]));
  }
}
BENCHMARK(BM_RankF5);

void BM_ElementBreadth(benchmark::State& state) {
  Field f = Field::prime(5);
  LieSuperAlgebra L = heisenberg_even(f, 2, 2, 0, 0);
  Element x = L.zero_element();
  for (int c = 0; c < L.n(); ++c) x[c] = f.from_int(c + 1);
  for (auto _ : state) benchmark::DoNotOptimize(element_breadth(L, x));
}
BENCHMARK(BM_ElementBreadth);

void BM_OracleHe22(benchmark::State& state) {
  Field f = Field::prime(5);
  LieSuperAlgebra L = heisenberg_even(f, 2, 2, 0, 0);  // 5^7 elements, 19531 classes
  OracleOptions opt;
  opt.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(breadth_bruteforce(L, opt));
}
BENCHMARK(BM_OracleHe22)->Arg(1)->Arg(2);

void BM_MaximalAbelianHe22(benchmark::State& state) {
  Field f = Field::prime(5);
  LieSuperAlgebra L = heisenberg_even(f, 2, 2, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_abelian_ideals(L));
}
BENCHMARK(BM_MaximalAbelianHe22);

void BM_InhabitationSearchF3(benchmark::State& state) {
  Field f = Field::prime(3);
  SearchConstraints c;
  c.derived = {1, 2};
  c.quotient = {1, 2};
  c.odd_square = true;
  c.max_total = 6;
  for (auto _ : state) benchmark::DoNotOptimize(inhabitation_search(f, c));
}
BENCHMARK(BM_InhabitationSearchF3);

void BM_ParseSerialize(benchmark::State& state) {
  Field f = Field::prime(5);
  std::string text = serialize_lsa(heisenberg_even(f, 2, 2, 0, 0));
  for (auto _ : state) benchmark::DoNotOptimize(parse_lsa(text));
}
BENCHMARK(BM_ParseSerialize);

}  // namespace

BENCHMARK_MAIN();
