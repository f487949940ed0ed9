#include <benchmark/benchmark.h>

#include "gelfand/chartab.hpp"
#include "gelfand/cosets.hpp"
#include "gelfand/group.hpp"
#include "gelfand/symsolve.hpp"

namespace gelfand {
namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<int>(state.range(0)));
  const auto q = static_cast<std::uint32_t>(f->order());
  for (auto _ : state) {
    Scalar acc{1};
    for (std::uint32_t a = 1; a < q; ++a) {
      for (std::uint32_t b = 1; b < q; ++b) acc = f->add(acc, f->mul(Scalar{a}, Scalar{b}));
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(5)->Arg(16)->Arg(25);

void BM_EnumerateGL(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_gl(static_cast<int>(state.range(0)), f));
}
BENCHMARK(BM_EnumerateGL)->Args({2, 5})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_EnumerateO(benchmark::State& state) {
  const auto f = Field::of_order(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_o(static_cast<int>(state.range(0)), f));
}
BENCHMARK(BM_EnumerateO)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DoubleCosets(benchmark::State& state) {
  const auto f = Field::of_order(3);
  const auto emb = embed_standard(enumerate_gl(2, f), enumerate_gl(3, f));
  const bool mod_center = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(involution_action(double_cosets(emb.big, emb, mod_center)));
}
BENCHMARK(BM_DoubleCosets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConjugacyClasses(benchmark::State& state) {
  const auto g = enumerate_gl(3, Field::of_order(3));
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(g));
}
BENCHMARK(BM_ConjugacyClasses)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State& state) {
  const auto g = state.range(0) == 0 ? enumerate_gl(2, Field::of_order(5)) : enumerate_gl(3, Field::of_order(3));
  const auto classes = conjugacy_classes(g);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(classes, threads));
}
BENCHMARK(BM_CharacterTable)->Args({0, 1})->Args({1, 1})->Args({1, 0})->Unit(benchmark::kMillisecond);

void BM_SolveSymmetric(benchmark::State& state) {
  const auto f = Field::of_order(5);
  const int n = static_cast<int>(state.range(0));
  std::vector<Scalar> phi(n, Scalar{0});
  std::vector<Scalar> v(n, Scalar{0});
  phi[0] = Scalar{1};
  v[n - 1] = Scalar{3};
  phi[n - 1] = Scalar{2};
  const SymSolveInstance inst{f, phi, v};
  for (auto _ : state) benchmark::DoNotOptimize(solve_symmetric(inst));
}
BENCHMARK(BM_SolveSymmetric)->Arg(2)->Arg(8)->Arg(32);

}  // namespace
}  // namespace gelfand

BENCHMARK_MAIN();
