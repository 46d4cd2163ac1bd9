#include <benchmark/benchmark.h>

#include <random>

#include "hallkit/ball.hpp"
#include "hallkit/group.hpp"

namespace {

hallkit::Word random_word(std::mt19937_64& g, int len) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> idx(-4, 4);
  std::uniform_int_distribution<int> exp(1, 3);
  std::uniform_int_distribution<int> sgn(0, 1);
  hallkit::Word w;
  for (int i = 0; i < len; ++i) {
    hallkit::WordLetter l;
    l.exp = exp(g) * (sgn(g) ? 1 : -1);
    switch (kind(g)) {
      case 0: l.kind = hallkit::WordLetter::Kind::T; break;
      case 1:
        l.kind = hallkit::WordLetter::Kind::A;
        l.index = idx(g);
        break;
      default:
        l.kind = hallkit::WordLetter::Kind::C;
        l.index = idx(g);
        break;
    }
    w.letters.push_back(l);
  }
  return w;
}

void BM_Multiply(benchmark::State& state) {
  auto spec = hallkit::make_free_center();
  std::mt19937_64 g(7);
  auto x = hallkit::evaluate(random_word(g, 24), spec);
  auto y = hallkit::evaluate(random_word(g, 24), spec);
  for (auto _ : state) benchmark::DoNotOptimize(hallkit::multiply(x, y));
}
BENCHMARK(BM_Multiply);

void BM_Evaluate(benchmark::State& state) {
  auto spec = hallkit::make_free_center();
  std::mt19937_64 g(8);
  auto w = random_word(g, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hallkit::evaluate(w, spec));
}
BENCHMARK(BM_Evaluate)->Arg(8)->Arg(32)->Arg(128);

void BM_Ball(benchmark::State& state) {
  auto spec = hallkit::make_free_center();
  for (auto _ : state)
    benchmark::DoNotOptimize(hallkit::enumerate_ball(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Ball)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
