#include <benchmark/benchmark.h>

#include "lawvere/gen.hpp"
#include "lawvere/karoubi.hpp"
#include "lawvere/model.hpp"
#include "lawvere/presheaf.hpp"

using namespace lawvere;

namespace {

WeightedGraph dense_graph(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  WeightedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.objects.push_back("o" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rng.coin()) {
        g.edges.push_back({i, j, ExtNN::fraction(1 + rng.below(16), 1 + rng.below(8))});
      }
    }
  }
  return g;
}

void BM_closure(benchmark::State& state) {
  WeightedGraph g = dense_graph(state.range(0), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(g));
  }
}
BENCHMARK(BM_closure)->Arg(8)->Arg(16)->Arg(32);

void BM_classify_metric(benchmark::State& state) {
  Rng rng(7);
  SpaceMap f = random_map(rng, static_cast<int>(state.range(0)), false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(f, ModelId::metric));
  }
}
BENCHMARK(BM_classify_metric)->Arg(6)->Arg(12);

void BM_factorize_m5(benchmark::State& state) {
  Rng rng(11);
  SpaceMap f = random_map(rng, static_cast<int>(state.range(0)), true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(f, ModelId::cauchy_metric, FactorAxiom::m5));
  }
}
BENCHMARK(BM_factorize_m5)->Arg(6)->Arg(10);

void BM_yoneda_distance(benchmark::State& state) {
  Rng rng(13);
  Space s = random_space(rng, static_cast<int>(state.range(0)), true);
  Presheaf a = yoneda(s, 0);
  Presheaf b = yoneda(s, s.size() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(presheaf_dist(a, b));
  }
}
BENCHMARK(BM_yoneda_distance)->Arg(8)->Arg(16);

void BM_envelope(benchmark::State& state) {
  const FinCat& c = split_cat();
  for (auto _ : state) {
    benchmark::DoNotOptimize(envelope(c));
  }
}
BENCHMARK(BM_envelope);

void BM_iota_seq_rlp(benchmark::State& state) {
  Rng rng(17);
  SpaceMap f = random_map(rng, 4, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlp_iota_seq_search(f, state.range(0)));
  }
}
BENCHMARK(BM_iota_seq_rlp)->Arg(3)->Arg(5);

void BM_axiom_case(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms(ModelId::metric, 1, 5, 5));
  }
}
BENCHMARK(BM_axiom_case);

}  // namespace

BENCHMARK_MAIN();
