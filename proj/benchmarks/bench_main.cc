// Copyright 2026 The rslist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "rslist/certify.h"
#include "rslist/field.h"
#include "rslist/hypergraph.h"
#include "rslist/rim.h"
#include "rslist/rng.h"

namespace rslist {
namespace {

void BM_FieldMul(benchmark::State& state) {
  const Field field = Field::Parse(state.range(0) == 0 ? "257" : "2^8/1,0,0,0,1,1,1,0,1");
  Rng rng(7);
  std::vector<FieldElement> xs(1024);
  for (auto& x : xs) x = field.Element(rng() % field.order());
  FieldElement acc = Field::One();
  for (auto _ : state) {
    for (const auto& x : xs) acc = field.Mul(acc, x.value == 0 ? Field::One() : x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Arg(0)->Arg(1);

Hypergraph RandomHypergraph(int t, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet e = 0;
    while (Cardinality(e) < 2) e = static_cast<VertexSet>(rng() % (1u << t));
    edges.push_back(e);
  }
  return Hypergraph(t, edges);
}

void BM_PitRank(benchmark::State& state) {
  const Field field = Field::Parse("257");
  const Hypergraph h = RandomHypergraph(4, static_cast<std::size_t>(state.range(0)), 3);
  const SymbolicRim m = BuildRim(h, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SymbolicRank(field, m.t, m.k, m.n, m.rows, {}, 11));
  }
}
BENCHMARK(BM_PitRank)->Arg(8)->Arg(16)->Arg(32);

void BM_WpcCheck(benchmark::State& state) {
  const Hypergraph h = RandomHypergraph(static_cast<int>(state.range(0)), 24, 5);
  for (auto _ : state) benchmark::DoNotOptimize(IsWeaklyPartitionConnected(h, 2));
}
BENCHMARK(BM_WpcCheck)->Arg(4)->Arg(6)->Arg(8);

void BM_Certificate(benchmark::State& state) {
  const Field field = Field::Parse("65537");
  const Hypergraph h = TypeOrder(RandomHypergraph(3, 24, 9)).h;
  const std::size_t r = static_cast<std::size_t>(state.range(0));
  const MatrixSequenceBuilder builder(field, h, 2, r);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto alphas = SampleDistinctPoints(field, h.n(), ++seed);
    benchmark::DoNotOptimize(GetCertificate(builder, alphas, seed));
  }
}
BENCHMARK(BM_Certificate)->Arg(4)->Arg(8);

}  // namespace
}  // namespace rslist

BENCHMARK_MAIN();
