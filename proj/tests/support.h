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

// Shared helpers for the test binaries. The oracles here deliberately avoid
// the library's linear algebra and search code.

#ifndef RSLIST_TESTS_SUPPORT_H_
#define RSLIST_TESTS_SUPPORT_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "rslist/field.h"
#include "rslist/hypergraph.h"
#include "rslist/rim.h"
#include "rslist/rng.h"

namespace rslist::testing {

// Edges given as 1-based vertex lists.
inline Hypergraph MakeHypergraph(int t, std::initializer_list<std::initializer_list<int>> edges) {
  std::vector<VertexSet> sets;
  for (const auto& e : edges) {
    VertexSet s = 0;
    for (int v : e) s |= VertexSet{1} << (v - 1);
    sets.push_back(s);
  }
  return Hypergraph(t, sets);
}

// Rank by textbook elimination with field division.
inline std::size_t NaiveRank(const Field& f, std::vector<std::vector<FieldElement>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c].value == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const FieldElement inv = f.Inv(a[rank][c]);
    for (auto& x : a[rank]) x = f.Mul(x, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c].value == 0) continue;
      const FieldElement m = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.Sub(a[i][j], f.Mul(m, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// Row of the intersection matrix built straight from the definition:
// (1, a, .., a^{k-1}) in block `plus`, its negation in block `minus`.
inline std::vector<FieldElement> DefinitionRow(const Field& f, int t, std::size_t k,
                                               const RimRow& row, FieldElement a) {
  std::vector<FieldElement> out(static_cast<std::size_t>(t - 1) * k, Field::Zero());
  FieldElement x = Field::One();
  for (std::size_t d = 0; d < k; ++d) {
    out[row.plus * k + d] = x;
    if (row.minus >= 0) out[row.minus * k + d] = f.Neg(x);
    x = f.Mul(x, a);
  }
  return out;
}

inline std::vector<std::vector<FieldElement>> EvaluateRows(const Field& f, int t, std::size_t k,
                                                           const std::vector<RimRow>& rows,
                                                           const std::vector<FieldElement>& a) {
  std::vector<std::vector<FieldElement>> m;
  for (const RimRow& row : rows) m.push_back(DefinitionRow(f, t, k, row, a[row.edge]));
  return m;
}

// Generic rank over F_q(X_{prefix+1}..X_n) with the first variables fixed,
// as the maximum rank over all points of F_q for the free ones. Exact when
// every variable has degree < q in every minor, which holds for
// q > (t-1)(k-1).
inline std::size_t BruteForceGenericRank(const Field& f, int t, std::size_t k, std::size_t n,
                                         const std::vector<RimRow>& rows,
                                         const std::vector<FieldElement>& prefix = {}) {
  std::vector<FieldElement> a(n, Field::Zero());
  std::copy(prefix.begin(), prefix.end(), a.begin());
  const std::size_t full = std::min(rows.size(), static_cast<std::size_t>(t - 1) * k);
  std::size_t best = 0;
  while (true) {
    best = std::max(best, NaiveRank(f, EvaluateRows(f, t, k, rows, a)));
    if (best == full) return best;
    std::size_t i = prefix.size();
    while (i < n && a[i].value + 1 == f.order()) a[i++].value = 0;
    if (i == n) return best;
    ++a[i].value;
  }
}

// Set partitions of {0..t-1} by recursive block insertion.
inline void NaivePartitions(int t, const std::function<void(const std::vector<VertexSet>&)>& f) {
  std::vector<VertexSet> blocks;
  std::function<void(int)> rec = [&](int v) {
    if (v == t) {
      f(blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= VertexSet{1} << v;
      rec(v + 1);
      blocks[i] &= ~(VertexSet{1} << v);
    }
    blocks.push_back(VertexSet{1} << v);
    rec(v + 1);
    blocks.pop_back();
  };
  rec(0);
}

inline bool NaiveWpc(const Hypergraph& h, std::size_t k) {
  bool ok = true;
  NaivePartitions(h.t(), [&](const std::vector<VertexSet>& blocks) {
    std::size_t crossing = 0;
    for (VertexSet e : h.edges()) {
      std::size_t parts = 0;
      for (VertexSet b : blocks) parts += (e & b) != 0;
      crossing += parts > 0 ? parts - 1 : 0;
    }
    if (crossing < k * (blocks.size() - 1)) ok = false;
  });
  return ok;
}

// Edges of size 2..t, larger ones with probability `big`.
inline Hypergraph RandomHypergraph(int t, std::size_t n, Rng& rng, double big = 0.5) {
  std::vector<VertexSet> edges;
  const VertexSet all = (VertexSet{1} << t) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet e;
    if (rng.Uniform() < big) {
      do {
        e = static_cast<VertexSet>(rng.Below(all + 1));
      } while (__builtin_popcount(e) < 3 && t >= 3);
    } else {
      do {
        e = static_cast<VertexSet>(rng.Below(all + 1));
      } while (__builtin_popcount(e) != 2);
    }
    edges.push_back(e);
  }
  return Hypergraph(t, edges);
}

// Rejection-samples a k-weakly-partition-connected hypergraph.
inline Hypergraph RandomWpcHypergraph(int t, std::size_t n, std::size_t k, Rng& rng,
                                      double big = 0.5) {
  while (true) {
    Hypergraph h = RandomHypergraph(t, n, rng, big);
    if (IsWeaklyPartitionConnected(h, k)) return h;
  }
}

inline std::vector<std::size_t> Primes(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t p = std::max<std::size_t>(lo, 2); p <= hi; ++p) {
    bool prime = true;
    for (std::size_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

}  // namespace rslist::testing

#endif  // RSLIST_TESTS_SUPPORT_H_
