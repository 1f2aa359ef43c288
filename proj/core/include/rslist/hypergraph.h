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

#ifndef RSLIST_HYPERGRAPH_H_
#define RSLIST_HYPERGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rslist/field.h"

namespace rslist {

// Bit j set <=> vertex j+1 is a member. Vertices are 0-based in code and
// 1-based in every external format.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxPartitionVertices = 12;
inline constexpr std::size_t kMaxOrientationEdges = 24;
inline constexpr std::size_t kMaxGzpMultiplicity = 20;

std::vector<int> Members(VertexSet s);
int Cardinality(VertexSet s);

// wt(e) = max(0, |e| - 1)
inline std::size_t Weight(VertexSet e) {
  const int c = Cardinality(e);
  return c > 1 ? static_cast<std::size_t>(c - 1) : 0;
}

// Labeled hypergraph on [t]; edge i is the i-th entry (empty edges allowed).
class Hypergraph {
 public:
  Hypergraph(int t, std::vector<VertexSet> edges);

  int t() const { return t_; }
  std::size_t n() const { return edges_.size(); }
  VertexSet edge(std::size_t i) const { return edges_[i]; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet vertices() const;

  // Hypergraph on J, relabelled to 1..|J| in increasing order, with edges
  // e_i ∩ J (labels preserved).
  Hypergraph Restrict(VertexSet J) const;

  // Drops the edges whose index is flagged.
  Hypergraph WithoutEdges(const std::vector<bool>& removed) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int t_;
  std::vector<VertexSet> edges_;
};

// e_i = { j : codewords[j][i] == y[i] }
Hypergraph AgreementHypergraph(std::span<const FieldElement> y,
                               const std::vector<std::vector<FieldElement>>& codewords);

struct EdgeWeights {
  std::vector<std::size_t> per_edge;
  std::size_t total = 0;
};

EdgeWeights EdgeWeight(const Hypergraph& h);

// sum_e wt(e ∩ J)
std::size_t SubsetWeight(const Hypergraph& h, VertexSet J);

class Partition {
 public:
  // Blocks must be nonempty, disjoint and cover [t].
  Partition(int t, std::vector<VertexSet> blocks);

  int t() const { return t_; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

 private:
  int t_;
  std::vector<VertexSet> blocks_;
};

// sum_e max(|P(e)| - 1, 0)
std::size_t CrossingWeight(const Hypergraph& h, const Partition& p);

// Calls visit(blocks) for every partition of [t], in restricted-growth-string
// order. Stops early when visit returns false. t <= 12.
void ForEachPartition(int t, const std::function<bool(std::span<const VertexSet>)>& visit);

struct WpcResult {
  bool connected = false;
  std::optional<Partition> witness;  // violating partition when not connected
};

// k-weak-partition-connectivity by enumerating all partitions; t <= 12.
WpcResult CheckWeakPartitionConnectivity(const Hypergraph& h, std::size_t k);

inline bool IsWeaklyPartitionConnected(const Hypergraph& h, std::size_t k) {
  return CheckWeakPartitionConnectivity(h, k).connected;
}

// Smallest (by size, then lexicographically) J with |J| >= 2 and
// sum_e wt(e ∩ J) >= (|J| - 1) k in the agreement hypergraph of
// (y, codewords). Such a J is inclusion-minimal, so the agreement hypergraph
// restricted to J is k-weakly-partition-connected.
std::optional<VertexSet> ExtractMinimalSubset(
    std::span<const FieldElement> y, const std::vector<std::vector<FieldElement>>& codewords,
    std::size_t k);

// A head for every nonempty edge (heads[i] == -1 for empty edges) and a root.
struct Orientation {
  int root = 0;
  std::vector<int> heads;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Edge-disjoint directed hyperpaths from `from` to `to`, capped at `limit`.
// Each directed hyperedge is a capacity-1 node fed by its tails and draining
// into its head.
int HyperpathFlow(const Hypergraph& h, const Orientation& o, int from, int to, int limit);

bool VerifyOrientation(const Hypergraph& h, const Orientation& o, std::size_t k);

// Searches roots and head assignments; nullopt only after exhausting both.
std::optional<Orientation> FindOrientation(const Hypergraph& h, std::size_t k);

struct ZeroPatternEntry {
  std::uint64_t set = 0;  // bit i <=> coordinate i+1
  std::size_t multiplicity = 0;
  int vertex = -1;  // source vertex, -1 for padding rows

  friend bool operator==(const ZeroPatternEntry&, const ZeroPatternEntry&) = default;
};

// Multiset of subsets of [n] (n <= 64).
struct ZeroPattern {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<ZeroPatternEntry> entries;

  std::size_t total_multiplicity() const;
  // One set per row, in entry order.
  std::vector<std::uint64_t> rows() const;
};

// delta_j copies of S_j = { i : j not in e_i }, with delta_j = indeg(j) for
// j != root and delta_root = indeg(root) - k. Empty edges have no head, so
// the pattern is padded with that many copies of the empty set to reach n - k
// rows.
ZeroPattern GzpFromOrientation(const Hypergraph& h, const Orientation& o, std::size_t k);

// |∩_{l in K} S_l| <= n - k - |K| for every nonempty sub-multiset K.
bool VerifyGzp(const ZeroPattern& zp);

}  // namespace rslist

#endif  // RSLIST_HYPERGRAPH_H_
