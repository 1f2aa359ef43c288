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

#include "rslist/hypergraph.h"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "rslist/flow.h"

namespace rslist {

std::vector<int> Members(VertexSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

int Cardinality(VertexSet s) { return std::popcount(s); }

namespace {

VertexSet FullSet(int t) {
  return t >= 32 ? ~VertexSet{0} : (VertexSet{1} << t) - 1;
}

// Compress the members of `s` that lie in J onto 0..|J|-1.
VertexSet Compress(VertexSet s, VertexSet J) {
  VertexSet out = 0;
  int pos = 0;
  for (int v : Members(J)) {
    if (s & (VertexSet{1} << v)) out |= VertexSet{1} << pos;
    ++pos;
  }
  return out;
}

}  // namespace

Hypergraph::Hypergraph(int t, std::vector<VertexSet> edges) : t_(t), edges_(std::move(edges)) {
  if (t < 1 || t > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices, "vertex count must be in [1, 32]");
  }
  const VertexSet all = FullSet(t);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if ((edges_[i] & ~all) != 0) {
      throw Error(ErrorCode::kDimensionError,
                  "edge " + std::to_string(i + 1) + " is not a subset of [" + std::to_string(t) +
                      "]");
    }
  }
}

VertexSet Hypergraph::vertices() const { return FullSet(t_); }

Hypergraph Hypergraph::Restrict(VertexSet J) const {
  J &= vertices();
  if (J == 0) throw Error(ErrorCode::kDegenerateHypergraph, "restriction to an empty vertex set");
  std::vector<VertexSet> edges;
  edges.reserve(edges_.size());
  for (VertexSet e : edges_) edges.push_back(Compress(e, J));
  return Hypergraph(Cardinality(J), std::move(edges));
}

Hypergraph Hypergraph::WithoutEdges(const std::vector<bool>& removed) const {
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i >= removed.size() || !removed[i]) edges.push_back(edges_[i]);
  }
  return Hypergraph(t_, std::move(edges));
}

Hypergraph AgreementHypergraph(std::span<const FieldElement> y,
                               const std::vector<std::vector<FieldElement>>& codewords) {
  const int t = static_cast<int>(codewords.size());
  if (t < 1 || t > kMaxVertices) {
    throw Error(ErrorCode::kTooManyVertices, "need between 1 and 32 codewords");
  }
  std::vector<VertexSet> edges(y.size(), 0);
  for (int j = 0; j < t; ++j) {
    if (codewords[j].size() != y.size()) {
      throw Error(ErrorCode::kDimensionError, "codeword length differs from received word");
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (codewords[j][i] == y[i]) edges[i] |= VertexSet{1} << j;
    }
  }
  return Hypergraph(t, std::move(edges));
}

EdgeWeights EdgeWeight(const Hypergraph& h) {
  EdgeWeights w;
  w.per_edge.reserve(h.n());
  for (VertexSet e : h.edges()) {
    w.per_edge.push_back(Weight(e));
    w.total += w.per_edge.back();
  }
  return w;
}

std::size_t SubsetWeight(const Hypergraph& h, VertexSet J) {
  std::size_t total = 0;
  for (VertexSet e : h.edges()) total += Weight(e & J);
  return total;
}

Partition::Partition(int t, std::vector<VertexSet> blocks) : t_(t), blocks_(std::move(blocks)) {
  VertexSet seen = 0;
  for (VertexSet b : blocks_) {
    if (b == 0) throw Error(ErrorCode::kInvalidParameters, "partition block is empty");
    if (b & seen) throw Error(ErrorCode::kInvalidParameters, "partition blocks overlap");
    seen |= b;
  }
  if (seen != FullSet(t)) {
    throw Error(ErrorCode::kInvalidParameters, "partition blocks do not cover the vertex set");
  }
}

std::size_t CrossingWeight(const Hypergraph& h, const Partition& p) {
  std::size_t total = 0;
  for (VertexSet e : h.edges()) {
    std::size_t hit = 0;
    for (VertexSet b : p.blocks()) hit += (e & b) != 0;
    if (hit > 1) total += hit - 1;
  }
  return total;
}

void ForEachPartition(int t, const std::function<bool(std::span<const VertexSet>)>& visit) {
  if (t < 1) return;
  if (t > kMaxPartitionVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                "partition enumeration is limited to t <= " +
                    std::to_string(kMaxPartitionVertices));
  }
  // Restricted growth string: label[0] = 0, label[i] <= 1 + max(label[0..i-1]).
  std::vector<int> label(t, 0), prefix_max(t, 0);
  std::vector<VertexSet> blocks;
  while (true) {
    blocks.assign(static_cast<std::size_t>(prefix_max[t - 1]) + 1, 0);
    for (int v = 0; v < t; ++v) blocks[label[v]] |= VertexSet{1} << v;
    if (!visit(blocks)) return;
    int i = t - 1;
    while (i > 0 && label[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (int j = i + 1; j < t; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

WpcResult CheckWeakPartitionConnectivity(const Hypergraph& h, std::size_t k) {
  if (h.t() > kMaxPartitionVertices) {
    throw Error(ErrorCode::kTooManyVertices,
                "weak partition connectivity check is limited to t <= 12");
  }
  // Group edges of weight >= 1 by vertex set; lighter edges never cross.
  std::map<VertexSet, std::size_t> types;
  for (VertexSet e : h.edges()) {
    if (Cardinality(e) > 1) ++types[e];
  }
  std::vector<std::pair<VertexSet, std::size_t>> grouped(types.begin(), types.end());
  WpcResult result;
  result.connected = true;
  ForEachPartition(h.t(), [&](std::span<const VertexSet> blocks) {
    std::size_t crossing = 0;
    for (const auto& [e, count] : grouped) {
      std::size_t hit = 0;
      for (VertexSet b : blocks) hit += (e & b) != 0;
      crossing += (hit - 1) * count;
    }
    if (crossing < k * (blocks.size() - 1)) {
      result.connected = false;
      result.witness.emplace(h.t(), std::vector<VertexSet>(blocks.begin(), blocks.end()));
      return false;
    }
    return true;
  });
  return result;
}

std::optional<VertexSet> ExtractMinimalSubset(
    std::span<const FieldElement> y, const std::vector<std::vector<FieldElement>>& codewords,
    std::size_t k) {
  const Hypergraph h = AgreementHypergraph(y, codewords);
  const int t = h.t();
  if (t > 20) throw Error(ErrorCode::kTooManyVertices, "subset search is limited to 20 codewords");
  for (int size = 2; size <= t; ++size) {
    // Combinations of `size` vertices in lexicographic order.
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      VertexSet J = 0;
      for (int v : pick) J |= VertexSet{1} << v;
      if (SubsetWeight(h, J) >= static_cast<std::size_t>(size - 1) * k) return J;
      int i = size - 1;
      while (i >= 0 && pick[i] == t - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

int HyperpathFlow(const Hypergraph& h, const Orientation& o, int from, int to, int limit) {
  const std::size_t t = static_cast<std::size_t>(h.t());
  FlowNetwork net(t + 2 * h.n());
  for (std::size_t i = 0; i < h.n(); ++i) {
    const VertexSet e = h.edge(i);
    if (e == 0) continue;
    const int head = o.heads[i];
    const std::size_t in = t + 2 * i, out = in + 1;
    net.AddArc(in, out, 1);
    net.AddArc(out, static_cast<std::size_t>(head), 1);
    for (int v : Members(e)) {
      if (v != head) net.AddArc(static_cast<std::size_t>(v), in, 1);
    }
  }
  return net.MaxFlow(static_cast<std::size_t>(from), static_cast<std::size_t>(to), limit);
}

namespace {

bool HeadsAreValid(const Hypergraph& h, const Orientation& o) {
  if (o.root < 0 || o.root >= h.t() || o.heads.size() != h.n()) return false;
  for (std::size_t i = 0; i < h.n(); ++i) {
    const VertexSet e = h.edge(i);
    if (e == 0) {
      if (o.heads[i] != -1) return false;
    } else if (o.heads[i] < 0 || o.heads[i] >= h.t() ||
               (e & (VertexSet{1} << o.heads[i])) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool VerifyOrientation(const Hypergraph& h, const Orientation& o, std::size_t k) {
  if (!HeadsAreValid(h, o)) return false;
  const int need = static_cast<int>(k);
  for (int u = 0; u < h.t(); ++u) {
    if (u == o.root) continue;
    if (HyperpathFlow(h, o, u, o.root, need) < need) return false;
  }
  return true;
}

namespace {

// Depth-first search over head assignments. For every S containing the root
// (S != V) at least k edges must enter S (head in S, some tail outside), which
// by the hypergraph Menger theorem is the flow requirement. Each S tracks the
// entering edges fixed so far plus the undecided edges that could still enter
// it, and a branch dies as soon as that sum drops below k.
class OrientationSearch {
 public:
  OrientationSearch(const Hypergraph& h, std::size_t k, int root)
      : h_(h), k_(k), root_(root), heads_(h.n(), -1) {
    const VertexSet all = h.vertices();
    const VertexSet root_bit = VertexSet{1} << root;
    for (VertexSet s = 0; s <= all; ++s) {
      if ((s & root_bit) && s != all) cuts_.push_back(s);
      if (s == all) break;
    }
    fixed_.assign(cuts_.size(), 0);
    potential_.assign(cuts_.size(), 0);
    for (std::size_t i = 0; i < h.n(); ++i) {
      const VertexSet e = h.edge(i);
      if (e == 0) continue;
      if (Cardinality(e) == 1) {
        heads_[i] = Members(e)[0];
        continue;
      }
      order_.push_back(i);
      for (std::size_t c = 0; c < cuts_.size(); ++c) {
        if (Crosses(e, cuts_[c])) ++potential_[c];
      }
    }
    // Larger edges first: they have the most influence on the cut counts.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return Cardinality(h.edge(a)) > Cardinality(h.edge(b));
    });
  }

  std::optional<Orientation> Run() {
    if (!Feasible()) return std::nullopt;
    if (!Search(0)) return std::nullopt;
    return Orientation{root_, heads_};
  }

 private:
  static bool Crosses(VertexSet e, VertexSet s) { return (e & s) != 0 && (e & ~s) != 0; }

  bool Feasible() const {
    for (std::size_t c = 0; c < cuts_.size(); ++c) {
      if (fixed_[c] + potential_[c] < k_) return false;
    }
    return true;
  }

  bool Search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t i = order_[depth];
    const VertexSet e = h_.edge(i);
    std::vector<int> candidates = Members(e);
    // Pointing at the root helps every cut at once.
    std::stable_partition(candidates.begin(), candidates.end(),
                          [&](int v) { return v == root_; });
    for (int head : candidates) {
      const VertexSet head_bit = VertexSet{1} << head;
      bool ok = true;
      for (std::size_t c = 0; c < cuts_.size(); ++c) {
        if (!Crosses(e, cuts_[c])) continue;
        --potential_[c];
        if (cuts_[c] & head_bit) ++fixed_[c];
        if (fixed_[c] + potential_[c] < k_) ok = false;
      }
      heads_[i] = head;
      if (ok && Search(depth + 1)) return true;
      for (std::size_t c = 0; c < cuts_.size(); ++c) {
        if (!Crosses(e, cuts_[c])) continue;
        ++potential_[c];
        if (cuts_[c] & head_bit) --fixed_[c];
      }
    }
    heads_[i] = -1;
    return false;
  }

  const Hypergraph& h_;
  std::size_t k_;
  int root_;
  std::vector<int> heads_;
  std::vector<VertexSet> cuts_;
  std::vector<std::size_t> fixed_, potential_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<Orientation> FindOrientation(const Hypergraph& h, std::size_t k) {
  if (h.n() > kMaxOrientationEdges) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "orientation search is limited to " + std::to_string(kMaxOrientationEdges) +
                    " edges");
  }
  if (h.t() > kMaxPartitionVertices) {
    throw Error(ErrorCode::kTooManyVertices, "orientation search is limited to t <= 12");
  }
  for (int root = 0; root < h.t(); ++root) {
    if (auto o = OrientationSearch(h, k, root).Run()) return o;
  }
  return std::nullopt;
}

std::size_t ZeroPattern::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

std::vector<std::uint64_t> ZeroPattern::rows() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.set);
  return out;
}

ZeroPattern GzpFromOrientation(const Hypergraph& h, const Orientation& o, std::size_t k) {
  if (h.t() < 2) throw Error(ErrorCode::kDegenerateHypergraph, "need at least two vertices");
  if (h.n() > 64) throw Error(ErrorCode::kDimensionError, "zero patterns support n <= 64");
  if (!VerifyOrientation(h, o, k)) {
    throw Error(ErrorCode::kInvalidOrientation, "orientation does not give k paths to the root");
  }
  std::vector<std::size_t> indegree(h.t(), 0);
  std::size_t empty = 0;
  for (std::size_t i = 0; i < h.n(); ++i) {
    if (h.edge(i) == 0) {
      ++empty;
    } else {
      ++indegree[o.heads[i]];
    }
  }
  ZeroPattern zp;
  zp.n = h.n();
  zp.k = k;
  for (int j = 0; j < h.t(); ++j) {
    // indegree(root) >= k: another vertex has k edge-disjoint paths into it.
    const std::size_t delta = j == o.root ? indegree[j] - k : indegree[j];
    if (delta == 0) continue;
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < h.n(); ++i) {
      if ((h.edge(i) & (VertexSet{1} << j)) == 0) s |= std::uint64_t{1} << i;
    }
    zp.entries.push_back({s, delta, j});
  }
  if (empty > 0) zp.entries.push_back({0, empty, -1});
  return zp;
}

bool VerifyGzp(const ZeroPattern& zp) {
  if (zp.n > 64) throw Error(ErrorCode::kDimensionError, "zero patterns support n <= 64");
  if (zp.k > zp.n) return false;
  const std::size_t total = zp.total_multiplicity();
  if (total > kMaxGzpMultiplicity) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "zero pattern multiplicity " + std::to_string(total) + " exceeds 20");
  }
  std::vector<ZeroPatternEntry> entries;
  for (const auto& e : zp.entries) {
    if (e.multiplicity > 0) entries.push_back(e);
  }
  const std::uint64_t universe = zp.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << zp.n) - 1;
  const long long budget = static_cast<long long>(zp.n - zp.k);
  // The intersection only depends on which entries K draws from, and taking
  // every copy of a drawn entry makes |K| largest, so it suffices to check
  // each nonempty support at full multiplicity.
  const std::size_t m = entries.size();
  for (std::uint64_t support = 1; support < (std::uint64_t{1} << m); ++support) {
    std::uint64_t inter = universe;
    long long size = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (support & (std::uint64_t{1} << j)) {
        inter &= entries[j].set;
        size += static_cast<long long>(entries[j].multiplicity);
      }
    }
    if (std::popcount(inter) > budget - size) return false;
  }
  return true;
}

}  // namespace rslist
