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

#ifndef RSLIST_RIM_H_
#define RSLIST_RIM_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rslist/field.h"
#include "rslist/hypergraph.h"
#include "rslist/linalg.h"
#include "rslist/rng.h"

namespace rslist {

// One row of the reduced intersection matrix: the Vandermonde row of variable
// X_edge in column block `plus`, its negation in block `minus` (-1 when the
// second vertex is the last one, whose block does not exist). Blocks are
// 0-based vertices < t-1, each k columns wide.
struct RimRow {
  std::size_t edge = 0;
  int plus = 0;
  int minus = -1;

  friend auto operator<=>(const RimRow&, const RimRow&) = default;
};

struct SymbolicRim {
  int t = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<RimRow> rows;

  std::size_t columns() const { return static_cast<std::size_t>(t - 1) * k; }
};

// For each edge with vertices j_1 < ... < j_m (m >= 2), rows for u = 2..m with
// plus = j_1 and minus = j_u (absent when j_u is the last vertex). Rows come in
// edge order, then u order.
SymbolicRim BuildRim(const Hypergraph& h, std::size_t k);

// Rank of a subset of [t] among all subsets ordered by cardinality, then
// lexicographically on the sorted member list. 1-based, so the empty set is 1.
std::uint64_t TypeRank(int t, VertexSet s);

struct TypeMap {
  int t = 0;
  std::vector<std::uint64_t> edge_type;                        // per (relabelled) edge
  std::map<std::uint64_t, std::vector<std::size_t>> by_type;  // ascending indices
};

struct TypeOrdered {
  Hypergraph h;
  TypeMap types;
  std::vector<std::size_t> permutation;  // old label -> new label
};

// Stable sort of the edges by type.
TypeOrdered TypeOrder(const Hypergraph& h);
TypeMap BuildTypeMap(const Hypergraph& h);
bool IsTypeOrdered(const Hypergraph& h);

// Drops every row whose variable is flagged.
SymbolicRim DeleteRows(const SymbolicRim& m, const std::vector<bool>& removed);

// X_1..X_prefix fixed to the given values.
struct PartialAssignment {
  std::vector<FieldElement> values;

  std::size_t prefix() const { return values.size(); }
};

struct EvaluatedRow {
  RimRow source;
  bool concrete = false;
  std::vector<FieldElement> entries;  // filled when concrete
};

struct EvaluatedRim {
  std::size_t columns = 0;
  std::vector<EvaluatedRow> rows;

  bool fully_concrete() const;
  // Throws DimensionError while symbolic rows remain.
  Matrix ToMatrix() const;
};

std::vector<FieldElement> ConcreteRow(const Field& field, int t, std::size_t k, const RimRow& row,
                                      FieldElement alpha);

EvaluatedRim Evaluate(const Field& field, const SymbolicRim& m, const PartialAssignment& a);

std::size_t RankConcrete(const Field& field, const Matrix& m);

// Rank of RIM-structured rows over F_q(X_{prefix+1}..X_n) with X_{<=prefix}
// fixed, by evaluating the free variables at random points of an extension of
// F_q with at least 2^48 elements. Every accepted row is certified: some point
// shows the accepted rows independent, so the reported rank never exceeds the
// symbolic rank. Enough independent points are used that wrongly rejecting an
// independent row has probability at most 2^-40 over the whole run.
class PitRank {
 public:
  // `n` is the number of variables; when the prefix fixes all of them the
  // evaluation is exact and a single point is used.
  PitRank(const Field& field, int t, std::size_t k, std::size_t n,
          std::span<const FieldElement> prefix, std::size_t max_rows, Rng rng);

  // Adds the row and returns true when it raises the rank.
  bool Add(const RimRow& row);
  std::size_t rank() const { return rank_; }
  std::size_t points() const { return points_.size(); }

  // Independent evaluation points needed for `rows` rank decisions, each over
  // a determinant of degree at most `degree`.
  static std::size_t PointsFor(const ExtensionField& ext, double degree, std::size_t rows);

 private:
  struct Point {
    std::map<std::size_t, std::vector<std::uint32_t>> powers;  // variable -> [x^0..x^{k-1}]
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<std::size_t> pivots;
  };

  const std::vector<std::uint32_t>& Powers(Point& p, std::size_t var);
  std::vector<std::uint32_t> EvaluateRow(Point& p, const RimRow& row);
  // Reduces v against the basis; returns the first nonzero column or -1.
  long Reduce(const Point& p, std::vector<std::uint32_t>& v) const;

  const ExtensionField* ext_;
  Field field_;
  int t_;
  std::size_t k_;
  std::size_t cols_;
  std::size_t d_;
  std::vector<FieldElement> prefix_;
  Rng rng_;
  std::vector<Point> points_;
  std::size_t rank_ = 0;
};

std::size_t SymbolicRank(const Field& field, int t, std::size_t k, std::size_t n,
                         std::span<const RimRow> rows, const PartialAssignment& a,
                         std::uint64_t seed);

bool IsFullColumnRankSymbolic(const Field& field, const SymbolicRim& m, const PartialAssignment& a,
                              std::uint64_t seed);

// Square row set nonsingular over F_q(X_{prefix+1}..X_n).
bool IsNonsingularSymbolic(const Field& field, int t, std::size_t k, std::size_t n,
                           std::span<const RimRow> rows, const PartialAssignment& a,
                           std::uint64_t seed);

// Greedy scan in row order keeping rows that raise the rank of the kept set;
// returns the first (t-1)k kept row positions. Throws NoSubmatrix when the
// rows do not reach full column rank.
std::vector<std::size_t> SmallestNonsingularSubmatrix(const Field& field, const SymbolicRim& m,
                                                      std::uint64_t seed);

// Exact determinant test by full expansion over F_q[X]. Square row sets with at
// most 6 columns only.
bool IsNonsingularExact(const Field& field, int t, std::size_t k, std::span<const RimRow> rows,
                        const PartialAssignment& a);

}  // namespace rslist

#endif  // RSLIST_RIM_H_
