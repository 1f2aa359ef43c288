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

#include "rslist/rim.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rslist {

SymbolicRim BuildRim(const Hypergraph& h, std::size_t k) {
  if (h.t() < 2) throw Error(ErrorCode::kDegenerateHypergraph, "need at least two vertices");
  if (k < 1) throw Error(ErrorCode::kInvalidParameters, "k must be positive");
  SymbolicRim m;
  m.t = h.t();
  m.k = k;
  m.n = h.n();
  const int last = h.t() - 1;
  for (std::size_t i = 0; i < h.n(); ++i) {
    const std::vector<int> members = Members(h.edge(i));
    for (std::size_t u = 1; u < members.size(); ++u) {
      m.rows.push_back({i, members[0], members[u] == last ? -1 : members[u]});
    }
  }
  return m;
}

namespace {

std::uint64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / i;
  return out;
}

}  // namespace

std::uint64_t TypeRank(int t, VertexSet s) {
  const std::vector<int> members = Members(s);
  const int c = static_cast<int>(members.size());
  std::uint64_t rank = 1;
  for (int size = 0; size < c; ++size) rank += Binomial(t, size);
  int prev = -1;
  for (int i = 0; i < c; ++i) {
    for (int x = prev + 1; x < members[i]; ++x) rank += Binomial(t - 1 - x, c - 1 - i);
    prev = members[i];
  }
  return rank;
}

TypeMap BuildTypeMap(const Hypergraph& h) {
  TypeMap map;
  map.t = h.t();
  for (std::size_t i = 0; i < h.n(); ++i) {
    const std::uint64_t tau = TypeRank(h.t(), h.edge(i));
    map.edge_type.push_back(tau);
    map.by_type[tau].push_back(i);
  }
  return map;
}

TypeOrdered TypeOrder(const Hypergraph& h) {
  std::vector<std::size_t> order(h.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::uint64_t> tau(h.n());
  for (std::size_t i = 0; i < h.n(); ++i) tau[i] = TypeRank(h.t(), h.edge(i));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return tau[a] < tau[b]; });
  std::vector<VertexSet> edges(h.n());
  std::vector<std::size_t> permutation(h.n());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    edges[pos] = h.edge(order[pos]);
    permutation[order[pos]] = pos;
  }
  Hypergraph sorted(h.t(), std::move(edges));
  TypeMap types = BuildTypeMap(sorted);
  return {std::move(sorted), std::move(types), std::move(permutation)};
}

bool IsTypeOrdered(const Hypergraph& h) {
  for (std::size_t i = 1; i < h.n(); ++i) {
    if (TypeRank(h.t(), h.edge(i - 1)) > TypeRank(h.t(), h.edge(i))) return false;
  }
  return true;
}

SymbolicRim DeleteRows(const SymbolicRim& m, const std::vector<bool>& removed) {
  SymbolicRim out = m;
  out.rows.clear();
  for (const RimRow& row : m.rows) {
    if (row.edge < removed.size() && removed[row.edge]) continue;
    out.rows.push_back(row);
  }
  return out;
}

bool EvaluatedRim::fully_concrete() const {
  return std::all_of(rows.begin(), rows.end(), [](const EvaluatedRow& r) { return r.concrete; });
}

Matrix EvaluatedRim::ToMatrix() const {
  Matrix out(rows.size(), columns);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].concrete) {
      throw Error(ErrorCode::kDimensionError, "row " + std::to_string(i) + " is still symbolic");
    }
    std::copy(rows[i].entries.begin(), rows[i].entries.end(), out.data.begin() + i * columns);
  }
  return out;
}

std::vector<FieldElement> ConcreteRow(const Field& field, int t, std::size_t k, const RimRow& row,
                                      FieldElement alpha) {
  std::vector<FieldElement> out(static_cast<std::size_t>(t - 1) * k);
  std::uint32_t power = 1;
  for (std::size_t j = 0; j < k; ++j) {
    out[row.plus * k + j] = {power};
    if (row.minus >= 0) out[row.minus * k + j] = {field.NegRaw(power)};
    power = field.MulRaw(power, alpha.value);
  }
  return out;
}

EvaluatedRim Evaluate(const Field& field, const SymbolicRim& m, const PartialAssignment& a) {
  EvaluatedRim out;
  out.columns = m.columns();
  out.rows.reserve(m.rows.size());
  for (const RimRow& row : m.rows) {
    EvaluatedRow r{row, row.edge < a.prefix(), {}};
    if (r.concrete) r.entries = ConcreteRow(field, m.t, m.k, row, a.values[row.edge]);
    out.rows.push_back(std::move(r));
  }
  return out;
}

std::size_t RankConcrete(const Field& field, const Matrix& m) { return Rank(field, m); }

// ---- randomized rank

std::size_t PitRank::PointsFor(const ExtensionField& ext, double degree, std::size_t rows) {
  if (degree < 1) return 1;
  const double per_point = ext.log2_order() - std::log2(degree);
  const double needed = 40.0 + std::log2(static_cast<double>(std::max<std::size_t>(rows, 1)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(needed / per_point)));
}

PitRank::PitRank(const Field& field, int t, std::size_t k, std::size_t n,
                 std::span<const FieldElement> prefix, std::size_t max_rows, Rng rng)
    : ext_(&field.pit_extension()),
      field_(field),
      t_(t),
      k_(k),
      cols_(static_cast<std::size_t>(t - 1) * k),
      d_(static_cast<std::size_t>(ext_->degree())),
      prefix_(prefix.begin(), prefix.end()),
      rng_(rng) {
  const bool exact = prefix.size() >= n;
  const std::size_t count =
      exact ? 1
            : PointsFor(*ext_, static_cast<double>(cols_) * static_cast<double>(k - 1), max_rows);
  points_.resize(count);
}

const std::vector<std::uint32_t>& PitRank::Powers(Point& p, std::size_t var) {
  auto it = p.powers.find(var);
  if (it != p.powers.end()) return it->second;
  std::vector<std::uint32_t> x(d_), out(k_ * d_, 0);
  if (var < prefix_.size()) {
    ext_->Embed(prefix_[var], x.data());
  } else {
    ext_->Random(rng_, x.data());
  }
  out[0] = 1;
  for (std::size_t j = 1; j < k_; ++j) {
    ext_->Mul(&out[(j - 1) * d_], x.data(), &out[j * d_]);
  }
  return p.powers.emplace(var, std::move(out)).first->second;
}

std::vector<std::uint32_t> PitRank::EvaluateRow(Point& p, const RimRow& row) {
  const std::vector<std::uint32_t>& pw = Powers(p, row.edge);
  std::vector<std::uint32_t> v(cols_ * d_, 0);
  std::copy(pw.begin(), pw.end(), v.begin() + static_cast<long>(row.plus * k_ * d_));
  if (row.minus >= 0) {
    for (std::size_t j = 0; j < k_; ++j) {
      ext_->Neg(&pw[j * d_], &v[(row.minus * k_ + j) * d_]);
    }
  }
  return v;
}

long PitRank::Reduce(const Point& p, std::vector<std::uint32_t>& v) const {
  std::vector<std::uint32_t> a(d_), b(d_);
  for (std::size_t r = 0; r < p.basis.size(); ++r) {
    const std::size_t c = p.pivots[r];
    if (ext_->IsZero(&v[c * d_])) continue;
    const std::vector<std::uint32_t>& row = p.basis[r];
    const std::vector<std::uint32_t> vc(v.begin() + static_cast<long>(c * d_),
                                        v.begin() + static_cast<long>((c + 1) * d_));
    const std::uint32_t* rc = &row[c * d_];
    // v <- row[c] v - v[c] row
    for (std::size_t col = 0; col < cols_; ++col) {
      std::uint32_t* vx = &v[col * d_];
      const std::uint32_t* rx = &row[col * d_];
      const bool v_zero = ext_->IsZero(vx), r_zero = ext_->IsZero(rx);
      if (v_zero && r_zero) continue;
      if (!v_zero) ext_->Mul(rc, vx, a.data());
      if (r_zero) {
        std::copy(a.begin(), a.end(), vx);
        continue;
      }
      ext_->Mul(vc.data(), rx, b.data());
      if (v_zero) {
        ext_->Neg(b.data(), vx);
      } else {
        ext_->Sub(a.data(), b.data(), vx);
      }
    }
  }
  for (std::size_t col = 0; col < cols_; ++col) {
    if (!ext_->IsZero(&v[col * d_])) return static_cast<long>(col);
  }
  return -1;
}

bool PitRank::Add(const RimRow& row) {
  if (row.plus < 0 || row.plus >= t_ - 1 || row.minus >= t_ - 1) {
    throw Error(ErrorCode::kDimensionError, "row block outside the matrix");
  }
  if (rank_ == cols_) return false;
  std::vector<std::vector<std::uint32_t>> reduced(points_.size());
  std::vector<long> pivot(points_.size());
  bool raised = false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    reduced[i] = EvaluateRow(points_[i], row);
    pivot[i] = Reduce(points_[i], reduced[i]);
    // Only a point that still sees every accepted row as independent can
    // certify the new one.
    if (pivot[i] >= 0 && points_[i].basis.size() == rank_) raised = true;
  }
  if (!raised) return false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (pivot[i] < 0) continue;
    points_[i].basis.push_back(std::move(reduced[i]));
    points_[i].pivots.push_back(static_cast<std::size_t>(pivot[i]));
  }
  ++rank_;
  return true;
}

namespace {

// Variables beyond the last one the rows mention play no part.
std::size_t VariableBound(std::size_t n, std::span<const RimRow> rows) {
  std::size_t bound = 0;
  for (const RimRow& row : rows) bound = std::max(bound, row.edge + 1);
  return std::min(n, bound);
}

}  // namespace

std::size_t SymbolicRank(const Field& field, int t, std::size_t k, std::size_t n,
                         std::span<const RimRow> rows, const PartialAssignment& a,
                         std::uint64_t seed) {
  PitRank pit(field, t, k, VariableBound(n, rows), a.values, rows.size(), Rng(seed, 0x9172));
  for (const RimRow& row : rows) pit.Add(row);
  return pit.rank();
}

bool IsFullColumnRankSymbolic(const Field& field, const SymbolicRim& m, const PartialAssignment& a,
                              std::uint64_t seed) {
  return SymbolicRank(field, m.t, m.k, m.n, m.rows, a, seed) == m.columns();
}

bool IsNonsingularSymbolic(const Field& field, int t, std::size_t k, std::size_t n,
                           std::span<const RimRow> rows, const PartialAssignment& a,
                           std::uint64_t seed) {
  const std::size_t cols = static_cast<std::size_t>(t - 1) * k;
  if (rows.size() != cols) return false;
  PitRank pit(field, t, k, VariableBound(n, rows), a.values, rows.size(), Rng(seed, 0x9173));
  for (const RimRow& row : rows) {
    if (!pit.Add(row)) return false;
  }
  return true;
}

std::vector<std::size_t> SmallestNonsingularSubmatrix(const Field& field, const SymbolicRim& m,
                                                      std::uint64_t seed) {
  const std::size_t cols = m.columns();
  PitRank pit(field, m.t, m.k, m.n, {}, m.rows.size(), Rng(seed, 0x9174));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.rows.size() && kept.size() < cols; ++i) {
    if (pit.Add(m.rows[i])) kept.push_back(i);
  }
  if (kept.size() < cols) {
    throw Error(ErrorCode::kNoSubmatrix, "rows reach rank " + std::to_string(kept.size()) +
                                             " of " + std::to_string(cols) + " columns");
  }
  return kept;
}

// ---- exact determinant

namespace {

using Monomial = std::vector<std::pair<std::size_t, std::size_t>>;  // sorted (var, exponent)

Monomial Times(const Monomial& m, std::size_t var, std::size_t exponent) {
  if (exponent == 0) return m;
  Monomial out;
  bool placed = false;
  for (const auto& [v, e] : m) {
    if (!placed && v == var) {
      out.emplace_back(v, e + exponent);
      placed = true;
    } else {
      if (!placed && v > var) {
        out.emplace_back(var, exponent);
        placed = true;
      }
      out.emplace_back(v, e);
    }
  }
  if (!placed) out.emplace_back(var, exponent);
  return out;
}

}  // namespace

bool IsNonsingularExact(const Field& field, int t, std::size_t k, std::span<const RimRow> rows,
                        const PartialAssignment& a) {
  const std::size_t cols = static_cast<std::size_t>(t - 1) * k;
  if (rows.size() != cols) return false;
  if (cols > 6) {
    throw Error(ErrorCode::kSearchSpaceTooLarge, "exact determinant limited to 6 columns");
  }
  // Entry (r, c) is sign * coeff * X^exponent with X the row's variable, or
  // a constant when that variable is fixed.
  struct Entry {
    bool zero = true;
    std::uint32_t coeff = 0;
    std::size_t exponent = 0;
  };
  std::vector<std::vector<Entry>> entries(cols, std::vector<Entry>(cols));
  for (std::size_t r = 0; r < cols; ++r) {
    const RimRow& row = rows[r];
    const bool fixed = row.edge < a.prefix();
    std::uint32_t power = 1;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint32_t coeff = fixed ? power : 1;
      const std::size_t exponent = fixed ? 0 : j;
      entries[r][row.plus * k + j] = {coeff == 0, coeff, exponent};
      if (row.minus >= 0) {
        entries[r][row.minus * k + j] = {coeff == 0, field.NegRaw(coeff), exponent};
      }
      if (fixed) power = field.MulRaw(power, a.values[row.edge].value);
    }
  }
  std::map<Monomial, std::uint32_t> det;
  std::vector<std::size_t> perm(cols);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::uint32_t coeff = 1;
    Monomial mono;
    bool zero = false;
    for (std::size_t r = 0; r < cols && !zero; ++r) {
      const Entry& e = entries[r][perm[r]];
      if (e.zero) {
        zero = true;
        break;
      }
      coeff = field.MulRaw(coeff, e.coeff);
      mono = Times(mono, rows[r].edge, e.exponent);
    }
    if (zero) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t j = i + 1; j < cols; ++j) inversions += perm[i] > perm[j];
    }
    if (inversions % 2 == 1) coeff = field.NegRaw(coeff);
    std::uint32_t& slot = det[mono];
    slot = field.AddRaw(slot, coeff);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::any_of(det.begin(), det.end(), [](const auto& kv) { return kv.second != 0; });
}

}  // namespace rslist
