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

#include "rslist/certify.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace rslist {

std::size_t DescentCount(std::span<const std::size_t> indices) {
  std::size_t count = 0;
  for (std::size_t j = 1; j < indices.size(); ++j) count += indices[j - 1] > indices[j];
  return count;
}

MatrixSequenceBuilder::MatrixSequenceBuilder(const Field& field, const Hypergraph& h,
                                             std::size_t k, std::size_t r, std::uint64_t seed)
    : field_(field), h_(h), k_(k), r_(r), seed_(seed) {
  if (r < 1) throw Error(ErrorCode::kInvalidParameters, "r must be at least 1");
  if (!IsTypeOrdered(h)) {
    throw Error(ErrorCode::kInvalidParameters, "hypergraph edges must be sorted by type");
  }
  rim_ = BuildRim(h, k);
  types_ = BuildTypeMap(h);
  sorted_rows_ = rim_.rows;
  std::sort(sorted_rows_.begin(), sorted_rows_.end());
  quota_ = h.t() >= 63 ? 0 : r >> h.t();
  Refresh();
}

void MatrixSequenceBuilder::CheckSubmatrix(const std::vector<RimRow>& rows) const {
  if (rows.size() != rim_.columns()) {
    throw Error(ErrorCode::kInvariantViolation, "matrix is not square");
  }
  std::set<RimRow> seen;
  for (const RimRow& row : rows) {
    if (!std::binary_search(sorted_rows_.begin(), sorted_rows_.end(), row)) {
      throw Error(ErrorCode::kInvariantViolation,
                  "row for variable " + std::to_string(row.edge + 1) + " is not a matrix row");
    }
    if (!seen.insert(row).second) {
      throw Error(ErrorCode::kInvariantViolation, "row repeated in submatrix");
    }
  }
}

void MatrixSequenceBuilder::Refresh() {
  const std::size_t l = trace_.matrices.size() + 1;
  std::vector<bool> removed(h_.n(), false);
  for (std::size_t i : indices_) removed[i] = true;
  Bank bank;
  for (const auto& [tau, members] : types_.by_type) {
    std::vector<std::size_t> unused;
    for (std::size_t i : members) {
      if (!removed[i]) unused.push_back(i);
    }
    const std::size_t take = std::min(quota_, unused.size());
    bank.reserved.insert(bank.reserved.end(), unused.end() - static_cast<long>(take),
                         unused.end());
  }
  std::sort(bank.reserved.begin(), bank.reserved.end());
  for (std::size_t i : bank.reserved) removed[i] = true;
  const SymbolicRim reduced = DeleteRows(rim_, removed);
  std::vector<std::size_t> positions;
  try {
    positions = SmallestNonsingularSubmatrix(field_, reduced, Rng(seed_, l)());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoSubmatrix) throw;
    throw Error(ErrorCode::kInvariantViolation,
                "refresh at step " + std::to_string(l) +
                    " found no nonsingular submatrix; the hypergraph is not connected enough for r = " +
                    std::to_string(r_));
  }
  MatrixStep step;
  step.refresh = true;
  for (std::size_t pos : positions) step.rows.push_back(reduced.rows[pos]);
  CheckSubmatrix(step.rows);
  trace_.matrices.push_back(std::move(step));
  trace_.refreshes.push_back(l);
  trace_.banks.push_back(std::move(bank));
  last_refresh_ = l;
}

void MatrixSequenceBuilder::Extend(std::size_t index) {
  if (index >= h_.n()) {
    throw Error(ErrorCode::kInvalidParameters, "index " + std::to_string(index + 1) +
                                                   " outside [1, " + std::to_string(h_.n()) + "]");
  }
  indices_.push_back(index);
  const std::uint64_t tau = types_.edge_type[index];
  std::size_t s = 0;
  for (std::size_t pos = last_refresh_ - 1; pos < indices_.size(); ++pos) {
    s += types_.edge_type[indices_[pos]] == tau;
  }
  std::vector<std::size_t> candidates;
  for (std::size_t i : bank().reserved) {
    if (types_.edge_type[i] == tau) candidates.push_back(i);
  }
  if (s > candidates.size()) {
    Refresh();
    return;
  }
  const std::size_t replacement = candidates[s - 1];
  const MatrixStep& prev = current();
  MatrixStep step;
  step.replaced = index;
  step.replacement = replacement;
  for (const RimRow& row : prev.rows) {
    if (row.edge == replacement) {
      throw Error(ErrorCode::kInvariantViolation,
                  "bank variable " + std::to_string(replacement + 1) +
                      " already occurs in the current matrix");
    }
    RimRow next = row;
    if (next.edge == index) next.edge = replacement;
    step.rows.push_back(next);
  }
  CheckSubmatrix(step.rows);
  trace_.matrices.push_back(std::move(step));
}

MatrixTrace GetMatrixSequence(const Field& field, const Hypergraph& h, std::size_t k,
                              std::size_t r, std::span<const std::size_t> prior,
                              std::uint64_t seed) {
  MatrixSequenceBuilder builder(field, h, k, r, seed);
  for (std::size_t i : prior) builder.Extend(i);
  return builder.trace();
}

CertificateResult GetCertificate(const MatrixSequenceBuilder& start,
                                 std::span<const FieldElement> alphas, std::uint64_t seed) {
  const Hypergraph& h = start.hypergraph();
  if (alphas.size() != h.n()) {
    throw Error(ErrorCode::kDimensionError, "need one evaluation point per edge");
  }
  if (!start.indices().empty()) {
    throw Error(ErrorCode::kInvalidParameters, "builder must hold only the first matrix");
  }
  {
    std::vector<FieldElement> sorted(alphas.begin(), alphas.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kInvalidParameters, "evaluation points must be distinct");
    }
  }
  MatrixSequenceBuilder builder = start;
  const Field& field = start.field();
  const int t = h.t();
  const std::size_t k = start.k();
  CertificateResult result;
  Certificate cert;
  for (std::size_t j = 1; j <= start.r(); ++j) {
    const std::vector<RimRow>& rows = builder.current().rows;
    std::vector<std::size_t> vars;
    for (const RimRow& row : rows) vars.push_back(row.edge);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    auto singular = [&](std::size_t pos) {
      ++result.probe_count;
      const std::size_t v = vars[pos];
      PartialAssignment a{std::vector<FieldElement>(alphas.begin(), alphas.begin() + v + 1)};
      return !IsNonsingularSymbolic(field, t, k, h.n(), rows, a, Rng(seed, j).Split(v)());
    };
    StepStats stats;
    if (!singular(vars.size() - 1)) {
      stats.exposures = vars.size();
      result.steps.push_back(stats);
      result.refreshes = builder.trace().refreshes;
      return result;
    }
    std::size_t lo = 0, hi = vars.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (singular(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    stats.exposures = lo + 1;
    stats.singular = true;
    result.steps.push_back(stats);
    cert.indices.push_back(vars[lo]);
    if (j < start.r()) builder.Extend(vars[lo]);
  }
  result.refreshes = builder.trace().refreshes;
  result.descents = DescentCount(cert.indices);

  std::vector<std::size_t> sorted = cert.indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvariantViolation, "certificate repeats an index");
  }
  const std::vector<std::size_t>& refreshes = result.refreshes;
  const std::size_t types = std::size_t{1} << std::min(t, 62);
  for (std::size_t i = 1; i < refreshes.size(); ++i) {
    if ((refreshes[i] - refreshes[i - 1]) * types < start.r()) {
      throw Error(ErrorCode::kInvariantViolation,
                  "refreshes at steps " + std::to_string(refreshes[i - 1]) + " and " +
                      std::to_string(refreshes[i]) + " are closer than r/2^t");
    }
  }
  for (std::size_t l = 2; l <= cert.indices.size(); ++l) {
    const bool is_refresh = std::binary_search(refreshes.begin(), refreshes.end(), l);
    if (!is_refresh && cert.indices[l - 2] > cert.indices[l - 1]) {
      throw Error(ErrorCode::kInvariantViolation,
                  "descent at non-refresh step " + std::to_string(l));
    }
  }
  result.certificate = std::move(cert);
  return result;
}

CertificateResult GetCertificate(const Field& field, const Hypergraph& h, std::size_t k,
                                 std::size_t r, std::span<const FieldElement> alphas,
                                 std::uint64_t seed) {
  return GetCertificate(MatrixSequenceBuilder(field, h, k, r), alphas, seed);
}

namespace {

BigInt Choose(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

BigRational Power(const BigRational& base, std::size_t e) {
  BigRational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

BigInt PowerOfTwo(std::size_t e) { return BigInt(1) << e; }

}  // namespace

CertificateBudget ComputeCertificateBudget(std::size_t t, std::size_t k, const BigInt& q,
                                           std::size_t n, std::size_t r, std::size_t L) {
  if (q <= n) throw Error(ErrorCode::kInvalidParameters, "q must exceed n");
  if (t < 1) throw Error(ErrorCode::kInvalidParameters, "t must be positive");
  const BigInt gap = q - n;
  CertificateBudget b;
  b.count_bound = Choose(n, r) * PowerOfTwo(t * r);
  b.per_cert_bound = Power(BigRational(BigInt((t - 1) * k), gap), r);
  const BigRational ratio(BigInt(L * k), gap);
  b.union_bound = BigRational(PowerOfTwo((L + 2) * n) * Choose(n, r) * PowerOfTwo((L + 1) * r)) *
                  Power(ratio, r);
  if (r == 0) {
    b.chain_bound = b.union_bound;
  } else {
    // C(n,r) <= (en/r)^r, with 272/100 standing in for e.
    const BigRational en_r(BigInt(272) * n, BigInt(100) * r);
    b.chain_bound = BigRational(PowerOfTwo((L + 2) * n) * PowerOfTwo((L + 1) * r)) *
                    Power(en_r, r) * Power(ratio, r);
  }
  b.target = BigRational(BigInt(1), PowerOfTwo(L * n));
  return b;
}

double Log2(const BigRational& x) {
  if (x <= 0) throw Error(ErrorCode::kInvalidParameters, "log of a non-positive number");
  auto lg = [](const BigInt& v) {
    const std::size_t bits = boost::multiprecision::msb(v);
    if (bits <= 60) return std::log2(v.convert_to<double>());
    const std::size_t shift = bits - 60;
    return std::log2(BigInt(v >> shift).convert_to<double>()) + static_cast<double>(shift);
  };
  return lg(boost::multiprecision::numerator(x)) - lg(boost::multiprecision::denominator(x));
}

}  // namespace rslist
