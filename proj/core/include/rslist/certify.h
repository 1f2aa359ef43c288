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

#ifndef RSLIST_CERTIFY_H_
#define RSLIST_CERTIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rslist/field.h"
#include "rslist/hypergraph.h"
#include "rslist/rim.h"

namespace rslist {

// Indices are 0-based in code and 1-based in external formats.
struct Certificate {
  std::vector<std::size_t> indices;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// |{j >= 2 : i_{j-1} > i_j}|
std::size_t DescentCount(std::span<const std::size_t> indices);

struct MatrixStep {
  std::vector<RimRow> rows;  // (t-1)k rows, each a row of the full matrix
  bool refresh = false;
  // For substitution steps: the variable swapped out and its bank replacement.
  std::optional<std::size_t> replaced;
  std::optional<std::size_t> replacement;
};

struct Bank {
  std::vector<std::size_t> reserved;  // ascending
};

struct MatrixTrace {
  std::vector<MatrixStep> matrices;
  std::vector<std::size_t> refreshes;  // 1-based positions l of refresh steps
  std::vector<Bank> banks;             // one per refresh
};

// Incremental form of the matrix-sequence construction: M_1 is built on
// construction and every Extend(i) appends the next matrix. Because each
// matrix depends only on the indices supplied so far, extending a copy gives
// the same trace as rebuilding from scratch with the longer prefix.
class MatrixSequenceBuilder {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x51a7e5eed;

  // h must be type-ordered; r >= 1. The refresh step runs the randomized rank
  // engine with streams derived from `seed`, so a fixed seed keeps the trace
  // deterministic.
  MatrixSequenceBuilder(const Field& field, const Hypergraph& h, std::size_t k, std::size_t r,
                        std::uint64_t seed = kDefaultSeed);

  // Supplies i_l (0-based variable index) and computes M_{l+1}.
  void Extend(std::size_t index);

  const MatrixStep& current() const { return trace_.matrices.back(); }
  const MatrixTrace& trace() const { return trace_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  const Bank& bank() const { return trace_.banks.back(); }
  const Hypergraph& hypergraph() const { return h_; }
  const SymbolicRim& rim() const { return rim_; }
  const TypeMap& types() const { return types_; }
  std::size_t k() const { return k_; }
  std::size_t r() const { return r_; }
  const Field& field() const { return field_; }
  // floor(r / 2^t)
  std::size_t bank_quota() const { return quota_; }

 private:
  void Refresh();
  void CheckSubmatrix(const std::vector<RimRow>& rows) const;

  Field field_;
  Hypergraph h_;
  std::size_t k_;
  std::size_t r_;
  std::uint64_t seed_;
  SymbolicRim rim_;
  std::vector<RimRow> sorted_rows_;
  TypeMap types_;
  std::size_t quota_;
  std::vector<std::size_t> indices_;
  std::size_t last_refresh_ = 1;  // l_0
  MatrixTrace trace_;
};

// M_1..M_j for prior = (i_1..i_{j-1}).
MatrixTrace GetMatrixSequence(const Field& field, const Hypergraph& h, std::size_t k,
                              std::size_t r, std::span<const std::size_t> prior,
                              std::uint64_t seed = MatrixSequenceBuilder::kDefaultSeed);

struct StepStats {
  // Variables of M_j whose value was revealed while M_j was still nonsingular
  // (including the one that made it singular).
  std::size_t exposures = 0;
  bool singular = false;
};

struct CertificateResult {
  std::optional<Certificate> certificate;  // nullopt is bottom
  std::size_t descents = 0;
  std::vector<std::size_t> refreshes;
  std::size_t probe_count = 0;
  std::vector<StepStats> steps;
};

// Runs the certificate construction for the evaluation points `alphas`,
// starting from a prepared builder holding only M_1 (it is copied). Each
// singularity probe is a randomized rank test seeded from `seed`; probes are
// placed by binary search over the variables of M_j, since once M_j turns
// singular it stays singular as more variables are fixed.
CertificateResult GetCertificate(const MatrixSequenceBuilder& start,
                                 std::span<const FieldElement> alphas, std::uint64_t seed);

CertificateResult GetCertificate(const Field& field, const Hypergraph& h, std::size_t k,
                                 std::size_t r, std::span<const FieldElement> alphas,
                                 std::uint64_t seed);

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct CertificateBudget {
  BigInt count_bound;           // C(n,r) 2^{tr}
  BigRational per_cert_bound;   // ((t-1)k/(q-n))^r
  BigRational union_bound;      // 2^{(L+2)n} C(n,r) 2^{(L+1)r} (Lk/(q-n))^r
  BigRational chain_bound;      // same with C(n,r) replaced by (e n / r)^r, e < 2.72
  BigRational target;           // 2^{-Ln}

  bool vacuous() const { return union_bound > 1; }
  bool meets_target() const { return union_bound <= target; }
};

// Exact arithmetic; q > n is required.
CertificateBudget ComputeCertificateBudget(std::size_t t, std::size_t k, const BigInt& q,
                                           std::size_t n, std::size_t r, std::size_t L);

// log2 of a positive rational, for reporting.
double Log2(const BigRational& x);

}  // namespace rslist

#endif  // RSLIST_CERTIFY_H_
