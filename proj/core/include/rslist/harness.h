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

#ifndef RSLIST_HARNESS_H_
#define RSLIST_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rslist/certify.h"
#include "rslist/codes.h"
#include "rslist/field.h"
#include "rslist/hypergraph.h"
#include "rslist/linalg.h"

namespace rslist {

struct ExperimentConfig {
  FieldSpec field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t L = 2;
  double eps = 0.5;
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  std::size_t workers = 1;

  double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
  double lambda() const { return eps / rate(); }
  // floor(lambda k / 2) = floor(eps n / 2)
  std::size_t r() const;
  // floor(eps n): a bad list at the target radius makes the agreement
  // hypergraph (k + floor(eps n))-weakly-partition-connected.
  std::size_t boosted_k() const;
  // (L/(L+1))(1 - R - eps); may be negative, in which case every code passes.
  double radius() const;
  // Bad iff sum_j d(y, c^j) < L (1 - R - eps) n.
  double distance_threshold() const;

  // Throws InvalidParameters unless 1 <= k <= n < q, 0 < eps < 1, L >= 1,
  // r >= 1, trials >= 1.
  void Validate() const;
};

enum class OracleMode { kExhaustive, kSampled };

const char* OracleModeName(OracleMode mode);

struct BadList {
  std::vector<FieldElement> y;
  std::vector<std::uint64_t> messages;  // message indices, ascending
  std::size_t total_distance = 0;
};

struct OracleOptions {
  OracleMode mode = OracleMode::kExhaustive;
  // Flag a subset when its minimum total distance is <= max_distance (or
  // < max_distance when strict). Defaults to L(n-k) when unset.
  std::optional<double> max_distance;
  bool strict = false;
  // Only enumerate subsets containing the zero codeword. Adding a codeword to
  // y and to every member of a list preserves all distances and the agreement
  // hypergraph, so every bad list has a representative of this form.
  bool translation_reduced = true;
  std::size_t samples = 10000;  // sampled mode
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  // Stop after this many flagged subsets (0 = no limit).
  std::size_t stop_after = 0;
};

struct OracleStats {
  OracleMode mode = OracleMode::kExhaustive;
  std::uint64_t subsets_examined = 0;
  std::uint64_t flagged = 0;
  double coverage = 0;  // fraction of the enumerated space covered (expected, when sampled)
};

inline constexpr std::uint64_t kMaxExhaustiveMessages = std::uint64_t{1} << 16;

// Minimum over y of sum_j d(y, c^j) with the plurality symbol per coordinate
// (smallest value on ties).
std::size_t MinTotalDistance(const Field& field,
                             const std::vector<std::vector<FieldElement>>& codewords,
                             std::vector<FieldElement>* y = nullptr);

// Visits every flagged (L+1)-subset of distinct codewords in enumeration
// order. Exhaustive mode requires q^k <= 2^16.
OracleStats BadListOracle(const RsCode& code, std::size_t L, const OracleOptions& options,
                          const std::function<void(const BadList&)>& visit);

std::vector<BadList> BadListOracle(const RsCode& code, std::size_t L,
                                   const OracleOptions& options = {});

struct InstanceCheck {
  bool filtered = false;  // the list does not meet the distance bound
  std::optional<VertexSet> subset;
  bool wpc = false;
  bool rank_deficient = false;
  bool full_rank_deficient = false;  // RIM of the whole list
  bool passed() const {
    return filtered || (subset && wpc && rank_deficient && full_rank_deficient);
  }
};

// Minimal-subset extraction, connectivity and rank deficiency for one list.
InstanceCheck CheckBadList(const RsCode& code, std::size_t L, const BadList& list);

struct ValidateReport {
  OracleStats oracle;
  std::uint64_t bad_lists = 0;
  std::uint64_t filtered = 0;
  std::uint64_t extracted = 0;
  std::uint64_t wpc = 0;
  std::uint64_t rank_deficient = 0;
  double seconds = 0;
};

// Runs the oracle and checks every flagged list; throws InvariantViolation
// with the offending instance on the first failure.
ValidateReport ValidatePipeline(const RsCode& code, std::size_t L,
                                const OracleOptions& options = {});

// Same checks over caller-supplied lists (lists failing the distance bound
// are counted as filtered).
ValidateReport ValidateLists(const RsCode& code, std::size_t L, const std::vector<BadList>& lists);

enum class TrialOutcome { kDecodable, kBadList };

const char* TrialOutcomeName(TrialOutcome outcome);

struct TrialResult {
  std::size_t trial = 0;
  std::vector<FieldElement> alphas;
  TrialOutcome outcome = TrialOutcome::kDecodable;
  OracleStats oracle;
  std::optional<BadList> bad_list;
  // For bad lists: the evaluated matrix of the list is rank deficient, and
  // the certificate run on the extracted sub-list.
  bool rank_deficient = false;
  std::optional<VertexSet> subset;
  std::optional<CertificateResult> certificate;
  double seconds = 0;
};

struct Interval {
  double low = 0;
  double high = 1;
};

// Exact binomial (Clopper-Pearson) interval at the given confidence.
Interval ClopperPearson(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);

struct TrialReport {
  ExperimentConfig config;
  OracleMode mode = OracleMode::kExhaustive;
  std::vector<TrialResult> trials;
  std::uint64_t decodable = 0;
  std::uint64_t bad = 0;
  std::uint64_t rank_deficient = 0;
  double failure_rate = 0;
  Interval failure_interval;
  CertificateBudget budget;
  double seconds = 0;
};

struct MonteCarloOptions {
  std::optional<OracleMode> mode;  // default: exhaustive when q^k <= 2^16
  std::size_t samples = 10000;
  // Called once per trial, in trial order.
  std::function<void(const TrialResult&)> on_trial;
};

// Every trial draws its own evaluation points from the stream
// (seed, trial), so the report does not depend on the worker count.
TrialReport MonteCarloPuncture(const ExperimentConfig& cfg, const MonteCarloOptions& options = {});

struct BlowupResult {
  std::vector<FieldElement> y;
  std::uint64_t list_size = 0;
  bool exhaustive = false;
  std::uint64_t words_examined = 0;
};

struct BlowupOptions {
  std::optional<OracleMode> mode;
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 32;  // words x codewords x q
  std::size_t restarts = 64;
  std::size_t sweeps = 8;
  std::uint64_t seed = 1;
};

// Codewords of the full-length code (every field element is a point, in
// increasing encoding order) agreeing with y on at least `agreement`
// positions.
std::uint64_t ListSize(const RsCode& code, const std::vector<std::vector<std::uint32_t>>& words,
                       const std::vector<FieldElement>& y, std::size_t agreement);

// Maximizes the list size over received words. Subtracting the interpolant of
// the first k symbols does not change the list size, so the exhaustive mode
// only visits words vanishing there; the sampled mode hill-climbs from random
// starts. Requires q^k <= 2^16.
BlowupResult FullLengthBlowupSearch(const Field& field, std::size_t k, std::size_t agreement,
                                    const BlowupOptions& options = {});

struct GmMdsWitness {
  std::vector<FieldElement> alphas;
  Matrix m;   // (n-k) x (n-k), invertible
  Matrix mh;  // M H, zero on the pattern
};

struct GmMdsOptions {
  std::size_t attempts = 64;
  std::uint64_t seed = 1;
};

// True when (M H)_{l,i} = 0 for every i in S_l and det M != 0.
bool CheckGmMdsWitness(const Field& field, const ZeroPattern& zp, const GmMdsWitness& w);

// Random distinct points, then for each pattern row a random vector of the
// left kernel of H restricted to S_l; the rows beyond the pattern are random.
// Requires verify_gzp and q >= 2n - k - 1 (InvalidParameters otherwise).
std::optional<GmMdsWitness> GmMdsWitnessSearch(const ZeroPattern& zp, const Field& field,
                                               const GmMdsOptions& options = {});

}  // namespace rslist

#endif  // RSLIST_HARNESS_H_
