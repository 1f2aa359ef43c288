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

#include "rslist/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include <boost/math/distributions/beta.hpp>

#include "rslist/rim.h"

namespace rslist {

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fn(0..count-1) on up to `workers` threads. The first exception stops
// the remaining items and is rethrown.
void ParallelFor(std::size_t count, std::size_t workers,
                 const std::function<void(std::size_t)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// q^k, or nullopt past 2^62.
std::optional<std::uint64_t> MessageCount(std::uint64_t q, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > (std::uint64_t{1} << 62) / q) return std::nullopt;
    out *= q;
  }
  return out;
}

double BinomialDouble(double n, std::size_t r) {
  double out = 1;
  for (std::size_t i = 0; i < r; ++i) out = out * (n - static_cast<double>(i)) / static_cast<double>(i + 1);
  return out;
}

std::vector<std::uint32_t> EncodeIndex(const RsCode& code, std::uint64_t index) {
  const Codeword c = Encode(code, code.MessageFromIndex(index));
  std::vector<std::uint32_t> out(c.symbols.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c.symbols[i].value;
  return out;
}

std::vector<std::vector<FieldElement>> Codewords(const RsCode& code,
                                                 const std::vector<std::uint64_t>& messages) {
  std::vector<std::vector<FieldElement>> out;
  for (std::uint64_t m : messages) out.push_back(Encode(code, code.MessageFromIndex(m)).symbols);
  return out;
}

std::string Dump(const std::vector<FieldElement>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].value;
  os << ']';
  return os.str();
}

std::string Dump(const RsCode& code, const BadList& list) {
  std::ostringstream os;
  os << "field=" << FormatFieldSpec(code.field().spec()) << " k=" << code.k()
     << " alphas=" << Dump(code.alphas()) << " y=" << Dump(list.y) << " messages=[";
  for (std::size_t i = 0; i < list.messages.size(); ++i) {
    os << (i ? "," : "") << list.messages[i];
  }
  os << "] distance=" << list.total_distance;
  return os.str();
}

}  // namespace

// ---- configuration

std::size_t ExperimentConfig::r() const {
  return static_cast<std::size_t>(std::floor(eps * static_cast<double>(n) / 2 + 1e-9));
}

std::size_t ExperimentConfig::boosted_k() const {
  return k + static_cast<std::size_t>(std::floor(eps * static_cast<double>(n) + 1e-9));
}

double ExperimentConfig::radius() const {
  return static_cast<double>(L) / static_cast<double>(L + 1) * (1 - rate() - eps);
}

double ExperimentConfig::distance_threshold() const {
  return static_cast<double>(L) * (1 - rate() - eps) * static_cast<double>(n);
}

void ExperimentConfig::Validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidParameters, what); };
  if (k < 1 || k > n) fail("need 1 <= k <= n");
  if (field.order() <= n) fail("need q > n");
  if (!(eps > 0 && eps < 1)) fail("need 0 < eps < 1");
  if (L < 1) fail("need L >= 1");
  if (r() < 1) fail("eps n / 2 must be at least 1");
  if (trials < 1) fail("need at least one trial");
}

const char* OracleModeName(OracleMode mode) {
  return mode == OracleMode::kExhaustive ? "exhaustive" : "sampled";
}

const char* TrialOutcomeName(TrialOutcome outcome) {
  return outcome == TrialOutcome::kDecodable ? "decodable" : "bad_list";
}

// ---- oracle

std::size_t MinTotalDistance(const Field& field,
                             const std::vector<std::vector<FieldElement>>& codewords,
                             std::vector<FieldElement>* y) {
  (void)field;
  if (codewords.empty()) return 0;
  const std::size_t n = codewords[0].size();
  const std::size_t t = codewords.size();
  for (const auto& c : codewords) {
    if (c.size() != n) throw Error(ErrorCode::kDimensionError, "codeword lengths differ");
  }
  if (y) y->assign(n, Field::Zero());
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    FieldElement symbol{};
    for (std::size_t j = 0; j < t; ++j) {
      std::size_t count = 0;
      for (std::size_t l = 0; l < t; ++l) count += codewords[l][i] == codewords[j][i];
      if (count > best || (count == best && codewords[j][i] < symbol)) {
        best = count;
        symbol = codewords[j][i];
      }
    }
    total += t - best;
    if (y) (*y)[i] = symbol;
  }
  return total;
}

namespace {

// Enumerates subsets of a fixed size drawn from [lo, hi) in lexicographic order,
// with the first element pinned, calling visit(members).
template <typename Visit>
bool ForEachCombination(std::vector<std::uint64_t>& members, std::size_t from, std::uint64_t lo,
                        std::uint64_t hi, Visit&& visit) {
  if (from == members.size()) return visit();
  const std::uint64_t remaining = members.size() - from;
  for (std::uint64_t v = lo; v + remaining <= hi; ++v) {
    members[from] = v;
    if (!ForEachCombination(members, from + 1, v + 1, hi, visit)) return false;
  }
  return true;
}

struct Evaluator {
  std::size_t n;
  std::size_t t;
  double max_distance;
  bool strict;

  // Returns the minimum total distance.
  std::size_t Distance(const std::vector<const std::uint32_t*>& words) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 1;
      for (std::size_t j = 0; j + best < t; ++j) {
        std::size_t count = 1;
        for (std::size_t l = j + 1; l < t; ++l) count += words[l][i] == words[j][i];
        best = std::max(best, count);
      }
      total += t - best;
    }
    return total;
  }

  bool Flag(std::size_t d) const {
    const double x = static_cast<double>(d);
    return strict ? x < max_distance : x <= max_distance;
  }
};

BadList MakeBadList(const RsCode& code, std::vector<std::uint64_t> messages) {
  std::sort(messages.begin(), messages.end());
  BadList list;
  list.messages = std::move(messages);
  list.total_distance = MinTotalDistance(code.field(), Codewords(code, list.messages), &list.y);
  return list;
}

}  // namespace

OracleStats BadListOracle(const RsCode& code, std::size_t L, const OracleOptions& options,
                          const std::function<void(const BadList&)>& visit) {
  if (L < 1) throw Error(ErrorCode::kInvalidParameters, "L must be at least 1");
  const std::size_t t = L + 1;
  const std::optional<std::uint64_t> count = MessageCount(code.field().order(), code.k());
  OracleStats stats;
  stats.mode = options.mode;
  if (options.mode == OracleMode::kExhaustive &&
      (!count || *count > kMaxExhaustiveMessages)) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                "exhaustive oracle needs q^k <= 2^16; use sampled mode");
  }
  if (!count) {
    throw Error(ErrorCode::kSearchSpaceTooLarge, "q^k exceeds 2^62");
  }
  const std::uint64_t Q = *count;
  if (Q < t) return stats;
  const Evaluator eval{code.n(), t,
                       options.max_distance.value_or(static_cast<double>(L) *
                                                     static_cast<double>(code.n() - code.k())),
                       options.strict};
  const bool reduced = options.translation_reduced;
  const double space = reduced ? BinomialDouble(static_cast<double>(Q - 1), L)
                               : BinomialDouble(static_cast<double>(Q), t);

  // Work is split into chunks; each chunk's flagged lists are kept and
  // replayed in chunk order so the output does not depend on scheduling.
  std::vector<std::vector<BadList>> found;
  std::vector<std::uint64_t> examined;
  std::atomic<std::uint64_t> flagged_total{0};
  auto stop = [&] {
    return options.stop_after > 0 && flagged_total.load() >= options.stop_after;
  };

  if (options.mode == OracleMode::kExhaustive) {
    std::vector<std::vector<std::uint32_t>> words(Q);
    for (std::uint64_t m = 0; m < Q; ++m) words[m] = EncodeIndex(code, m);
    // Chunk c pins the first free member to c (after 0 when reduced).
    const std::uint64_t first = reduced ? 1 : 0;
    const std::size_t free_size = reduced ? L : t;
    const std::uint64_t chunks = Q - first - (free_size - 1);
    found.resize(chunks);
    examined.assign(chunks, 0);
    ParallelFor(chunks, options.workers, [&](std::size_t c) {
      if (stop()) return;
      std::vector<std::uint64_t> members(t);
      std::size_t pos = 0;
      if (reduced) members[pos++] = 0;
      members[pos++] = first + c;
      std::vector<const std::uint32_t*> ptrs(t);
      ForEachCombination(members, pos, first + c + 1, Q, [&] {
        ++examined[c];
        for (std::size_t j = 0; j < t; ++j) ptrs[j] = words[members[j]].data();
        const std::size_t d = eval.Distance(ptrs);
        if (eval.Flag(d)) {
          found[c].push_back(MakeBadList(code, members));
          ++flagged_total;
          if (stop()) return false;
        }
        return true;
      });
    });
  } else {
    constexpr std::size_t kChunk = 1024;
    const std::size_t chunks = (options.samples + kChunk - 1) / kChunk;
    found.resize(chunks);
    examined.assign(chunks, 0);
    ParallelFor(chunks, options.workers, [&](std::size_t c) {
      Rng rng = Rng(options.seed, 0x0AC1E).Split(c);
      std::vector<std::uint64_t> members;
      std::vector<std::vector<std::uint32_t>> words(t);
      std::vector<const std::uint32_t*> ptrs(t);
      const std::size_t end = std::min(options.samples, (c + 1) * kChunk);
      for (std::size_t s = c * kChunk; s < end; ++s) {
        if (stop()) return;
        members.clear();
        if (reduced) members.push_back(0);
        while (members.size() < t) {
          const std::uint64_t m = reduced ? 1 + rng.Below(Q - 1) : rng.Below(Q);
          if (std::find(members.begin(), members.end(), m) == members.end()) members.push_back(m);
        }
        ++examined[c];
        for (std::size_t j = 0; j < t; ++j) {
          words[j] = EncodeIndex(code, members[j]);
          ptrs[j] = words[j].data();
        }
        const std::size_t d = eval.Distance(ptrs);
        if (eval.Flag(d)) {
          found[c].push_back(MakeBadList(code, members));
          ++flagged_total;
        }
      }
    });
  }
  for (std::size_t c = 0; c < found.size(); ++c) {
    stats.subsets_examined += examined[c];
    for (const BadList& list : found[c]) {
      if (options.stop_after > 0 && stats.flagged >= options.stop_after) break;
      ++stats.flagged;
      visit(list);
    }
  }
  const double examined_d = static_cast<double>(stats.subsets_examined);
  if (space <= 0) {
    stats.coverage = 1.0;
  } else if (stats.mode == OracleMode::kExhaustive) {
    stats.coverage = options.stop_after == 0 ? 1.0 : std::min(1.0, examined_d / space);
  } else {
    // Draws are with replacement: expected fraction of distinct subsets hit.
    stats.coverage = -std::expm1(examined_d * std::log1p(-1.0 / space));
  }
  return stats;
}

std::vector<BadList> BadListOracle(const RsCode& code, std::size_t L,
                                   const OracleOptions& options) {
  std::vector<BadList> out;
  BadListOracle(code, L, options, [&](const BadList& b) { out.push_back(b); });
  return out;
}

// ---- validation

InstanceCheck CheckBadList(const RsCode& code, std::size_t L, const BadList& list) {
  InstanceCheck check;
  std::vector<std::uint64_t> sorted = list.messages;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidParameters, "a list needs at least two distinct codewords");
  }
  const auto codewords = Codewords(code, list.messages);
  std::size_t total = 0;
  for (const auto& c : codewords) total += HammingDistance(list.y, c);
  if (total > L * (code.n() - code.k())) {
    check.filtered = true;
    return check;
  }
  const Field& field = code.field();
  const PartialAssignment full{code.alphas()};
  const Hypergraph h = AgreementHypergraph(list.y, codewords);
  const SymbolicRim whole = BuildRim(h, code.k());
  check.full_rank_deficient =
      RankConcrete(field, Evaluate(field, whole, full).ToMatrix()) < whole.columns();
  check.subset = ExtractMinimalSubset(list.y, codewords, code.k());
  if (!check.subset || Cardinality(*check.subset) < 2) return check;
  const Hypergraph sub = h.Restrict(*check.subset);
  check.wpc = IsWeaklyPartitionConnected(sub, code.k());
  const SymbolicRim rim = BuildRim(sub, code.k());
  check.rank_deficient =
      RankConcrete(field, Evaluate(field, rim, full).ToMatrix()) < rim.columns();
  return check;
}

namespace {

void Tally(const RsCode& code, std::size_t L, const BadList& list, ValidateReport& report) {
  ++report.bad_lists;
  const InstanceCheck check = CheckBadList(code, L, list);
  if (check.filtered) {
    ++report.filtered;
    return;
  }
  report.extracted += check.subset.has_value();
  report.wpc += check.wpc;
  report.rank_deficient += check.rank_deficient && check.full_rank_deficient;
  if (!check.passed()) {
    std::string what = !check.subset ? "no subset extracted"
                       : !check.wpc  ? "extracted sub-list is not weakly partition connected"
                                     : "evaluated matrix has full column rank";
    throw Error(ErrorCode::kInvariantViolation, what + ": " + Dump(code, list));
  }
}

}  // namespace

ValidateReport ValidatePipeline(const RsCode& code, std::size_t L, const OracleOptions& options) {
  const auto start = Clock::now();
  ValidateReport report;
  report.oracle =
      BadListOracle(code, L, options, [&](const BadList& list) { Tally(code, L, list, report); });
  report.seconds = SecondsSince(start);
  return report;
}

ValidateReport ValidateLists(const RsCode& code, std::size_t L,
                             const std::vector<BadList>& lists) {
  const auto start = Clock::now();
  ValidateReport report;
  for (const BadList& list : lists) Tally(code, L, list, report);
  report.seconds = SecondsSince(start);
  return report;
}

// ---- Monte Carlo

Interval ClopperPearson(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) return {0, 1};
  if (successes > trials) throw Error(ErrorCode::kInvalidParameters, "successes exceed trials");
  const double alpha = 1 - confidence;
  const double x = static_cast<double>(successes), n = static_cast<double>(trials);
  Interval out;
  if (successes > 0) {
    out.low = boost::math::quantile(boost::math::beta_distribution<double>(x, n - x + 1), alpha / 2);
  }
  if (successes < trials) {
    out.high =
        boost::math::quantile(boost::math::beta_distribution<double>(x + 1, n - x), 1 - alpha / 2);
  }
  return out;
}

TrialReport MonteCarloPuncture(const ExperimentConfig& cfg, const MonteCarloOptions& options) {
  cfg.Validate();
  const auto start = Clock::now();
  const Field field(cfg.field);
  const std::optional<std::uint64_t> count = MessageCount(field.order(), cfg.k);
  TrialReport report;
  report.config = cfg;
  report.mode = options.mode.value_or(count && *count <= kMaxExhaustiveMessages
                                          ? OracleMode::kExhaustive
                                          : OracleMode::kSampled);
  report.trials.resize(cfg.trials);
  const double threshold = cfg.distance_threshold();

  std::mutex emit_mu;
  std::vector<bool> done(cfg.trials, false);
  std::size_t next_emit = 0;

  ParallelFor(cfg.trials, cfg.workers, [&](std::size_t i) {
    const auto trial_start = Clock::now();
    Rng rng = Rng(cfg.seed).Split(i);
    TrialResult result;
    result.trial = i;
    result.alphas = SampleDistinctPoints(field, cfg.n, rng);
    const RsCode code(field, cfg.k, result.alphas);
    result.oracle.mode = report.mode;
    // A negative threshold can never be undercut.
    if (threshold > 0) {
      OracleOptions opt;
      opt.mode = report.mode;
      opt.max_distance = threshold;
      opt.strict = true;
      opt.samples = options.samples;
      opt.seed = rng();
      opt.stop_after = 1;
      result.oracle = BadListOracle(code, cfg.L, opt, [&](const BadList& b) {
        result.bad_list = b;
      });
    }
    if (result.bad_list) {
      result.outcome = TrialOutcome::kBadList;
      const auto codewords = Codewords(code, result.bad_list->messages);
      const Hypergraph h = AgreementHypergraph(result.bad_list->y, codewords);
      const SymbolicRim rim = BuildRim(h, cfg.k);
      const PartialAssignment full{result.alphas};
      result.rank_deficient =
          RankConcrete(field, Evaluate(field, rim, full).ToMatrix()) < rim.columns();
      result.subset = ExtractMinimalSubset(result.bad_list->y, codewords, cfg.boosted_k());
      if (result.subset && Cardinality(*result.subset) >= 2) {
        const TypeOrdered sorted = TypeOrder(h.Restrict(*result.subset));
        std::vector<FieldElement> permuted(cfg.n);
        for (std::size_t old = 0; old < cfg.n; ++old) {
          permuted[sorted.permutation[old]] = result.alphas[old];
        }
        result.certificate =
            GetCertificate(field, sorted.h, cfg.k, cfg.r(), permuted, rng());
      }
    }
    result.seconds = SecondsSince(trial_start);
    std::lock_guard<std::mutex> lock(emit_mu);
    report.trials[i] = std::move(result);
    done[i] = true;
    while (next_emit < cfg.trials && done[next_emit]) {
      if (options.on_trial) options.on_trial(report.trials[next_emit]);
      ++next_emit;
    }
  });

  for (const TrialResult& t : report.trials) {
    if (t.outcome == TrialOutcome::kDecodable) {
      ++report.decodable;
    } else {
      ++report.bad;
      report.rank_deficient += t.rank_deficient;
    }
  }
  report.failure_rate = static_cast<double>(report.bad) / static_cast<double>(cfg.trials);
  report.failure_interval = ClopperPearson(report.bad, cfg.trials);
  report.budget =
      ComputeCertificateBudget(cfg.L + 1, cfg.k, BigInt(field.order()), cfg.n, cfg.r(), cfg.L);
  report.seconds = SecondsSince(start);
  return report;
}

// ---- full-length blowup

std::uint64_t ListSize(const RsCode& code, const std::vector<std::vector<std::uint32_t>>& words,
                       const std::vector<FieldElement>& y, std::size_t agreement) {
  (void)code;
  std::uint64_t count = 0;
  for (const auto& w : words) {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) agree += w[i] == y[i].value;
    count += agree >= agreement;
  }
  return count;
}

BlowupResult FullLengthBlowupSearch(const Field& field, std::size_t k, std::size_t agreement,
                                    const BlowupOptions& options) {
  const std::uint64_t q = field.order();
  if (q > kMaxExtensionOrder) throw Error(ErrorCode::kSearchSpaceTooLarge, "field too large");
  if (k < 1 || k > q) throw Error(ErrorCode::kInvalidParameters, "need 1 <= k <= q");
  const std::optional<std::uint64_t> count = MessageCount(q, k);
  if (!count || *count > kMaxExhaustiveMessages) {
    throw Error(ErrorCode::kSearchSpaceTooLarge, "blowup search needs q^k <= 2^16");
  }
  const std::uint64_t Q = *count;
  const std::size_t n = static_cast<std::size_t>(q);
  BlowupResult best;
  best.y.assign(n, Field::Zero());
  if (agreement == 0) {
    best.list_size = Q;
    best.exhaustive = true;
    return best;
  }
  if (agreement > n) {
    best.exhaustive = true;
    return best;
  }
  if (k == 1) {
    // Constants c with at least `agreement` copies in y: fill blocks of that
    // size with distinct values.
    const std::size_t blocks = std::min<std::size_t>(n, n / agreement);
    for (std::size_t i = 0; i < n; ++i) {
      best.y[i] = {static_cast<std::uint32_t>(std::min(i / agreement, blocks - 1))};
    }
    best.list_size = blocks;
    best.exhaustive = true;
    return best;
  }
  std::vector<FieldElement> alphas(n);
  for (std::size_t i = 0; i < n; ++i) alphas[i] = {static_cast<std::uint32_t>(i)};
  const RsCode code(field, k, alphas);
  std::vector<std::vector<std::uint32_t>> words(Q);
  for (std::uint64_t m = 0; m < Q; ++m) words[m] = EncodeIndex(code, m);

  const std::optional<std::uint64_t> free_words = MessageCount(q, n - k);
  const bool fits = free_words && *free_words <= options.exhaustive_budget / (Q * q);
  const OracleMode mode =
      options.mode.value_or(fits ? OracleMode::kExhaustive : OracleMode::kSampled);
  if (mode == OracleMode::kExhaustive) {
    if (!fits) {
      throw Error(ErrorCode::kSearchSpaceTooLarge, "exhaustive blowup search over budget");
    }
    // Odometer over y_{k+1..q} with y_{1..k} = 0; agreement counts per
    // codeword are updated as digits change.
    std::vector<std::uint32_t> y(n, 0);
    std::vector<std::size_t> agree(Q, 0);
    for (std::uint64_t m = 0; m < Q; ++m) {
      for (std::size_t i = 0; i < n; ++i) agree[m] += words[m][i] == 0;
    }
    auto set_digit = [&](std::size_t i, std::uint32_t value) {
      const std::uint32_t old = y[i];
      for (std::uint64_t m = 0; m < Q; ++m) {
        const std::uint32_t w = words[m][i];
        agree[m] += (w == value) - (w == old);
      }
      y[i] = value;
    };
    best.exhaustive = true;
    while (true) {
      ++best.words_examined;
      std::uint64_t size = 0;
      for (std::uint64_t m = 0; m < Q; ++m) size += agree[m] >= agreement;
      if (size > best.list_size || best.words_examined == 1) {
        best.list_size = size;
        for (std::size_t i = 0; i < n; ++i) best.y[i] = {y[i]};
      }
      bool advanced = false;
      for (std::size_t i = n; i-- > k;) {
        if (y[i] + 1 < q) {
          set_digit(i, y[i] + 1);
          advanced = true;
          break;
        }
        set_digit(i, 0);
      }
      if (!advanced) break;
    }
    return best;
  }
  Rng rng(options.seed, 0xB10);
  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    std::vector<FieldElement> y(n);
    for (auto& v : y) v = {static_cast<std::uint32_t>(rng.Below(q))};
    std::uint64_t size = ListSize(code, words, y, agreement);
    ++best.words_examined;
    for (std::size_t sweep = 0; sweep < options.sweeps; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        const FieldElement keep = y[i];
        for (std::uint32_t v = 0; v < q; ++v) {
          if (v == keep.value) continue;
          y[i] = {v};
          const std::uint64_t s = ListSize(code, words, y, agreement);
          ++best.words_examined;
          if (s > size) {
            size = s;
            improved = true;
            break;
          }
          y[i] = keep;
        }
      }
      if (!improved) break;
    }
    if (size > best.list_size || restart == 0) {
      best.list_size = size;
      best.y = y;
    }
  }
  return best;
}

// ---- GM-MDS witness

bool CheckGmMdsWitness(const Field& field, const ZeroPattern& zp, const GmMdsWitness& w) {
  const std::size_t rows = zp.n - zp.k;
  if (w.alphas.size() != zp.n || w.m.rows != rows || w.m.cols != rows) return false;
  if (rows > 0 && Determinant(field, w.m) == Field::Zero()) return false;
  if (rows == 0) return true;
  const RsCode code(field, zp.k, w.alphas);
  const Matrix mh = Multiply(field, w.m, ParityCheckMatrix(code));
  if (!(mh == w.mh)) return false;
  const std::vector<std::uint64_t> sets = zp.rows();
  for (std::size_t l = 0; l < sets.size(); ++l) {
    for (std::size_t i = 0; i < zp.n; ++i) {
      if ((sets[l] >> i & 1) && mh.at(l, i) != Field::Zero()) return false;
    }
  }
  return true;
}

std::optional<GmMdsWitness> GmMdsWitnessSearch(const ZeroPattern& zp, const Field& field,
                                               const GmMdsOptions& options) {
  const std::size_t n = zp.n, k = zp.k;
  if (k < 1 || k > n) throw Error(ErrorCode::kInvalidParameters, "need 1 <= k <= n");
  if (!VerifyGzp(zp)) throw Error(ErrorCode::kInvalidParameters, "not a generic zero pattern");
  if (field.order() < std::max<std::uint64_t>(n, 2 * n - k - 1)) {
    throw Error(ErrorCode::kInvalidParameters, "need q >= max(n, 2n - k - 1)");
  }
  const std::size_t rows = n - k;
  const std::vector<std::uint64_t> sets = zp.rows();
  if (sets.size() > rows) {
    throw Error(ErrorCode::kInvalidParameters, "pattern has more than n - k rows");
  }
  Rng rng(options.seed, 0x63D5);
  if (sets.empty()) {
    GmMdsWitness w;
    w.alphas = SampleDistinctPoints(field, n, rng);
    w.m = Matrix::Identity(rows);
    w.mh = rows == 0 ? Matrix(0, n) : ParityCheckMatrix(RsCode(field, k, w.alphas));
    return w;
  }
  auto random_element = [&] { return FieldElement{static_cast<std::uint32_t>(rng.Below(field.order()))}; };
  for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
    GmMdsWitness w;
    w.alphas = SampleDistinctPoints(field, n, rng);
    const Matrix h = ParityCheckMatrix(RsCode(field, k, w.alphas));
    w.m = Matrix(rows, rows);
    bool ok = true;
    for (std::size_t l = 0; l < rows && ok; ++l) {
      if (l >= sets.size()) {
        for (std::size_t c = 0; c < rows; ++c) w.m.at(l, c) = random_element();
        continue;
      }
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < n; ++i) {
        if (sets[l] >> i & 1) cols.push_back(i);
      }
      // Row vectors v with (v H)_i = 0 for i in S_l: kernel of H[:, S_l]^T.
      Matrix sub(cols.size(), rows);
      for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t c = 0; c < rows; ++c) sub.at(a, c) = h.at(c, cols[a]);
      }
      const auto basis = cols.empty() ? std::vector<std::vector<FieldElement>>{} : Nullspace(field, sub);
      if (cols.empty()) {
        for (std::size_t c = 0; c < rows; ++c) w.m.at(l, c) = random_element();
        continue;
      }
      if (basis.empty()) {
        ok = false;
        break;
      }
      for (const auto& b : basis) {
        const FieldElement coeff = random_element();
        for (std::size_t c = 0; c < rows; ++c) {
          w.m.at(l, c) = field.Add(w.m.at(l, c), field.Mul(coeff, b[c]));
        }
      }
    }
    if (!ok || Determinant(field, w.m) == Field::Zero()) continue;
    w.mh = Multiply(field, w.m, h);
    if (CheckGmMdsWitness(field, zp, w)) return w;
  }
  return std::nullopt;
}

}  // namespace rslist
