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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "rslist/errors.h"
#include "rslist/rim.h"
#include "support.h"

namespace rslist {
namespace {

using testing::BruteForceGenericRank;
using testing::MakeHypergraph;

std::vector<RimRow> DefinitionRows(const Hypergraph& h) {
  std::vector<RimRow> rows;
  for (std::size_t i = 0; i < h.n(); ++i) {
    std::vector<int> v;
    for (int j = 0; j < h.t(); ++j)
      if (h.edge(i) >> j & 1) v.push_back(j);
    for (std::size_t u = 1; u < v.size(); ++u) {
      rows.push_back({i, v[0], v[u] == h.t() - 1 ? -1 : v[u]});
    }
  }
  return rows;
}

TEST(Rim, BuildMatchesDefinition) {
  Rng rng(1);
  for (int it = 0; it < 200; ++it) {
    const Hypergraph h = testing::RandomHypergraph(2 + static_cast<int>(rng.Below(5)),
                                                   rng.Below(9), rng);
    const SymbolicRim m = BuildRim(h, 3);
    ASSERT_EQ(m.rows, DefinitionRows(h));
    ASSERT_EQ(m.columns(), static_cast<std::size_t>(h.t() - 1) * 3);
    std::size_t weight = 0;
    for (VertexSet e : h.edges()) weight += Weight(e);
    ASSERT_EQ(m.rows.size(), weight);
  }
}

TEST(Rim, SmallExampleEntries) {
  // Edge {1,2,3} with t = 3 gives rows (X, -X) and (X, 0) blockwise.
  const Field f = Field::Parse("7");
  const Hypergraph h = MakeHypergraph(3, {{1, 2, 3}});
  const SymbolicRim m = BuildRim(h, 2);
  ASSERT_EQ(m.rows.size(), 2u);
  const Matrix a = Evaluate(f, m, {{f.Element(3)}}).ToMatrix();
  const std::vector<std::uint32_t> expect{1, 3, 6, 4, 1, 3, 0, 0};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(a.data[i].value, expect[i]);
}

TEST(Rim, TypeRankOrder) {
  EXPECT_EQ(TypeRank(3, 0), 1u);
  EXPECT_EQ(TypeRank(3, 0b001), 2u);
  EXPECT_EQ(TypeRank(3, 0b100), 4u);
  EXPECT_EQ(TypeRank(3, 0b011), 5u);
  EXPECT_EQ(TypeRank(3, 0b101), 6u);
  EXPECT_EQ(TypeRank(3, 0b110), 7u);
  EXPECT_EQ(TypeRank(3, 0b111), 8u);
  std::vector<std::uint64_t> all;
  for (VertexSet s = 0; s < 32; ++s) all.push_back(TypeRank(5, s));
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i + 1);
}

TEST(Rim, TypeOrderIsStableSortByType) {
  Rng rng(2);
  for (int it = 0; it < 100; ++it) {
    const Hypergraph h = testing::RandomHypergraph(3, 1 + rng.Below(10), rng);
    const TypeOrdered s = TypeOrder(h);
    ASSERT_TRUE(IsTypeOrdered(s.h));
    for (std::size_t i = 0; i < h.n(); ++i) ASSERT_EQ(s.h.edge(s.permutation[i]), h.edge(i));
    for (std::size_t i = 0; i + 1 < h.n(); ++i) {
      for (std::size_t j = i + 1; j < h.n(); ++j) {
        if (h.edge(i) == h.edge(j)) ASSERT_LT(s.permutation[i], s.permutation[j]);
      }
    }
  }
  EXPECT_FALSE(IsTypeOrdered(MakeHypergraph(3, {{1, 2, 3}, {1, 2}})));
}

TEST(Rim, ExchangeabilityOfSameTypeLabels) {
  Rng rng(3);
  for (int it = 0; it < 100; ++it) {
    const Hypergraph h = testing::RandomHypergraph(4, 8, rng, 0.3);
    std::size_t i = rng.Below(h.n()), j = rng.Below(h.n());
    if (h.edge(i) != h.edge(j)) continue;
    // Swapping variable names X_i <-> X_j in the rows reproduces the matrix.
    std::vector<RimRow> rows = BuildRim(h, 2).rows;
    for (RimRow& r : rows) {
      if (r.edge == i) {
        r.edge = j;
      } else if (r.edge == j) {
        r.edge = i;
      }
    }
    std::vector<RimRow> orig = BuildRim(h, 2).rows;
    std::sort(rows.begin(), rows.end(), [](const RimRow& a, const RimRow& b) {
      return std::tie(a.plus, a.minus, a.edge) < std::tie(b.plus, b.minus, b.edge);
    });
    std::sort(orig.begin(), orig.end(), [](const RimRow& a, const RimRow& b) {
      return std::tie(a.plus, a.minus, a.edge) < std::tie(b.plus, b.minus, b.edge);
    });
    ASSERT_EQ(rows, orig);
  }
}

TEST(Rim, EvaluateMatchesDefinitionAndRankBounds) {
  const Field f = Field::Parse("11");
  Rng rng(4);
  for (int it = 0; it < 200; ++it) {
    const int t = 2 + static_cast<int>(rng.Below(3));
    const std::size_t k = 1 + rng.Below(3);
    const Hypergraph h = testing::RandomHypergraph(t, 1 + rng.Below(8), rng);
    const SymbolicRim m = BuildRim(h, k);
    const auto alphas = SampleDistinctPoints(f, h.n(), rng);
    const EvaluatedRim e = Evaluate(f, m, {alphas});
    ASSERT_TRUE(e.fully_concrete());
    const Matrix a = e.ToMatrix();
    const auto ref = testing::EvaluateRows(f, t, k, m.rows, alphas);
    for (std::size_t r = 0; r < ref.size(); ++r)
      for (std::size_t c = 0; c < m.columns(); ++c) ASSERT_EQ(a.at(r, c), ref[r][c]);
    const std::size_t rank = RankConcrete(f, a);
    ASSERT_EQ(rank, testing::NaiveRank(f, ref));
    ASSERT_EQ(rank, RankConcrete(f, a.Transposed()));
    ASSERT_LE(rank, m.columns());

    if (h.n() > 1) {
      const PartialAssignment half{{alphas.begin(), alphas.begin() + 1}};
      const EvaluatedRim p = Evaluate(f, m, half);
      bool any_symbolic = false;
      for (const auto& row : p.rows) any_symbolic |= !row.concrete;
      ASSERT_EQ(p.fully_concrete(), !any_symbolic);
      if (any_symbolic) {
        ASSERT_THROW(p.ToMatrix(), Error);
      }
    }
  }
}

TEST(Rim, SymbolicRankAgreesWithBruteForce) {
  // q = 7 exceeds (t-1)(k-1) for t <= 3, k <= 3, so the brute-force maximum
  // over F_7 points is the generic rank.
  const Field f = Field::Parse("7");
  Rng rng(5);
  for (int it = 0; it < 150; ++it) {
    const int t = 2 + static_cast<int>(rng.Below(2));
    const std::size_t k = 1 + rng.Below(3);
    const std::size_t n = 1 + rng.Below(5);
    const Hypergraph h = testing::RandomHypergraph(t, n, rng);
    const SymbolicRim m = BuildRim(h, k);
    const std::size_t prefix = rng.Below(n + 1);
    std::vector<FieldElement> fixed;
    for (std::size_t i = 0; i < prefix; ++i) fixed.push_back(f.Element(rng.Below(7)));
    const std::size_t expect = BruteForceGenericRank(f, t, k, n, m.rows, fixed);
    ASSERT_EQ(SymbolicRank(f, t, k, n, m.rows, {fixed}, rng()), expect);
    ASSERT_EQ(IsFullColumnRankSymbolic(f, m, {fixed}, rng()), expect == m.columns());
  }
}

TEST(Rim, ExactDeterminantAgreesWithBruteForce) {
  const Field f = Field::Parse("7");
  Rng rng(6);
  int nonsingular = 0, singular = 0;
  for (int it = 0; it < 300; ++it) {
    const int t = 2 + static_cast<int>(rng.Below(2));
    const std::size_t k = 1 + rng.Below(3);
    const std::size_t cols = static_cast<std::size_t>(t - 1) * k;
    const Hypergraph h = testing::RandomHypergraph(t, 1 + rng.Below(5), rng);
    const SymbolicRim m = BuildRim(h, k);
    if (m.rows.size() < cols) continue;
    std::vector<RimRow> rows = m.rows;
    std::shuffle(rows.begin(), rows.end(), rng);
    rows.resize(cols);
    const std::size_t prefix = rng.Below(h.n() + 1);
    std::vector<FieldElement> fixed;
    for (std::size_t i = 0; i < prefix; ++i) fixed.push_back(f.Element(rng.Below(7)));
    const bool expect = BruteForceGenericRank(f, t, k, h.n(), rows, fixed) == cols;
    ASSERT_EQ(IsNonsingularExact(f, t, k, rows, {fixed}), expect);
    ASSERT_EQ(IsNonsingularSymbolic(f, t, k, h.n(), rows, {fixed}, rng()), expect);
    (expect ? nonsingular : singular)++;
  }
  EXPECT_GT(nonsingular, 10);
  EXPECT_GT(singular, 10);
}

TEST(Rim, SmallestNonsingularSubmatrixIsGreedy) {
  const Field f = Field::Parse("7");
  Rng rng(7);
  for (int it = 0; it < 100; ++it) {
    const int t = 2 + static_cast<int>(rng.Below(2));
    const std::size_t k = 1 + rng.Below(2);
    const Hypergraph h = testing::RandomHypergraph(t, 2 + rng.Below(4), rng);
    const SymbolicRim m = BuildRim(h, k);
    const std::size_t full = BruteForceGenericRank(f, t, k, h.n(), m.rows);
    if (full < m.columns()) {
      try {
        SmallestNonsingularSubmatrix(f, m, rng());
        FAIL() << "expected NoSubmatrix";
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kNoSubmatrix);
      }
      continue;
    }
    std::vector<std::size_t> expect;
    std::vector<RimRow> kept;
    for (std::size_t i = 0; i < m.rows.size() && kept.size() < m.columns(); ++i) {
      kept.push_back(m.rows[i]);
      if (BruteForceGenericRank(f, t, k, h.n(), kept) == kept.size()) {
        expect.push_back(i);
      } else {
        kept.pop_back();
      }
    }
    ASSERT_EQ(SmallestNonsingularSubmatrix(f, m, rng()), expect);
  }
}

TEST(Rim, DeleteRowsDropsFlaggedVariables) {
  const Hypergraph h = MakeHypergraph(3, {{1, 2}, {1, 2, 3}, {2, 3}});
  const SymbolicRim m = BuildRim(h, 1);
  const SymbolicRim d = DeleteRows(m, {false, true, false});
  ASSERT_EQ(d.rows.size(), 2u);
  EXPECT_EQ(d.rows[0].edge, 0u);
  EXPECT_EQ(d.rows[1].edge, 2u);
}

TEST(Rim, PitPointBudget) {
  for (const char* q : {"2", "13", "257", "65537", "2147483647", "2^8"}) {
    const Field f = Field::Parse(q);
    const ExtensionField& ext = f.pit_extension();
    for (double degree : {1.0, 12.0, 400.0}) {
      for (std::size_t rows : {1u, 10u, 1000u}) {
        const std::size_t p = PitRank::PointsFor(ext, degree, rows);
        // Error per wrong rejection is (D/|F|)^p, union bound over rows.
        const double log_error =
            static_cast<double>(p) * (std::log2(degree) - ext.log2_order()) + std::log2(rows);
        EXPECT_LE(log_error, -40.0) << q;
      }
    }
  }
}

TEST(Lemma, RowDeletionRobustnessSmall) {
  const Field f = Field::Parse("13");
  Rng rng(8);
  for (int it = 0; it < 40; ++it) {
    const std::size_t k = 1 + rng.Below(2), lambda = 1 + rng.Below(2);
    const Hypergraph h = testing::RandomWpcHypergraph(3, 2 * (1 + lambda) * k + 2,
                                                      (1 + lambda) * k, rng, 0.7);
    std::vector<bool> removed(h.n(), false);
    const std::size_t b = rng.Below(lambda * k + 1);
    for (std::size_t c = 0; c < b;) {
      const std::size_t i = rng.Below(h.n());
      if (!removed[i]) removed[i] = true, ++c;
    }
    ASSERT_TRUE(IsFullColumnRankSymbolic(f, DeleteRows(BuildRim(h, k), removed), {}, rng()));
  }
}

}  // namespace
}  // namespace rslist
