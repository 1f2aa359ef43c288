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

#include <cmath>
#include <map>
#include <set>

#include "rslist/errors.h"
#include "rslist/field.h"
#include "rslist/rng.h"

namespace rslist {
namespace {

// Schoolbook product of base-p digit vectors reduced by the modulus.
std::uint32_t ReferenceMul(const FieldSpec& s, std::uint32_t a, std::uint32_t b) {
  const std::uint64_t p = s.characteristic;
  const int m = s.degree;
  std::vector<std::uint64_t> x(m), y(m), prod(2 * m, 0);
  for (int i = 0; i < m; ++i, a /= p, b /= p) {
    x[i] = a % p;
    y[i] = b % p;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (int d = 2 * m - 1; d >= m; --d) {
    const std::uint64_t c = prod[d];
    for (int i = 0; i <= m; ++i) {
      prod[d - m + i] = (prod[d - m + i] + (p - c) * s.modulus[i]) % p;
    }
  }
  std::uint32_t out = 0;
  for (int i = m - 1; i >= 0; --i) out = static_cast<std::uint32_t>(out * p + prod[i]);
  return out;
}

class FieldAxioms : public ::testing::TestWithParam<const char*> {};

TEST_P(FieldAxioms, RandomTriples) {
  const Field f = Field::Parse(GetParam());
  Rng rng(42);
  for (int it = 0; it < 10000; ++it) {
    const FieldElement a = f.Element(rng.Below(f.order()));
    const FieldElement b = f.Element(rng.Below(f.order()));
    const FieldElement c = f.Element(rng.Below(f.order()));
    ASSERT_EQ(f.Mul(f.Mul(a, b), c), f.Mul(a, f.Mul(b, c)));
    ASSERT_EQ(f.Add(f.Add(a, b), c), f.Add(a, f.Add(b, c)));
    ASSERT_EQ(f.Mul(a, f.Add(b, c)), f.Add(f.Mul(a, b), f.Mul(a, c)));
    ASSERT_EQ(f.Mul(a, b), f.Mul(b, a));
    ASSERT_EQ(f.Add(a, f.Neg(a)), Field::Zero());
    ASSERT_EQ(f.Sub(f.Add(a, b), b), a);
    if (a != Field::Zero()) ASSERT_EQ(f.Mul(a, f.Inv(a)), Field::One());
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values("2", "11", "257", "65537", "2147483647", "4294967291",
                                           "2^4/10011", "2^8", "3^3", "11^2/1,0,1", "2^16", "5^4"));

TEST(Field, ExtensionMatchesSchoolbook) {
  for (const char* text : {"2^4/10011", "3^2/101", "2^8", "7^3"}) {
    const Field f = Field::Parse(text);
    Rng rng(3);
    for (int it = 0; it < 2000; ++it) {
      const std::uint32_t a = static_cast<std::uint32_t>(rng.Below(f.order()));
      const std::uint32_t b = static_cast<std::uint32_t>(rng.Below(f.order()));
      ASSERT_EQ(f.Mul(f.Element(a), f.Element(b)).value, ReferenceMul(f.spec(), a, b)) << text;
    }
  }
}

TEST(Field, MultiplicativeGroupOrder) {
  for (const char* text : {"13", "2^4/10011", "3^3"}) {
    const Field f = Field::Parse(text);
    for (std::uint64_t v = 1; v < f.order(); ++v) {
      EXPECT_EQ(f.Pow(f.Element(v), f.order() - 1), Field::One());
    }
  }
}

TEST(Field, SpecParsing) {
  EXPECT_EQ(ParseFieldSpec("13").order(), 13u);
  const FieldSpec s = ParseFieldSpec("2^4/10011");
  EXPECT_EQ(s.degree, 4);
  EXPECT_EQ(s.modulus, (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(FormatFieldSpec(s), "2^4/10011");
  EXPECT_EQ(ParseFieldSpec(FormatFieldSpec(ParseFieldSpec("11^2/1,0,1"))),
            ParseFieldSpec("11^2/1,0,1"));
  for (const char* bad : {"", "12", "1", "x", "2^4/10001", "2^4/1001", "2^0", "2^4/20011",
                          "4294967296", "2^21"}) {
    try {
      Field::Parse(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidFieldSpec) << bad;
    }
  }
}

TEST(Field, RejectsOutOfRangeAndZeroInverse) {
  const Field f = Field::Parse("7");
  EXPECT_THROW(f.Element(7), Error);
  try {
    f.Inv(Field::Zero());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(Field, SampleDistinctPointsMarginalUniform) {
  for (const char* text : {"13", "2^6"}) {
    const Field f = Field::Parse(text);
    const std::size_t n = 5;
    const int draws = 100000;
    std::vector<std::vector<int>> counts(n, std::vector<int>(f.order(), 0));
    Rng rng(9);
    for (int d = 0; d < draws; ++d) {
      const auto pts = SampleDistinctPoints(f, n, rng);
      std::set<FieldElement> distinct(pts.begin(), pts.end());
      ASSERT_EQ(distinct.size(), n);
      for (std::size_t i = 0; i < n; ++i) ++counts[i][pts[i].value];
    }
    const double p = 1.0 / static_cast<double>(f.order());
    const double mean = draws * p;
    const double sigma = std::sqrt(draws * p * (1 - p));
    for (std::size_t i = 0; i < n; ++i) {
      for (int c : counts[i]) EXPECT_LE(std::abs(c - mean), 4 * sigma) << text;
    }
  }
}

TEST(Field, SampleDistinctPointsLargeFieldAndLimits) {
  const Field f = Field::Parse("2147483647");
  const auto a = SampleDistinctPoints(f, 50, 1);
  EXPECT_EQ(a, SampleDistinctPoints(f, 50, 1));
  EXPECT_EQ(std::set<FieldElement>(a.begin(), a.end()).size(), 50u);
  try {
    SampleDistinctPoints(Field::Parse("5"), 6, 1);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotEnoughPoints);
  }
  EXPECT_EQ(SampleDistinctPoints(Field::Parse("5"), 5, 1).size(), 5u);
}

TEST(Rng, SplitStreamsAreReproducibleAndDistinct) {
  Rng a = Rng(5).Split(3), b = Rng(5).Split(3), c = Rng(5).Split(4);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    seen.insert(x);
    seen.insert(c());
  }
  EXPECT_EQ(seen.size(), 200u);
}

TEST(ExtensionField, PitExtensionIsLargeAndClosed) {
  const Field f = Field::Parse("257");
  const ExtensionField& e = f.pit_extension();
  EXPECT_GE(e.log2_order(), 48.0);
  EXPECT_TRUE(IsIrreducible(f, e.modulus()));
  Rng rng(1);
  const int d = e.degree();
  std::vector<std::uint32_t> x(d), y(d), xy(d), yx(d), inv_check(d);
  for (int it = 0; it < 200; ++it) {
    e.Random(rng, x.data());
    e.Random(rng, y.data());
    e.Mul(x.data(), y.data(), xy.data());
    e.Mul(y.data(), x.data(), yx.data());
    ASSERT_EQ(xy, yx);
    if (!e.IsZero(x.data()) && !e.IsZero(y.data())) ASSERT_FALSE(e.IsZero(xy.data()));
  }
}

}  // namespace
}  // namespace rslist
