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

#include "rslist/codes.h"

#include <algorithm>
#include <set>
#include <string>

namespace rslist {

int Polynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i].value != 0) return i;
  }
  return -1;
}

FieldElement Evaluate(const Field& F, const Polynomial& f, FieldElement x) {
  std::uint32_t acc = 0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    acc = F.AddRaw(F.MulRaw(acc, x.value), F.Element(it->value).value);
  }
  return {acc};
}

RsCode::RsCode(Field field, std::size_t k, std::vector<FieldElement> alphas)
    : field_(std::move(field)), k_(k), alphas_(std::move(alphas)) {
  const std::size_t n = alphas_.size();
  if (k_ < 1 || k_ > n || n > field_.order()) {
    throw Error(ErrorCode::kInvalidParameters,
                "need 1 <= k <= n <= q (k=" + std::to_string(k_) + ", n=" + std::to_string(n) +
                    ")");
  }
  std::set<std::uint32_t> seen;
  for (FieldElement a : alphas_) {
    field_.Element(a.value);
    if (!seen.insert(a.value).second) {
      throw Error(ErrorCode::kInvalidParameters, "evaluation points must be pairwise distinct");
    }
  }
}

RsCode RsCode::RandomlyPunctured(const Field& field, std::size_t n, std::size_t k,
                                 std::uint64_t seed) {
  return RsCode(field, k, SampleDistinctPoints(field, n, seed));
}

std::uint64_t RsCode::num_messages() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    if (count > (std::uint64_t{1} << 62) / field_.order()) {
      throw Error(ErrorCode::kSearchSpaceTooLarge, "q^k exceeds 2^62");
    }
    count *= field_.order();
  }
  return count;
}

Polynomial RsCode::MessageFromIndex(std::uint64_t index) const {
  Polynomial f;
  f.coeffs.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    f.coeffs[i] = {static_cast<std::uint32_t>(index % field_.order())};
    index /= field_.order();
  }
  return f;
}

Codeword Encode(const RsCode& code, const Polynomial& message) {
  if (message.degree() >= static_cast<int>(code.k())) {
    throw Error(ErrorCode::kMessageTooLong, "message degree " + std::to_string(message.degree()) +
                                                " is not below k=" + std::to_string(code.k()));
  }
  Codeword c;
  c.symbols.reserve(code.n());
  for (FieldElement a : code.alphas()) c.symbols.push_back(Evaluate(code.field(), message, a));
  c.provenance = message;
  return c;
}

std::size_t HammingDistance(std::span<const FieldElement> x, std::span<const FieldElement> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kDimensionError, "vectors of length " + std::to_string(x.size()) +
                                                " and " + std::to_string(y.size()));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::vector<FieldElement> VandermondeRow(const Field& F, FieldElement alpha, std::size_t k) {
  F.Element(alpha.value);
  std::vector<FieldElement> row(k);
  std::uint32_t x = 1;
  for (std::size_t j = 0; j < k; ++j) {
    row[j] = {x};
    x = F.MulRaw(x, alpha.value);
  }
  return row;
}

Matrix GeneratorMatrix(const RsCode& code) {
  Matrix g(code.k(), code.n());
  for (std::size_t i = 0; i < code.n(); ++i) {
    const auto v = VandermondeRow(code.field(), code.alphas()[i], code.k());
    for (std::size_t j = 0; j < code.k(); ++j) g.at(j, i) = v[j];
  }
  return g;
}

std::vector<FieldElement> ParityCheckMultipliers(const RsCode& code) {
  const Field& F = code.field();
  const auto& a = code.alphas();
  std::vector<FieldElement> beta(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) {
    std::uint32_t prod = 1;
    for (std::size_t j = 0; j < code.n(); ++j) {
      if (j != i) prod = F.MulRaw(prod, F.SubRaw(a[i].value, a[j].value));
    }
    beta[i] = {F.InvRaw(prod)};
  }
  return beta;
}

Matrix ParityCheckMatrix(const RsCode& code) {
  const Field& F = code.field();
  const std::size_t rows = code.n() - code.k();
  const auto beta = ParityCheckMultipliers(code);
  Matrix h(rows, code.n());
  for (std::size_t i = 0; i < code.n(); ++i) {
    std::uint32_t x = beta[i].value;
    for (std::size_t l = 0; l < rows; ++l) {
      h.at(l, i) = {x};
      x = F.MulRaw(x, code.alphas()[i].value);
    }
  }
  const Matrix check = Multiply(F, h, GeneratorMatrix(code).Transposed());
  if (std::any_of(check.data.begin(), check.data.end(),
                  [](FieldElement e) { return e.value != 0; })) {
    throw Error(ErrorCode::kInvariantViolation, "parity-check matrix does not annihilate the code");
  }
  return h;
}

}  // namespace rslist
