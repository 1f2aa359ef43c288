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

#ifndef RSLIST_CODES_H_
#define RSLIST_CODES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rslist/field.h"
#include "rslist/linalg.h"

namespace rslist {

// Dense polynomial, coeffs[i] is the coefficient of X^i.
struct Polynomial {
  std::vector<FieldElement> coeffs;

  // -1 for the zero polynomial.
  int degree() const;
};

FieldElement Evaluate(const Field& field, const Polynomial& f, FieldElement x);

struct Codeword {
  std::vector<FieldElement> symbols;
  std::optional<Polynomial> provenance;
};

// RS_{n,k}(alpha_1..alpha_n): evaluations of polynomials of degree < k.
class RsCode {
 public:
  RsCode(Field field, std::size_t k, std::vector<FieldElement> alphas);

  // Evaluation points drawn uniformly among distinct n-tuples.
  static RsCode RandomlyPunctured(const Field& field, std::size_t n, std::size_t k,
                                  std::uint64_t seed);

  const Field& field() const { return field_; }
  std::size_t n() const { return alphas_.size(); }
  std::size_t k() const { return k_; }
  const std::vector<FieldElement>& alphas() const { return alphas_; }

  // q^k; throws SearchSpaceTooLarge beyond 2^62.
  std::uint64_t num_messages() const;

  // Message polynomial whose coefficients are the base-q digits of index.
  Polynomial MessageFromIndex(std::uint64_t index) const;

 private:
  Field field_;
  std::size_t k_;
  std::vector<FieldElement> alphas_;
};

Codeword Encode(const RsCode& code, const Polynomial& message);

std::size_t HammingDistance(std::span<const FieldElement> x, std::span<const FieldElement> y);

// [1, alpha, ..., alpha^(k-1)]
std::vector<FieldElement> VandermondeRow(const Field& field, FieldElement alpha, std::size_t k);

// k x n matrix whose rows span the code: G[j][i] = alpha_i^j.
Matrix GeneratorMatrix(const RsCode& code);

// beta_i = prod_{j != i} (alpha_i - alpha_j)^{-1}
std::vector<FieldElement> ParityCheckMultipliers(const RsCode& code);

// (n-k) x n matrix H with H[l][i] = beta_i alpha_i^l. Checked against the
// generator matrix before returning.
Matrix ParityCheckMatrix(const RsCode& code);

}  // namespace rslist

#endif  // RSLIST_CODES_H_
