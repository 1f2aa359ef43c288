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

#ifndef RSLIST_LINALG_H_
#define RSLIST_LINALG_H_

#include <cstddef>
#include <vector>

#include "rslist/field.h"

namespace rslist {

// Dense row-major matrix over F_q.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FieldElement> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  static Matrix Identity(std::size_t n);

  FieldElement& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  Matrix Transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

// Rank by division-free (fraction-free) elimination.
std::size_t Rank(const Field& field, Matrix m);

FieldElement Determinant(const Field& field, Matrix m);

// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<FieldElement>> Nullspace(const Field& field, Matrix m);

Matrix Multiply(const Field& field, const Matrix& a, const Matrix& b);

std::vector<FieldElement> Multiply(const Field& field, const Matrix& a,
                                   const std::vector<FieldElement>& v);

}  // namespace rslist

#endif  // RSLIST_LINALG_H_
