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

#include "rslist/linalg.h"

#include <utility>

namespace rslist {

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Field::One();
  return m;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::size_t Rank(const Field& F, Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, c).value == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const std::uint32_t p = m.at(rank, c).value;
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      const std::uint32_t a = m.at(i, c).value;
      if (a == 0) continue;
      // row_i <- p * row_i - a * row_rank
      for (std::size_t j = c; j < m.cols; ++j) {
        m.at(i, j).value =
            F.SubRaw(F.MulRaw(p, m.at(i, j).value), F.MulRaw(a, m.at(rank, j).value));
      }
    }
    ++rank;
  }
  return rank;
}

FieldElement Determinant(const Field& F, Matrix m) {
  if (m.rows != m.cols) throw Error(ErrorCode::kDimensionError, "determinant of non-square matrix");
  const std::size_t n = m.rows;
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m.at(pivot, c).value == 0) ++pivot;
    if (pivot == n) return Field::Zero();
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = F.NegRaw(det);
    }
    const std::uint32_t p = m.at(c, c).value;
    det = F.MulRaw(det, p);
    const std::uint32_t inv = F.InvRaw(p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint32_t f = F.MulRaw(m.at(i, c).value, inv);
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        m.at(i, j).value = F.SubRaw(m.at(i, j).value, F.MulRaw(f, m.at(c, j).value));
      }
    }
  }
  return {det};
}

std::vector<std::vector<FieldElement>> Nullspace(const Field& F, Matrix m) {
  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, c).value == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    const std::uint32_t inv = F.InvRaw(m.at(r, c).value);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j).value = F.MulRaw(m.at(r, j).value, inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const std::uint32_t f = m.at(i, c).value;
      if (f == 0) continue;
      for (std::size_t j = 0; j < m.cols; ++j) {
        m.at(i, j).value = F.SubRaw(m.at(i, j).value, F.MulRaw(f, m.at(r, j).value));
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols);
    v[free] = Field::One();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = {F.NegRaw(m.at(i, free).value)};
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Multiply(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::kDimensionError, "matrix product shape mismatch");
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < a.cols; ++l) {
      const std::uint32_t x = a.at(i, l).value;
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j).value = F.AddRaw(out.at(i, j).value, F.MulRaw(x, b.at(l, j).value));
      }
    }
  return out;
}

std::vector<FieldElement> Multiply(const Field& F, const Matrix& a,
                                   const std::vector<FieldElement>& v) {
  if (a.cols != v.size()) throw Error(ErrorCode::kDimensionError, "matrix-vector shape mismatch");
  std::vector<FieldElement> out(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::uint32_t s = 0;
    for (std::size_t j = 0; j < a.cols; ++j) s = F.AddRaw(s, F.MulRaw(a.at(i, j).value, v[j].value));
    out[i] = {s};
  }
  return out;
}

}  // namespace rslist
