// Copyright 2026 The LefForge Authors
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

#ifndef LEFFORGE_LINALG_HPP
#define LEFFORGE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lefforge/rational.hpp"

namespace lefforge {

using Vector = std::vector<Rational>;

bool is_zero_vector(const Vector& v);

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;
  std::size_t rank() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form of a list of vectors: pivot entries are 1 and
/// every other row vanishes on each pivot column. Pivots are increasing.
struct Echelon {
  std::size_t dim = 0;
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return rows.size(); }
  /// v minus its projection along the pivots; zero iff v lies in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }
};

Echelon echelonize(const std::vector<Vector>& vectors, std::size_t dim);
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim);

/// Basis of {v : M v = 0}.
std::vector<Vector> nullspace(const Matrix& m);

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Incremental sparse Gaussian elimination. Columns are ordered so that a
/// smaller index is a larger monomial; a row's pivot is its smallest column.
class SparseEchelon {
 public:
  explicit SparseEchelon(int columns);

  int columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return static_cast<int>(rows_.size()) == columns_; }

  /// Reduces `row` by the current pivots and keeps it if nonzero.
  /// Returns true when the rank grew.
  bool insert(const SparseRow& row);

  /// Back-substitutes so the rows are fully reduced, each with pivot
  /// coefficient 1, and sorts them by pivot. Call once after the last insert.
  void finalize();

  const std::vector<SparseRow>& rows() const noexcept { return rows_; }
  /// Pivot row index for each column, or -1.
  const std::vector<int>& pivot_row() const noexcept { return pivot_row_; }

 private:
  int columns_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
  Vector scratch_;  // dense work row, all zero between calls
};

/// Rank of the rows reduced modulo the prime 2^61 - 1, or nullopt when some
/// denominator vanishes there. Never exceeds the rank over Q, so a full
/// modular rank proves full rational rank.
std::optional<std::size_t> modular_rank(const std::vector<SparseRow>& rows, int columns);

/// Reduced row echelon form (pivot coefficient 1, rows sorted by pivot).
struct RowReduced {
  std::vector<SparseRow> rows;
  std::vector<int> pivot_row;  // per column, or -1
};

/// The RREF of the row space, computed modulo several word-size primes and
/// lifted by CRT and rational reconstruction. The lift is verified exactly:
/// it must be in echelon form and reproduce every input row, which makes it
/// the rational RREF. nullopt if the lift does not settle within the prime
/// budget; callers then fall back to SparseEchelon.
std::optional<RowReduced> multimodular_rref(const std::vector<SparseRow>& rows, int columns,
                                            int max_primes = 64);

/// Exact rank of sparse rows: modular certificate for full rank, then the
/// multimodular RREF, then plain elimination.
std::size_t sparse_rank(const std::vector<SparseRow>& rows, int columns);

}  // namespace lefforge

#endif  // LEFFORGE_LINALG_HPP
