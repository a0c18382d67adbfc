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

#include "lefforge/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "lefforge/errors.hpp"

namespace lefforge {

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ValidationError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ValidationError("matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

std::size_t Matrix::rank() const {
  std::vector<Vector> rows(rows_, Vector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = (*this)(r, c);
  }
  return rank_of(rows, cols_);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Vector Echelon::reduce(Vector v) const {
  if (v.size() != dim) throw ValidationError("vector length mismatch in span test");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Rational c = v[pivots[k]];
    if (c.is_zero()) continue;
    const Vector& row = rows[k];
    for (std::size_t j = pivots[k]; j < dim; ++j) {
      if (!row[j].is_zero()) v[j].sub_mul(c, row[j]);
    }
  }
  return v;
}

Echelon echelonize(const std::vector<Vector>& vectors, std::size_t dim) {
  Echelon e;
  e.dim = dim;
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) throw ValidationError("vector length mismatch in echelonize");
    if (!is_zero_vector(v)) rows.push_back(v);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = Rational(1) / rows[r][col];
    for (std::size_t j = col; j < dim; ++j) {
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const Rational c = rows[i][col];
      for (std::size_t j = col; j < dim; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j].sub_mul(c, rows[r][j]);
      }
    }
    e.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim) {
  return echelonize(vectors, dim).rank();
}

std::vector<Vector> nullspace(const Matrix& m) {
  std::vector<Vector> rows(m.rows(), Vector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  const Echelon e = echelonize(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Rational(1);
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- sparse -----------------------------------------------------------------

SparseEchelon::SparseEchelon(int columns)
    : columns_(columns), pivot_row_(static_cast<std::size_t>(columns), -1) {}

namespace {

// Dense scratch row: values plus the smallest possibly nonzero column.
void load(Vector& scratch, const SparseRow& row) {
  for (const auto& [col, val] : row) scratch[static_cast<std::size_t>(col)] += val;
}

// Eliminates every pivot column of `pivot_row` from the scratch row, looking
// only at columns strictly greater than `after`; then moves the surviving
// entries into `out` and clears the scratch.
void reduce_and_extract(Vector& scratch, int after, const std::vector<SparseRow>& rows,
                        const std::vector<int>& pivot_row, SparseRow& out) {
  out.clear();
  const int columns = static_cast<int>(scratch.size());
  for (int col = after + 1; col < columns; ++col) {
    Rational& v = scratch[static_cast<std::size_t>(col)];
    if (v.is_zero()) continue;
    const int p = pivot_row[static_cast<std::size_t>(col)];
    if (p < 0) {
      out.emplace_back(col, std::move(v));
      v = Rational();
      continue;
    }
    const Rational c = v;
    for (const auto& [k, val] : rows[static_cast<std::size_t>(p)]) {
      scratch[static_cast<std::size_t>(k)].sub_mul(c, val);
    }
  }
}

}  // namespace

bool SparseEchelon::insert(const SparseRow& row) {
  if (full()) return false;
  for (const auto& [col, val] : row) {
    if (col < 0 || col >= columns_) throw ValidationError("sparse column out of range");
  }
  if (scratch_.size() != static_cast<std::size_t>(columns_)) scratch_.assign(static_cast<std::size_t>(columns_), Rational());
  load(scratch_, row);
  SparseRow out;
  reduce_and_extract(scratch_, -1, rows_, pivot_row_, out);
  if (out.empty()) return false;
  const Rational inv = Rational(1) / out.front().second;
  for (auto& [col, val] : out) val *= inv;
  pivot_row_[static_cast<std::size_t>(out.front().first)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(out));
  return true;
}

void SparseEchelon::finalize() {
  std::sort(rows_.begin(), rows_.end(),
            [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
  std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    pivot_row_[static_cast<std::size_t>(rows_[i].front().first)] = static_cast<int>(i);
  }
  if (scratch_.size() != static_cast<std::size_t>(columns_)) scratch_.assign(static_cast<std::size_t>(columns_), Rational());
  // Rows below (larger pivots) are fully reduced before they are used.
  for (std::size_t k = rows_.size(); k-- > 0;) {
    SparseRow& row = rows_[k];
    const int pivot = row.front().first;
    bool dirty = false;
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (pivot_row_[static_cast<std::size_t>(row[j].first)] >= 0) {
        dirty = true;
        break;
      }
    }
    if (!dirty) continue;
    const Rational lead = row.front().second;
    load(scratch_, SparseRow(row.begin() + 1, row.end()));
    SparseRow tail;
    reduce_and_extract(scratch_, pivot, rows_, pivot_row_, tail);
    row.assign(1, {pivot, lead});
    row.insert(row.end(), tail.begin(), tail.end());
  }
  scratch_.clear();
  scratch_.shrink_to_fit();
}

// --- modular rank -------------------------------------------------------------

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(prod & kPrime) + static_cast<std::uint64_t>(prod >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(kPrime));
}

}  // namespace

std::optional<std::size_t> modular_rank(const std::vector<SparseRow>& rows, int columns) {
  using ModRow = std::vector<std::pair<int, std::uint64_t>>;
  std::vector<ModRow> basis;
  std::vector<int> pivot(static_cast<std::size_t>(columns), -1);
  std::vector<std::uint64_t> work(static_cast<std::size_t>(columns), 0);
  for (const auto& row : rows) {
    if (static_cast<int>(basis.size()) == columns) break;
    if (row.empty()) continue;
    int lo = columns;
    for (const auto& [col, val] : row) {
      const std::uint64_t den = reduce_mpz(val.denominator());
      if (den == 0) return std::nullopt;
      work[static_cast<std::size_t>(col)] = mul_mod(reduce_mpz(val.numerator()), pow_mod(den, kPrime - 2));
      lo = std::min(lo, col);
    }
    // Eliminate left to right; fill-in only lands right of the current column.
    int lead = -1;
    for (int col = lo; col < columns; ++col) {
      const std::uint64_t c = work[static_cast<std::size_t>(col)];
      if (c == 0) continue;
      const int p = pivot[static_cast<std::size_t>(col)];
      if (p < 0) {
        if (lead < 0) lead = col;
        continue;
      }
      for (const auto& [k, v] : basis[static_cast<std::size_t>(p)]) {
        auto& slot = work[static_cast<std::size_t>(k)];
        const std::uint64_t sub = mul_mod(c, v);
        slot = slot >= sub ? slot - sub : slot + kPrime - sub;
      }
    }
    if (lead < 0) continue;
    const std::uint64_t inv = pow_mod(work[static_cast<std::size_t>(lead)], kPrime - 2);
    ModRow kept;
    for (int col = lead; col < columns; ++col) {
      auto& slot = work[static_cast<std::size_t>(col)];
      if (slot) kept.emplace_back(col, mul_mod(slot, inv));
      slot = 0;
    }
    pivot[static_cast<std::size_t>(lead)] = static_cast<int>(basis.size());
    basis.push_back(std::move(kept));
  }
  return basis.size();
}

std::size_t sparse_rank(const std::vector<SparseRow>& rows, int columns) {
  if (columns == 0) return 0;
  if (rows.size() >= static_cast<std::size_t>(columns) &&
      modular_rank(rows, columns) == static_cast<std::size_t>(columns)) {
    return static_cast<std::size_t>(columns);
  }
  if (auto rref = multimodular_rref(rows, columns)) return rref->rows.size();
  SparseEchelon ech(columns);
  for (const auto& row : rows) {
    if (ech.full()) break;
    ech.insert(row);
  }
  return ech.rank();
}

}  // namespace lefforge
