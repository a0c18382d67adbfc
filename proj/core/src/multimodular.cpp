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

// Multimodular reduced row echelon form.
//
// Exact elimination over Q suffers from coefficient swell even when the final
// RREF has small entries, which is the normal situation for the ideal pieces
// built here. Reducing modulo 31-bit primes keeps every intermediate value in
// a machine word; the rational answer is recovered entrywise and then checked
// exactly, so nothing is taken on trust from the modular images.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "lefforge/linalg.hpp"

namespace lefforge {
namespace {

using u64 = std::uint64_t;

// Primes below 2^31, descending, generated on demand.
u64 nth_prime(std::size_t i) {
  static std::vector<u64> primes;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  mpz_class candidate = primes.empty() ? mpz_class((1UL << 31) - 1) : mpz_class(primes.back() - 2);
  while (primes.size() <= i) {
    while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0) candidate -= 2;
    primes.push_back(candidate.get_ui());
    candidate -= 2;
  }
  return primes[i];
}

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = a * a % p) {
    if (e & 1) r = r * a % p;
  }
  return r;
}

// One modular image: pivot columns (ascending) and, for each pivot row, its
// entries on the non-pivot columns.
struct ModImage {
  std::vector<int> pivots;
  std::vector<std::vector<u64>> free_entries;
};

std::optional<ModImage> reduce_mod(const std::vector<SparseRow>& rows, int columns, u64 p) {
  using ModRow = std::vector<std::pair<int, u64>>;
  std::vector<ModRow> basis;
  std::vector<int> pivot(static_cast<std::size_t>(columns), -1);
  std::vector<u64> work(static_cast<std::size_t>(columns), 0);

  for (const auto& row : rows) {
    if (static_cast<int>(basis.size()) == columns) break;
    if (row.empty()) continue;
    for (const auto& [col, val] : row) {
      const u64 den = mpz_fdiv_ui(val.raw().get_den_mpz_t(), p);
      if (den == 0) return std::nullopt;
      const u64 num = mpz_fdiv_ui(val.raw().get_num_mpz_t(), p);
      work[static_cast<std::size_t>(col)] = num * pow_mod(den, p - 2, p) % p;
    }
    int lead = -1;
    for (int col = row.front().first; col < columns; ++col) {
      const u64 c = work[static_cast<std::size_t>(col)];
      if (c == 0) continue;
      const int b = pivot[static_cast<std::size_t>(col)];
      if (b < 0) {
        if (lead < 0) lead = col;
        continue;
      }
      for (const auto& [k, v] : basis[static_cast<std::size_t>(b)]) {
        auto& slot = work[static_cast<std::size_t>(k)];
        slot = (slot + p - c * v % p) % p;
      }
    }
    if (lead < 0) continue;
    const u64 inv = pow_mod(work[static_cast<std::size_t>(lead)], p - 2, p);
    ModRow kept;
    for (int col = lead; col < columns; ++col) {
      auto& slot = work[static_cast<std::size_t>(col)];
      if (slot) kept.emplace_back(col, slot * inv % p);
      slot = 0;
    }
    pivot[static_cast<std::size_t>(lead)] = static_cast<int>(basis.size());
    basis.push_back(std::move(kept));
  }

  // Back substitution, largest pivot first, so every row used for a
  // reduction is already fully reduced.
  ModImage img;
  for (int col = 0; col < columns; ++col)
    if (pivot[static_cast<std::size_t>(col)] >= 0) img.pivots.push_back(col);
  std::vector<int> free_index(static_cast<std::size_t>(columns), -1);
  int free_count = 0;
  for (int col = 0; col < columns; ++col)
    if (pivot[static_cast<std::size_t>(col)] < 0) free_index[static_cast<std::size_t>(col)] = free_count++;

  img.free_entries.assign(img.pivots.size(), {});
  for (std::size_t i = img.pivots.size(); i-- > 0;) {
    const int lead = img.pivots[i];
    auto& row = basis[static_cast<std::size_t>(pivot[static_cast<std::size_t>(lead)])];
    for (const auto& [k, v] : row) work[static_cast<std::size_t>(k)] = v;
    for (int col = lead + 1; col < columns; ++col) {
      const u64 c = work[static_cast<std::size_t>(col)];
      if (c == 0 || pivot[static_cast<std::size_t>(col)] < 0) continue;
      for (const auto& [k, v] : basis[static_cast<std::size_t>(pivot[static_cast<std::size_t>(col)])]) {
        auto& slot = work[static_cast<std::size_t>(k)];
        slot = (slot + p - c * v % p) % p;
      }
    }
    ModRow reduced;
    std::vector<u64> entries(static_cast<std::size_t>(free_count), 0);
    for (int col = lead; col < columns; ++col) {
      auto& slot = work[static_cast<std::size_t>(col)];
      if (slot) {
        reduced.emplace_back(col, slot);
        if (free_index[static_cast<std::size_t>(col)] >= 0)
          entries[static_cast<std::size_t>(free_index[static_cast<std::size_t>(col)])] = slot;
      }
      slot = 0;
    }
    row = std::move(reduced);
    img.free_entries[i] = std::move(entries);
  }
  return img;
}

// Rank first, then the lexicographically smallest pivot set: an unlucky
// prime can only lose rank or push pivots to the right.
bool better(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

// Wang's rational reconstruction: n/d == u mod m with |n|, d <= sqrt(m/2).
std::optional<mpq_class> reconstruct(const mpz_class& u, const mpz_class& m, const mpz_class& bound) {
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace

std::optional<RowReduced> multimodular_rref(const std::vector<SparseRow>& rows, int columns,
                                            int max_primes) {
  std::vector<int> pivots;
  bool have_reference = false;
  std::vector<std::vector<mpz_class>> residue;
  mpz_class modulus;
  std::vector<int> free_cols;

  for (int k = 0; k < max_primes; ++k) {
    const u64 p = nth_prime(static_cast<std::size_t>(k));
    auto img = reduce_mod(rows, columns, p);
    if (!img) continue;
    if (!have_reference || better(img->pivots, pivots)) {
      // New reference; residues gathered for another pivot set are useless.
      have_reference = true;
      pivots = img->pivots;
      modulus = 1;
      free_cols.clear();
      for (int col = 0, i = 0; col < columns; ++col) {
        if (i < static_cast<int>(pivots.size()) && pivots[static_cast<std::size_t>(i)] == col) {
          ++i;
        } else {
          free_cols.push_back(col);
        }
      }
      residue.assign(pivots.size(), std::vector<mpz_class>(free_cols.size()));
    } else if (img->pivots != pivots) {
      continue;
    }

    // Garner step: x <- x + M * ((r - x) / M mod p).
    const u64 m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const u64 m_inv = pow_mod(m_mod, p - 2, p);
    for (std::size_t i = 0; i < residue.size(); ++i)
      for (std::size_t s = 0; s < free_cols.size(); ++s) {
        mpz_class& x = residue[i][s];
        const u64 x_mod = mpz_fdiv_ui(x.get_mpz_t(), p);
        const u64 r = img->free_entries[i][s];
        const u64 h = (r + p - x_mod) % p * m_inv % p;
        if (h) x += modulus * static_cast<unsigned long>(h);
      }
    modulus *= static_cast<unsigned long>(p);

    // Try to lift; any entry that does not reconstruct means more primes.
    mpz_class bound;
    mpz_class half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    RowReduced out;
    out.pivot_row.assign(static_cast<std::size_t>(columns), -1);
    bool lifted = true;
    for (std::size_t i = 0; i < residue.size() && lifted; ++i) {
      SparseRow row;
      row.emplace_back(pivots[i], Rational(1));
      for (std::size_t s = 0; s < free_cols.size(); ++s) {
        if (residue[i][s] == 0) continue;
        auto q = reconstruct(residue[i][s], modulus, bound);
        if (!q) {
          lifted = false;
          break;
        }
        // Echelon form: nothing left of the pivot.
        if (free_cols[s] < pivots[i]) {
          lifted = false;
          break;
        }
        row.emplace_back(free_cols[s], Rational(std::move(*q)));
      }
      out.pivot_row[static_cast<std::size_t>(pivots[i])] = static_cast<int>(i);
      out.rows.push_back(std::move(row));
    }
    if (!lifted) continue;

    // Exact check: every input row is the combination of lifted rows given by
    // its pivot-column entries. With rank_p <= rank_Q this proves the lifted
    // rows are the rational RREF of the input.
    std::vector<int> free_index(static_cast<std::size_t>(columns), -1);
    for (std::size_t s = 0; s < free_cols.size(); ++s)
      free_index[static_cast<std::size_t>(free_cols[s])] = static_cast<int>(s);
    Vector acc(free_cols.size());
    bool ok = true;
    for (const auto& row : rows) {
      for (const auto& [col, val] : row) {
        const int b = out.pivot_row[static_cast<std::size_t>(col)];
        if (b >= 0) {
          for (const auto& [k2, v2] : out.rows[static_cast<std::size_t>(b)])
            if (k2 != col) acc[static_cast<std::size_t>(free_index[static_cast<std::size_t>(k2)])].sub_mul(val, v2);
        } else {
          acc[static_cast<std::size_t>(free_index[static_cast<std::size_t>(col)])] += val;
        }
      }
      for (auto& a : acc) {
        if (!a.is_zero()) ok = false;
        a = Rational();
      }
      if (!ok) break;
    }
    if (ok) return out;
  }
  return std::nullopt;
}

}  // namespace lefforge
