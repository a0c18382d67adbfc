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

#include "lefforge/permutation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lefforge/errors.hpp"

namespace lefforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  return cycle(n, {i, j});
}

Permutation Permutation::cycle(int n, std::initializer_list<int> points) {
  return cycle(n, std::vector<int>(points));
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  Permutation p = identity(n);
  for (int v : points) {
    if (v < 0 || v >= n) throw ValidationError("cycle point out of range");
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    p.images_[static_cast<std::size_t>(points[k])] = points[(k + 1) % points.size()];
  }
  return Permutation(p.images_);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

Monomial Permutation::act(const Monomial& m) const {
  if (m.size() != size()) throw ValidationError("permutation length mismatch");
  std::vector<int> e(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    e[static_cast<std::size_t>(images_[i])] += m[static_cast<int>(i)];
  }
  return Monomial(std::move(e));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i] + 1;
  }
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw ValidationError("permutation length mismatch");
  std::vector<int> im(s.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = s(t(static_cast<int>(i)));
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  if (n > 10) throw ValidationError("refusing to enumerate more than 10! permutations");
  std::vector<int> im = Permutation::identity(n).images();
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace lefforge
