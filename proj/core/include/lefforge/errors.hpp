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

#ifndef LEFFORGE_ERRORS_HPP
#define LEFFORGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefforge {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input supplied by the caller (wrong sizes, out-of-range degrees, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A subspace family that is not closed under the multiplication being tested.
class UnstableSubspaceError : public Error {
 public:
  UnstableSubspaceError(const std::string& what, int degree)
      : Error(what + " (degree " + std::to_string(degree) + ")"),
        degree_(degree) {}

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

// An internal mathematical invariant failed, e.g. a non-integral isotypic
// multiplicity. Never caused by user input alone.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lefforge

#endif  // LEFFORGE_ERRORS_HPP
