// Copyright 2026 The Trotter Lab Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trotter {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated (size mismatch,
/// out-of-range argument, non-finite input).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `position()` is a character offset for
/// Pauli strings and a 1-based line number for Hamiltonian files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The Hamiltonian is outside the class an algorithm supports
/// (e.g. a mixed term passed to the XYZ coloring).
class UnsupportedHamiltonian : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace trotter
