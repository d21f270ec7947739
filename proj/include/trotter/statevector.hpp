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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace trotter {

using Complex = std::complex<double>;

/**
 * Dense 2^n amplitude vector. Qubit 0 is the least significant bit of the
 * basis-state index.
 */
class Statevector {
 public:
  static constexpr std::size_t kMaxQubits = 30;

  /// |0...0> on n qubits.
  explicit Statevector(std::size_t n_qubits);
  Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  /// Computational basis state |index>.
  static Statevector basis(std::size_t n_qubits, std::uint64_t index);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  std::span<Complex> amplitudes() noexcept { return amps_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  void normalize();

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

/// <a|b>. Throws PreconditionError on a dimension mismatch.
Complex inner_product(const Statevector& a, const Statevector& b);

/// ||a - b||_2.
double distance(const Statevector& a, const Statevector& b);

}  // namespace trotter
