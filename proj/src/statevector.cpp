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

#include "trotter/statevector.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "trotter/error.hpp"

namespace trotter {

namespace {

std::size_t checked_dimension(std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > Statevector::kMaxQubits) {
    throw PreconditionError("statevector qubit count " + std::to_string(n_qubits) +
                            " outside 1.." + std::to_string(Statevector::kMaxQubits));
  }
  return std::size_t{1} << n_qubits;
}

void check_same_dimension(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension()) {
    throw PreconditionError("statevector dimensions differ (" +
                            std::to_string(a.dimension()) + " vs " +
                            std::to_string(b.dimension()) + ")");
  }
}

}  // namespace

Statevector::Statevector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(checked_dimension(n_qubits)) {
  amps_[0] = 1.0;
}

Statevector::Statevector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != checked_dimension(n_qubits)) {
    throw PreconditionError("amplitude count does not match 2^" + std::to_string(n_qubits));
  }
}

Statevector Statevector::basis(std::size_t n_qubits, std::uint64_t index) {
  Statevector s(n_qubits);
  if (index >= s.dimension()) throw PreconditionError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void Statevector::normalize() {
  const double n = norm();
  if (n == 0.0) throw PreconditionError("cannot normalize the zero vector");
  for (auto& a : amps_) a /= n;
}

Complex inner_product(const Statevector& a, const Statevector& b) {
  check_same_dimension(a, b);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double distance(const Statevector& a, const Statevector& b) {
  check_same_dimension(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

}  // namespace trotter
