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

// Test-only dense linear algebra: Kronecker-product Pauli matrices and
// eigendecomposition exponentials. Nothing here calls the library's Pauli
// kernels, so it can serve as an independent reference for them.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "trotter/hamiltonian.hpp"
#include "trotter/pauli.hpp"
#include "trotter/statevector.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix single(trotter::PauliOp op) {
  const Complex i1(0.0, 1.0);
  Matrix m(2, 2);
  switch (op) {
    case trotter::PauliOp::I: m << 1, 0, 0, 1; break;
    case trotter::PauliOp::X: m << 0, 1, 1, 0; break;
    case trotter::PauliOp::Y: m << 0, -i1, i1, 0; break;
    case trotter::PauliOp::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// P_{n-1} (x) ... (x) P_0, so qubit 0 is the least significant index bit.
inline Matrix pauli_matrix(const trotter::PauliString& p) {
  Matrix m = single(p.get(0));
  for (std::size_t q = 1; q < p.n_qubits(); ++q) {
    Matrix next = Eigen::kroneckerProduct(single(p.get(q)), m).eval();
    m = std::move(next);
  }
  return m;
}

inline Matrix hamiltonian_matrix(const trotter::HamiltonianInstance& h) {
  const Eigen::Index dim = Eigen::Index(1) << h.n_qubits;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& t : h.terms) m += t.coefficient * pauli_matrix(t.pauli);
  return m;
}

/// exp(-i t H) for Hermitian H.
inline Matrix unitary(const Matrix& hermitian, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian);
  Vector phases(eig.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -t * eig.eigenvalues()(k));
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

inline Vector to_vector(const trotter::Statevector& s) {
  Vector v(Eigen::Index(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i) v(Eigen::Index(i)) = s[i];
  return v;
}

inline trotter::Statevector from_vector(std::size_t n_qubits, const Vector& v) {
  trotter::Statevector s(n_qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) s[std::size_t(i)] = v(i);
  return s;
}

inline trotter::PauliString random_pauli(std::mt19937_64& rng, std::size_t n) {
  trotter::PauliString p(n);
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::size_t q = 0; q < n; ++q) p.set(q, static_cast<trotter::PauliOp>(pick(rng)));
  return p;
}

inline trotter::Statevector random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  trotter::Statevector s(n);
  for (std::size_t i = 0; i < s.dimension(); ++i) s[i] = Complex(normal(rng), normal(rng));
  s.normalize();
  return s;
}

}  // namespace oracle
