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

#include "trotter/hamiltonian.hpp"
#include "trotter/statevector.hpp"

namespace trotter {

/// out = H in, applied term by term without forming a matrix.
void apply_hamiltonian(const HamiltonianInstance& h, const Statevector& in, Statevector& out);

struct KrylovOptions {
  /// Largest Lanczos basis built before the time step is cut.
  std::size_t max_dimension = 30;
  /// Bound on the summed a posteriori error estimates over all substeps.
  double tolerance = 1e-10;
  std::size_t max_qubits = 20;
  std::size_t max_substeps = 100000;
};

struct KrylovStats {
  std::size_t substeps = 0;
  std::size_t matvecs = 0;
  double error_estimate = 0.0;
};

/**
 * exp(-i H T) psi0 by Lanczos with full reorthogonalization. Each substep
 * grows the Krylov basis until the error estimate
 *   beta_{m+1} |e_m^T exp(-i tau T_m) e_1|
 * meets its share tolerance * tau / T of the budget, halving tau when the
 * basis reaches max_dimension first.
 *
 * Throws SizeLimitError past max_qubits and ConvergenceError when the step
 * size collapses or max_substeps is exhausted.
 */
Statevector exact_evolve(const HamiltonianInstance& h, double T, const Statevector& psi0,
                         const KrylovOptions& options = {}, KrylovStats* stats = nullptr);

/// Largest n accepted by dense_evolve.
inline constexpr std::size_t kDenseMaxQubits = 10;

/// exp(-i H T) psi0 through a dense Hermitian eigendecomposition. The dense
/// H is assembled from explicit 2x2 factors, independent of the Pauli kernels.
Statevector dense_evolve(const HamiltonianInstance& h, double T, const Statevector& psi0);

}  // namespace trotter
