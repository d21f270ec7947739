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

#include "trotter/pauli.hpp"
#include "trotter/statevector.hpp"

namespace trotter {

// In-place Pauli actions on a statevector. All of them require
// state.n_qubits() == p.n_qubits() and throw PreconditionError otherwise.

/// state <- P state, with Y = i X Z on every site, so basis state |b> maps to
/// i^{#Y} (-1)^{popcount(b & z)} |b xor x>.
void apply_pauli(const PauliString& p, Statevector& state);

/// state <- (cos_angle I - i sin_angle P) state in one pass over the
/// amplitudes. With cos_angle = cos(theta), sin_angle = sin(theta) this is
/// exp(-i theta P).
void apply_rotation(double cos_angle, double sin_angle, const PauliString& p,
                    Statevector& state);

/// state <- exp(-i c dt P) state. Throws PreconditionError on non-finite c or dt.
void apply_exp_term(double c, const PauliString& p, double dt, Statevector& state);

/// out += c P in, the building block of matrix-free Hamiltonian products.
void accumulate_pauli(double c, const PauliString& p, const Statevector& in,
                      Statevector& out);

}  // namespace trotter
