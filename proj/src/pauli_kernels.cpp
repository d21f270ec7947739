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

#include "trotter/pauli_kernels.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "trotter/error.hpp"

namespace trotter {

namespace {

using Word = PauliString::Word;

void check_dims(const PauliString& p, const Statevector& state) {
  if (p.n_qubits() != state.n_qubits()) {
    throw PreconditionError("Pauli string on " + std::to_string(p.n_qubits()) +
                            " qubits applied to a " + std::to_string(state.n_qubits()) +
                            "-qubit state");
  }
}

// i^k for k mod 4.
Complex i_power(std::size_t k) {
  switch (k & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double z_sign(std::size_t b, Word z) {
  return (std::popcount(static_cast<Word>(b) & z) & 1) ? -1.0 : 1.0;
}

}  // namespace

void apply_pauli(const PauliString& p, Statevector& state) {
  check_dims(p, state);
  const Word x = p.x_mask();
  const Word z = p.z_mask();
  const Complex base = i_power(p.y_count());
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();

  if (x == 0) {
    for (std::size_t b = 0; b < dim; ++b) amps[b] *= base * z_sign(b, z);
    return;
  }
  const Word top = Word{1} << (63 - std::countl_zero(x));
  for (std::size_t a = 0; a < dim; ++a) {
    if (a & top) continue;
    const std::size_t c = a ^ x;
    const Complex va = amps[a];
    const Complex vc = amps[c];
    amps[c] = base * z_sign(a, z) * va;
    amps[a] = base * z_sign(c, z) * vc;
  }
}

void apply_rotation(double cos_angle, double sin_angle, const PauliString& p,
                    Statevector& state) {
  check_dims(p, state);
  const Word x = p.x_mask();
  const Word z = p.z_mask();
  // -i sin * i^{#Y}; the per-amplitude sign comes from the Z bits.
  const Complex off = Complex(0.0, -sin_angle) * i_power(p.y_count());
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();

  if (x == 0) {
    const Complex plus = cos_angle + off;
    const Complex minus = cos_angle - off;
    for (std::size_t b = 0; b < dim; ++b) amps[b] *= z_sign(b, z) > 0 ? plus : minus;
    return;
  }
  const Word top = Word{1} << (63 - std::countl_zero(x));
  for (std::size_t a = 0; a < dim; ++a) {
    if (a & top) continue;
    const std::size_t c = a ^ x;
    const Complex va = amps[a];
    const Complex vc = amps[c];
    amps[a] = cos_angle * va + off * z_sign(c, z) * vc;
    amps[c] = cos_angle * vc + off * z_sign(a, z) * va;
  }
}

void apply_exp_term(double c, const PauliString& p, double dt, Statevector& state) {
  if (!std::isfinite(c) || !std::isfinite(dt)) {
    throw PreconditionError("apply_exp_term: non-finite coefficient or time step");
  }
  const double theta = c * dt;
  apply_rotation(std::cos(theta), std::sin(theta), p, state);
}

void accumulate_pauli(double c, const PauliString& p, const Statevector& in,
                      Statevector& out) {
  check_dims(p, in);
  check_dims(p, out);
  const Word x = p.x_mask();
  const Word z = p.z_mask();
  const Complex base = c * i_power(p.y_count());
  auto src = in.amplitudes();
  auto dst = out.amplitudes();
  for (std::size_t b = 0; b < src.size(); ++b) {
    dst[b ^ x] += base * z_sign(b, z) * src[b];
  }
}

}  // namespace trotter
