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

#include "trotter/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trotter/error.hpp"
#include "trotter/pauli_kernels.hpp"

namespace trotter {

namespace {

void check_state(const HamiltonianInstance& h, const Statevector& psi) {
  if (psi.n_qubits() != h.n_qubits) {
    throw PreconditionError("state has " + std::to_string(psi.n_qubits()) +
                            " qubits, Hamiltonian has " + std::to_string(h.n_qubits));
  }
}

std::vector<std::size_t> reversed_sequence(const Ordering& ordering) {
  if (ordering.kind == Ordering::Kind::Flat) {
    return {ordering.flat_sequence.rbegin(), ordering.flat_sequence.rend()};
  }
  std::vector<std::size_t> out;
  for (auto g = ordering.group_sequence.rbegin(); g != ordering.group_sequence.rend(); ++g) {
    out.insert(out.end(), g->begin(), g->end());
  }
  return out;
}

}  // namespace

void TrotterConfig::validate() const {
  if (order != 1 && order != 2) {
    throw PreconditionError("Trotter order must be 1 or 2, got " + std::to_string(order));
  }
  if (steps < 1) throw PreconditionError("Trotter steps must be >= 1");
  if (!std::isfinite(total_time)) throw PreconditionError("total time must be finite");
}

AngleTable::AngleTable(const HamiltonianInstance& h, double time) : time_(time) {
  cos_.reserve(h.size());
  sin_.reserve(h.size());
  for (const auto& term : h.terms) {
    const double theta = term.coefficient * time;
    cos_.push_back(std::cos(theta));
    sin_.push_back(std::sin(theta));
  }
}

void apply_term_sequence(const HamiltonianInstance& h, const AngleTable& angles,
                         std::span<const std::size_t> sequence, Statevector& state) {
  for (std::size_t j : sequence) {
    apply_rotation(angles.cos(j), angles.sin(j), h.terms[j].pauli, state);
  }
}

TrotterPlan::TrotterPlan(const HamiltonianInstance& h, const TrotterConfig& config)
    : h_(&h),
      config_((config.validate(), config)),
      angles_(h, config.order == 1 ? config.dt() : 0.5 * config.dt()) {}

Statevector TrotterPlan::evolve(const Ordering& ordering, const Statevector& psi0) const {
  check_state(*h_, psi0);
  const auto forward = ordering.sequence();
  if (!is_permutation_of(forward, h_->size())) {
    throw PreconditionError("ordering '" + ordering.label +
                            "' is not a permutation of the Hamiltonian's terms");
  }
  Statevector psi = psi0;
  if (config_.order == 1) {
    for (std::size_t s = 0; s < config_.steps; ++s) {
      apply_term_sequence(*h_, angles_, forward, psi);
    }
    return psi;
  }
  const auto backward = reversed_sequence(ordering);
  for (std::size_t s = 0; s < config_.steps; ++s) {
    apply_term_sequence(*h_, angles_, forward, psi);
    apply_term_sequence(*h_, angles_, backward, psi);
  }
  return psi;
}

Statevector trotter_evolve(const HamiltonianInstance& h, const Ordering& ordering,
                           const TrotterConfig& config, const Statevector& psi0) {
  return TrotterPlan(h, config).evolve(ordering, psi0);
}

double fidelity(const Statevector& a, const Statevector& b) {
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

}  // namespace trotter
