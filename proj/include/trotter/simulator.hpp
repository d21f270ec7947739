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
#include <span>
#include <vector>

#include "trotter/hamiltonian.hpp"
#include "trotter/ordering.hpp"
#include "trotter/statevector.hpp"

namespace trotter {

/// Product-formula settings. The time step T / steps is always derived.
struct TrotterConfig {
  int order = 1;            // 1 or 2
  std::size_t steps = 1;
  double total_time = 0.0;

  double dt() const { return total_time / static_cast<double>(steps); }
  /// Throws PreconditionError unless order is 1 or 2, steps >= 1 and T finite.
  void validate() const;
};

/// (cos(c_j t), sin(c_j t)) for every term j at a fixed angle time t.
class AngleTable {
 public:
  AngleTable(const HamiltonianInstance& h, double time);

  double time() const noexcept { return time_; }
  double cos(std::size_t term) const { return cos_[term]; }
  double sin(std::size_t term) const { return sin_[term]; }
  std::size_t size() const noexcept { return cos_.size(); }

 private:
  double time_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

/// Applies exp(-i c_j t P_j) for each j of `sequence`, in order.
void apply_term_sequence(const HamiltonianInstance& h, const AngleTable& angles,
                         std::span<const std::size_t> sequence, Statevector& state);

/**
 * Angle tables for one (Hamiltonian, config) pair, shared read-only across
 * every ordering evaluated on it. First order uses t = dt, second order
 * t = dt / 2. The plan refers to `h`, which must outlive it.
 */
class TrotterPlan {
 public:
  TrotterPlan(const HamiltonianInstance& h, const TrotterConfig& config);

  const HamiltonianInstance& hamiltonian() const noexcept { return *h_; }
  const TrotterConfig& config() const noexcept { return config_; }
  const AngleTable& angles() const noexcept { return angles_; }

  /// Runs the product formula for `ordering` starting from psi0.
  Statevector evolve(const Ordering& ordering, const Statevector& psi0) const;

 private:
  const HamiltonianInstance* h_;
  TrotterConfig config_;
  AngleTable angles_;
};

/// One-shot form of TrotterPlan(h, config).evolve(ordering, psi0).
/// Second order runs the sequence forward then reversed, each at dt / 2; a
/// grouped ordering reverses its group order and keeps within-group order.
Statevector trotter_evolve(const HamiltonianInstance& h, const Ordering& ordering,
                           const TrotterConfig& config, const Statevector& psi0);

/// |<a|b>|^2 clamped to [0, 1].
double fidelity(const Statevector& a, const Statevector& b);

}  // namespace trotter
