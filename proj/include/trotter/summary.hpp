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
#include <iosfwd>
#include <string>
#include <vector>

#include "trotter/sweep.hpp"

namespace trotter {

/// One line of the summary table. Unused key fields are left empty.
///
///   by_steps   mean fidelity per (family, method, p, s)
///   by_size    mean fidelity per (family, method, p, s, n_qubits)
///   best_perm  best group permutation per (family, instance, method, p, s);
///              value is its fidelity, count the number of permutations
///   perm_wins  share of instances on which each permutation is the best
///
/// Group-evolve rows contribute under their own label ("xyz_groups perm
/// 120") and, through the per-instance best, under "<prefix> best perm".
/// Individual random#i rows are left out; random_mean / random_best cover them.
struct SummaryRow {
  std::string table;
  std::string family;
  std::string method;
  int order = 0;
  std::size_t steps = 0;
  std::string n_qubits;
  std::string instance;
  std::string permutation;
  std::size_t count = 0;
  double value = 0.0;
};

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

}  // namespace trotter
