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
#include <string_view>
#include <vector>

#include "trotter/commutation_graph.hpp"
#include "trotter/hamiltonian.hpp"

namespace trotter {

enum class ColoringMethod { Xyz, Handcrafted, Greedy, Exact };

const char* to_string(ColoringMethod method);
ColoringMethod parse_coloring_method(std::string_view name);

/// Partition of term indices into commuting groups. Each group is sorted
/// ascending; group order is the backend's deterministic reference order.
struct Grouping {
  std::vector<std::vector<std::size_t>> groups;
  ColoringMethod method = ColoringMethod::Greedy;

  std::size_t size() const noexcept { return groups.size(); }
};

/// One group per Pauli type present, in X, Y, Z order. Identity terms join
/// the first group. Throws UnsupportedHamiltonian naming the first mixed term.
Grouping xyz_coloring(const HamiltonianInstance& h);

/// Bond-parity coloring of an xxz_1d chain: bonds (j, j+1) with even j,
/// bonds with odd j, then single-site terms. Empty groups are dropped.
Grouping handcrafted_coloring(const HamiltonianInstance& h);

/// First-fit in ascending vertex order.
Grouping greedy_coloring(const CommutationGraph& graph);

struct ExactColoringOptions {
  std::size_t max_vertices = 100;
};

/// Minimum coloring by DSATUR branch and bound, seeded with a greedy upper
/// bound and a clique lower bound. Throws SizeLimitError above the cap.
Grouping exact_coloring(const CommutationGraph& graph, const ExactColoringOptions& options = {});

/// A clique found greedily; its size is a lower bound on the chromatic number.
std::vector<std::size_t> find_clique(const CommutationGraph& graph);

/// True iff `grouping` partitions the vertices and no group holds an edge.
bool validate_grouping(const CommutationGraph& graph, const Grouping& grouping);

/// Colors per vertex -> groups ordered by smallest member, each sorted.
std::vector<std::vector<std::size_t>> groups_from_colors(const std::vector<std::size_t>& colors);

}  // namespace trotter
