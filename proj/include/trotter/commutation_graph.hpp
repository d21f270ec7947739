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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trotter/hamiltonian.hpp"

namespace trotter {

/**
 * Graph on the terms of a Hamiltonian with an edge between every pair of
 * terms that do not commute. Vertex i is term i. Adjacency is kept both as
 * bit rows and as sorted neighbour lists.
 */
class CommutationGraph {
 public:
  /// Edgeless graph on `n_vertices` vertices.
  explicit CommutationGraph(std::size_t n_vertices = 0);

  /// Graph with the given undirected edges. Self-loops and out-of-range
  /// endpoints throw PreconditionError; duplicates are ignored.
  static CommutationGraph from_edges(std::size_t n_vertices,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t n_vertices() const noexcept { return neighbours_.size(); }
  std::size_t n_edges() const noexcept { return n_edges_; }

  bool adjacent(std::size_t i, std::size_t j) const;
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return neighbours_[v]; }
  std::size_t degree(std::size_t v) const { return neighbours_[v].size(); }

  /// Edges (i, j) with i < j in ascending order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  void add_edge(std::size_t i, std::size_t j);

 private:
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::size_t n_edges_ = 0;
};

/// Pairwise symplectic commutation over all term pairs.
CommutationGraph build_graph(const HamiltonianInstance& h);

/// Graphviz export; vertex labels are the dense Pauli strings.
std::string to_dot(const CommutationGraph& graph, const HamiltonianInstance& h);

}  // namespace trotter
