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

#include "trotter/commutation_graph.hpp"

#include <algorithm>
#include <sstream>

#include "trotter/error.hpp"

namespace trotter {

CommutationGraph::CommutationGraph(std::size_t n_vertices)
    : row_words_((n_vertices + 63) / 64),
      rows_(row_words_ * n_vertices, 0),
      neighbours_(n_vertices) {}

CommutationGraph CommutationGraph::from_edges(
    std::size_t n_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  CommutationGraph g(n_vertices);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

bool CommutationGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i >= n_vertices() || j >= n_vertices()) {
    throw PreconditionError("adjacent: vertex out of range");
  }
  return (rows_[i * row_words_ + j / 64] >> (j % 64)) & 1u;
}

void CommutationGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_vertices() || j >= n_vertices()) {
    throw PreconditionError("add_edge: vertex out of range");
  }
  if (i == j) throw PreconditionError("add_edge: self-loop");
  if (adjacent(i, j)) return;
  rows_[i * row_words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  rows_[j * row_words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t v) {
    list.insert(std::upper_bound(list.begin(), list.end(), v), v);
  };
  insert_sorted(neighbours_[i], j);
  insert_sorted(neighbours_[j], i);
  ++n_edges_;
}

std::vector<std::pair<std::size_t, std::size_t>> CommutationGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(n_edges_);
  for (std::size_t i = 0; i < n_vertices(); ++i) {
    for (std::size_t j : neighbours_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

CommutationGraph build_graph(const HamiltonianInstance& h) {
  CommutationGraph g(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (!commutes(h.terms[i].pauli, h.terms[j].pauli)) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_dot(const CommutationGraph& graph, const HamiltonianInstance& h) {
  std::ostringstream out;
  out << "graph commutation {\n";
  for (std::size_t v = 0; v < graph.n_vertices(); ++v) {
    out << "  " << v << " [label=\"" << format_dense(h.terms.at(v).pauli) << "\"];\n";
  }
  for (auto [i, j] : graph.edges()) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace trotter
