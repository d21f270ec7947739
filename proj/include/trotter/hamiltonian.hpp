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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trotter/pauli.hpp"
#include "trotter/statevector.hpp"

namespace trotter {

enum class Family { Xxz1D, Rect2D, Tri2D };

const char* to_string(Family family);
/// Accepts "xxz_1d"/"xxz", "rect_2d"/"rect", "tri_2d"/"tri".
Family parse_family(std::string_view name);

enum class Geometry { Rectangular, Triangular };

/// Open-boundary W x L grid. In the triangular case the grid is in the
/// (v1, v2) lattice basis.
struct LatticeSpec {
  std::size_t width = 0;
  std::size_t length = 0;
  Geometry geometry = Geometry::Rectangular;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Family parameters; only the ones relevant to the family are meaningful.
struct FamilyParams {
  double delta = 0.0;  // xxz_1d ZZ anisotropy
  double g = 0.0;      // xxz_1d transverse field
  double alpha = 0.0;  // tri_2d next-nearest-neighbour coupling
  double hx = 0.0;     // rect_2d transverse field

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/**
 * A Hamiltonian as an ordered list of weighted Pauli terms. A term's position
 * in `terms` is its canonical file index; every tie-break in the ordering
 * strategies falls back to it.
 */
struct HamiltonianInstance {
  std::size_t n_qubits = 0;
  std::vector<WeightedTerm> terms;
  Family family = Family::Xxz1D;
  FamilyParams params;
  std::optional<LatticeSpec> lattice;

  std::size_t size() const noexcept { return terms.size(); }

  friend bool operator==(const HamiltonianInstance&, const HamiltonianInstance&) = default;
};

/// Open XXZ chain: per bond X X, Y Y, delta Z Z; then g X on every site.
/// Zero-coefficient terms are omitted. Requires L >= 2.
HamiltonianInstance build_xxz_chain(std::size_t L, double delta, double g);

/// Open rectangular Heisenberg lattice with transverse field hx.
HamiltonianInstance build_rect(std::size_t Lx, std::size_t Ly, double hx);

/// Open triangular J1-J2 Heisenberg lattice, alpha = J2/J1.
HamiltonianInstance build_tri(std::size_t W, std::size_t L, double alpha);

/// Serpentine numbering: even rows run left to right, odd rows right to left,
/// starting at the bottom-left site.
std::size_t snake_index(std::size_t w, std::size_t l, std::size_t W);

/// Site pairs (qubit indices, i < j) whose Euclidean distance equals `target`
/// within 1e-9, in ascending (i, j) order.
std::vector<std::pair<std::size_t, std::size_t>> lattice_pairs(const LatticeSpec& lattice,
                                                               double target);

/// |0101...>: qubit i is |1> iff i is odd.
Statevector neel_state(std::size_t n_qubits);

/// Text form: '#'-prefixed header lines, then one "coefficient<TAB>dense"
/// line per term in file-index order. Reals use 17 significant digits.
std::string serialize(const HamiltonianInstance& h);

/// Inverse of serialize. Throws ParseError carrying the 1-based line number.
HamiltonianInstance deserialize(std::string_view text);

HamiltonianInstance read_hamiltonian_file(const std::string& path);
void write_hamiltonian_file(const HamiltonianInstance& h, const std::string& path);

/// Short stable identifier, e.g. "xxz_1d L=8 delta=0.25 g=0.5".
std::string describe(const HamiltonianInstance& h);

}  // namespace trotter
