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
#include <vector>

#include "trotter/coloring.hpp"
#include "trotter/hamiltonian.hpp"

namespace trotter {

/**
 * A Trotter ordering. Flat orderings list term indices one by one; grouped
 * orderings list commuting groups that are evolved as units.
 */
struct Ordering {
  enum class Kind { Flat, Grouped };

  Kind kind = Kind::Flat;
  std::vector<std::size_t> flat_sequence;
  std::vector<std::vector<std::size_t>> group_sequence;
  std::string label;
  /// Digit string of the group permutation ("120"); empty for flat orderings.
  std::string permutation;

  /// Term indices in application order (groups concatenated).
  std::vector<std::size_t> sequence() const;
  /// The flat ordering with the same application order.
  Ordering flattened() const;
};

/// True iff `seq` is a permutation of 0..n-1.
bool is_permutation_of(const std::vector<std::size_t>& seq, std::size_t n);

struct GroupEvolveOptions {
  std::size_t max_groups = 5;
};

/// One grouped ordering per permutation of the groups, in lexicographic
/// order of the digit labels. Labels read "<method>_groups perm <digits>".
std::vector<Ordering> group_evolve_orderings(const Grouping& grouping,
                                             const GroupEvolveOptions& options = {});

/// Descending |coefficient|, ties by file index.
Ordering magnitude_ordering(const HamiltonianInstance& h);

/// Dense strings sorted under I < X < Y < Z, ties by file index.
Ordering lexicographic_ordering(const HamiltonianInstance& h);

/// Whole groups one after another, the group holding the largest |c| first;
/// within a group descending |c|.
Ordering deplete_groups(const Grouping& grouping, const HamiltonianInstance& h);

/// Round robin over groups in reference order, each visit taking that
/// group's largest remaining |c|.
Ordering equalise_groups(const Grouping& grouping, const HamiltonianInstance& h);

/// `count` uniformly random permutations from a seeded std::mt19937_64 and
/// Fisher-Yates; labels "random#0".."random#<count-1>".
std::vector<Ordering> random_orderings(const HamiltonianInstance& h, std::size_t count,
                                       std::uint64_t seed);

}  // namespace trotter
