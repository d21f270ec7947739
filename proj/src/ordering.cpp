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

#include "trotter/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "trotter/error.hpp"

namespace trotter {

namespace {

// Term indices of `members` sorted by descending |c|, ties by file index.
std::vector<std::size_t> by_magnitude(std::vector<std::size_t> members,
                                      const HamiltonianInstance& h) {
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
    const double ca = std::abs(h.terms.at(a).coefficient);
    const double cb = std::abs(h.terms.at(b).coefficient);
    if (ca != cb) return ca > cb;
    return a < b;
  });
  return members;
}

Ordering flat(std::vector<std::size_t> sequence, std::string label) {
  Ordering o;
  o.kind = Ordering::Kind::Flat;
  o.flat_sequence = std::move(sequence);
  o.label = std::move(label);
  return o;
}

// Uniform integer in [0, bound) by rejection, so the stream is identical on
// every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace

std::vector<std::size_t> Ordering::sequence() const {
  if (kind == Kind::Flat) return flat_sequence;
  std::vector<std::size_t> out;
  for (const auto& g : group_sequence) out.insert(out.end(), g.begin(), g.end());
  return out;
}

Ordering Ordering::flattened() const {
  Ordering o = flat(sequence(), label);
  o.permutation = permutation;
  return o;
}

bool is_permutation_of(const std::vector<std::size_t>& seq, std::size_t n) {
  if (seq.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t v : seq) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<Ordering> group_evolve_orderings(const Grouping& grouping,
                                             const GroupEvolveOptions& options) {
  const std::size_t m = grouping.size();
  if (m > options.max_groups) {
    throw SizeLimitError("group_evolve_orderings: " + std::to_string(m) +
                         " groups exceeds the permutation cap of " +
                         std::to_string(options.max_groups));
  }
  if (m > 10) throw SizeLimitError("group_evolve_orderings: labels need m <= 10");
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Ordering> out;
  const std::string prefix = std::string(to_string(grouping.method)) + "_groups perm ";
  do {
    Ordering o;
    o.kind = Ordering::Kind::Grouped;
    for (std::size_t g : perm) {
      o.group_sequence.push_back(grouping.groups[g]);
      o.permutation.push_back(static_cast<char>('0' + g));
    }
    o.label = prefix + o.permutation;
    out.push_back(std::move(o));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Ordering magnitude_ordering(const HamiltonianInstance& h) {
  std::vector<std::size_t> all(h.size());
  std::iota(all.begin(), all.end(), 0);
  return flat(by_magnitude(std::move(all), h), "magnitude");
}

Ordering lexicographic_ordering(const HamiltonianInstance& h) {
  std::vector<std::size_t> all(h.size());
  std::iota(all.begin(), all.end(), 0);
  std::stable_sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
    return compare_dense(h.terms[a].pauli, h.terms[b].pauli) < 0;
  });
  return flat(std::move(all), "lex_dense");
}

Ordering deplete_groups(const Grouping& grouping, const HamiltonianInstance& h) {
  std::vector<std::vector<std::size_t>> sorted;
  for (const auto& g : grouping.groups) sorted.push_back(by_magnitude(g, h));
  std::erase_if(sorted, [](const auto& g) { return g.empty(); });

  // stable_sort keeps the reference order among equal leaders.
  std::vector<std::size_t> order(sorted.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(h.terms[sorted[a].front()].coefficient) >
           std::abs(h.terms[sorted[b].front()].coefficient);
  });
  std::vector<std::size_t> seq;
  for (std::size_t g : order) seq.insert(seq.end(), sorted[g].begin(), sorted[g].end());
  return flat(std::move(seq), "depleteGroups");
}

Ordering equalise_groups(const Grouping& grouping, const HamiltonianInstance& h) {
  std::vector<std::vector<std::size_t>> sorted;
  std::size_t total = 0;
  for (const auto& g : grouping.groups) {
    sorted.push_back(by_magnitude(g, h));
    total += g.size();
  }
  std::vector<std::size_t> next(sorted.size(), 0);
  std::vector<std::size_t> seq;
  seq.reserve(total);
  while (seq.size() < total) {
    for (std::size_t g = 0; g < sorted.size(); ++g) {
      if (next[g] < sorted[g].size()) seq.push_back(sorted[g][next[g]++]);
    }
  }
  return flat(std::move(seq), "equaliseGroups");
}

std::vector<Ordering> random_orderings(const HamiltonianInstance& h, std::size_t count,
                                       std::uint64_t seed) {
  if (count < 1) throw PreconditionError("random_orderings: count must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Ordering> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<std::size_t> seq(h.size());
    std::iota(seq.begin(), seq.end(), 0);
    for (std::size_t i = seq.size(); i > 1; --i) {
      std::swap(seq[i - 1], seq[uniform_below(rng, i)]);
    }
    out.push_back(flat(std::move(seq), "random#" + std::to_string(r)));
  }
  return out;
}

}  // namespace trotter
