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
#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "trotter/coloring.hpp"
#include "trotter/hamiltonian.hpp"
#include "trotter/statevector.hpp"

namespace trotter {

/// Which ordering families a sweep evaluates.
struct StrategySet {
  bool group_evolve = true;
  bool deplete = true;
  bool equalise = true;
  bool magnitude = true;
  bool lexicographic = true;
  bool random = true;

  /// Parses a comma list of {group, deplete, equalise, magnitude, lex,
  /// random, all}.
  static StrategySet parse(const std::string& list);
};

/// 25 values 0.1, 0.2, ..., 2.5.
std::vector<double> default_g_grid();
/// `count` evenly spaced values covering [lo, hi] inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

struct SweepConfig {
  std::vector<Family> families{Family::Xxz1D};

  std::vector<std::size_t> chain_lengths;  // defaults to 3..20
  std::vector<double> deltas{0.12, 0.25};
  std::vector<double> gs = default_g_grid();

  std::vector<std::size_t> widths{2, 3, 4, 5};
  /// Empty means {width, width + 1} for every width.
  std::vector<std::size_t> lengths;
  std::vector<double> alphas = uniform_grid(0.0, 0.5, 27);
  std::vector<double> hxs = uniform_grid(0.0, 3.0, 11);

  std::vector<int> orders{1, 2};
  std::vector<std::size_t> steps{3, 5, 10, 20};
  double time_1d = 5.0;
  double time_2d = 1.0;

  std::size_t random_count = 30;
  std::uint64_t seed = 0;
  StrategySet strategies;
  std::vector<ColoringMethod> colorings_1d{ColoringMethod::Xyz, ColoringMethod::Handcrafted,
                                           ColoringMethod::Greedy, ColoringMethod::Exact};
  std::vector<ColoringMethod> colorings_2d{ColoringMethod::Xyz};

  /// Instances above this size are skipped. 14 keeps the default sweep at
  /// desk scale; 20 reaches the largest grids.
  std::size_t max_qubits = 14;
  std::size_t threads = 1;

  /// When non-empty these instances replace the generated grid.
  std::vector<HamiltonianInstance> inputs;

  SweepConfig();
  /// Throws PreconditionError on an empty or invalid grid.
  void validate() const;
  double total_time(Family family) const { return family == Family::Xxz1D ? time_1d : time_2d; }
};

/// Every instance the config describes, in sweep order.
std::vector<HamiltonianInstance> enumerate_instances(const SweepConfig& config);

struct ResultRow {
  std::size_t instance = 0;
  std::string family;
  std::size_t n_qubits = 0;
  std::size_t lx = 0;  // lattice width (chain length for 1D)
  std::size_t ly = 0;  // lattice length (1 for 1D)
  double delta = 0.0;
  double g = 0.0;
  double alpha = 0.0;
  double hx = 0.0;
  std::string ordering;
  std::string grouping;
  std::string permutation;
  int order = 1;
  std::size_t steps = 1;
  double fidelity = 0.0;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
};

/// Fixed CSV column list; wall_time_s is always last.
const std::vector<std::string>& result_columns();
std::string csv_header();
std::string to_csv_line(const ResultRow& row);
void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& out);
/// Throws ParseError on a malformed line (1-based line number).
std::vector<ResultRow> read_results_csv(std::istream& in);

/// exp(-iHT) psi0 memoised on (serialized Hamiltonian, T, psi0). Thread safe.
class ExactStateCache {
 public:
  Statevector get(const HamiltonianInstance& h, double T, const Statevector& psi0);
  std::size_t size() const;
  std::size_t hits() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, Statevector> states_;
  std::size_t hits_ = 0;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t rows = 0;
};

/// Rows for a single instance in emission order: per (p, s), every ordering
/// and then random_mean / random_best.
std::vector<ResultRow> run_instance(const HamiltonianInstance& h, std::size_t instance_index,
                                    const SweepConfig& config, ExactStateCache& cache,
                                    std::ostream* log = nullptr);

/**
 * Runs every instance of the config and streams rows to `sink` in instance
 * order, whatever the thread count. A failing instance is reported to `log`
 * and skipped.
 */
SweepSummary run_sweep(const SweepConfig& config,
                       const std::function<void(const ResultRow&)>& sink,
                       std::ostream* log = nullptr);

}  // namespace trotter
