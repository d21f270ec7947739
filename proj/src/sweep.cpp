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

#include "trotter/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <condition_variable>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "trotter/commutation_graph.hpp"
#include "trotter/error.hpp"
#include "trotter/exact_evolution.hpp"
#include "trotter/ordering.hpp"
#include "trotter/simulator.hpp"
#include "trotter/text.hpp"

namespace trotter {

namespace {

struct LabelledOrdering {
  Ordering ordering;
  std::string grouping;
};

std::string wall_time_text(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

ResultRow row_template(const HamiltonianInstance& h, std::size_t index,
                       const SweepConfig& config) {
  ResultRow row;
  row.instance = index;
  row.family = to_string(h.family);
  row.n_qubits = h.n_qubits;
  row.lx = h.lattice ? h.lattice->width : h.n_qubits;
  row.ly = h.lattice ? h.lattice->length : 1;
  row.delta = h.params.delta;
  row.g = h.params.g;
  row.alpha = h.params.alpha;
  row.hx = h.params.hx;
  row.seed = config.seed;
  return row;
}

// Groupings requested for this family, each validated against the graph.
std::vector<Grouping> compute_groupings(const HamiltonianInstance& h,
                                        const CommutationGraph& graph,
                                        const SweepConfig& config, std::ostream* log,
                                        std::vector<std::string>& labels) {
  const auto& methods =
      h.family == Family::Xxz1D ? config.colorings_1d : config.colorings_2d;
  std::vector<Grouping> out;
  for (ColoringMethod method : methods) {
    Grouping g;
    std::string label = to_string(method);
    switch (method) {
      case ColoringMethod::Xyz: g = xyz_coloring(h); break;
      case ColoringMethod::Handcrafted: g = handcrafted_coloring(h); break;
      case ColoringMethod::Greedy: g = greedy_coloring(graph); break;
      case ColoringMethod::Exact:
        try {
          g = exact_coloring(graph);
        } catch (const SizeLimitError& e) {
          if (log) *log << "warning: " << describe(h) << ": " << e.what() << "; using greedy\n";
          g = greedy_coloring(graph);
          g.method = ColoringMethod::Exact;
          label = "exact:greedy-fallback";
        }
        break;
    }
    if (!validate_grouping(graph, g)) {
      throw Error(std::string("grouping '") + label + "' is not a proper coloring");
    }
    out.push_back(std::move(g));
    labels.push_back(std::move(label));
  }
  return out;
}

std::vector<LabelledOrdering> build_orderings(const HamiltonianInstance& h,
                                              const CommutationGraph& graph,
                                              const SweepConfig& config, std::ostream* log) {
  std::vector<LabelledOrdering> out;
  std::vector<std::string> labels;
  const auto groupings = compute_groupings(h, graph, config, log, labels);

  if (config.strategies.group_evolve) {
    for (std::size_t i = 0; i < groupings.size(); ++i) {
      for (auto& o : group_evolve_orderings(groupings[i])) out.push_back({std::move(o), labels[i]});
    }
  }
  if (config.strategies.deplete || config.strategies.equalise) {
    // Both pick terms from the XYZ groups; mixed Hamiltonians use greedy.
    Grouping base;
    std::string label = "xyz";
    try {
      base = xyz_coloring(h);
    } catch (const UnsupportedHamiltonian&) {
      base = greedy_coloring(graph);
      label = "greedy";
    }
    if (config.strategies.deplete) out.push_back({deplete_groups(base, h), label});
    if (config.strategies.equalise) out.push_back({equalise_groups(base, h), label});
  }
  if (config.strategies.magnitude) out.push_back({magnitude_ordering(h), ""});
  if (config.strategies.lexicographic) out.push_back({lexicographic_ordering(h), ""});
  if (config.strategies.random) {
    for (auto& o : random_orderings(h, config.random_count, config.seed)) {
      out.push_back({std::move(o), ""});
    }
  }
  return out;
}

std::string cache_key(const HamiltonianInstance& h, double T, const Statevector& psi0) {
  std::string key = serialize(h);
  key += "#T " + format_real(T) + "\n";
  for (const auto& a : psi0.amplitudes()) {
    key += format_real(a.real());
    key += ',';
    key += format_real(a.imag());
    key += ';';
  }
  return key;
}

}  // namespace

StrategySet StrategySet::parse(const std::string& list) {
  StrategySet s{false, false, false, false, false, false};
  for (auto token : split(list, ',')) {
    token = trim(token);
    if (token == "all") {
      s = StrategySet{};
    } else if (token == "group" || token == "group_evolve") {
      s.group_evolve = true;
    } else if (token == "deplete" || token == "depleteGroups") {
      s.deplete = true;
    } else if (token == "equalise" || token == "equaliseGroups") {
      s.equalise = true;
    } else if (token == "magnitude") {
      s.magnitude = true;
    } else if (token == "lex" || token == "lex_dense") {
      s.lexicographic = true;
    } else if (token == "random") {
      s.random = true;
    } else {
      throw PreconditionError("unknown ordering strategy '" + std::string(token) + "'");
    }
  }
  return s;
}

std::vector<double> default_g_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 25; ++i) out.push_back(i / 10.0);
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(lo + (hi - lo) * double(i) / double(count - 1));
  }
  return out;
}

SweepConfig::SweepConfig() {
  for (std::size_t L = 3; L <= 20; ++L) chain_lengths.push_back(L);
}

void SweepConfig::validate() const {
  if (inputs.empty() && families.empty()) throw PreconditionError("no Hamiltonian family selected");
  if (orders.empty() || steps.empty()) throw PreconditionError("empty Trotter order or step grid");
  for (int p : orders) {
    if (p != 1 && p != 2) throw PreconditionError("Trotter order must be 1 or 2");
  }
  for (std::size_t s : steps) {
    if (s < 1) throw PreconditionError("Trotter steps must be >= 1");
  }
  if (strategies.random && random_count < 1) throw PreconditionError("random count must be >= 1");
  if (!std::isfinite(time_1d) || !std::isfinite(time_2d)) {
    throw PreconditionError("total time must be finite");
  }
  if (threads < 1) throw PreconditionError("threads must be >= 1");
  if (inputs.empty()) {
    for (Family f : families) {
      if (f == Family::Xxz1D) {
        if (chain_lengths.empty() || deltas.empty() || gs.empty()) {
          throw PreconditionError("empty 1D parameter grid");
        }
      } else {
        if (widths.empty()) throw PreconditionError("empty 2D width grid");
        if (f == Family::Rect2D && hxs.empty()) throw PreconditionError("empty hx grid");
        if (f == Family::Tri2D && alphas.empty()) throw PreconditionError("empty alpha grid");
      }
    }
  }
}

std::vector<HamiltonianInstance> enumerate_instances(const SweepConfig& config) {
  if (!config.inputs.empty()) return config.inputs;
  std::vector<HamiltonianInstance> out;
  for (Family family : config.families) {
    if (family == Family::Xxz1D) {
      for (std::size_t L : config.chain_lengths) {
        if (L > config.max_qubits) continue;
        for (double delta : config.deltas) {
          for (double g : config.gs) out.push_back(build_xxz_chain(L, delta, g));
        }
      }
      continue;
    }
    for (std::size_t w : config.widths) {
      std::vector<std::size_t> lengths = config.lengths;
      if (lengths.empty()) lengths = {w, w + 1};
      for (std::size_t l : lengths) {
        if (w * l > config.max_qubits) continue;
        if (family == Family::Rect2D) {
          for (double hx : config.hxs) out.push_back(build_rect(w, l, hx));
        } else {
          for (double alpha : config.alphas) out.push_back(build_tri(w, l, alpha));
        }
      }
    }
  }
  return out;
}

const std::vector<std::string>& result_columns() {
  static const std::vector<std::string> columns{
      "instance", "family", "n_qubits", "lx",    "ly",    "delta",    "g",    "alpha",      "hx",
      "ordering", "grouping", "perm",   "order", "steps", "fidelity", "seed", "wall_time_s"};
  return columns;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : result_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string to_csv_line(const ResultRow& r) {
  std::ostringstream out;
  out << r.instance << ',' << r.family << ',' << r.n_qubits << ',' << r.lx << ',' << r.ly << ','
      << format_real(r.delta) << ',' << format_real(r.g) << ',' << format_real(r.alpha) << ','
      << format_real(r.hx) << ',' << r.ordering << ',' << r.grouping << ',' << r.permutation
      << ',' << r.order << ',' << r.steps << ',' << format_real(r.fidelity) << ',' << r.seed
      << ',' << wall_time_text(r.wall_time);
  return out.str();
}

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << to_csv_line(r) << '\n';
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!header_seen) {
      if (trim(line) != csv_header()) throw ParseError("unexpected CSV header", line_no);
      header_seen = true;
      continue;
    }
    const auto f = split(trim(line), ',');
    if (f.size() != result_columns().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(result_columns().size()) + " fields",
                       line_no);
    }
    auto integer = [&](std::string_view s) {
      const auto v = parse_integer(s);
      if (!v || *v < 0) throw ParseError("line " + std::to_string(line_no) + ": bad integer", line_no);
      return static_cast<std::size_t>(*v);
    };
    auto real = [&](std::string_view s) {
      const auto v = parse_real(s);
      if (!v) throw ParseError("line " + std::to_string(line_no) + ": bad number", line_no);
      return *v;
    };
    ResultRow r;
    r.instance = integer(f[0]);
    r.family = f[1];
    r.n_qubits = integer(f[2]);
    r.lx = integer(f[3]);
    r.ly = integer(f[4]);
    r.delta = real(f[5]);
    r.g = real(f[6]);
    r.alpha = real(f[7]);
    r.hx = real(f[8]);
    r.ordering = f[9];
    r.grouping = f[10];
    r.permutation = f[11];
    r.order = static_cast<int>(integer(f[12]));
    r.steps = integer(f[13]);
    r.fidelity = real(f[14]);
    r.seed = integer(f[15]);
    r.wall_time = real(f[16]);
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError("empty results file", 0);
  return rows;
}

Statevector ExactStateCache::get(const HamiltonianInstance& h, double T, const Statevector& psi0) {
  const std::string key = cache_key(h, T, psi0);
  {
    std::lock_guard lock(mutex_);
    if (auto it = states_.find(key); it != states_.end()) {
      ++hits_;
      return it->second;
    }
  }
  KrylovOptions options;
  options.max_qubits = std::max<std::size_t>(options.max_qubits, h.n_qubits);
  Statevector state = exact_evolve(h, T, psi0, options);
  std::lock_guard lock(mutex_);
  return states_.emplace(key, std::move(state)).first->second;
}

std::size_t ExactStateCache::size() const {
  std::lock_guard lock(mutex_);
  return states_.size();
}

std::size_t ExactStateCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::vector<ResultRow> run_instance(const HamiltonianInstance& h, std::size_t instance_index,
                                    const SweepConfig& config, ExactStateCache& cache,
                                    std::ostream* log) {
  using Clock = std::chrono::steady_clock;
  const CommutationGraph graph = build_graph(h);
  const auto orderings = build_orderings(h, graph, config, log);
  const double T = config.total_time(h.family);
  const Statevector psi0 = neel_state(h.n_qubits);
  const Statevector exact = cache.get(h, T, psi0);
  const ResultRow base = row_template(h, instance_index, config);

  std::vector<ResultRow> rows;
  for (int p : config.orders) {
    for (std::size_t s : config.steps) {
      const TrotterPlan plan(h, TrotterConfig{p, s, T});
      double random_sum = 0.0;
      double random_best = -1.0;
      std::size_t random_n = 0;
      for (const auto& [ordering, grouping] : orderings) {
        const auto start = Clock::now();
        const double f = fidelity(exact, plan.evolve(ordering, psi0));
        const std::chrono::duration<double> elapsed = Clock::now() - start;
        ResultRow row = base;
        row.ordering = ordering.label;
        row.grouping = grouping;
        row.permutation = ordering.permutation;
        row.order = p;
        row.steps = s;
        row.fidelity = f;
        row.wall_time = elapsed.count();
        if (ordering.label.starts_with("random#")) {
          random_sum += f;
          random_best = std::max(random_best, f);
          ++random_n;
        }
        rows.push_back(std::move(row));
      }
      if (random_n > 0) {
        ResultRow mean = base;
        mean.order = p;
        mean.steps = s;
        mean.ordering = "random_mean";
        mean.fidelity = random_sum / double(random_n);
        rows.push_back(mean);
        mean.ordering = "random_best";
        mean.fidelity = random_best;
        rows.push_back(std::move(mean));
      }
    }
  }
  return rows;
}

SweepSummary run_sweep(const SweepConfig& config,
                       const std::function<void(const ResultRow&)>& sink, std::ostream* log) {
  config.validate();
  const auto instances = enumerate_instances(config);
  ExactStateCache cache;
  SweepSummary summary;
  summary.instances = instances.size();

  const std::size_t n = instances.size();
  struct Slot {
    std::vector<ResultRow> rows;
    std::string error;
    std::string log;
  };
  auto process = [&](std::size_t i) {
    Slot slot;
    std::ostringstream instance_log;
    try {
      slot.rows = run_instance(instances[i], i, config, cache, &instance_log);
    } catch (const std::exception& e) {
      slot.error = e.what();
    }
    slot.log = instance_log.str();
    return slot;
  };
  auto emit = [&](std::size_t i, Slot& slot) {
    if (log) *log << slot.log;
    if (!slot.error.empty()) {
      ++summary.failures;
      if (log) {
        *log << "error: instance " << i << " (" << describe(instances[i]) << "): " << slot.error
             << '\n';
      }
      return;
    }
    for (const auto& row : slot.rows) sink(row);
    summary.rows += slot.rows.size();
  };

  const std::size_t n_threads = std::min(config.threads, std::max<std::size_t>(n, 1));
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      Slot slot = process(i);
      emit(i, slot);
    }
    return summary;
  }

  // Workers fill slots out of order; this thread drains them in order.
  std::vector<std::optional<Slot>> slots(n);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      Slot slot = process(i);
      std::lock_guard lock(mutex);
      slots[i] = std::move(slot);
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (std::size_t i = 0; i < n; ++i) {
    Slot slot;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      slot = std::move(*slots[i]);
      slots[i].reset();
    }
    emit(i, slot);
  }
  for (auto& t : pool) t.join();
  return summary;
}

}  // namespace trotter
