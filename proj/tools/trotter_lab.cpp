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

// trotter_lab: generate Hamiltonians, color their commutation graphs, list
// orderings, run fidelity sweeps and summarize the results.
//
//   trotter_lab generate --family xxz --L 3..8 --out hams/
//   trotter_lab color --family xxz --L 6 --g 0 --method handcrafted
//   trotter_lab order --family rect --Lx 2 --Ly 3 --hx 1 --strategy magnitude
//   trotter_lab run --family xxz --L 3..8 --orders 1,2 --steps 3,5 --out results.csv
//   trotter_lab summarize --in results.csv --out summary.csv

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "trotter/coloring.hpp"
#include "trotter/commutation_graph.hpp"
#include "trotter/error.hpp"
#include "trotter/hamiltonian.hpp"
#include "trotter/ordering.hpp"
#include "trotter/summary.hpp"
#include "trotter/sweep.hpp"
#include "trotter/text.hpp"

namespace {

using namespace trotter;

// "3..8", "3,5,8" or a mix like "3..5,8".
std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto token : split(text, ',')) {
    token = trim(token);
    const auto dots = token.find("..");
    if (dots != std::string_view::npos) {
      const auto lo = parse_integer(token.substr(0, dots));
      const auto hi = parse_integer(token.substr(dots + 2));
      if (!lo || !hi || *lo < 0 || *hi < *lo) {
        throw PreconditionError("bad integer range '" + std::string(token) + "'");
      }
      for (long long v = *lo; v <= *hi; ++v) out.push_back(std::size_t(v));
      continue;
    }
    const auto v = parse_integer(token);
    if (!v || *v < 0) throw PreconditionError("bad integer '" + std::string(token) + "'");
    out.push_back(std::size_t(*v));
  }
  return out;
}

// "0.1,0.2" or "lo:hi:count" for evenly spaced values.
std::vector<double> parse_real_list(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 3) {
    const auto lo = parse_real(parts[0]);
    const auto hi = parse_real(parts[1]);
    const auto n = parse_integer(parts[2]);
    if (!lo || !hi || !n || *n < 1) throw PreconditionError("bad grid '" + text + "'");
    return uniform_grid(*lo, *hi, std::size_t(*n));
  }
  std::vector<double> out;
  for (auto token : split(text, ',')) {
    const auto v = parse_real(token);
    if (!v) throw PreconditionError("bad number '" + std::string(token) + "'");
    out.push_back(*v);
  }
  return out;
}

std::vector<ColoringMethod> parse_methods(const std::string& text) {
  std::vector<ColoringMethod> out;
  if (trim(text).empty() || text == "none") return out;
  for (auto token : split(text, ',')) out.push_back(parse_coloring_method(trim(token)));
  return out;
}

/// Flags shared by every subcommand that selects instances.
struct InstanceFlags {
  std::string families = "xxz";
  std::string chain_lengths;
  std::string widths;
  std::string lengths;
  std::string deltas;
  std::string gs;
  std::string alphas;
  std::string hxs;
  std::vector<std::string> inputs;
  bool large = false;
  std::size_t max_qubits = 0;

  void attach(CLI::App* app) {
    app->add_option("--family", families, "Families: xxz, rect, tri (comma list)");
    app->add_option("--L", chain_lengths, "1D chain lengths, e.g. 3..20");
    app->add_option("--Lx", widths, "2D widths, e.g. 2..5");
    app->add_option("--Ly", lengths, "2D lengths (default: Lx and Lx+1)");
    app->add_option("--delta", deltas, "1D anisotropy grid");
    app->add_option("--g", gs, "1D transverse-field grid");
    app->add_option("--alpha", alphas, "Triangular J2/J1 grid");
    app->add_option("--hx", hxs, "Rectangular transverse-field grid");
    app->add_option("--input", inputs, "Hamiltonian files (replace the generated grid)")
        ->check(CLI::ExistingFile);
    app->add_flag("--large", large, "Allow instances up to 20 qubits (default cap 14)");
    app->add_option("--max-qubits", max_qubits, "Explicit qubit cap");
  }

  void apply(SweepConfig& cfg) const {
    cfg.families.clear();
    for (auto token : split(families, ',')) cfg.families.push_back(parse_family(trim(token)));
    if (!chain_lengths.empty()) cfg.chain_lengths = parse_size_list(chain_lengths);
    if (!widths.empty()) cfg.widths = parse_size_list(widths);
    if (!lengths.empty()) cfg.lengths = parse_size_list(lengths);
    if (!deltas.empty()) cfg.deltas = parse_real_list(deltas);
    if (!gs.empty()) cfg.gs = parse_real_list(gs);
    if (!alphas.empty()) cfg.alphas = parse_real_list(alphas);
    if (!hxs.empty()) cfg.hxs = parse_real_list(hxs);
    if (large) cfg.max_qubits = 20;
    if (max_qubits > 0) cfg.max_qubits = max_qubits;
    for (const auto& path : inputs) cfg.inputs.push_back(read_hamiltonian_file(path));
  }
};

std::string file_stem(const HamiltonianInstance& h, std::size_t index) {
  char buf[160];
  switch (h.family) {
    case Family::Xxz1D:
      std::snprintf(buf, sizeof buf, "%04zu_xxz_1d_L%zu_delta%g_g%g", index, h.n_qubits,
                    h.params.delta, h.params.g);
      break;
    case Family::Rect2D:
      std::snprintf(buf, sizeof buf, "%04zu_rect_2d_%zux%zu_hx%g", index, h.lattice->width,
                    h.lattice->length, h.params.hx);
      break;
    case Family::Tri2D:
      std::snprintf(buf, sizeof buf, "%04zu_tri_2d_%zux%zu_alpha%g", index, h.lattice->width,
                    h.lattice->length, h.params.alpha);
      break;
  }
  return buf;
}

Grouping make_grouping(const HamiltonianInstance& h, const CommutationGraph& graph,
                       ColoringMethod method) {
  switch (method) {
    case ColoringMethod::Xyz: return xyz_coloring(h);
    case ColoringMethod::Handcrafted: return handcrafted_coloring(h);
    case ColoringMethod::Greedy: return greedy_coloring(graph);
    case ColoringMethod::Exact: return exact_coloring(graph);
  }
  return greedy_coloring(graph);
}

void print_sequence(const HamiltonianInstance& h, const std::vector<std::size_t>& seq) {
  for (std::size_t j : seq) {
    std::cout << "  " << j << '\t' << format_real(h.terms[j].coefficient) << '\t'
              << format_dense(h.terms[j].pauli) << '\n';
  }
}

std::size_t default_threads() {
  if (const char* env = std::getenv("TROTTER_LAB_THREADS")) {
    if (const auto v = parse_integer(env); v && *v > 0) return std::size_t(*v);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trotter ordering laboratory"};
  app.require_subcommand(1);
  app.footer("Environment: TROTTER_LAB_THREADS sets the default for --threads.");

  // generate
  InstanceFlags gen_flags;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write Hamiltonian files");
  gen_flags.attach(generate);
  generate->add_option("--out", gen_out, "Output directory")->required();

  // color
  InstanceFlags color_flags;
  std::string color_method = "xyz";
  std::string dot_path;
  auto* color = app.add_subcommand("color", "Print commuting groups of each instance");
  color_flags.attach(color);
  color->add_option("--method", color_method, "xyz, handcrafted, greedy or exact");
  color->add_option("--dot", dot_path, "Write the commutation graph in DOT format");

  // order
  InstanceFlags order_flags;
  std::string order_strategy = "magnitude";
  std::string order_method = "xyz";
  std::size_t order_random = 1;
  std::uint64_t order_seed = 0;
  auto* order = app.add_subcommand("order", "Print orderings of each instance");
  order_flags.attach(order);
  order->add_option("--strategy", order_strategy,
                    "group, deplete, equalise, magnitude, lex or random");
  order->add_option("--method", order_method, "Coloring used by group/deplete/equalise");
  order->add_option("--random", order_random, "Number of random orderings");
  order->add_option("--seed", order_seed, "Random seed");

  // run
  InstanceFlags run_flags;
  std::string run_out = "results.csv";
  std::string run_orders = "1,2";
  std::string run_steps = "3,5,10,20";
  std::string run_strategies = "all";
  std::string run_col1d = "xyz,handcrafted,greedy,exact";
  std::string run_col2d = "xyz";
  double run_t1d = 5.0;
  double run_t2d = 1.0;
  std::size_t run_random = 30;
  std::uint64_t run_seed = 0;
  std::size_t run_threads = default_threads();
  auto* run = app.add_subcommand("run", "Run a fidelity sweep and write CSV");
  run_flags.attach(run);
  run->add_option("--out", run_out, "CSV path ('-' for stdout)");
  run->add_option("--orders", run_orders, "Trotter orders (1,2)");
  run->add_option("--steps", run_steps, "Trotter step counts");
  run->add_option("--strategies", run_strategies,
                  "group, deplete, equalise, magnitude, lex, random or all");
  run->add_option("--colorings-1d", run_col1d, "Colorings for 1D group-evolve");
  run->add_option("--colorings-2d", run_col2d, "Colorings for 2D group-evolve");
  run->add_option("--T1d", run_t1d, "Total time for 1D chains");
  run->add_option("--T2d", run_t2d, "Total time for 2D lattices");
  run->add_option("--random", run_random, "Random orderings per instance");
  run->add_option("--seed", run_seed, "Random seed");
  run->add_option("--threads", run_threads, "Worker threads");

  // summarize
  std::string sum_in;
  std::string sum_out = "-";
  auto* summarize_cmd = app.add_subcommand("summarize", "Aggregate a results CSV");
  summarize_cmd->add_option("--in", sum_in, "Results CSV")->required()->check(CLI::ExistingFile);
  summarize_cmd->add_option("--out", sum_out, "Summary CSV ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      SweepConfig cfg;
      gen_flags.apply(cfg);
      cfg.validate();
      std::filesystem::create_directories(gen_out);
      const auto instances = enumerate_instances(cfg);
      for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto path = std::filesystem::path(gen_out) / (file_stem(instances[i], i) + ".ham");
        write_hamiltonian_file(instances[i], path.string());
        std::cout << path.string() << '\n';
      }
    } else if (*color) {
      SweepConfig cfg;
      color_flags.apply(cfg);
      cfg.validate();
      const ColoringMethod method = parse_coloring_method(color_method);
      std::unique_ptr<std::ofstream> dot;
      if (!dot_path.empty()) {
        dot = std::make_unique<std::ofstream>(dot_path);
        if (!*dot) throw Error("cannot write '" + dot_path + "'");
      }
      for (const auto& h : enumerate_instances(cfg)) {
        const auto graph = build_graph(h);
        const auto grouping = make_grouping(h, graph, method);
        if (!validate_grouping(graph, grouping)) throw Error("coloring is not proper");
        std::cout << "# " << describe(h) << ": " << grouping.size() << " groups ("
                  << to_string(method) << "), " << graph.n_edges() << " edges\n";
        for (std::size_t g = 0; g < grouping.size(); ++g) {
          std::cout << "group " << g << ":";
          for (std::size_t v : grouping.groups[g]) {
            std::cout << ' ' << v << ':' << format_dense(h.terms[v].pauli);
          }
          std::cout << '\n';
        }
        if (dot) *dot << to_dot(graph, h);
      }
    } else if (*order) {
      SweepConfig cfg;
      order_flags.apply(cfg);
      cfg.validate();
      for (const auto& h : enumerate_instances(cfg)) {
        const auto graph = build_graph(h);
        std::vector<Ordering> orderings;
        if (order_strategy == "group") {
          orderings = group_evolve_orderings(
              make_grouping(h, graph, parse_coloring_method(order_method)));
        } else if (order_strategy == "deplete") {
          orderings.push_back(
              deplete_groups(make_grouping(h, graph, parse_coloring_method(order_method)), h));
        } else if (order_strategy == "equalise") {
          orderings.push_back(
              equalise_groups(make_grouping(h, graph, parse_coloring_method(order_method)), h));
        } else if (order_strategy == "magnitude") {
          orderings.push_back(magnitude_ordering(h));
        } else if (order_strategy == "lex") {
          orderings.push_back(lexicographic_ordering(h));
        } else if (order_strategy == "random") {
          orderings = random_orderings(h, order_random, order_seed);
        } else {
          throw PreconditionError("unknown strategy '" + order_strategy + "'");
        }
        std::cout << "# " << describe(h) << '\n';
        for (const auto& o : orderings) {
          std::cout << o.label << '\n';
          print_sequence(h, o.sequence());
        }
      }
    } else if (*run) {
      SweepConfig cfg;
      run_flags.apply(cfg);
      cfg.orders.clear();
      for (auto p : parse_size_list(run_orders)) cfg.orders.push_back(int(p));
      cfg.steps = parse_size_list(run_steps);
      cfg.strategies = StrategySet::parse(run_strategies);
      cfg.colorings_1d = parse_methods(run_col1d);
      cfg.colorings_2d = parse_methods(run_col2d);
      cfg.time_1d = run_t1d;
      cfg.time_2d = run_t2d;
      cfg.random_count = run_random;
      cfg.seed = run_seed;
      cfg.threads = run_threads;
      cfg.validate();

      std::unique_ptr<std::ofstream> file;
      std::ostream* out = &std::cout;
      if (run_out != "-") {
        file = std::make_unique<std::ofstream>(run_out);
        if (!*file) throw Error("cannot write '" + run_out + "'");
        out = file.get();
      }
      *out << csv_header() << '\n';
      const auto summary =
          run_sweep(cfg, [&](const ResultRow& row) { *out << to_csv_line(row) << '\n'; },
                    &std::cerr);
      std::cerr << summary.instances << " instances, " << summary.rows << " rows, "
                << summary.failures << " failures\n";
      if (summary.failures > 0) return 3;
    } else if (*summarize_cmd) {
      std::ifstream in(sum_in);
      const auto rows = read_results_csv(in);
      const auto summary = summarize(rows);
      if (sum_out == "-") {
        write_summary_csv(summary, std::cout);
      } else {
        std::ofstream out(sum_out);
        if (!out) throw Error("cannot write '" + sum_out + "'");
        write_summary_csv(summary, out);
      }
    }
  } catch (const trotter::Error& e) {
    std::cerr << "trotter_lab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "trotter_lab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
