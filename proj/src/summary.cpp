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

#include "trotter/summary.hpp"

#include <map>
#include <ostream>
#include <tuple>

#include "trotter/text.hpp"

namespace trotter {

namespace {

struct Mean {
  double sum = 0.0;
  std::size_t count = 0;
  void add(double v) {
    sum += v;
    ++count;
  }
  double value() const { return count ? sum / double(count) : 0.0; }
};

// "xyz_groups perm 120" -> "xyz_groups".
std::string perm_prefix(const std::string& label) {
  const auto pos = label.find(" perm ");
  return pos == std::string::npos ? label : label.substr(0, pos);
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
  using StepKey = std::tuple<std::string, std::string, int, std::size_t>;
  using SizeKey = std::tuple<std::string, std::string, int, std::size_t, std::size_t>;
  using InstanceKey = std::tuple<std::string, std::size_t, std::string, int, std::size_t>;
  struct Best {
    std::string permutation;
    double value = -1.0;
    std::size_t count = 0;
    std::size_t n_qubits = 0;
  };

  std::map<StepKey, Mean> by_steps;
  std::map<SizeKey, Mean> by_size;
  std::map<InstanceKey, Best> best;

  auto add = [&](const std::string& family, const std::string& method, int p, std::size_t s,
                 std::size_t n, double f) {
    by_steps[{family, method, p, s}].add(f);
    by_size[{family, method, p, s, n}].add(f);
  };

  for (const auto& r : rows) {
    if (r.ordering.starts_with("random#")) continue;
    add(r.family, r.ordering, r.order, r.steps, r.n_qubits, r.fidelity);
    if (!r.permutation.empty()) {
      auto& b = best[{r.family, r.instance, perm_prefix(r.ordering), r.order, r.steps}];
      ++b.count;
      b.n_qubits = r.n_qubits;
      // Ties keep the lexicographically smallest label.
      if (r.fidelity > b.value || (r.fidelity == b.value && r.permutation < b.permutation)) {
        b.value = r.fidelity;
        b.permutation = r.permutation;
      }
    }
  }

  std::map<std::tuple<std::string, std::string, int, std::size_t, std::string>, std::size_t> wins;
  std::map<StepKey, std::size_t> contests;
  for (const auto& [key, b] : best) {
    const auto& [family, instance, prefix, p, s] = key;
    add(family, prefix + " best perm", p, s, b.n_qubits, b.value);
    ++wins[{family, prefix, p, s, b.permutation}];
    ++contests[{family, prefix, p, s}];
  }

  std::vector<SummaryRow> out;
  for (const auto& [key, m] : by_steps) {
    const auto& [family, method, p, s] = key;
    out.push_back({"by_steps", family, method, p, s, "", "", "", m.count, m.value()});
  }
  for (const auto& [key, m] : by_size) {
    const auto& [family, method, p, s, n] = key;
    out.push_back({"by_size", family, method, p, s, std::to_string(n), "", "", m.count, m.value()});
  }
  for (const auto& [key, b] : best) {
    const auto& [family, instance, prefix, p, s] = key;
    out.push_back({"best_perm", family, prefix, p, s, std::to_string(b.n_qubits),
                   std::to_string(instance), b.permutation, b.count, b.value});
  }
  for (const auto& [key, w] : wins) {
    const auto& [family, prefix, p, s, perm] = key;
    const std::size_t total = contests.at({family, prefix, p, s});
    out.push_back({"perm_wins", family, prefix, p, s, "", "", perm, total,
                   double(w) / double(total)});
  }
  return out;
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << "table,family,method,order,steps,n_qubits,instance,perm,count,value\n";
  for (const auto& r : rows) {
    out << r.table << ',' << r.family << ',' << r.method << ',' << r.order << ',' << r.steps
        << ',' << r.n_qubits << ',' << r.instance << ',' << r.permutation << ',' << r.count
        << ',' << format_real(r.value) << '\n';
  }
}

}  // namespace trotter
