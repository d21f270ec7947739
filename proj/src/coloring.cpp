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

#include "trotter/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trotter/error.hpp"

namespace trotter {

namespace {

Grouping make_grouping(std::vector<std::vector<std::size_t>> groups, ColoringMethod method) {
  Grouping g;
  for (auto& group : groups) {
    if (group.empty()) continue;
    std::sort(group.begin(), group.end());
    g.groups.push_back(std::move(group));
  }
  g.method = method;
  return g;
}

// DSATUR branch and bound. Colors are assigned one vertex at a time, always
// picking the uncolored vertex that sees the most distinct colors; a new
// color is opened only while it can still beat the incumbent.
class DsaturSearch {
 public:
  DsaturSearch(const CommutationGraph& graph, std::vector<std::size_t> incumbent,
               std::size_t incumbent_count, std::size_t lower_bound)
      : graph_(graph),
        n_(graph.n_vertices()),
        color_(n_, kUncolored),
        seen_(n_ * incumbent_count, 0),
        saturation_(n_, 0),
        best_colors_(std::move(incumbent)),
        best_count_(incumbent_count),
        lower_bound_(lower_bound) {}

  std::vector<std::size_t> run() {
    if (best_count_ > lower_bound_) recurse(0, 0);
    return best_colors_;
  }

 private:
  static constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

  std::size_t pick_vertex() const {
    std::size_t best = kUncolored;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] != kUncolored) continue;
      if (best == kUncolored || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && graph_.degree(v) > graph_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void assign(std::size_t v, std::size_t c) {
    color_[v] = c;
    for (std::size_t u : graph_.neighbours(v)) {
      if (seen_[u * stride_ + c]++ == 0) ++saturation_[u];
    }
  }

  void unassign(std::size_t v) {
    const std::size_t c = color_[v];
    color_[v] = kUncolored;
    for (std::size_t u : graph_.neighbours(v)) {
      if (--seen_[u * stride_ + c] == 0) --saturation_[u];
    }
  }

  bool done() const { return best_count_ <= lower_bound_; }

  void recurse(std::size_t colored, std::size_t used) {
    if (used >= best_count_) return;
    if (colored == n_) {
      best_count_ = used;
      best_colors_ = color_;
      return;
    }
    const std::size_t v = pick_vertex();
    for (std::size_t c = 0; c < used && !done(); ++c) {
      if (seen_[v * stride_ + c] != 0) continue;
      assign(v, c);
      recurse(colored + 1, used);
      unassign(v);
      if (used >= best_count_) return;
    }
    if (!done() && used + 1 < best_count_) {
      assign(v, used);
      recurse(colored + 1, used + 1);
      unassign(v);
    }
  }

  const CommutationGraph& graph_;
  std::size_t n_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> seen_;
  std::vector<std::size_t> saturation_;
  std::vector<std::size_t> best_colors_;
  std::size_t best_count_;
  std::size_t lower_bound_;
  // Row stride of seen_: the initial incumbent size, an upper bound on any
  // color index explored.
  std::size_t stride_ = best_count_;
};

}  // namespace

const char* to_string(ColoringMethod method) {
  switch (method) {
    case ColoringMethod::Xyz: return "xyz";
    case ColoringMethod::Handcrafted: return "handcrafted";
    case ColoringMethod::Greedy: return "greedy";
    case ColoringMethod::Exact: return "exact";
  }
  return "?";
}

ColoringMethod parse_coloring_method(std::string_view name) {
  if (name == "xyz") return ColoringMethod::Xyz;
  if (name == "handcrafted") return ColoringMethod::Handcrafted;
  if (name == "greedy") return ColoringMethod::Greedy;
  if (name == "exact") return ColoringMethod::Exact;
  throw PreconditionError("unknown coloring method '" + std::string(name) + "'");
}

std::vector<std::vector<std::size_t>> groups_from_colors(const std::vector<std::size_t>& colors) {
  std::size_t n_colors = 0;
  for (std::size_t c : colors) n_colors = std::max(n_colors, c + 1);
  std::vector<std::vector<std::size_t>> by_color(n_colors);
  for (std::size_t v = 0; v < colors.size(); ++v) by_color[colors[v]].push_back(v);
  std::erase_if(by_color, [](const auto& g) { return g.empty(); });
  // Vertices were pushed in ascending order, so front() is the smallest member.
  std::sort(by_color.begin(), by_color.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return by_color;
}

Grouping xyz_coloring(const HamiltonianInstance& h) {
  std::vector<std::size_t> xs, ys, zs, identities;
  for (std::size_t i = 0; i < h.size(); ++i) {
    switch (pauli_type(h.terms[i].pauli)) {
      case PauliType::PureX: xs.push_back(i); break;
      case PauliType::PureY: ys.push_back(i); break;
      case PauliType::PureZ: zs.push_back(i); break;
      case PauliType::Identity: identities.push_back(i); break;
      case PauliType::Mixed:
        throw UnsupportedHamiltonian("xyz_coloring: term " + std::to_string(i) + " (" +
                                     format_dense(h.terms[i].pauli) + ") is mixed");
    }
  }
  Grouping g = make_grouping({std::move(xs), std::move(ys), std::move(zs)}, ColoringMethod::Xyz);
  if (g.groups.empty()) {
    g.groups.push_back(std::move(identities));
  } else {
    auto& first = g.groups.front();
    first.insert(first.end(), identities.begin(), identities.end());
    std::sort(first.begin(), first.end());
  }
  if (g.groups.front().empty()) g.groups.clear();
  return g;
}

Grouping handcrafted_coloring(const HamiltonianInstance& h) {
  if (h.family != Family::Xxz1D) {
    throw UnsupportedHamiltonian(std::string("handcrafted_coloring: family ") +
                                 to_string(h.family) + " is not a 1D chain");
  }
  std::vector<std::size_t> even, odd, fields;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto sites = h.terms[i].pauli.support();
    if (sites.size() == 1) {
      fields.push_back(i);
    } else if (sites.size() == 2 && sites[1] == sites[0] + 1) {
      (sites[0] % 2 == 0 ? even : odd).push_back(i);
    } else {
      throw UnsupportedHamiltonian("handcrafted_coloring: term " + std::to_string(i) + " (" +
                                   format_dense(h.terms[i].pauli) +
                                   ") is neither a nearest-neighbour bond nor a single site");
    }
  }
  return make_grouping({std::move(even), std::move(odd), std::move(fields)},
                       ColoringMethod::Handcrafted);
}

Grouping greedy_coloring(const CommutationGraph& graph) {
  const std::size_t n = graph.n_vertices();
  std::vector<std::size_t> colors(n, 0);
  std::vector<char> taken;
  for (std::size_t v = 0; v < n; ++v) {
    taken.assign(n + 1, 0);
    for (std::size_t u : graph.neighbours(v)) {
      if (u < v) taken[colors[u]] = 1;
    }
    std::size_t c = 0;
    while (taken[c]) ++c;
    colors[v] = c;
  }
  Grouping g;
  g.groups = groups_from_colors(colors);
  g.method = ColoringMethod::Greedy;
  return g;
}

std::vector<std::size_t> find_clique(const CommutationGraph& graph) {
  std::vector<std::size_t> best;
  for (std::size_t start = 0; start < graph.n_vertices(); ++start) {
    std::vector<std::size_t> clique{start};
    std::vector<std::size_t> candidates = graph.neighbours(start);
    while (!candidates.empty()) {
      // Candidate with the most neighbours among the remaining candidates.
      std::size_t pick = candidates.front();
      std::size_t pick_score = 0;
      for (std::size_t u : candidates) {
        std::size_t score = 0;
        for (std::size_t w : candidates) score += graph.adjacent(u, w) ? 1 : 0;
        if (score > pick_score) {
          pick = u;
          pick_score = score;
        }
      }
      clique.push_back(pick);
      std::erase_if(candidates, [&](std::size_t w) { return !graph.adjacent(pick, w); });
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

Grouping exact_coloring(const CommutationGraph& graph, const ExactColoringOptions& options) {
  const std::size_t n = graph.n_vertices();
  if (n > options.max_vertices) {
    throw SizeLimitError("exact_coloring: " + std::to_string(n) + " vertices exceeds cap of " +
                         std::to_string(options.max_vertices));
  }
  Grouping g;
  g.method = ColoringMethod::Exact;
  if (n == 0) return g;

  const Grouping greedy = greedy_coloring(graph);
  std::vector<std::size_t> incumbent(n);
  for (std::size_t c = 0; c < greedy.size(); ++c) {
    for (std::size_t v : greedy.groups[c]) incumbent[v] = c;
  }
  const std::size_t lower = std::max<std::size_t>(1, find_clique(graph).size());
  DsaturSearch search(graph, std::move(incumbent), greedy.size(), lower);
  g.groups = groups_from_colors(search.run());
  return g;
}

bool validate_grouping(const CommutationGraph& graph, const Grouping& grouping) {
  const std::size_t n = graph.n_vertices();
  std::vector<char> covered(n, 0);
  for (const auto& group : grouping.groups) {
    for (std::size_t v : group) {
      if (v >= n || covered[v]) return false;
      covered[v] = 1;
    }
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        if (graph.adjacent(group[a], group[b])) return false;
      }
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

}  // namespace trotter
