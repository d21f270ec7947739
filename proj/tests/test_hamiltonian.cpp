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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "trotter/error.hpp"
#include "trotter/hamiltonian.hpp"
#include "trotter/sweep.hpp"

using namespace trotter;

namespace {

std::vector<std::string> dense_terms(const HamiltonianInstance& h) {
  std::vector<std::string> out;
  for (const auto& t : h.terms) out.push_back(format_dense(t.pauli));
  return out;
}

// Brute-force pairs at `target` distance from explicit (w, l) coordinates.
std::set<std::pair<std::size_t, std::size_t>> brute_pairs(std::size_t W, std::size_t L,
                                                          bool triangular, double target) {
  struct Site {
    double x, y;
    std::size_t q;
  };
  std::vector<Site> sites;
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t w = 0; w < W; ++w) {
      const std::size_t q = (l % 2 == 0) ? l * W + w : l * W + (W - 1 - w);
      if (triangular) {
        sites.push_back({w + 0.5 * l, std::sqrt(3.0) / 2 * l, q});
      } else {
        sites.push_back({double(w), double(l), q});
      }
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& a : sites) {
    for (const auto& b : sites) {
      const double d = std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
      if (a.q < b.q && std::abs(d - target) < 1e-9) out.insert({a.q, b.q});
    }
  }
  return out;
}

// Bond set of one coupling type read back from the generated terms.
std::set<std::pair<std::size_t, std::size_t>> bonds_with(const HamiltonianInstance& h,
                                                         PauliOp op, double coefficient) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& t : h.terms) {
    const auto s = t.pauli.support();
    if (s.size() == 2 && t.pauli.get(s[0]) == op && t.coefficient == coefficient) {
      out.insert({s[0], s[1]});
    }
  }
  return out;
}

}  // namespace

TEST(XxzChain, ThreeSiteTerms) {
  const auto h = build_xxz_chain(3, 0.25, 0.5);
  EXPECT_EQ(dense_terms(h), (std::vector<std::string>{"XXI", "YYI", "ZZI", "IXX", "IYY", "IZZ",
                                                      "XII", "IXI", "IIX"}));
  const std::vector<double> coeffs{1, 1, 0.25, 1, 1, 0.25, 0.5, 0.5, 0.5};
  for (std::size_t i = 0; i < coeffs.size(); ++i) EXPECT_EQ(h.terms[i].coefficient, coeffs[i]);
  EXPECT_EQ(h.family, Family::Xxz1D);
  EXPECT_FALSE(h.lattice.has_value());
}

TEST(XxzChain, TermCount) {
  for (std::size_t L = 2; L <= 20; ++L) {
    EXPECT_EQ(build_xxz_chain(L, 0.12, 0.3).size(), 4 * L - 3);
    EXPECT_EQ(build_xxz_chain(L, 0.12, 0.0).size(), 3 * (L - 1));
  }
  EXPECT_EQ(build_xxz_chain(20, 0.25, 1.0).size(), 77u);
}

TEST(XxzChain, RejectsShortChain) {
  EXPECT_THROW(build_xxz_chain(1, 0.1, 0.1), PreconditionError);
  EXPECT_THROW(build_xxz_chain(4, NAN, 0.1), PreconditionError);
}

TEST(RectLattice, Counts) {
  const auto h22 = build_rect(2, 2, 1.0);
  EXPECT_EQ(h22.size(), 16u);
  for (const auto& t : h22.terms) {
    if (t.pauli.weight() == 2) EXPECT_EQ(t.coefficient, 1.0);
  }
  EXPECT_EQ(build_rect(3, 3, 0.0).size(), 36u);
  EXPECT_THROW(build_rect(1, 3, 0.0), PreconditionError);
}

TEST(RectLattice, EdgesMatchBruteForceDistance) {
  for (auto [w, l] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 5}, {5, 4}}) {
    const auto h = build_rect(w, l, 0.5);
    const auto expected = brute_pairs(w, l, false, 1.0);
    for (PauliOp op : {PauliOp::X, PauliOp::Y, PauliOp::Z}) {
      EXPECT_EQ(bonds_with(h, op, 1.0), expected);
    }
    EXPECT_EQ(h.size(), 3 * expected.size() + std::size_t(w * l));
  }
}

TEST(RectLattice, EdgeEmissionIsSorted) {
  const auto h = build_rect(3, 4, 0.0);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < h.size(); i += 3) {
    const auto s = h.terms[i].pauli.support();
    order.emplace_back(s[0], s[1]);
  }
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
}

TEST(TriLattice, TwoByTwo) {
  const auto h = build_tri(2, 2, 0.0);
  EXPECT_EQ(h.size(), 15u);
  const auto with_nnn = build_tri(2, 2, 0.3);
  EXPECT_EQ(with_nnn.size(), 18u);
  EXPECT_EQ(bonds_with(with_nnn, PauliOp::Z, 0.3).size(), 1u);
}

TEST(TriLattice, NeighbourSetsMatchBruteForceDistance) {
  for (auto [w, l] : {std::pair{2, 2}, {2, 3}, {3, 3}, {4, 5}}) {
    const auto h = build_tri(w, l, 0.2);
    const auto nn = brute_pairs(w, l, true, 1.0);
    const auto nnn = brute_pairs(w, l, true, std::sqrt(3.0));
    EXPECT_EQ(bonds_with(h, PauliOp::X, 1.0), nn);
    EXPECT_EQ(bonds_with(h, PauliOp::Y, 0.2), nnn);
    EXPECT_EQ(h.size(), 3 * (nn.size() + nnn.size()));
  }
  // Interior sites of a triangular lattice have 6 nearest neighbours.
  EXPECT_EQ(brute_pairs(4, 5, true, 1.0).size(), 3u * 4 * 5 - 2 * 4 - 2 * 5 + 1);
}

TEST(SnakeIndex, Examples) {
  EXPECT_EQ(snake_index(0, 0, 4), 0u);
  EXPECT_EQ(snake_index(3, 0, 4), 3u);
  EXPECT_EQ(snake_index(3, 1, 4), 4u);
  EXPECT_EQ(snake_index(0, 1, 4), 7u);
  EXPECT_THROW(snake_index(4, 0, 4), PreconditionError);
}

TEST(SnakeIndex, IsBijection) {
  for (std::size_t W = 1; W <= 6; ++W) {
    for (std::size_t L = 1; L <= 6; ++L) {
      std::set<std::size_t> seen;
      for (std::size_t l = 0; l < L; ++l) {
        for (std::size_t w = 0; w < W; ++w) seen.insert(snake_index(w, l, W));
      }
      EXPECT_EQ(seen.size(), W * L);
      EXPECT_EQ(*seen.rbegin(), W * L - 1);
    }
  }
}

TEST(NeelState, Examples) {
  const auto s2 = neel_state(2);
  EXPECT_EQ(s2[2], Complex(1.0));
  EXPECT_EQ(neel_state(1)[0], Complex(1.0));
  const auto s4 = neel_state(4);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < s4.dimension(); ++i) nonzero += s4[i] != Complex(0.0);
  EXPECT_EQ(nonzero, 1u);
  EXPECT_EQ(s4[0b1010], Complex(1.0));
  EXPECT_THROW(neel_state(0), PreconditionError);
}

TEST(Generators, AllTermsNonMixedAndDistinct) {
  SweepConfig cfg;
  cfg.families = {Family::Xxz1D, Family::Rect2D, Family::Tri2D};
  cfg.max_qubits = 20;
  for (const auto& h : enumerate_instances(cfg)) {
    std::set<std::string> seen;
    for (const auto& t : h.terms) {
      ASSERT_NE(pauli_type(t.pauli), PauliType::Mixed) << describe(h);
      ASSERT_NE(t.coefficient, 0.0);
      ASSERT_TRUE(seen.insert(format_dense(t.pauli)).second);
    }
  }
}

TEST(Serialization, RoundTripsAllChainInstances) {
  SweepConfig cfg;
  cfg.max_qubits = 20;
  const auto instances = enumerate_instances(cfg);
  ASSERT_EQ(instances.size(), 900u);
  for (const auto& h : instances) ASSERT_EQ(deserialize(serialize(h)), h);
}

TEST(Serialization, RoundTripsLattices) {
  for (const auto& h : {build_rect(3, 4, 0.3), build_tri(3, 3, 0.1 / 3)}) {
    EXPECT_EQ(deserialize(serialize(h)), h);
  }
}

TEST(Serialization, Errors) {
  EXPECT_THROW(deserialize("#family xxz_1d\n#n_qubits 2\n"), ParseError);
  try {
    deserialize("#family xxz_1d\n#n_qubits 3\n1\tXXI\n1\tXX\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(deserialize("#family xxz_1d\n#n_qubits 2\n1.0 XX\n"), ParseError);
  EXPECT_THROW(deserialize("#family xxz_1d\n#n_qubits 2\nabc\tXX\n"), ParseError);
  EXPECT_THROW(deserialize("#family xxz_1d\n#n_qubits 2\n1\tXX\n2\tXX\n"), ParseError);
  EXPECT_THROW(deserialize("#family moon\n#n_qubits 2\n1\tXX\n"), ParseError);
  EXPECT_THROW(deserialize("#n_qubits 2\n1\tXX\n"), ParseError);
  EXPECT_THROW(deserialize("#family xxz_1d\n#n_qubits 2\n#terms 3\n1\tXX\n"), ParseError);
}
