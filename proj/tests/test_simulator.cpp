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

#include <algorithm>
#include <cmath>
#include <random>

#include "dense_oracle.hpp"
#include "trotter/coloring.hpp"
#include "trotter/error.hpp"
#include "trotter/exact_evolution.hpp"
#include "trotter/ordering.hpp"
#include "trotter/simulator.hpp"

using namespace trotter;

namespace {

HamiltonianInstance weighted(std::vector<std::pair<double, std::string>> terms) {
  HamiltonianInstance h;
  h.n_qubits = terms.front().second.size();
  for (const auto& [c, s] : terms) h.terms.push_back({c, parse_dense(s)});
  return h;
}

HamiltonianInstance subset(const HamiltonianInstance& h, const std::vector<std::size_t>& idx) {
  HamiltonianInstance out;
  out.n_qubits = h.n_qubits;
  for (std::size_t i : idx) out.terms.push_back(h.terms[i]);
  return out;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST(Fidelity, Examples) {
  const auto a = Statevector::basis(2, 0);
  const auto b = Statevector::basis(2, 1);
  EXPECT_DOUBLE_EQ(fidelity(a, a), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(a, b), 0.0);
  Statevector plus(1, {Complex(M_SQRT1_2, 0), Complex(M_SQRT1_2, 0)});
  EXPECT_NEAR(fidelity(Statevector::basis(1, 0), plus), 0.5, 1e-15);
  Statevector phased(1, {Complex(0, 1), Complex(0, 0)});
  EXPECT_DOUBLE_EQ(fidelity(Statevector::basis(1, 0), phased), 1.0);
  EXPECT_THROW(fidelity(a, Statevector(3)), PreconditionError);
}

TEST(TrotterConfig, Validation) {
  EXPECT_THROW((TrotterConfig{3, 1, 1.0}.validate()), PreconditionError);
  EXPECT_THROW((TrotterConfig{1, 0, 1.0}.validate()), PreconditionError);
  EXPECT_THROW((TrotterConfig{1, 1, NAN}.validate()), PreconditionError);
  EXPECT_NO_THROW((TrotterConfig{2, 4, 1.0}.validate()));
  EXPECT_DOUBLE_EQ((TrotterConfig{1, 4, 1.0}.dt()), 0.25);
}

TEST(TrotterEvolve, RejectsBadInputs) {
  const auto h = build_xxz_chain(3, 0.25, 0.5);
  const TrotterConfig cfg{1, 2, 1.0};
  EXPECT_THROW(trotter_evolve(h, magnitude_ordering(h), cfg, Statevector(4)), PreconditionError);
  Ordering broken = magnitude_ordering(h);
  broken.flat_sequence.pop_back();
  EXPECT_THROW(trotter_evolve(h, broken, cfg, neel_state(3)), PreconditionError);
}

TEST(TrotterEvolve, SingleTermIsExact) {
  const auto h = weighted({{0.7, "XYZ"}});
  const auto psi0 = neel_state(3);
  const auto exact = dense_evolve(h, 2.0, psi0);
  for (int p : {1, 2}) {
    const auto psi = trotter_evolve(h, magnitude_ordering(h), TrotterConfig{p, 1, 2.0}, psi0);
    EXPECT_LT(distance(psi, exact), 1e-12);
  }
}

TEST(TrotterEvolve, CommutingHamiltonianIsExact) {
  const auto h = weighted({{0.3, "ZZII"}, {-0.8, "IZZI"}, {1.1, "IIZZ"}, {0.5, "ZIIZ"}});
  std::mt19937_64 rng(3);
  const auto psi0 = oracle::random_state(rng, 4);
  const auto exact = dense_evolve(h, 1.7, psi0);
  for (const auto& o : random_orderings(h, 5, 11)) {
    const auto psi = trotter_evolve(h, o, TrotterConfig{1, 1, 1.7}, psi0);
    EXPECT_LT(distance(psi, exact), 1e-12);
  }
}

TEST(TrotterEvolve, GroupedStepMatchesDenseGroupProducts) {
  const auto h = build_xxz_chain(4, 0.25, 0.6);
  const auto grouping = xyz_coloring(h);
  const auto orderings = group_evolve_orderings(grouping);
  const auto psi0 = neel_state(4);
  const double T = 0.9;
  for (const auto& o : orderings) {
    oracle::Vector v = oracle::to_vector(psi0);
    for (const auto& g : o.group_sequence) {
      v = oracle::unitary(oracle::hamiltonian_matrix(subset(h, g)), T) * v;
    }
    const auto psi = trotter_evolve(h, o, TrotterConfig{1, 1, T}, psi0);
    EXPECT_LT(distance(psi, oracle::from_vector(4, v)), 1e-12) << o.label;
  }
}

TEST(TrotterEvolve, GroupExactnessOnXyzGroups) {
  for (std::size_t L : {4, 6, 8}) {
    const auto h = build_xxz_chain(L, 0.12, 1.3);
    std::mt19937_64 rng(L);
    const auto psi0 = oracle::random_state(rng, L);
    for (const auto& g : xyz_coloring(h).groups) {
      const auto part = subset(h, g);
      Statevector psi = psi0;
      AngleTable angles(h, 0.8);
      apply_term_sequence(h, angles, g, psi);
      EXPECT_LT(distance(psi, dense_evolve(part, 0.8, psi0)), 1e-10);
    }
  }
}

TEST(TrotterEvolve, IntraGroupShuffleInvariance) {
  const auto h = build_xxz_chain(6, 0.25, 0.9);
  const auto base = group_evolve_orderings(xyz_coloring(h))[2];
  const TrotterConfig cfg{2, 3, 2.0};
  const auto psi0 = neel_state(6);
  const auto reference = trotter_evolve(h, base, cfg, psi0);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Ordering shuffled = base;
    for (auto& g : shuffled.group_sequence) std::shuffle(g.begin(), g.end(), rng);
    EXPECT_LT(distance(trotter_evolve(h, shuffled, cfg, psi0), reference), 1e-12);
  }
}

TEST(TrotterEvolve, SecondOrderSingleStepIsPalindrome) {
  const auto h = build_xxz_chain(5, 0.25, 0.7);
  const auto o = magnitude_ordering(h);
  const double T = 1.3;
  const auto psi0 = neel_state(5);
  Statevector manual = psi0;
  AngleTable half(h, T / 2);
  apply_term_sequence(h, half, o.flat_sequence, manual);
  std::vector<std::size_t> back(o.flat_sequence.rbegin(), o.flat_sequence.rend());
  apply_term_sequence(h, half, back, manual);
  const auto psi = trotter_evolve(h, o, TrotterConfig{2, 1, T}, psi0);
  for (std::size_t i = 0; i < psi.dimension(); ++i) ASSERT_EQ(psi[i], manual[i]);
}

TEST(TrotterEvolve, SecondOrderGroupedKeepsWithinGroupOrder) {
  const auto h = build_xxz_chain(4, 0.25, 0.7);
  const auto o = group_evolve_orderings(xyz_coloring(h))[4];
  const double T = 0.6;
  Statevector manual = neel_state(4);
  AngleTable half(h, T / 2);
  apply_term_sequence(h, half, o.sequence(), manual);
  for (auto g = o.group_sequence.rbegin(); g != o.group_sequence.rend(); ++g) {
    apply_term_sequence(h, half, *g, manual);
  }
  const auto psi = trotter_evolve(h, o, TrotterConfig{2, 1, T}, neel_state(4));
  for (std::size_t i = 0; i < psi.dimension(); ++i) ASSERT_EQ(psi[i], manual[i]);
}

TEST(TrotterEvolve, FirstOrderGroupedEqualsFlattened) {
  const auto h = build_xxz_chain(5, 0.12, 0.4);
  const TrotterConfig cfg{1, 4, 3.0};
  for (const auto& o : group_evolve_orderings(xyz_coloring(h))) {
    const auto a = trotter_evolve(h, o, cfg, neel_state(5));
    const auto b = trotter_evolve(h, o.flattened(), cfg, neel_state(5));
    for (std::size_t i = 0; i < a.dimension(); ++i) ASSERT_EQ(a[i], b[i]);
  }
}

TEST(TrotterEvolve, PlanMatchesOneShotAndPreservesNorm) {
  const auto h = build_rect(2, 3, 0.8);
  const TrotterConfig cfg{2, 5, 1.0};
  TrotterPlan plan(h, cfg);
  std::mt19937_64 rng(8);
  const auto psi0 = oracle::random_state(rng, 6);
  for (const auto& o : random_orderings(h, 4, 2)) {
    const auto a = plan.evolve(o, psi0);
    const auto b = trotter_evolve(h, o, cfg, psi0);
    EXPECT_EQ(distance(a, b), 0.0);
    EXPECT_NEAR(a.norm(), 1.0, 1e-12);
  }
}

TEST(TrotterEvolve, OrderScaling) {
  const auto h = build_xxz_chain(6, 0.25, 1.0);
  const auto o = magnitude_ordering(h);
  const auto psi0 = neel_state(6);
  const auto exact = dense_evolve(h, 1.0, psi0);
  const std::vector<double> steps{8, 16, 32, 64};
  for (int p : {1, 2}) {
    std::vector<double> err;
    for (double s : steps) {
      err.push_back(distance(trotter_evolve(h, o, TrotterConfig{p, std::size_t(s), 1.0}, psi0),
                             exact));
    }
    EXPECT_NEAR(slope(steps, err), -static_cast<double>(p), 0.3) << "p=" << p;
  }
}

TEST(TrotterEvolve, ConvergesToExactWithSteps) {
  const auto h = build_tri(2, 2, 0.3);
  const auto psi0 = neel_state(4);
  const auto exact = dense_evolve(h, 1.0, psi0);
  const auto o = lexicographic_ordering(h);
  EXPECT_GT(fidelity(trotter_evolve(h, o, TrotterConfig{2, 200, 1.0}, psi0), exact),
            1.0 - 1e-8);
}

TEST(ExactEvolve, TimeZeroIsIdentity) {
  const auto h = build_xxz_chain(5, 0.25, 0.5);
  const auto psi0 = neel_state(5);
  EXPECT_EQ(distance(exact_evolve(h, 0.0, psi0), psi0), 0.0);
}

TEST(ExactEvolve, EigenstatePicksUpPhase) {
  const auto h = weighted({{0.8, "ZII"}});
  const auto psi0 = Statevector::basis(3, 0);
  const auto psi = exact_evolve(h, 1.5, psi0);
  EXPECT_NEAR(std::abs(psi[0] - std::polar(1.0, -0.8 * 1.5)), 0.0, 1e-12);
}

TEST(ExactEvolve, MatchesDenseOnChain) {
  const auto h = build_xxz_chain(6, 0.25, 1.0);
  const auto psi0 = neel_state(6);
  KrylovStats stats;
  const auto psi = exact_evolve(h, 5.0, psi0, {}, &stats);
  EXPECT_LT(distance(psi, dense_evolve(h, 5.0, psi0)), 1e-10);
  EXPECT_GT(stats.substeps, 0u);
  EXPECT_LE(stats.error_estimate, 1e-10);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
}

TEST(ExactEvolve, MatchesKroneckerOracle) {
  const auto h = build_rect(2, 2, 0.7);
  std::mt19937_64 rng(12);
  const auto psi0 = oracle::random_state(rng, 4);
  const oracle::Vector v = oracle::unitary(oracle::hamiltonian_matrix(h), 2.0) * oracle::to_vector(psi0);
  EXPECT_LT(distance(exact_evolve(h, 2.0, psi0), oracle::from_vector(4, v)), 1e-10);
  EXPECT_LT(distance(dense_evolve(h, 2.0, psi0), oracle::from_vector(4, v)), 1e-10);
}

TEST(ExactEvolve, NegativeTimeInverts) {
  const auto h = build_xxz_chain(5, 0.12, 0.8);
  const auto psi0 = neel_state(5);
  const auto back = exact_evolve(h, -3.0, exact_evolve(h, 3.0, psi0));
  EXPECT_LT(distance(back, psi0), 1e-9);
}

TEST(ExactEvolve, SizeCaps) {
  const auto h = build_xxz_chain(11, 0.25, 0.5);
  EXPECT_THROW(dense_evolve(h, 1.0, neel_state(11)), SizeLimitError);
  KrylovOptions small;
  small.max_qubits = 10;
  EXPECT_THROW(exact_evolve(h, 1.0, neel_state(11), small), SizeLimitError);
}
