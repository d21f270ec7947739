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

#include <random>

#include "dense_oracle.hpp"
#include "trotter/error.hpp"
#include "trotter/pauli.hpp"

using namespace trotter;

namespace {

PauliString P(const char* dense) { return parse_dense(dense); }

}  // namespace

TEST(PauliString, SetAndGet) {
  PauliString p(5);
  p.set(0, PauliOp::Z);
  p.set(1, PauliOp::X);
  p.set(3, PauliOp::Y);
  EXPECT_EQ(p.get(0), PauliOp::Z);
  EXPECT_EQ(p.get(2), PauliOp::I);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.y_count(), 1u);
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{0, 1, 3}));
  EXPECT_THROW(p.get(5), PreconditionError);
  EXPECT_THROW(PauliString(0), PreconditionError);
}

TEST(Commutes, Examples) {
  EXPECT_TRUE(commutes(P("XX"), P("ZZ")));
  EXPECT_FALSE(commutes(P("X"), P("Z")));
  EXPECT_FALSE(commutes(P("XXI"), P("IZZ")));
  EXPECT_TRUE(commutes(P("XYZ"), P("III")));
  EXPECT_TRUE(commutes(P("YZX"), P("III")));
}

TEST(Commutes, SizeMismatchThrows) {
  EXPECT_THROW(commutes(P("XX"), P("XXX")), PreconditionError);
}

TEST(Commutes, MatchesDenseCommutator) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = size(rng);
    const auto p = oracle::random_pauli(rng, n);
    const auto q = oracle::random_pauli(rng, n);
    const auto mp = oracle::pauli_matrix(p);
    const auto mq = oracle::pauli_matrix(q);
    const bool dense = (mp * mq - mq * mp).norm() < 1e-12;
    ASSERT_EQ(commutes(p, q), dense) << format_dense(p) << " " << format_dense(q);
    ASSERT_EQ(commutes(p, q), commutes(q, p));
    ASSERT_TRUE(commutes(p, p));
  }
}

TEST(Commutes, MultiWordMatchesSiteCount) {
  // Parity of anticommuting sites, counted one qubit at a time.
  std::mt19937_64 rng(11);
  for (std::size_t n : {63u, 64u, 65u, 130u, 300u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = oracle::random_pauli(rng, n);
      const auto q = oracle::random_pauli(rng, n);
      std::size_t anti = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto a = p.get(i);
        const auto b = q.get(i);
        if (a != PauliOp::I && b != PauliOp::I && a != b) ++anti;
      }
      ASSERT_EQ(commutes(p, q), anti % 2 == 0);
    }
  }
}

TEST(PauliType, Classification) {
  EXPECT_EQ(pauli_type(P("IIXIX")), PauliType::PureX);
  EXPECT_EQ(pauli_type(P("IZZIZ")), PauliType::PureZ);
  EXPECT_EQ(pauli_type(P("IIIY")), PauliType::PureY);
  EXPECT_EQ(pauli_type(P("XZ")), PauliType::Mixed);
  EXPECT_EQ(pauli_type(P("XY")), PauliType::Mixed);
  EXPECT_EQ(pauli_type(P("III")), PauliType::Identity);
}

TEST(DenseFormat, ParseExamples) {
  const auto p = P("ZXIYI");
  EXPECT_EQ(p.n_qubits(), 5u);
  EXPECT_EQ(p.get(0), PauliOp::Z);
  EXPECT_EQ(p.get(1), PauliOp::X);
  EXPECT_EQ(p.get(2), PauliOp::I);
  EXPECT_EQ(p.get(3), PauliOp::Y);
  EXPECT_TRUE(P("III").is_identity());
  const auto y = P("Y");
  EXPECT_EQ(y.x_mask(), 1u);
  EXPECT_EQ(y.z_mask(), 1u);
}

TEST(DenseFormat, FormatExamples) {
  EXPECT_EQ(format_dense(PauliString(4)), "IIII");
  EXPECT_EQ(format_dense(PauliString::from_sites(2, {0}, PauliOp::X)), "XI");
}

TEST(DenseFormat, RejectsBadCharacterWithPosition) {
  try {
    parse_dense("XXqZ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_dense(""), ParseError);
  EXPECT_THROW(parse_dense("xz"), ParseError);
}

TEST(DenseFormat, RoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> size(1, 150);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = oracle::random_pauli(rng, size(rng));
    ASSERT_EQ(parse_dense(format_dense(p)), p);
  }
}

TEST(DenseFormat, LexicographicConvention) {
  EXPECT_TRUE(compare_dense(P("IX"), P("XI")) < 0);
  EXPECT_TRUE(compare_dense(P("XZ"), P("YI")) < 0);
  EXPECT_TRUE(compare_dense(P("YZ"), P("ZI")) < 0);
  EXPECT_TRUE(compare_dense(P("XYZ"), P("XYZ")) == 0);
}
