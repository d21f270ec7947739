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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace trotter {

/// Single-qubit operator, numbered so that bit 0 is the X component and
/// bit 1 the Z component of the symplectic pair.
enum class PauliOp : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

enum class PauliType { Identity, PureX, PureY, PureZ, Mixed };

const char* to_string(PauliType type);

/**
 * Phaseless n-qubit Pauli operator in symplectic form.
 *
 * Qubit i carries (x_i, z_i): (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y. Both bit
 * vectors are packed into 64-bit words, qubit i living in bit (i % 64) of
 * word (i / 64). Bits past n_qubits are always zero.
 */
class PauliString {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// Identity on `n_qubits` qubits. n_qubits must be positive.
  explicit PauliString(std::size_t n_qubits);

  /// Builds a string with `op` on each listed qubit and identity elsewhere.
  static PauliString from_sites(std::size_t n_qubits,
                                std::initializer_list<std::size_t> qubits,
                                PauliOp op);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t n_words() const noexcept { return x_.size(); }

  PauliOp get(std::size_t qubit) const;
  void set(std::size_t qubit, PauliOp op);

  bool x_bit(std::size_t qubit) const;
  bool z_bit(std::size_t qubit) const;

  const std::vector<Word>& x_words() const noexcept { return x_; }
  const std::vector<Word>& z_words() const noexcept { return z_; }

  /// Low word of each bit vector; the statevector kernels use these and
  /// require n_qubits <= 64.
  Word x_mask() const noexcept { return x_.front(); }
  Word z_mask() const noexcept { return z_.front(); }

  bool is_identity() const noexcept;
  /// Number of non-identity sites.
  std::size_t weight() const noexcept;
  /// Number of Y sites.
  std::size_t y_count() const noexcept;
  /// Ascending list of non-identity qubits.
  std::vector<std::size_t> support() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<Word> x_;
  std::vector<Word> z_;
};

/// True iff p and q commute: the symplectic form p.x·q.z + p.z·q.x is even.
/// Throws PreconditionError on a qubit-count mismatch.
bool commutes(const PauliString& p, const PauliString& q);

PauliType pauli_type(const PauliString& p);

/// Parses the dense form ("ZXIYI"); character i is qubit i.
/// Throws ParseError carrying the offending character offset.
PauliString parse_dense(std::string_view text);

std::string format_dense(const PauliString& p);

/// Orders strings by their dense form under I < X < Y < Z.
std::strong_ordering compare_dense(const PauliString& a, const PauliString& b);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept;
};

/// A real coefficient times a Pauli string.
struct WeightedTerm {
  double coefficient = 0.0;
  PauliString pauli;

  friend bool operator==(const WeightedTerm&, const WeightedTerm&) = default;
};

}  // namespace trotter
