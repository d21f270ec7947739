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

#include "trotter/pauli.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "trotter/error.hpp"

namespace trotter {

namespace {

std::size_t words_for(std::size_t n_qubits) {
  return (n_qubits + PauliString::kWordBits - 1) / PauliString::kWordBits;
}

void check_qubit(const PauliString& p, std::size_t qubit) {
  if (qubit >= p.n_qubits()) {
    throw PreconditionError("qubit " + std::to_string(qubit) +
                            " out of range for " +
                            std::to_string(p.n_qubits()) + "-qubit string");
  }
}

// Rank of a character under I < X < Y < Z.
int dense_rank(PauliOp op) {
  switch (op) {
    case PauliOp::I: return 0;
    case PauliOp::X: return 1;
    case PauliOp::Y: return 2;
    case PauliOp::Z: return 3;
  }
  return 0;
}

}  // namespace

const char* to_string(PauliType type) {
  switch (type) {
    case PauliType::Identity: return "identity";
    case PauliType::PureX: return "X";
    case PauliType::PureY: return "Y";
    case PauliType::PureZ: return "Z";
    case PauliType::Mixed: return "mixed";
  }
  return "?";
}

PauliString::PauliString(std::size_t n_qubits)
    : n_qubits_(n_qubits), x_(words_for(n_qubits), 0), z_(words_for(n_qubits), 0) {
  if (n_qubits == 0) throw PreconditionError("a Pauli string needs at least one qubit");
}

PauliString PauliString::from_sites(std::size_t n_qubits,
                                    std::initializer_list<std::size_t> qubits,
                                    PauliOp op) {
  PauliString p(n_qubits);
  for (std::size_t q : qubits) p.set(q, op);
  return p;
}

PauliOp PauliString::get(std::size_t qubit) const {
  check_qubit(*this, qubit);
  const unsigned code = (x_bit(qubit) ? 1u : 0u) | (z_bit(qubit) ? 2u : 0u);
  return static_cast<PauliOp>(code);
}

void PauliString::set(std::size_t qubit, PauliOp op) {
  check_qubit(*this, qubit);
  const std::size_t w = qubit / kWordBits;
  const Word bit = Word{1} << (qubit % kWordBits);
  const auto code = static_cast<unsigned>(op);
  x_[w] = (code & 1u) ? (x_[w] | bit) : (x_[w] & ~bit);
  z_[w] = (code & 2u) ? (z_[w] | bit) : (z_[w] & ~bit);
}

bool PauliString::x_bit(std::size_t qubit) const {
  return (x_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u;
}

bool PauliString::z_bit(std::size_t qubit) const {
  return (z_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u;
}

bool PauliString::is_identity() const noexcept {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

std::size_t PauliString::weight() const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) total += std::popcount(x_[w] | z_[w]);
  return total;
}

std::size_t PauliString::y_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) total += std::popcount(x_[w] & z_[w]);
  return total;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    Word bits = x_[w] | z_[w];
    while (bits) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw PreconditionError("commutes: qubit counts differ (" +
                            std::to_string(p.n_qubits()) + " vs " +
                            std::to_string(q.n_qubits()) + ")");
  }
  const auto& px = p.x_words();
  const auto& pz = p.z_words();
  const auto& qx = q.x_words();
  const auto& qz = q.z_words();
  PauliString::Word acc = 0;
  for (std::size_t w = 0; w < px.size(); ++w) acc ^= (px[w] & qz[w]) ^ (pz[w] & qx[w]);
  return (std::popcount(acc) & 1) == 0;
}

PauliType pauli_type(const PauliString& p) {
  bool has_x = false, has_y = false, has_z = false;
  const auto& xs = p.x_words();
  const auto& zs = p.z_words();
  for (std::size_t w = 0; w < xs.size(); ++w) {
    has_x |= (xs[w] & ~zs[w]) != 0;
    has_y |= (xs[w] & zs[w]) != 0;
    has_z |= (~xs[w] & zs[w]) != 0;
  }
  const int kinds = int(has_x) + int(has_y) + int(has_z);
  if (kinds == 0) return PauliType::Identity;
  if (kinds > 1) return PauliType::Mixed;
  if (has_x) return PauliType::PureX;
  if (has_y) return PauliType::PureY;
  return PauliType::PureZ;
}

PauliString parse_dense(std::string_view text) {
  if (text.empty()) throw ParseError("empty Pauli string", 0);
  PauliString p(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'I': break;
      case 'X': p.set(i, PauliOp::X); break;
      case 'Y': p.set(i, PauliOp::Y); break;
      case 'Z': p.set(i, PauliOp::Z); break;
      default:
        throw ParseError("invalid Pauli character '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i),
                         i);
    }
  }
  return p;
}

std::string format_dense(const PauliString& p) {
  static constexpr char kChars[] = {'I', 'X', 'Z', 'Y'};
  std::string out(p.n_qubits(), 'I');
  for (std::size_t i = 0; i < p.n_qubits(); ++i) {
    out[i] = kChars[static_cast<unsigned>(p.get(i))];
  }
  return out;
}

std::strong_ordering compare_dense(const PauliString& a, const PauliString& b) {
  const std::size_t n = std::min(a.n_qubits(), b.n_qubits());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = dense_rank(a.get(i));
    const int rb = dense_rank(b.get(i));
    if (ra != rb) return ra <=> rb;
  }
  return a.n_qubits() <=> b.n_qubits();
}

std::size_t PauliStringHash::operator()(const PauliString& p) const noexcept {
  std::size_t h = p.n_qubits();
  auto mix = [&h](std::uint64_t v) {
    h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto w : p.x_words()) mix(w);
  for (auto w : p.z_words()) mix(w);
  return h;
}

}  // namespace trotter
