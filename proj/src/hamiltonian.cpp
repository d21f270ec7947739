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

#include "trotter/hamiltonian.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "trotter/error.hpp"
#include "trotter/text.hpp"

namespace trotter {

namespace {

constexpr double kDistanceTolerance = 1e-9;
constexpr const char* kMagic = "#trotter-hamiltonian v1";

struct Point {
  double x;
  double y;
};

void push_term(HamiltonianInstance& h, double coefficient, PauliString pauli) {
  if (coefficient == 0.0) return;
  h.terms.push_back({coefficient, std::move(pauli)});
}

void push_heisenberg_bond(HamiltonianInstance& h, std::size_t i, std::size_t j,
                          double cx, double cy, double cz) {
  push_term(h, cx, PauliString::from_sites(h.n_qubits, {i, j}, PauliOp::X));
  push_term(h, cy, PauliString::from_sites(h.n_qubits, {i, j}, PauliOp::Y));
  push_term(h, cz, PauliString::from_sites(h.n_qubits, {i, j}, PauliOp::Z));
}

void push_fields(HamiltonianInstance& h, double coefficient) {
  for (std::size_t q = 0; q < h.n_qubits; ++q) {
    push_term(h, coefficient, PauliString::from_sites(h.n_qubits, {q}, PauliOp::X));
  }
}

void check_grid(std::size_t a, std::size_t b, const char* what) {
  if (a < 2 || b < 2) {
    throw PreconditionError(std::string(what) + ": both lattice dimensions must be >= 2");
  }
  if (a * b > Statevector::kMaxQubits) {
    throw PreconditionError(std::string(what) + ": lattice too large");
  }
}

// Site positions indexed by qubit.
std::vector<Point> site_positions(const LatticeSpec& lattice) {
  std::vector<Point> pos(lattice.width * lattice.length);
  const double half_sqrt3 = std::sqrt(3.0) / 2.0;
  for (std::size_t l = 0; l < lattice.length; ++l) {
    for (std::size_t w = 0; w < lattice.width; ++w) {
      Point p{double(w), double(l)};
      if (lattice.geometry == Geometry::Triangular) {
        p = {double(w) + 0.5 * double(l), half_sqrt3 * double(l)};
      }
      pos[snake_index(w, l, lattice.width)] = p;
    }
  }
  return pos;
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw PreconditionError(std::string(name) + " must be finite");
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::Xxz1D: return "xxz_1d";
    case Family::Rect2D: return "rect_2d";
    case Family::Tri2D: return "tri_2d";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "xxz_1d" || name == "xxz" || name == "1d") return Family::Xxz1D;
  if (name == "rect_2d" || name == "rect") return Family::Rect2D;
  if (name == "tri_2d" || name == "tri") return Family::Tri2D;
  throw PreconditionError("unknown Hamiltonian family '" + std::string(name) + "'");
}

HamiltonianInstance build_xxz_chain(std::size_t L, double delta, double g) {
  if (L < 2) throw PreconditionError("build_xxz_chain: L must be >= 2");
  if (L > Statevector::kMaxQubits) throw PreconditionError("build_xxz_chain: L too large");
  require_finite(delta, "delta");
  require_finite(g, "g");
  HamiltonianInstance h;
  h.n_qubits = L;
  h.family = Family::Xxz1D;
  h.params.delta = delta;
  h.params.g = g;
  for (std::size_t j = 0; j + 1 < L; ++j) push_heisenberg_bond(h, j, j + 1, 1.0, 1.0, delta);
  push_fields(h, g);
  return h;
}

HamiltonianInstance build_rect(std::size_t Lx, std::size_t Ly, double hx) {
  check_grid(Lx, Ly, "build_rect");
  require_finite(hx, "hx");
  HamiltonianInstance h;
  h.n_qubits = Lx * Ly;
  h.family = Family::Rect2D;
  h.params.hx = hx;
  h.lattice = LatticeSpec{Lx, Ly, Geometry::Rectangular};
  for (auto [i, j] : lattice_pairs(*h.lattice, 1.0)) push_heisenberg_bond(h, i, j, 1, 1, 1);
  push_fields(h, hx);
  return h;
}

HamiltonianInstance build_tri(std::size_t W, std::size_t L, double alpha) {
  check_grid(W, L, "build_tri");
  require_finite(alpha, "alpha");
  HamiltonianInstance h;
  h.n_qubits = W * L;
  h.family = Family::Tri2D;
  h.params.alpha = alpha;
  h.lattice = LatticeSpec{W, L, Geometry::Triangular};
  for (auto [i, j] : lattice_pairs(*h.lattice, 1.0)) push_heisenberg_bond(h, i, j, 1, 1, 1);
  for (auto [i, j] : lattice_pairs(*h.lattice, std::sqrt(3.0))) {
    push_heisenberg_bond(h, i, j, alpha, alpha, alpha);
  }
  return h;
}

std::size_t snake_index(std::size_t w, std::size_t l, std::size_t W) {
  if (w >= W) throw PreconditionError("snake_index: column out of range");
  return l * W + ((l % 2 == 0) ? w : (W - 1 - w));
}

std::vector<std::pair<std::size_t, std::size_t>> lattice_pairs(const LatticeSpec& lattice,
                                                               double target) {
  const auto pos = site_positions(lattice);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      const double d = std::hypot(pos[i].x - pos[j].x, pos[i].y - pos[j].y);
      if (std::abs(d - target) <= kDistanceTolerance) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

Statevector neel_state(std::size_t n_qubits) {
  if (n_qubits < 1) throw PreconditionError("neel_state: n must be >= 1");
  std::uint64_t index = 0;
  for (std::size_t q = 1; q < n_qubits; q += 2) index |= std::uint64_t{1} << q;
  return Statevector::basis(n_qubits, index);
}

std::string serialize(const HamiltonianInstance& h) {
  std::ostringstream out;
  out << kMagic << '\n';
  out << "#family " << to_string(h.family) << '\n';
  out << "#n_qubits " << h.n_qubits << '\n';
  switch (h.family) {
    case Family::Xxz1D:
      out << "#delta " << format_real(h.params.delta) << '\n';
      out << "#g " << format_real(h.params.g) << '\n';
      break;
    case Family::Rect2D:
      out << "#hx " << format_real(h.params.hx) << '\n';
      break;
    case Family::Tri2D:
      out << "#alpha " << format_real(h.params.alpha) << '\n';
      break;
  }
  if (h.lattice) {
    out << "#lattice "
        << (h.lattice->geometry == Geometry::Rectangular ? "rectangular" : "triangular")
        << ' ' << h.lattice->width << ' ' << h.lattice->length << '\n';
  }
  out << "#terms " << h.terms.size() << '\n';
  for (const auto& t : h.terms) {
    out << format_real(t.coefficient) << '\t' << format_dense(t.pauli) << '\n';
  }
  return out.str();
}

HamiltonianInstance deserialize(std::string_view text) {
  HamiltonianInstance h;
  bool have_family = false;
  bool have_qubits = false;
  std::optional<std::size_t> declared_terms;
  std::unordered_set<PauliString, PauliStringHash> seen;

  auto lines = split(text, '\n');
  if (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const std::string_view line = trim(lines[idx]);
    auto fail = [line_no](const std::string& msg) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
    };
    if (line.empty()) continue;

    if (line.front() == '#') {
      if (line == kMagic) continue;
      const auto fields = split(line.substr(1), ' ');
      const std::string_view key = fields[0];
      auto value = [&](std::size_t i) -> std::string_view {
        if (i >= fields.size()) throw fail("missing value for '" + std::string(key) + "'");
        return fields[i];
      };
      auto real = [&](std::size_t i) {
        const auto v = parse_real(value(i));
        if (!v) throw fail("bad number '" + std::string(value(i)) + "'");
        return *v;
      };
      auto count = [&](std::size_t i) {
        const auto v = parse_integer(value(i));
        if (!v || *v < 1) throw fail("bad count '" + std::string(value(i)) + "'");
        return static_cast<std::size_t>(*v);
      };
      if (key == "family") {
        try {
          h.family = parse_family(value(1));
        } catch (const PreconditionError& e) {
          throw fail(e.what());
        }
        have_family = true;
      } else if (key == "n_qubits") {
        h.n_qubits = count(1);
        have_qubits = true;
      } else if (key == "delta") {
        h.params.delta = real(1);
      } else if (key == "g") {
        h.params.g = real(1);
      } else if (key == "alpha") {
        h.params.alpha = real(1);
      } else if (key == "hx") {
        h.params.hx = real(1);
      } else if (key == "lattice") {
        LatticeSpec lattice;
        if (value(1) == "rectangular") {
          lattice.geometry = Geometry::Rectangular;
        } else if (value(1) == "triangular") {
          lattice.geometry = Geometry::Triangular;
        } else {
          throw fail("unknown lattice geometry '" + std::string(value(1)) + "'");
        }
        lattice.width = count(2);
        lattice.length = count(3);
        h.lattice = lattice;
      } else if (key == "terms") {
        declared_terms = count(1);
      }
      // Unknown '#' lines are comments.
      continue;
    }

    if (!have_qubits) throw fail("term line before '#n_qubits' header");
    const auto fields = split(line, '\t');
    if (fields.size() != 2) throw fail("expected '<coefficient><TAB><pauli>'");
    const auto coefficient = parse_real(fields[0]);
    if (!coefficient) throw fail("bad coefficient '" + std::string(fields[0]) + "'");
    PauliString pauli(1);
    try {
      pauli = parse_dense(trim(fields[1]));
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
    if (pauli.n_qubits() != h.n_qubits) {
      throw fail("Pauli string has " + std::to_string(pauli.n_qubits()) +
                 " qubits, header says " + std::to_string(h.n_qubits));
    }
    if (!seen.insert(pauli).second) throw fail("duplicate Pauli string " + format_dense(pauli));
    h.terms.push_back({*coefficient, std::move(pauli)});
  }

  if (!have_family) throw ParseError("missing '#family' header", 0);
  if (!have_qubits) throw ParseError("missing '#n_qubits' header", 0);
  if (h.terms.empty()) throw ParseError("Hamiltonian has no terms", lines.size());
  if (declared_terms && *declared_terms != h.terms.size()) {
    throw ParseError("'#terms' header says " + std::to_string(*declared_terms) + ", found " +
                         std::to_string(h.terms.size()),
                     lines.size());
  }
  if (h.lattice && h.lattice->width * h.lattice->length != h.n_qubits) {
    throw ParseError("lattice size does not match '#n_qubits'", 0);
  }
  return h;
}

HamiltonianInstance read_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Hamiltonian file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

void write_hamiltonian_file(const HamiltonianInstance& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write Hamiltonian file '" + path + "'");
  out << serialize(h);
}

std::string describe(const HamiltonianInstance& h) {
  std::ostringstream out;
  out << to_string(h.family);
  if (h.lattice) {
    out << ' ' << h.lattice->width << 'x' << h.lattice->length;
  } else {
    out << " L=" << h.n_qubits;
  }
  switch (h.family) {
    case Family::Xxz1D:
      out << " delta=" << h.params.delta << " g=" << h.params.g;
      break;
    case Family::Rect2D:
      out << " hx=" << h.params.hx;
      break;
    case Family::Tri2D:
      out << " alpha=" << h.params.alpha;
      break;
  }
  return out.str();
}

}  // namespace trotter
