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

#include "trotter/exact_evolution.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "trotter/error.hpp"
#include "trotter/pauli_kernels.hpp"

namespace trotter {

namespace {

void check_inputs(const HamiltonianInstance& h, double T, const Statevector& psi0,
                  std::size_t max_qubits) {
  if (psi0.n_qubits() != h.n_qubits) {
    throw PreconditionError("state has " + std::to_string(psi0.n_qubits()) +
                            " qubits, Hamiltonian has " + std::to_string(h.n_qubits));
  }
  if (h.n_qubits > max_qubits) {
    throw SizeLimitError("exact evolution limited to " + std::to_string(max_qubits) +
                         " qubits, got " + std::to_string(h.n_qubits));
  }
  if (!std::isfinite(T)) throw PreconditionError("evolution time must be finite");
}

// exp(-i tau T_m) e_1 for the real symmetric tridiagonal T_m.
Eigen::VectorXcd tridiagonal_exp(const std::vector<double>& alpha,
                                 const std::vector<double>& beta, std::size_t m, double tau) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(Eigen::Index(m), Eigen::Index(m));
  for (std::size_t i = 0; i < m; ++i) {
    t(Eigen::Index(i), Eigen::Index(i)) = alpha[i];
    if (i + 1 < m) {
      t(Eigen::Index(i), Eigen::Index(i + 1)) = beta[i];
      t(Eigen::Index(i + 1), Eigen::Index(i)) = beta[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t);
  const Eigen::MatrixXd& q = eig.eigenvectors();
  Eigen::VectorXcd phase(static_cast<Eigen::Index>(m));
  for (Eigen::Index k = 0; k < Eigen::Index(m); ++k) {
    phase(k) = std::polar(1.0, -tau * eig.eigenvalues()(k)) * q(0, k);
  }
  return q.cast<Complex>() * phase;
}

void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

void apply_hamiltonian(const HamiltonianInstance& h, const Statevector& in, Statevector& out) {
  if (in.n_qubits() != h.n_qubits || out.n_qubits() != h.n_qubits) {
    throw PreconditionError("apply_hamiltonian: dimension mismatch");
  }
  std::fill(out.amplitudes().begin(), out.amplitudes().end(), Complex{});
  for (const auto& term : h.terms) accumulate_pauli(term.coefficient, term.pauli, in, out);
}

Statevector exact_evolve(const HamiltonianInstance& h, double T, const Statevector& psi0,
                         const KrylovOptions& options, KrylovStats* stats) {
  check_inputs(h, T, psi0, options.max_qubits);
  KrylovStats local;
  Statevector psi = psi0;
  const double total = std::abs(T);
  const double direction = T < 0 ? -1.0 : 1.0;
  const std::size_t m_max = std::max<std::size_t>(options.max_dimension, 2);
  const std::size_t n_qubits = h.n_qubits;

  std::vector<Statevector> basis;
  std::vector<double> alpha, beta;
  Statevector w(n_qubits);
  double done = 0.0;

  while (done < total) {
    if (local.substeps >= options.max_substeps) {
      throw ConvergenceError("Krylov evolution exceeded " +
                             std::to_string(options.max_substeps) + " substeps");
    }
    const double remaining = total - done;
    const double psi_norm = psi.norm();
    if (psi_norm == 0.0) break;

    basis.clear();
    alpha.clear();
    beta.clear();
    basis.push_back(psi);
    for (auto& a : basis[0].amplitudes()) a /= psi_norm;

    // Budget for a substep of length tau.
    auto allowed = [&](double tau) { return options.tolerance * tau / total; };
    // Error estimate for the current basis of size m with residual norm b.
    auto estimate = [&](std::size_t m, double b, double tau) {
      const auto y = tridiagonal_exp(alpha, beta, m, direction * tau);
      return psi_norm * b * std::abs(y(Eigen::Index(m - 1)));
    };

    std::size_t m = 0;
    double residual = 0.0;
    bool invariant = false;
    while (true) {
      const Statevector& v = basis.back();
      apply_hamiltonian(h, v, w);
      ++local.matvecs;
      auto wa = w.amplitudes();
      const double a = dot(v.amplitudes(), wa).real();
      alpha.push_back(a);
      axpy(-a, v.amplitudes(), wa);
      if (basis.size() > 1) axpy(-beta.back(), basis[basis.size() - 2].amplitudes(), wa);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& u : basis) axpy(-dot(u.amplitudes(), wa), u.amplitudes(), wa);
      }
      m = basis.size();
      residual = w.norm();
      if (residual <= 1e-13 * (std::abs(a) + 1.0)) {
        invariant = true;
        break;
      }
      if (estimate(m, residual, remaining) <= allowed(remaining) || m >= m_max) break;
      beta.push_back(residual);
      basis.push_back(w);
      for (auto& x : basis.back().amplitudes()) x /= residual;
    }

    double tau = remaining;
    double err = invariant ? 0.0 : estimate(m, residual, tau);
    while (err > allowed(tau)) {
      tau *= 0.5;
      if (tau < total * 1e-14) {
        throw ConvergenceError("Krylov step size collapsed at t = " + std::to_string(done));
      }
      err = estimate(m, residual, tau);
    }

    const auto y = tridiagonal_exp(alpha, beta, m, direction * tau);
    std::fill(psi.amplitudes().begin(), psi.amplitudes().end(), Complex{});
    for (std::size_t k = 0; k < m; ++k) {
      axpy(psi_norm * y(Eigen::Index(k)), basis[k].amplitudes(), psi.amplitudes());
    }
    done = (tau == remaining) ? total : done + tau;
    local.error_estimate += err;
    ++local.substeps;
  }
  if (stats) *stats = local;
  return psi;
}

Statevector dense_evolve(const HamiltonianInstance& h, double T, const Statevector& psi0) {
  check_inputs(h, T, psi0, kDenseMaxQubits);
  using Mat2 = Eigen::Matrix2cd;
  const Complex i1(0.0, 1.0);
  Mat2 id, px, py, pz;
  id << 1, 0, 0, 1;
  px << 0, 1, 1, 0;
  py << 0, -i1, i1, 0;
  pz << 1, 0, 0, -1;

  const std::size_t dim = psi0.dimension();
  Eigen::MatrixXcd hm = Eigen::MatrixXcd::Zero(Eigen::Index(dim), Eigen::Index(dim));
  for (const auto& term : h.terms) {
    std::vector<const Mat2*> factor(h.n_qubits);
    for (std::size_t q = 0; q < h.n_qubits; ++q) {
      switch (term.pauli.get(q)) {
        case PauliOp::I: factor[q] = &id; break;
        case PauliOp::X: factor[q] = &px; break;
        case PauliOp::Y: factor[q] = &py; break;
        case PauliOp::Z: factor[q] = &pz; break;
      }
    }
    // Every Pauli factor has one nonzero per column, so column c of the
    // tensor product has a single nonzero: the product of factor[q](r_q, c_q).
    for (std::size_t c = 0; c < dim; ++c) {
      std::size_t r = 0;
      Complex v = term.coefficient;
      for (std::size_t q = 0; q < h.n_qubits; ++q) {
        const int cq = int((c >> q) & 1u);
        const int rq = ((*factor[q])(0, cq) != Complex{}) ? 0 : 1;
        r |= std::size_t(rq) << q;
        v *= (*factor[q])(rq, cq);
      }
      hm(Eigen::Index(r), Eigen::Index(c)) += v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hm);
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  Eigen::VectorXcd in(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) in(Eigen::Index(i)) = psi0[i];
  Eigen::VectorXcd coeffs = v.adjoint() * in;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::polar(1.0, -T * eig.eigenvalues()(k));
  }
  const Eigen::VectorXcd out = v * coeffs;
  Statevector result(h.n_qubits);
  for (std::size_t i = 0; i < dim; ++i) result[i] = out(Eigen::Index(i));
  return result;
}

}  // namespace trotter
