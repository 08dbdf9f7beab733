// Copyright 2026 The qnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnoise/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace qnoise {
namespace {

// Index arithmetic for embedding a k-qubit operator into n qubits. For a
// full index `base` with every target bit cleared, base + offsets[l] is the
// full index whose target bits spell the local index l.
struct Embedding {
  std::vector<std::size_t> offsets;
  std::size_t mask = 0;
};

Embedding make_embedding(std::span<const Qubit> targets, std::size_t n_qubits,
                         std::size_t op_dim) {
  if (targets.empty()) throw std::invalid_argument("operator needs at least one target qubit");
  if ((std::size_t{1} << targets.size()) != op_dim) {
    throw std::invalid_argument("operator dimension " + std::to_string(op_dim) +
                                " does not match " + std::to_string(targets.size()) +
                                " target qubit(s)");
  }
  Embedding e;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const Qubit q = targets[j];
    if (q >= n_qubits) {
      throw std::invalid_argument("target qubit " + std::to_string(q) + " out of range for " +
                                  std::to_string(n_qubits) + " qubit(s)");
    }
    const std::size_t bit = std::size_t{1} << q;
    if (e.mask & bit) throw std::invalid_argument("repeated target qubit " + std::to_string(q));
    e.mask |= bit;
  }
  e.offsets.resize(op_dim);
  for (std::size_t l = 0; l < op_dim; ++l) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if ((l >> j) & 1U) off |= std::size_t{1} << targets[j];
    }
    e.offsets[l] = off;
  }
  return e;
}

// rho <- A rho
void apply_left(Matrix& rho, const Matrix& a, const Embedding& e) {
  const auto dim = static_cast<std::size_t>(rho.rows());
  const std::size_t k = e.offsets.size();
  std::vector<Complex> v(k);
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & e.mask) continue;
      for (std::size_t l = 0; l < k; ++l) v[l] = rho(base + e.offsets[l], col);
      for (std::size_t r = 0; r < k; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t l = 0; l < k; ++l) acc += a(r, l) * v[l];
        rho(base + e.offsets[r], col) = acc;
      }
    }
  }
}

// rho <- rho A^dagger
void apply_right_adjoint(Matrix& rho, const Matrix& a, const Embedding& e) {
  const auto dim = static_cast<std::size_t>(rho.rows());
  const std::size_t k = e.offsets.size();
  std::vector<Complex> v(k);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & e.mask) continue;
    for (std::size_t row = 0; row < dim; ++row) {
      for (std::size_t l = 0; l < k; ++l) v[l] = rho(row, base + e.offsets[l]);
      for (std::size_t c = 0; c < k; ++c) {
        Complex acc{0.0, 0.0};
        for (std::size_t l = 0; l < k; ++l) acc += v[l] * std::conj(a(c, l));
        rho(row, base + e.offsets[c]) = acc;
      }
    }
  }
}

}  // namespace

DensityMatrix DensityMatrix::pure_state(std::size_t n_qubits, std::uint64_t basis_index) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (basis_index >= dim) {
    throw std::invalid_argument("basis index " + std::to_string(basis_index) +
                                " out of range for " + std::to_string(n_qubits) + " qubit(s)");
  }
  Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  rho(static_cast<Eigen::Index>(basis_index), static_cast<Eigen::Index>(basis_index)) = 1.0;
  return DensityMatrix(n_qubits, std::move(rho));
}

DensityMatrix DensityMatrix::from_matrix(Matrix rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 2) {
    throw std::invalid_argument("density matrix must be square with dimension >= 2");
  }
  const auto dim = static_cast<std::size_t>(rho.rows());
  if ((dim & (dim - 1)) != 0) throw std::invalid_argument("density matrix dimension must be 2^n");
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if (n > kMaxQubits) throw std::invalid_argument("density matrix exceeds the qubit limit");
  return DensityMatrix(n, std::move(rho));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

double DensityMatrix::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix& DensityMatrix::transform(const Matrix& unitary, std::span<const Qubit> targets) {
  const auto e = make_embedding(targets, n_qubits_, static_cast<std::size_t>(unitary.rows()));
  if (unitary.rows() != unitary.cols()) throw std::invalid_argument("unitary must be square");
  apply_left(rho_, unitary, e);
  apply_right_adjoint(rho_, unitary, e);
  return *this;
}

DensityMatrix& DensityMatrix::transform(const KrausChannel& channel,
                                        std::span<const Qubit> targets) {
  if (channel.arity() != targets.size()) {
    throw std::invalid_argument("channel arity " + std::to_string(channel.arity()) +
                                " does not match " + std::to_string(targets.size()) +
                                " target qubit(s)");
  }
  const auto e = make_embedding(targets, n_qubits_, channel.dim());
  const auto& ops = channel.operators();
  if (ops.size() == 1) {
    apply_left(rho_, ops.front(), e);
    apply_right_adjoint(rho_, ops.front(), e);
    return *this;
  }
  Matrix acc = Matrix::Zero(rho_.rows(), rho_.cols());
  Matrix term;
  for (const auto& k : ops) {
    term = rho_;
    apply_left(term, k, e);
    apply_right_adjoint(term, k, e);
    acc += term;
  }
  rho_ = std::move(acc);
  return *this;
}

Distribution::Distribution(std::map<Outcome, double> probs) : probs_(std::move(probs)) {
  double sum = 0.0;
  for (const auto& [o, p] : probs_) {
    if (!(p >= 0.0 && p <= 1.0 + 1e-12)) {
      throw std::invalid_argument("probability of outcome " + std::to_string(o) +
                                  " outside [0, 1]: " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
}

double Distribution::operator[](Outcome o) const {
  const auto it = probs_.find(o);
  return it == probs_.end() ? 0.0 : it->second;
}

double Distribution::total() const {
  double sum = 0.0;
  for (const auto& [o, p] : probs_) sum += p;
  return sum;
}

DensityMatrix pure_state(std::size_t n_qubits, std::uint64_t basis_index) {
  return DensityMatrix::pure_state(n_qubits, basis_index);
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& unitary,
                            std::span<const Qubit> targets) {
  DensityMatrix out = rho;
  out.transform(unitary, targets);
  return out;
}

DensityMatrix apply_kraus(const DensityMatrix& rho, const KrausChannel& channel,
                          std::span<const Qubit> targets) {
  DensityMatrix out = rho;
  out.transform(channel, targets);
  return out;
}

Distribution measure_distribution(const DensityMatrix& rho, std::span<const Qubit> measured) {
  if (measured.empty()) throw std::invalid_argument("measurement set is empty");
  std::size_t seen = 0;
  for (const Qubit q : measured) {
    if (q >= rho.n_qubits()) {
      throw std::invalid_argument("measured qubit " + std::to_string(q) + " out of range");
    }
    const std::size_t bit = std::size_t{1} << q;
    if (seen & bit) throw std::invalid_argument("repeated measured qubit " + std::to_string(q));
    seen |= bit;
  }
  std::vector<double> marginal(std::size_t{1} << measured.size(), 0.0);
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    Outcome o = 0;
    for (std::size_t j = 0; j < measured.size(); ++j) {
      o |= static_cast<Outcome>((i >> measured[j]) & 1U) << j;
    }
    marginal[o] += rho(i, i).real();
  }
  std::map<Outcome, double> probs;
  for (std::size_t o = 0; o < marginal.size(); ++o) {
    if (marginal[o] > 1e-15) probs.emplace(o, std::min(marginal[o], 1.0));
  }
  return Distribution(std::move(probs));
}

ShotCounts sample_shots(const Distribution& d, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shot count must be at least 1");
  std::vector<Outcome> outcomes;
  std::vector<double> weights;
  for (const auto& [o, p] : d) {
    outcomes.push_back(o);
    weights.push_back(p);
  }
  if (outcomes.empty()) throw std::invalid_argument("cannot sample from an empty distribution");
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  ShotCounts result;
  result.total_shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) ++result.counts[outcomes[pick(rng)]];
  return result;
}

}  // namespace qnoise
