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

// Shared helpers for the test binaries: random states, channels and
// distributions, plus an embedding oracle built from Kronecker products.

#ifndef QNOISE_TESTS_TEST_UTIL_HPP
#define QNOISE_TESTS_TEST_UTIL_HPP

#include <Eigen/Dense>
#include <Eigen/QR>
#include <map>
#include <random>
#include <vector>

#include "qnoise/channels.hpp"
#include "qnoise/kraus.hpp"
#include "qnoise/qstate.hpp"

namespace qnoise::testing {

inline Matrix random_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

/// Mixed state G G^dagger / tr.
inline DensityMatrix random_state(std::size_t n_qubits, std::mt19937_64& rng) {
  const std::size_t d = std::size_t{1} << n_qubits;
  const Matrix g = random_gaussian(d, d, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix::from_matrix(rho);
}

inline Matrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  const Matrix g = random_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

/// Random CPTP channel with `n_ops` Kraus operators: slices of an isometry.
inline KrausChannel random_channel(std::size_t arity, std::size_t n_ops, std::mt19937_64& rng) {
  const std::size_t d = std::size_t{1} << arity;
  const Matrix u = random_unitary(d * n_ops, rng);
  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < n_ops; ++k) {
    ops.push_back(u.block(static_cast<Eigen::Index>(k * d), 0, static_cast<Eigen::Index>(d),
                          static_cast<Eigen::Index>(d)));
  }
  return KrausChannel(std::move(ops));
}

inline Distribution random_distribution(std::size_t n_outcomes, std::mt19937_64& rng,
                                        double zero_prob = 0.2) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(n_outcomes);
  double sum = 0.0;
  for (auto& x : w) {
    x = u(rng) < zero_prob ? 0.0 : u(rng);
    sum += x;
  }
  if (sum == 0.0) {
    w[0] = 1.0;
    sum = 1.0;
  }
  std::map<Outcome, double> probs;
  for (std::size_t i = 0; i < n_outcomes; ++i) {
    if (w[i] > 0.0) probs.emplace(i, w[i] / sum);
  }
  return Distribution(std::move(probs));
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Full 2^n operator of a local operator on `targets` (targets[0] is the
/// least significant local bit), built as a sum of Kronecker products of
/// per-qubit matrix units. Qubit 0 is the rightmost factor.
inline Matrix embed_oracle(const Matrix& local, const std::vector<Qubit>& targets, std::size_t n) {
  const std::size_t k = targets.size();
  const std::size_t d = std::size_t{1} << k;
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Matrix full = Matrix::Zero(dim, dim);
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t col = 0; col < d; ++col) {
      const Complex a = local(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
      if (a == Complex{0.0, 0.0}) continue;
      Matrix term = Matrix::Identity(1, 1);
      for (std::size_t q = n; q-- > 0;) {
        Matrix op = Matrix::Identity(2, 2);
        for (std::size_t t = 0; t < k; ++t) {
          if (targets[t] == q) {
            op = Matrix::Zero(2, 2);
            op(static_cast<Eigen::Index>((row >> t) & 1U), static_cast<Eigen::Index>((col >> t) & 1U)) = 1.0;
          }
        }
        term = kron(term, op);
      }
      full += a * term;
    }
  }
  return full;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qnoise::testing

#endif  // QNOISE_TESTS_TEST_UTIL_HPP
