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

#include "qnoise/channels.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace qnoise {

// ---------------------------------------------------------------------------
// KrausChannel

double completeness_error(const std::vector<Matrix>& operators) {
  if (operators.empty()) return std::numeric_limits<double>::infinity();
  const auto dim = operators.front().rows();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& k : operators) sum += k.adjoint() * k;
  return (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

KrausChannel::KrausChannel(std::vector<Matrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw ChannelError("Kraus channel needs at least one operator");
  const auto dim = static_cast<std::size_t>(operators_.front().rows());
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ChannelError("Kraus operator dimension must be a power of two >= 2");
  }
  for (const auto& k : operators_) {
    if (static_cast<std::size_t>(k.rows()) != dim || static_cast<std::size_t>(k.cols()) != dim) {
      throw ChannelError("Kraus operators must all be " + std::to_string(dim) + "x" +
                         std::to_string(dim));
    }
  }
  while ((std::size_t{1} << arity_) < dim) ++arity_;
  const double err = qnoise::completeness_error(operators_);
  if (!(err <= kCptpTolerance)) {
    std::ostringstream msg;
    msg << "channel is not CPTP: completeness error " << err << " exceeds " << kCptpTolerance;
    throw ChannelError(msg.str());
  }
}

KrausChannel KrausChannel::identity(std::size_t arity) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << arity);
  return KrausChannel({Matrix::Identity(dim, dim)});
}

double KrausChannel::completeness_error() const { return qnoise::completeness_error(operators_); }

// ---------------------------------------------------------------------------
// Paulis

namespace pauli {
Matrix I() { return Matrix::Identity(2, 2); }
Matrix X() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
Matrix Y() {
  Matrix m(2, 2);
  m << Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0, 0.0);
  return m;
}
Matrix Z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << name << " must be in [0, 1], got " << p;
    throw std::invalid_argument(msg.str());
  }
}

Matrix projector(int row, int col) {
  Matrix m = Matrix::Zero(2, 2);
  m(row, col) = 1.0;
  return m;
}

// Column-major reshape of a length-4 Choi vector: v[2 * in + out] -> K(out, in).
Matrix unvec(const Vector& v) {
  Matrix k(2, 2);
  for (int in = 0; in < 2; ++in) {
    for (int out = 0; out < 2; ++out) k(out, in) = v(2 * in + out);
  }
  return k;
}

}  // namespace

KrausChannel depolarizing_channel(double p1) {
  require_probability(p1, "depolarizing probability");
  const double a = std::sqrt(1.0 - p1);
  const double b = std::sqrt(p1 / 3.0);
  return KrausChannel({a * pauli::I(), b * pauli::X(), b * pauli::Z(), b * pauli::Y()});
}

KrausChannel spam_channel(double p2) {
  require_probability(p2, "SPAM probability");
  return KrausChannel({std::sqrt(1.0 - p2) * pauli::I(), std::sqrt(p2) * pauli::X()});
}

double excitation_weight(double freq_hz, double theta_k) {
  if (freq_hz < 0.0 || theta_k < 0.0) {
    throw std::invalid_argument("frequency and temperature must be non-negative");
  }
  if (theta_k == 0.0) return 0.0;
  if (freq_hz == 0.0) return 0.5;
  const double exponent =
      2.0 * constants::kPlanck * freq_hz / (constants::kBoltzmann * theta_k);
  return 1.0 / (1.0 + std::exp(exponent));
}

void ThermalParams::validate() const {
  if (!(t1_us > 0.0) || !(t2_us > 0.0)) {
    throw std::invalid_argument("T1 and T2 must be positive");
  }
  if (t2_us > 2.0 * t1_us) {
    std::ostringstream msg;
    msg << "T2 = " << t2_us << " us exceeds 2*T1 = " << 2.0 * t1_us
        << " us; relaxation and dephasing times must satisfy T2 <= 2*T1";
    throw std::invalid_argument(msg.str());
  }
  if (!(gate_ns >= 0.0)) throw std::invalid_argument("gate duration must be non-negative");
  if (!(theta_k >= 0.0)) throw std::invalid_argument("temperature must be non-negative");
  if (!(freq_hz >= 0.0)) throw std::invalid_argument("qubit frequency must be non-negative");
}

ThermalProbabilities thermal_probabilities(const ThermalParams& tp) {
  tp.validate();
  ThermalProbabilities p;
  const double gate_us = tp.gate_ns * 1e-3;
  p.p_t1 = std::exp(-gate_us / tp.t1_us);
  p.p_t2 = std::exp(-gate_us / tp.t2_us);
  p.w_e = excitation_weight(tp.freq_hz, tp.theta_k);
  p.p_reset = 1.0 - p.p_t1;
  p.p_reset1 = p.w_e * p.p_reset;
  p.p_reset0 = (1.0 - p.w_e) * p.p_reset;
  // For T2 > T1 the phase-flip probability would be negative; that regime is
  // carried by the Choi coherence term instead.
  if (tp.t2_us <= tp.t1_us) {
    p.p_z = (1.0 - p.p_reset) * (1.0 - p.p_t2 / p.p_t1) / 2.0;
  } else {
    p.p_z = 0.0;
  }
  p.p_i = 1.0 - p.p_z - p.p_reset0 - p.p_reset1;
  return p;
}

ChoiMatrix::ChoiMatrix(Matrix c) : c_(std::move(c)) {
  if (c_.rows() != 4 || c_.cols() != 4) throw ChannelError("single-qubit Choi matrix must be 4x4");
}

double ChoiMatrix::trace_preservation_error() const {
  // tr over the output factor: (tr_out C)(i, j) = sum_a C(2i + a, 2j + a).
  Matrix reduced = Matrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      reduced(i, j) = c_(2 * i, 2 * j) + c_(2 * i + 1, 2 * j + 1);
    }
  }
  return (reduced - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff();
}

ChoiMatrix thermal_choi(const ThermalProbabilities& probs) {
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = 1.0 - probs.p_reset1;
  c(1, 1) = probs.p_reset1;
  c(2, 2) = probs.p_reset0;
  c(3, 3) = 1.0 - probs.p_reset0;
  c(0, 3) = probs.p_t2;
  c(3, 0) = probs.p_t2;
  return ChoiMatrix(std::move(c));
}

DensityMatrix apply_choi(const DensityMatrix& rho, const ChoiMatrix& choi) {
  if (rho.n_qubits() != 1) throw std::invalid_argument("apply_choi acts on one qubit");
  // C (rho^T (x) I), then trace out the input factor.
  Matrix lifted = Matrix::Zero(4, 4);
  const Matrix rt = rho.matrix().transpose();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int a = 0; a < 2; ++a) lifted(2 * i + a, 2 * j + a) = rt(i, j);
    }
  }
  const Matrix prod = choi.matrix() * lifted;
  Matrix out = Matrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out(a, b) = prod(a, b) + prod(2 + a, 2 + b);
  }
  return DensityMatrix::from_matrix(std::move(out));
}

KrausChannel choi_to_kraus(const ChoiMatrix& choi) {
  const Matrix& c = choi.matrix();
  std::vector<Matrix> ops;
  const double herm_err = (c - c.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err <= 1e-10) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (c + c.adjoint()));
    if (eig.eigenvalues().minCoeff() >= -1e-10) {
      for (Eigen::Index j = 3; j >= 0; --j) {
        const double lambda = eig.eigenvalues()(j);
        if (lambda <= kKrausCutoff) continue;
        ops.push_back(std::sqrt(lambda) * unvec(eig.eigenvectors().col(j)));
      }
      return KrausChannel(std::move(ops));
    }
  }
  Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) <= kKrausCutoff) continue;
    const Vector u = svd.matrixU().col(i);
    const Vector v = svd.matrixV().col(i);
    if ((u - v).cwiseAbs().maxCoeff() > 1e-8) {
      throw ChannelError(
          "Choi matrix is not CPTP: left and right singular vectors differ for singular value " +
          std::to_string(sigma(i)));
    }
    ops.push_back(std::sqrt(sigma(i)) * unvec(u));
  }
  if (ops.empty()) throw ChannelError("Choi matrix is not CPTP: no singular value above cutoff");
  return KrausChannel(std::move(ops));
}

KrausChannel thermal_channel(const ThermalParams& tp) {
  const ThermalProbabilities p = thermal_probabilities(tp);
  if (p.p_reset == 0.0 && p.p_z == 0.0 && p.p_t2 == 1.0) return KrausChannel::identity(1);
  if (tp.t2_us <= tp.t1_us) {
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(p.p_i) * pauli::I());
    if (p.p_z > 0.0) ops.push_back(std::sqrt(p.p_z) * pauli::Z());
    // Reset to |0> as the amplitude-damping pair so completeness closes.
    if (p.p_reset0 > 0.0) {
      const double s = std::sqrt(p.p_reset0);
      ops.push_back(s * projector(0, 0));
      ops.push_back(s * projector(0, 1));
    }
    if (p.p_reset1 > 0.0) {
      const double s = std::sqrt(p.p_reset1);
      ops.push_back(s * projector(1, 1));
      ops.push_back(s * projector(1, 0));
    }
    return KrausChannel(std::move(ops));
  }
  return choi_to_kraus(thermal_choi(p));
}

}  // namespace qnoise
