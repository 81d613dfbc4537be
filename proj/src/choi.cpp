/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "fockchan/choi.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fockchan {

namespace {

constexpr double kSuccessFloor = 1e-15;

// Probe |Psi+> = (|10> + |01>)/sqrt(2) in the (|00>, |10>, |01>) basis.
Vector probe_state() {
  Vector v = Vector::Zero(3);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace

ChoiMatrix::ChoiMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != 3 || entries_.cols() != 3) {
    throw std::invalid_argument("ChoiMatrix: entries must be 3x3");
  }
  const double herm_dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    throw std::invalid_argument("ChoiMatrix: not Hermitian");
  }
  entries_ = 0.5 * (entries_ + entries_.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdEigenvalueFloor) {
    throw std::invalid_argument("ChoiMatrix: not positive semidefinite");
  }
  const double tr = entries_.trace().real();
  if (tr <= 0.0 || tr > 1.0 + kTraceTol) {
    throw std::invalid_argument("ChoiMatrix: trace must lie in (0, 1]");
  }
}

bool ChoiMatrix::is_normalized(double tol) const {
  return std::abs(trace() - 1.0) <= tol;
}

ChoiMatrix ChoiMatrix::normalized() const {
  return ChoiMatrix(entries_ / trace());
}

ChoiMatrix ChoiMatrix::with_real_coherence() const {
  const Complex c = entries_(2, 1);  // <01|chi|10>
  if (std::abs(c) < 1e-15) return *this;
  // e^{i n_V phi} acts as diag(1, e^{i phi}, 1) on (|00>, |10>, |01>).
  const Complex u = c / std::abs(c);
  Matrix d = Matrix::Identity(3, 3);
  d(1, 1) = u;
  return ChoiMatrix(d * entries_ * d.adjoint());
}

ChoiMatrix choi_of_channel(const KrausChannel &ch) {
  if (ch.dim() != 2) {
    throw std::invalid_argument(
        "choi_of_channel: channel must act on the vacuum+single-photon "
        "subspace (dim 2)");
  }
  // Two-qubit index n_V * 2 + n_H; probe (|1>_V|0>_H + |0>_V|1>_H)/sqrt(2).
  Vector psi = Vector::Zero(4);
  psi(2) = psi(1) = 1.0 / std::sqrt(2.0);
  Matrix chi4 = Matrix::Zero(4, 4);
  const Matrix id2 = Matrix::Identity(2, 2);
  for (const Operator &a : ch.kraus_ops()) {
    Matrix k = Matrix::Zero(4, 4);
    // Kronecker product A (x) I with V as the first factor.
    k.block(0, 0, 2, 2) = a.entries()(0, 0) * id2;
    k.block(0, 2, 2, 2) = a.entries()(0, 1) * id2;
    k.block(2, 0, 2, 2) = a.entries()(1, 0) * id2;
    k.block(2, 2, 2, 2) = a.entries()(1, 1) * id2;
    const Vector out = k * psi;
    chi4 += out * out.adjoint();
  }
  if (std::abs(chi4(3, 3)) > kHermitianTol ||
      chi4.row(3).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument(
        "choi_of_channel: channel populates |11>, outside the 3-dim support");
  }
  const int map[3] = {0, 2, 1};  // |00>, |10>, |01>
  Matrix chi = Matrix::Zero(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      chi(r, c) = chi4(map[r], map[c]);
    }
  }
  return ChoiMatrix(std::move(chi));
}

double channel_fidelity(const ChoiMatrix &chi) {
  if (!chi.is_normalized()) {
    throw std::invalid_argument(
        "channel_fidelity: Choi matrix must be normalized");
  }
  const Vector psi = probe_state();
  return (psi.adjoint() * chi.entries() * psi)(0, 0).real();
}

double effective_transmittance(const KrausChannel &ch) {
  if (ch.dim() != 2) {
    throw std::invalid_argument("effective_transmittance: dim-2 channel only");
  }
  Matrix photon = Matrix::Zero(2, 2);
  photon(1, 1) = 1.0;
  const DensityMatrix out = apply_channel(ch, DensityMatrix(photon));
  const double p = out.trace();
  if (p < kSuccessFloor) {
    throw std::runtime_error(
        "effective_transmittance: zero success probability on |1><1|");
  }
  return out.entries()(1, 1).real() / p;
}

double naive_strategy_fidelity(double tau, double g) {
  if (!(tau > 0.0) || tau > 1.0) {
    throw std::domain_error("naive_strategy_fidelity: tau must lie in (0, 1]");
  }
  if (!(g > 0.0)) {
    throw std::domain_error("naive_strategy_fidelity: g must be > 0");
  }
  const double ginv = 1.0 / g;
  const double tau2 = tau * tau;
  const double num = 0.25 * (ginv + tau) * (ginv + tau);
  const double den = 0.5 * (tau2 + (2.0 - tau2) * ginv * ginv);
  return num / den;
}

}  // namespace fockchan
