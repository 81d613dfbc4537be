/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "fockchan/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace fockchan {

namespace {

void check_square(const Matrix &m, const char *what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
}

}  // namespace

FockState::FockState(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) {
    throw std::invalid_argument("FockState: dim must be >= 1");
  }
  const double n2 = amps_.squaredNorm();
  if (n2 <= 0.0 || n2 > 1.0 + kTraceTol) {
    throw std::invalid_argument("FockState: squared norm must lie in (0, 1]");
  }
}

FockState FockState::qubit(Complex c0, Complex c1, int dim) {
  if (dim < 2) {
    throw std::invalid_argument("FockState::qubit: dim must be >= 2");
  }
  Vector v = Vector::Zero(dim);
  v(0) = c0;
  v(1) = c1;
  return FockState(v);
}

FockState FockState::normalized() const {
  return FockState(amps_ / amps_.norm());
}

Operator::Operator(Matrix entries) : entries_(std::move(entries)) {
  check_square(entries_, "Operator");
}

bool Operator::is_diagonal(double tol) const {
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      if (i != j && std::abs(entries_(i, j)) > tol) return false;
    }
  }
  return true;
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  check_square(entries_, "DensityMatrix");
  const double herm_dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  entries_ = 0.5 * (entries_ + entries_.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_,
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdEigenvalueFloor) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
  const double tr = entries_.trace().real();
  if (tr <= 0.0 || tr > 1.0 + kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace must lie in (0, 1]");
  }
}

DensityMatrix DensityMatrix::from_pure(const FockState &psi) {
  const Vector &v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::normalized() const {
  return DensityMatrix(entries_ / trace());
}

Operator attenuator_filter(double nu, int dim) {
  if (!(nu > 0.0) || nu > 1.0) {
    throw std::domain_error("attenuator_filter: nu must lie in (0, 1]");
  }
  if (dim < 1) {
    throw std::invalid_argument("attenuator_filter: dim must be >= 1");
  }
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    m(n, n) = std::pow(nu, n);
  }
  return Operator(std::move(m));
}

Operator amplifier_filter(double g, int n_max) {
  if (!(g >= 1.0)) {
    throw std::domain_error(
        "amplifier_filter: g must be >= 1 (use attenuator_filter for g < 1)");
  }
  if (n_max < 0) {
    throw std::invalid_argument("amplifier_filter: n_max must be >= 0");
  }
  const int dim = n_max + 1;
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    // g^{n - N}; the top entry (n = N) is exactly 1.
    m(n, n) = std::pow(g, static_cast<double>(n - n_max));
  }
  return Operator(std::move(m));
}

Operator phase_shift(double phi, int dim) {
  if (dim < 1) {
    throw std::invalid_argument("phase_shift: dim must be >= 1");
  }
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    m(n, n) = std::exp(Complex(0.0, n * phi));
  }
  return Operator(std::move(m));
}

std::pair<DensityMatrix, double> apply_filter(const Operator &op,
                                              const DensityMatrix &rho) {
  if (op.dim() != rho.dim()) {
    throw std::invalid_argument("apply_filter: dimension mismatch");
  }
  Matrix out = op.entries() * rho.entries() * op.entries().adjoint();
  out = 0.5 * (out + out.adjoint().eval());
  const double p = out.trace().real();
  return {DensityMatrix(std::move(out)), p};
}

}  // namespace fockchan
