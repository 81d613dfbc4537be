/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef FOCKCHAN_FOCK_HPP
#define FOCKCHAN_FOCK_HPP

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace fockchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Numerical tolerances for dense double-precision algebra at dim <= ~20.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kPsdEigenvalueFloor = -1e-10;
inline constexpr double kTraceTol = 1e-12;

/// Single-mode state on the truncated Fock basis |0>..|N>, dim = N+1.
/// Amplitudes may be subnormalized (conditional states).
class FockState {
public:
  explicit FockState(Vector amplitudes);

  /// Vacuum/single-photon superposition c0|0> + c1|1>, embedded in `dim`.
  static FockState qubit(Complex c0, Complex c1, int dim = 2);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vector &amplitudes() const { return amps_; }
  double squared_norm() const { return amps_.squaredNorm(); }
  FockState normalized() const;

private:
  Vector amps_;
};

/// Dense operator on a truncated Fock space (filters, Kraus operators,
/// phase shifts).
class Operator {
public:
  explicit Operator(Matrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix &entries() const { return entries_; }
  Operator dagger() const { return Operator(entries_.adjoint()); }
  bool is_diagonal(double tol = 0.0) const;

  static Operator identity(int dim) {
    return Operator(Matrix::Identity(dim, dim));
  }

private:
  Matrix entries_;
};

/// Hermitian PSD matrix with trace in (0, 1 + eps]; trace < 1 signals a
/// conditional (unnormalized) state. Validated on construction.
class DensityMatrix {
public:
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix from_pure(const FockState &psi);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix &entries() const { return entries_; }
  double trace() const { return entries_.trace().real(); }
  DensityMatrix normalized() const;

private:
  Matrix entries_;
};

/// diag(nu^0, nu^1, ..., nu^{dim-1}), 0 < nu <= 1.
Operator attenuator_filter(double nu, int dim);

/// G_N(g) = g^{-N} sum_n g^n |n><n| on dim = n_max + 1; largest entry is 1.
Operator amplifier_filter(double g, int n_max);

/// diag(e^{i n phi}).
Operator phase_shift(double phi, int dim);

/// Conditional filter map: returns (F rho F^dag, Tr[F rho F^dag]).
std::pair<DensityMatrix, double> apply_filter(const Operator &op,
                                              const DensityMatrix &rho);

} // namespace fockchan

#endif
