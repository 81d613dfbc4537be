/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "fockchan/tomography.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fockchan {

namespace {

constexpr double kConvergenceTol = 1e-9;
constexpr int kMaxIterations = 10000;
constexpr double kDilution = 0.5;
constexpr double kProbFloor = 1e-15;

Matrix rank1(const Vector &v, const std::string & /*label*/ = {}) {
  return v * v.adjoint();
}

MeasurementSetting qubit_projector(Complex a10, Complex a01,
                                   const std::string &label) {
  Vector v = Vector::Zero(3);
  v(1) = a10;
  v(2) = a01;
  return {rank1(v), label};
}

MeasurementSetting vacuum_projector(Complex a00, int idx, Complex phase,
                                    const std::string &label) {
  Vector v = Vector::Zero(3);
  v(0) = a00;
  v(idx) = phase;
  return {rank1(v), label};
}

void check_setting(const MeasurementSetting &s) {
  if (s.projector.rows() != 3 || s.projector.cols() != 3) {
    throw std::invalid_argument("MeasurementSetting: projector must be 3x3");
  }
  if ((s.projector - s.projector.adjoint()).cwiseAbs().maxCoeff() >
      kHermitianTol) {
    throw std::invalid_argument("MeasurementSetting: projector not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.projector,
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kPsdEigenvalueFloor ||
      s.projector.trace().real() > 1.0 + kTraceTol) {
    throw std::invalid_argument("MeasurementSetting: projector out of range");
  }
}

// Settings must span the 9-dim real space of 3x3 Hermitian matrices.
void check_informational_completeness(
    const std::vector<MeasurementSetting> &settings) {
  Eigen::MatrixXd basis(settings.size(), 9);
  for (std::size_t k = 0; k < settings.size(); ++k) {
    int col = 0;
    for (int i = 0; i < 3; ++i) {
      basis(k, col++) = settings[k].projector(i, i).real();
      for (int j = i + 1; j < 3; ++j) {
        basis(k, col++) = settings[k].projector(i, j).real();
        basis(k, col++) = settings[k].projector(i, j).imag();
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis);
  const auto &sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * sv(0)) ++rank;
  }
  if (rank < 9) {
    throw std::invalid_argument(
        "reconstruct_choi: measurement settings are informationally "
        "incomplete (rank-deficient data)");
  }
}

// Least-squares inversion of the measured frequencies, projected back onto
// the density-matrix cone. Used as the starting point of the iteration: for
// frequencies that exactly match some state this already lands on the
// maximum-likelihood solution, and the multiplicative updates (which crawl
// sublinearly toward rank-deficient optima) only have to polish.
Matrix linear_inversion_seed(const std::vector<Matrix> &pis,
                             const std::vector<double> &weights,
                             double total) {
  const std::size_t n = pis.size();
  Eigen::MatrixXd basis(n, 9);
  Eigen::VectorXd freq(n);
  for (std::size_t k = 0; k < n; ++k) {
    int col = 0;
    for (int i = 0; i < 3; ++i) {
      basis(k, col++) = pis[k](i, i).real();
      for (int j = i + 1; j < 3; ++j) {
        basis(k, col++) = 2.0 * pis[k](i, j).real();
        basis(k, col++) = 2.0 * pis[k](i, j).imag();
      }
    }
    freq(k) = weights[k] / total;
  }
  const Eigen::VectorXd h =
      basis.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(freq);
  Matrix rho = Matrix::Zero(3, 3);
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    rho(i, i) = h(col++);
    for (int j = i + 1; j < 3; ++j) {
      const double re = h(col++);
      const double im = h(col++);
      rho(i, j) = Complex(re, im);
      rho(j, i) = Complex(re, -im);
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  rho = es.eigenvectors() *
        es.eigenvalues().cwiseMax(0.0).asDiagonal().toDenseMatrix() *
        es.eigenvectors().adjoint();
  // Keep the seed strictly inside the cone so the multiplicative step can
  // still move in every direction.
  rho += 1e-12 * Matrix::Identity(3, 3);
  return rho / rho.trace().real();
}

double log_likelihood(const std::vector<double> &weights,
                      const std::vector<double> &probs) {
  // Profile likelihood of independent Poisson counts with a common unknown
  // scale: sum_k n_k log p_k - N log(sum_k p_k), constants dropped.
  double total_w = 0.0, total_p = 0.0, ll = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    total_w += weights[k];
    total_p += probs[k];
    if (weights[k] > 0.0) {
      ll += weights[k] * std::log(std::max(probs[k], kProbFloor));
    }
  }
  return ll - total_w * std::log(std::max(total_p, kProbFloor));
}

}  // namespace

std::vector<MeasurementSetting> default_settings() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  std::vector<MeasurementSetting> out;
  // Pauli eigenstates on the {|10>, |01>} polarization block.
  out.push_back(qubit_projector(1.0, 0.0, "z+"));
  out.push_back(qubit_projector(0.0, 1.0, "z-"));
  out.push_back(qubit_projector(s, s, "x+"));
  out.push_back(qubit_projector(s, -s, "x-"));
  out.push_back(qubit_projector(s, i * s, "y+"));
  out.push_back(qubit_projector(s, -i * s, "y-"));
  // Lost-photon monitor.
  out.push_back(vacuum_projector(1.0, 1, 0.0, "vac"));
  // Vacuum-coherence probes, needed for completeness on the full 3-dim
  // space.
  out.push_back(vacuum_projector(s, 1, s, "v10+"));
  out.push_back(vacuum_projector(s, 1, i * s, "v10i"));
  out.push_back(vacuum_projector(s, 2, s, "v01+"));
  out.push_back(vacuum_projector(s, 2, i * s, "v01i"));
  return out;
}

std::vector<double> expected_counts(
    const ChoiMatrix &chi, const std::vector<MeasurementSetting> &settings,
    double total_counts) {
  if (!chi.is_normalized()) {
    throw std::invalid_argument("expected_counts: chi must be normalized");
  }
  std::vector<double> out;
  out.reserve(settings.size());
  for (const MeasurementSetting &s : settings) {
    check_setting(s);
    const double p = (s.projector * chi.entries()).trace().real();
    out.push_back(total_counts * std::max(p, 0.0));
  }
  return out;
}

std::vector<CountRecord> simulate_counts(
    const ChoiMatrix &chi, const std::vector<MeasurementSetting> &settings,
    std::int64_t total_counts, std::uint64_t seed) {
  if (total_counts < 1) {
    throw std::invalid_argument("simulate_counts: total_counts must be >= 1");
  }
  const std::vector<double> expected =
      expected_counts(chi, settings, static_cast<double>(total_counts));
  std::mt19937_64 rng(seed);
  std::vector<CountRecord> records;
  records.reserve(settings.size());
  for (std::size_t k = 0; k < settings.size(); ++k) {
    CountRecord rec;
    rec.setting = settings[k];
    rec.exposure = 1.0;
    if (expected[k] > 0.0) {
      std::poisson_distribution<std::int64_t> poisson(expected[k]);
      rec.counts = poisson(rng);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

ReconstructionResult reconstruct_choi_weighted(
    const std::vector<MeasurementSetting> &settings,
    const std::vector<double> &weights, const std::vector<double> &exposures) {
  if (settings.size() != weights.size() ||
      settings.size() != exposures.size()) {
    throw std::invalid_argument("reconstruct_choi: size mismatch");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    check_setting(settings[k]);
    if (weights[k] < 0.0 || !(exposures[k] > 0.0)) {
      throw std::invalid_argument("reconstruct_choi: invalid record");
    }
    total += weights[k];
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument("reconstruct_choi: no counts");
  }
  check_informational_completeness(settings);

  const std::size_t n = settings.size();
  // Exposure-weighted effective POVM elements.
  std::vector<Matrix> pis(n);
  for (std::size_t k = 0; k < n; ++k) {
    pis[k] = exposures[k] * settings[k].projector;
  }

  Matrix rho = linear_inversion_seed(pis, weights, total);
  auto probs = [&](const Matrix &state) {
    std::vector<double> p(n);
    for (std::size_t k = 0; k < n; ++k) {
      p[k] = std::max((pis[k] * state).trace().real(), 0.0);
    }
    return p;
  };

  std::vector<double> p = probs(rho);
  double ll = log_likelihood(weights, p);

  ReconstructionResult result;
  int plateau = 0;
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    double total_p = 0.0;
    Matrix r = Matrix::Zero(3, 3);
    Matrix s = Matrix::Zero(3, 3);
    for (std::size_t k = 0; k < n; ++k) {
      total_p += p[k];
      s += pis[k];
      if (weights[k] > 0.0) {
        r += (weights[k] / total) / std::max(p[k], kProbFloor) * pis[k];
      }
    }
    s /= total_p;

    double eps = kDilution;
    Matrix next;
    std::vector<double> p_next;
    double ll_next;
    for (int backtrack = 0;; ++backtrack) {
      const Matrix step =
          (Matrix::Identity(3, 3) + eps * s.inverse() * r) / (1.0 + eps);
      next = step * rho * step.adjoint();
      next = 0.5 * (next + next.adjoint().eval());
      next /= next.trace().real();
      p_next = probs(next);
      ll_next = log_likelihood(weights, p_next);
      if (ll_next >= ll - 1e-12 || backtrack >= 30) break;
      eps *= 0.5;
    }
    assert(ll_next >= ll - 1e-9);

    const double delta = (next - rho).cwiseAbs().maxCoeff();
    const double gain = ll_next - ll;
    rho = next;
    p = std::move(p_next);
    ll = ll_next;
    result.iterations = iter;
    if (delta < kConvergenceTol) {
      result.converged = true;
      break;
    }
    // Likelihood plateau: the optimum has been reached to numerical
    // precision even if the state still creeps along a boundary.
    plateau = gain < 1e-13 * (1.0 + std::abs(ll)) ? plateau + 1 : 0;
    if (plateau >= 5) {
      result.converged = true;
      break;
    }
  }
  result.log_likelihood = ll;
  result.chi = ChoiMatrix(rho).with_real_coherence().entries();
  return result;
}

ReconstructionResult reconstruct_choi(const std::vector<CountRecord> &records) {
  std::vector<MeasurementSetting> settings;
  std::vector<double> weights, exposures;
  std::int64_t total = 0;
  for (const CountRecord &rec : records) {
    if (rec.counts < 0) {
      throw std::invalid_argument("reconstruct_choi: negative counts");
    }
    settings.push_back(rec.setting);
    weights.push_back(static_cast<double>(rec.counts));
    exposures.push_back(rec.exposure);
    total += rec.counts;
  }
  if (total < 100) {
    throw std::invalid_argument("reconstruct_choi: need at least 100 counts");
  }
  return reconstruct_choi_weighted(settings, weights, exposures);
}

double trace_distance(const Matrix &a, const Matrix &b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double state_fidelity(const Matrix &a, const Matrix &b) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const Matrix sqrt_a =
      es.eigenvectors() *
      es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
      es.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es2(sqrt_a * b * sqrt_a);
  const double root_sum = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return root_sum * root_sum;
}

}  // namespace fockchan
