/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "fockchan/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fockchan {

namespace {

constexpr double kCompletenessTol = 1e-10;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

}  // namespace

void ChannelParams::validate() const {
  if (!(tau > 0.0) || tau > 1.0) {
    throw std::domain_error("ChannelParams: tau must lie in (0, 1]");
  }
  if (!(nu > 0.0) || nu > 1.0) {
    throw std::domain_error("ChannelParams: nu must lie in (0, 1]");
  }
  if (!(g >= 1.0)) {
    throw std::domain_error("ChannelParams: g must be >= 1");
  }
  if (n_max < 0 || n_max > kMaxTruncation) {
    throw std::domain_error("ChannelParams: n_max must lie in [0, 16]");
  }
}

bool ChannelParams::is_matched(double tol) const {
  return std::abs(g * nu * tau - 1.0) <= tol;
}

ChannelParams ChannelParams::matched(double tau, double nu, int n_max) {
  ChannelParams p{tau, nu, 1.0 / (nu * tau), n_max};
  p.validate();
  return p;
}

KrausChannel::KrausChannel(int dim, std::vector<Operator> kraus_ops)
    : dim_(dim), ops_(std::move(kraus_ops)) {
  if (dim_ < 1) {
    throw std::invalid_argument("KrausChannel: dim must be >= 1");
  }
  if (ops_.empty()) {
    throw std::invalid_argument("KrausChannel: at least one Kraus operator");
  }
  for (const Operator &op : ops_) {
    if (op.dim() != dim_) {
      throw std::invalid_argument("KrausChannel: operator dimension mismatch");
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(completeness_sum(),
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().maxCoeff() > 1.0 + kCompletenessTol) {
    throw std::invalid_argument("KrausChannel: trace-increasing Kraus set");
  }
}

KrausChannel KrausChannel::identity(int dim) {
  return KrausChannel(dim, {Operator::identity(dim)});
}

Matrix KrausChannel::completeness_sum() const {
  Matrix s = Matrix::Zero(dim_, dim_);
  for (const Operator &op : ops_) {
    s += op.entries().adjoint() * op.entries();
  }
  return s;
}

KrausChannel loss_channel(double tau, int n_max) {
  if (!(tau > 0.0) || tau > 1.0) {
    throw std::domain_error("loss_channel: tau must lie in (0, 1]");
  }
  if (n_max < 0 || n_max > kMaxTruncation) {
    throw std::domain_error("loss_channel: n_max must lie in [0, 16]");
  }
  const int dim = n_max + 1;
  const double loss = 1.0 - tau * tau;
  std::vector<Operator> ops;
  ops.reserve(dim);
  for (int j = 0; j <= n_max; ++j) {
    Matrix a = Matrix::Zero(dim, dim);
    for (int m = 0; m + j <= n_max; ++m) {
      a(m, m + j) = std::sqrt(binomial(m + j, j)) *
                    std::pow(loss, 0.5 * j) * std::pow(tau, m);
    }
    ops.emplace_back(std::move(a));
  }
  return KrausChannel(dim, std::move(ops));
}

Operator loss_inverse_a0(double tau, int n_max) {
  if (!(tau > 0.0) || tau > 1.0) {
    throw std::domain_error("loss_inverse_a0: tau must lie in (0, 1]");
  }
  const int dim = n_max + 1;
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    m(n, n) = std::pow(tau, -n);
  }
  return Operator(std::move(m));
}

DensityMatrix apply_channel(const KrausChannel &ch, const DensityMatrix &rho) {
  if (ch.dim() != rho.dim()) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  Matrix out = Matrix::Zero(ch.dim(), ch.dim());
  for (const Operator &op : ch.kraus_ops()) {
    out += op.entries() * rho.entries() * op.entries().adjoint();
  }
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix(std::move(out));
}

KrausChannel compose(const KrausChannel &outer, const KrausChannel &inner) {
  if (outer.dim() != inner.dim()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  std::vector<Operator> ops;
  ops.reserve(outer.kraus_ops().size() * inner.kraus_ops().size());
  for (const Operator &a : outer.kraus_ops()) {
    for (const Operator &b : inner.kraus_ops()) {
      ops.emplace_back(a.entries() * b.entries());
    }
  }
  return KrausChannel(outer.dim(), std::move(ops));
}

KrausChannel suppressed_channel_direct(const ChannelParams &p) {
  p.validate();
  const Operator att = attenuator_filter(p.nu, p.n_max + 1);
  const Operator amp = amplifier_filter(p.g, p.n_max);
  const KrausChannel loss = loss_channel(p.tau, p.n_max);
  std::vector<Operator> ops;
  ops.reserve(loss.kraus_ops().size());
  for (const Operator &a : loss.kraus_ops()) {
    ops.emplace_back(amp.entries() * a.entries() * att.entries());
  }
  return KrausChannel(p.n_max + 1, std::move(ops));
}

KrausChannel suppressed_channel_simplified(const ChannelParams &p) {
  p.validate();
  if (!p.is_matched()) {
    throw std::domain_error(
        "suppressed_channel_simplified: requires matched gain g = 1/(nu*tau)");
  }
  const int dim = p.n_max + 1;
  const double gn = std::pow(p.g, -p.n_max);
  const Matrix a0_inv = loss_inverse_a0(p.tau, p.n_max).entries();
  const KrausChannel loss = loss_channel(p.tau, p.n_max);
  std::vector<Operator> ops;
  ops.reserve(dim);
  ops.emplace_back(gn * Matrix::Identity(dim, dim));
  for (int j = 1; j <= p.n_max; ++j) {
    const Matrix bj = a0_inv * loss.kraus_ops()[j].entries();
    ops.emplace_back(gn * std::pow(p.nu, j) * bj);
  }
  return KrausChannel(dim, std::move(ops));
}

double success_probability(const ChannelParams &p,
                           const DensityMatrix &rho_in) {
  p.validate();
  if (!p.is_matched()) {
    throw std::domain_error("success_probability: requires matched gain");
  }
  if (std::abs(rho_in.trace() - 1.0) > kTraceTol) {
    throw std::invalid_argument("success_probability: rho_in not normalized");
  }
  const Matrix a0_inv = loss_inverse_a0(p.tau, p.n_max).entries();
  const KrausChannel loss = loss_channel(p.tau, p.n_max);
  const double g2n = std::pow(p.g, -2 * p.n_max);
  double sum = 0.0;
  for (int j = 1; j <= p.n_max; ++j) {
    const Matrix bj = a0_inv * loss.kraus_ops()[j].entries();
    sum += std::pow(p.nu, 2 * j) *
           (bj.adjoint() * bj * rho_in.entries()).trace().real();
  }
  return g2n * (1.0 + sum);
}

double qubit_success_probability(Complex c0, Complex c1,
                                 const ChannelParams &p) {
  p.validate();
  const double p0 = std::norm(c0);
  const double p1 = std::norm(c1);
  if (std::abs(p0 + p1 - 1.0) > kTraceTol) {
    throw std::invalid_argument(
        "qubit_success_probability: |c0|^2 + |c1|^2 must be 1");
  }
  const double ginv2 = 1.0 / (p.g * p.g);
  const double tau2 = p.tau * p.tau;
  return p0 * ginv2 + p1 * p.nu * p.nu * (tau2 + (1.0 - tau2) * ginv2);
}

}  // namespace fockchan
