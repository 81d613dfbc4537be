/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef FOCKCHAN_CHANNELS_HPP
#define FOCKCHAN_CHANNELS_HPP

#include <vector>

#include "fockchan/fock.hpp"

namespace fockchan {

// tau^{-N} exceeds practical dynamic range for small tau and large N; all
// physically relevant configurations here use N <= 2.
inline constexpr int kMaxTruncation = 16;

// Gain is considered matched to g = 1/(nu*tau) within this tolerance.
inline constexpr double kMatchedGainTol = 1e-9;

/// Protocol parameters: channel transmittance tau, input attenuation nu,
/// amplifier gain g, Fock truncation N.
struct ChannelParams {
  double tau = 1.0;
  double nu = 1.0;
  double g = 1.0;
  int n_max = 1;

  void validate() const;
  bool is_matched(double tol = kMatchedGainTol) const;

  /// Matched-gain configuration g = 1/(nu*tau).
  static ChannelParams matched(double tau, double nu, int n_max = 1);
};

/// Completely positive, trace-nonincreasing map in operator-sum form.
class KrausChannel {
public:
  KrausChannel(int dim, std::vector<Operator> kraus_ops);

  static KrausChannel identity(int dim);

  int dim() const { return dim_; }
  const std::vector<Operator> &kraus_ops() const { return ops_; }

  /// Sum_j A_j^dag A_j (identity for a trace-preserving channel).
  Matrix completeness_sum() const;

private:
  int dim_;
  std::vector<Operator> ops_;
};

/// Pure-loss channel with amplitude transmittance tau on the first N+1 Fock
/// states. Kraus operator A_j accounts for the loss of exactly j photons.
KrausChannel loss_channel(double tau, int n_max);

/// Closed-form inverse of the no-loss Kraus operator: diag(tau^{-n}).
Operator loss_inverse_a0(double tau, int n_max);

DensityMatrix apply_channel(const KrausChannel &ch, const DensityMatrix &rho);

/// Outer channel applied after inner: Kraus set of all pairwise products.
KrausChannel compose(const KrausChannel &outer, const KrausChannel &inner);

/// Effective channel attenuate -> loss -> amplify with Kraus operators
/// K_j = G_N(g) A_j nu^n. Valid for any gain, matched or not.
KrausChannel suppressed_channel_direct(const ChannelParams &p);

/// Equivalent form valid only at matched gain g = 1/(nu*tau):
/// Kraus set {g^{-N} I} united with {g^{-N} nu^j B_j}, B_j = A_0^{-1} A_j.
KrausChannel suppressed_channel_simplified(const ChannelParams &p);

/// Heralding probability of the matched protocol on a normalized input,
/// g^{-2N} + g^{-2N} sum_j nu^{2j} Tr[B_j^dag B_j rho]. Bounded below
/// by g^{-2N}.
double success_probability(const ChannelParams &p, const DensityMatrix &rho_in);

/// Success probability for the pure input c0|0> + c1|1>,
/// |c0|^2 g^{-2} + |c1|^2 nu^2 [tau^2 + (1 - tau^2) g^{-2}].
/// Does not require matched gain.
double qubit_success_probability(Complex c0, Complex c1,
                                 const ChannelParams &p);

} // namespace fockchan

#endif
