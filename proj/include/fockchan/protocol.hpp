/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef FOCKCHAN_PROTOCOL_HPP
#define FOCKCHAN_PROTOCOL_HPP

#include <string>
#include <vector>

#include "fockchan/choi.hpp"

namespace fockchan {

enum class Strategy { matched, naive, custom };
enum class NuPolicy { fig4, fixed, naive };

std::string to_string(Strategy s);
std::string to_string(NuPolicy p);

/// Vacuum+single-photon probe c0|0> + c1|1>, normalized.
struct Probe {
  Complex c0{1.0 / std::sqrt(2.0), 0.0};
  Complex c1{1.0 / std::sqrt(2.0), 0.0};

  void validate() const;
  static Probe balanced() { return Probe{}; }
};

/// One evaluated sweep point with its derived figures of merit.
struct SweepRecord {
  double tau = 1.0;
  double nu = 1.0;
  double g = 1.0;
  double fidelity = 1.0;
  double t_eff = 1.0;
  double p_succ = 1.0;
  double p_rel = 1.0;
  Strategy strategy = Strategy::custom;
};

/// Parameter grid for a gain sweep. The fig4 policy sets
/// nu = min[1/(g*tau), 1]; the naive policy fixes nu = 1.
struct SweepPlan {
  std::vector<double> taus;
  std::vector<double> gains;
  NuPolicy policy = NuPolicy::fig4;
  double fixed_nu = 1.0;
  Probe probe;
  int truncation = 1;

  void validate() const;
};

/// Geometric gain grid; `points_per_decade` defaults to 200.
std::vector<double> gain_grid(double g_min, double g_max,
                              int points_per_decade = 200);

/// Full loss-suppression pipeline: returns the normalized output state and
/// the heralding probability Tr[M(rho)].
std::pair<DensityMatrix, double> run_protocol(const DensityMatrix &rho_in,
                                              const ChannelParams &p);

/// One record per (tau, g) grid point, tau-major, gains ascending.
std::vector<SweepRecord> run_sweep(const SweepPlan &plan);

/// Theory value of the relative success probability (normalized to 1 for
/// the identity configuration); equals the qubit success-probability
/// formula at the probe.
double relative_success(const ChannelParams &p, const Probe &probe);

struct NuOptimum {
  double nu = 1.0;
  double g = 1.0;
  double p_succ = 1.0;
};

/// Largest attenuation transmittance nu (hence largest success probability)
/// achieving F >= target_fidelity under matched gain g = 1/(nu*tau).
NuOptimum optimize_nu(double tau, double target_fidelity, const Probe &probe);

/// Matched-protocol closed forms, F = 1/(1 + nu^2 (1 - tau^2)/2) and
/// T_eff = 1/(1 + nu^2 (1 - tau^2)).
double matched_fidelity(double tau, double nu);
double matched_t_eff(double tau, double nu);

} // namespace fockchan

#endif
