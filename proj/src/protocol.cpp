/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "fockchan/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fockchan {

namespace {

constexpr double kSuccessFloor = 1e-15;

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::matched: return "matched";
    case Strategy::naive: return "naive";
    case Strategy::custom: return "custom";
  }
  return "custom";
}

std::string to_string(NuPolicy p) {
  switch (p) {
    case NuPolicy::fig4: return "fig4";
    case NuPolicy::fixed: return "fixed";
    case NuPolicy::naive: return "naive";
  }
  return "fig4";
}

void Probe::validate() const {
  if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > kTraceTol) {
    throw std::invalid_argument("Probe: |c0|^2 + |c1|^2 must be 1");
  }
}

void SweepPlan::validate() const {
  if (taus.empty() || gains.empty()) {
    throw std::invalid_argument("SweepPlan: empty parameter grid");
  }
  for (double t : taus) {
    if (!(t > 0.0) || t > 1.0) {
      throw std::domain_error("SweepPlan: tau must lie in (0, 1]");
    }
  }
  for (double g : gains) {
    if (!(g >= 1.0)) {
      throw std::domain_error("SweepPlan: gains must be >= 1");
    }
  }
  if (policy == NuPolicy::fixed && (!(fixed_nu > 0.0) || fixed_nu > 1.0)) {
    throw std::domain_error("SweepPlan: fixed nu must lie in (0, 1]");
  }
  if (truncation != 1) {
    throw std::invalid_argument(
        "SweepPlan: only the vacuum+single-photon truncation (1) is "
        "supported for Choi-based figures of merit");
  }
  probe.validate();
}

std::vector<double> gain_grid(double g_min, double g_max,
                              int points_per_decade) {
  if (!(g_min >= 1.0) || g_max < g_min || points_per_decade < 1) {
    throw std::invalid_argument("gain_grid: invalid range");
  }
  if (g_max == g_min) return {g_min};
  const double decades = std::log10(g_max / g_min);
  const int n = std::max(1, static_cast<int>(
                                std::ceil(decades * points_per_decade))) + 1;
  std::vector<double> grid;
  grid.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double f = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
    grid.push_back(g_min * std::pow(g_max / g_min, f));
  }
  grid.back() = g_max;
  return grid;
}

std::pair<DensityMatrix, double> run_protocol(const DensityMatrix &rho_in,
                                              const ChannelParams &p) {
  if (std::abs(rho_in.trace() - 1.0) > kTraceTol) {
    throw std::invalid_argument("run_protocol: rho_in must be normalized");
  }
  const KrausChannel ch = suppressed_channel_direct(p);
  const DensityMatrix out = apply_channel(ch, rho_in);
  const double p_succ = out.trace();
  if (p_succ < kSuccessFloor) {
    throw std::runtime_error("run_protocol: success probability underflow");
  }
  return {out.normalized(), p_succ};
}

double relative_success(const ChannelParams &p, const Probe &probe) {
  probe.validate();
  return qubit_success_probability(probe.c0, probe.c1, p);
}

std::vector<SweepRecord> run_sweep(const SweepPlan &plan) {
  plan.validate();
  std::vector<SweepRecord> records;
  records.reserve(plan.taus.size() * plan.gains.size());
  for (double tau : plan.taus) {
    for (double g : plan.gains) {
      ChannelParams p;
      p.tau = tau;
      p.g = g;
      p.n_max = plan.truncation;
      Strategy strategy = Strategy::custom;
      switch (plan.policy) {
        case NuPolicy::fig4:
          p.nu = std::min(1.0 / (g * tau), 1.0);
          strategy = p.is_matched() ? Strategy::matched : Strategy::custom;
          break;
        case NuPolicy::fixed:
          p.nu = plan.fixed_nu;
          strategy = p.is_matched() ? Strategy::matched : Strategy::custom;
          break;
        case NuPolicy::naive:
          p.nu = 1.0;
          strategy = Strategy::naive;
          break;
      }
      const KrausChannel ch = suppressed_channel_direct(p);
      const ChoiMatrix chi = choi_of_channel(ch);

      SweepRecord rec;
      rec.tau = tau;
      rec.nu = p.nu;
      rec.g = g;
      rec.strategy = strategy;
      rec.fidelity = channel_fidelity(chi.normalized());
      rec.t_eff = effective_transmittance(ch);
      rec.p_succ = qubit_success_probability(plan.probe.c0, plan.probe.c1, p);
      rec.p_rel = relative_success(p, plan.probe);
      records.push_back(rec);
    }
  }
  return records;
}

double matched_fidelity(double tau, double nu) {
  return 1.0 / (1.0 + nu * nu * (1.0 - tau * tau) / 2.0);
}

double matched_t_eff(double tau, double nu) {
  return 1.0 / (1.0 + nu * nu * (1.0 - tau * tau));
}

NuOptimum optimize_nu(double tau, double target_fidelity, const Probe &probe) {
  if (!(tau > 0.0) || tau > 1.0) {
    throw std::domain_error("optimize_nu: tau must lie in (0, 1]");
  }
  probe.validate();
  if (target_fidelity >= 1.0) {
    throw std::domain_error(
        "optimize_nu: F = 1 is only reached asymptotically as nu -> 0 "
        "(asymptotic-infeasible)");
  }
  if (!(target_fidelity > 0.0)) {
    throw std::domain_error("optimize_nu: target fidelity must be positive");
  }
  // Invert F = 1/(1 + nu^2 (1 - tau^2)/2); targets at or below the bare
  // matched fidelity clip to nu = 1 (no attenuation needed).
  double nu2 = 1.0;
  if (tau < 1.0) {
    nu2 = 2.0 * (1.0 - target_fidelity) /
          (target_fidelity * (1.0 - tau * tau));
  }
  NuOptimum result;
  result.nu = std::min(std::sqrt(nu2), 1.0);
  result.g = 1.0 / (result.nu * tau);
  ChannelParams p;
  p.tau = tau;
  p.nu = result.nu;
  p.g = result.g;
  p.n_max = 1;
  result.p_succ = qubit_success_probability(probe.c0, probe.c1, p);
  return result;
}

}  // namespace fockchan
