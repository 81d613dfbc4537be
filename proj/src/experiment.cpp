/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "fockchan/experiment.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fockchan {

void ExperimentParams::validate() const {
  if (!(theta >= M_PI / 4.0) || theta >= M_PI / 2.0) {
    throw std::domain_error("ExperimentParams: theta must lie in [pi/4, pi/2)");
  }
  if (visibility < 0.0 || visibility > 1.0) {
    throw std::domain_error("ExperimentParams: visibility must lie in [0, 1]");
  }
  if (!(eta_cd > 0.0) || eta_cd > 1.0) {
    throw std::domain_error("ExperimentParams: eta_cd must lie in (0, 1]");
  }
  if (!(nu > 0.0) || nu > 1.0 || !(tau > 0.0) || tau > 1.0) {
    throw std::domain_error("ExperimentParams: nu, tau must lie in (0, 1]");
  }
}

double ExperimentParams::gain() const { return amplifier_gain(theta); }

double amplifier_gain(double theta) {
  if (!(theta >= M_PI / 4.0) || theta >= M_PI / 2.0) {
    throw std::domain_error("amplifier_gain: theta must lie in [pi/4, pi/2)");
  }
  // tan(pi/4) can land an ulp below 1 and trip downstream g >= 1 checks.
  return std::max(1.0, std::tan(theta));
}

double implementation_penalty(double g) {
  if (!(g >= 1.0)) {
    throw std::domain_error("implementation_penalty: g must be >= 1");
  }
  return g * g / (2.0 * (1.0 + g * g));
}

KrausChannel imperfect_amplifier_channel(double g, double visibility,
                                         int n_max) {
  if (visibility < 0.0 || visibility > 1.0) {
    throw std::domain_error(
        "imperfect_amplifier_channel: visibility must lie in [0, 1]");
  }
  const int dim = n_max + 1;
  const Matrix amp = amplifier_filter(g, n_max).entries();
  std::vector<Operator> ops;
  if (visibility > 0.0) {
    ops.emplace_back(std::sqrt(visibility) * amp);
  }
  if (visibility < 1.0) {
    // Full Fock-basis dephasing of the amplified state: one projector
    // per photon number.
    for (int n = 0; n < dim; ++n) {
      Matrix proj = Matrix::Zero(dim, dim);
      proj(n, n) = 1.0;
      ops.emplace_back(std::sqrt(1.0 - visibility) * proj * amp);
    }
  }
  return KrausChannel(dim, std::move(ops));
}

double imperfect_pipeline_fidelity(double tau, double nu, double g,
                                   double visibility) {
  const int n_max = 1;
  const KrausChannel att(
      n_max + 1, {attenuator_filter(nu, n_max + 1)});
  const KrausChannel pipeline =
      compose(imperfect_amplifier_channel(g, visibility, n_max),
              compose(loss_channel(tau, n_max), att));
  return channel_fidelity(choi_of_channel(pipeline).normalized());
}

double imperfect_fidelity_closed_form(double tau, double nu,
                                      double visibility) {
  return (0.5 * (1.0 + visibility)) /
         (1.0 + nu * nu * (1.0 - tau * tau) / 2.0);
}

PRelResult experimental_p_rel(const ExperimentParams &p, const Probe &probe) {
  p.validate();
  probe.validate();
  ChannelParams cp;
  cp.tau = p.tau;
  cp.nu = p.nu;
  cp.g = p.gain();
  cp.n_max = 1;
  PRelResult result;
  // The implementation penalty and eta_cd are common to the measured rate
  // and its identity-channel reference, so they cancel in the ratio.
  result.corrected = qubit_success_probability(probe.c0, probe.c1, cp);
  result.raw = result.corrected * 2.0 / (1.0 + p.nu * p.nu);
  return result;
}

double absolute_success_rate(const ExperimentParams &p, const Probe &probe) {
  const PRelResult rel = experimental_p_rel(p, probe);
  return p.eta_cd * implementation_penalty(p.gain()) * rel.raw;
}

}  // namespace fockchan
