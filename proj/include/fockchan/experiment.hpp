/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef FOCKCHAN_EXPERIMENT_HPP
#define FOCKCHAN_EXPERIMENT_HPP

#include <cmath>

#include "fockchan/protocol.hpp"

namespace fockchan {

/// Parameters of the two-photon-interference amplifier implementation.
struct ExperimentParams {
  double theta = M_PI / 4.0;  ///< idler wave-plate angle; gain = tan(theta)
  double visibility = 0.947;  ///< Hong-Ou-Mandel dip visibility
  double eta_cd = 0.1;        ///< combined collection x detection efficiency
  double nu = 1.0;
  double tau = 1.0;

  void validate() const;
  double gain() const;
};

/// Amplification gain g = tan(theta); theta in [pi/4, pi/2).
double amplifier_gain(double theta);

/// Success-probability penalty g^2 / (2 (1 + g^2)) of the interference-based
/// amplifier relative to the optimal filter.
double implementation_penalty(double g);

/// Visibility-degraded heralded amplifier: a convex mixture of the ideal
/// filter G(g) rho G(g) and its fully Fock-dephased counterpart,
/// E(rho) = V G rho G + (1 - V) D(G rho G).
KrausChannel imperfect_amplifier_channel(double g, double visibility,
                                         int n_max = 1);

/// Channel fidelity of the attenuate -> loss -> imperfect-amplifier pipeline.
double imperfect_pipeline_fidelity(double tau, double nu, double g,
                                   double visibility);

/// Saturation value of the model fidelity in the high-gain matched limit,
/// (1 + V)/2 divided by the residual vacuum-noise normalization.
double imperfect_fidelity_closed_form(double tau, double nu,
                                      double visibility);

struct PRelResult {
  /// Comparable with the ideal-theory success probability: the raw value
  /// multiplied by (1 + nu^2)/2, compensating for the attenuation being
  /// folded into state preparation.
  double corrected = 1.0;
  /// Rate ratio as measured, with the preparation enhancement 2/(1 + nu^2).
  double raw = 1.0;
};

/// Model of the measured relative success probability, normalized to 1 for
/// the identity configuration.
PRelResult experimental_p_rel(const ExperimentParams &p, const Probe &probe);

/// Absolute heralded coincidence rate per probe event; scales linearly in
/// eta_cd and carries the implementation penalty.
double absolute_success_rate(const ExperimentParams &p, const Probe &probe);

} // namespace fockchan

#endif
