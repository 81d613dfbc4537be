/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef FOCKCHAN_TOMOGRAPHY_HPP
#define FOCKCHAN_TOMOGRAPHY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fockchan/choi.hpp"

namespace fockchan {

/// Rank-1 projective measurement on the 3-dim Choi space (polarization
/// analysis on the {|10>, |01>} block, a vacuum monitor, and
/// vacuum-coherence probes).
struct MeasurementSetting {
  Matrix projector;  // 3x3 PSD, trace <= 1
  std::string label;
};

/// One coincidence-counting record.
struct CountRecord {
  MeasurementSetting setting;
  std::int64_t counts = 0;
  double exposure = 1.0;  // relative acquisition weight
};

/// Informationally complete default set: the six Pauli-eigenstate
/// polarization projectors on {|10>, |01>}, the vacuum monitor |00><00|,
/// and four vacuum-coherence projectors (|00> +/- i^k |10>/|01>)/sqrt(2).
std::vector<MeasurementSetting> default_settings();

/// Expected (unsampled) count for each setting:
/// total_counts * exposure_k * Tr[Pi_k chi].
std::vector<double> expected_counts(const ChoiMatrix &chi,
                                    const std::vector<MeasurementSetting> &settings,
                                    double total_counts);

/// Poisson-sampled coincidence counts; deterministic for a fixed seed.
std::vector<CountRecord> simulate_counts(
    const ChoiMatrix &chi, const std::vector<MeasurementSetting> &settings,
    std::int64_t total_counts, std::uint64_t seed);

struct ReconstructionResult {
  Matrix chi = Matrix::Identity(3, 3) / 3.0;  // trace-1 Hermitian PSD
  int iterations = 0;
  bool converged = false;
  double log_likelihood = 0.0;
};

/// Maximum-likelihood reconstruction on the 3-dim space via diluted
/// fixed-point iteration (dilution 0.5, tolerance 1e-9, at most 10000
/// iterations). The reported matrix has <01|chi|10> rotated real
/// nonnegative. Throws on rank-deficient (informationally incomplete) data.
ReconstructionResult reconstruct_choi(const std::vector<CountRecord> &records);

/// Same solver on exact (real-valued) measurement weights, used for
/// ideal-frequency reconstruction.
ReconstructionResult reconstruct_choi_weighted(
    const std::vector<MeasurementSetting> &settings,
    const std::vector<double> &weights,
    const std::vector<double> &exposures);

/// (1/2) sum of absolute eigenvalues of (a - b).
double trace_distance(const Matrix &a, const Matrix &b);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2 of two trace-1 states.
double state_fidelity(const Matrix &a, const Matrix &b);

} // namespace fockchan

#endif
