/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef FOCKCHAN_CHOI_HPP
#define FOCKCHAN_CHOI_HPP

#include <array>

#include "fockchan/channels.hpp"

namespace fockchan {

/// Basis ordering of the 3-dim Choi support subspace: |00>, |10>, |01>.
/// The first digit is the photon number in the channel (V) mode, the
/// second in the reference (H) mode; |11> is absent because a passive
/// channel generates no photons.
inline constexpr std::array<const char *, 3> kChoiBasisLabels = {"00", "10",
                                                                "01"};

/// Bipartite state isomorphic to a vacuum+single-photon channel, stored on
/// the 3-dim support subspace. Trace < 1 signals a conditional channel.
class ChoiMatrix {
public:
  explicit ChoiMatrix(Matrix entries);

  const Matrix &entries() const { return entries_; }
  double trace() const { return entries_.trace().real(); }
  bool is_normalized(double tol = kTraceTol) const;
  ChoiMatrix normalized() const;

  /// Rotates the V-mode phase so <01|chi|10> is real nonnegative.
  ChoiMatrix with_real_coherence() const;

private:
  Matrix entries_;
};

/// chi = sum_j (A_j (x) I)|Psi+><Psi+|(A_j (x) I)^dag with the probe
/// |Psi+> = (|10> + |01>)/sqrt(2), projected onto the 3-dim basis.
/// Unnormalized: the trace is the channel's success probability on the probe.
/// Requires a dim-2 (vacuum+single-photon) channel.
ChoiMatrix choi_of_channel(const KrausChannel &ch);

/// F = <Psi+|chi|Psi+>; requires a normalized Choi matrix.
double channel_fidelity(const ChoiMatrix &chi);

/// Conditional probability that an injected photon survives the channel:
/// <1|M(|1><1|)|1> / Tr[M(|1><1|)].
double effective_transmittance(const KrausChannel &ch);

/// Channel fidelity of the amplification-only strategy (nu = 1) at gain g:
/// F(g) = (g^{-1} + tau)^2 / (2 [tau^2 + (2 - tau^2) g^{-2}]).
double naive_strategy_fidelity(double tau, double g);

} // namespace fockchan

#endif
