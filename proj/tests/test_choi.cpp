/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fockchan/choi.hpp"
#include "fockchan/protocol.hpp"

using namespace fockchan;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Closed-form loss-channel Choi matrix in the (|00>, |10>, |01>) basis:
// (1 - tau^2)/2 |00><00| + (|01> + tau|10>)(<01| + tau<10|)/2.
Matrix loss_choi_closed_form(double tau) {
  Matrix chi = Matrix::Zero(3, 3);
  chi(0, 0) = (1.0 - tau * tau) / 2.0;
  chi(1, 1) = tau * tau / 2.0;
  chi(2, 2) = 0.5;
  chi(1, 2) = chi(2, 1) = tau / 2.0;
  return chi;
}

}  // namespace

TEST_CASE("choi_of_channel") {
  SUBCASE("identity channel gives the maximally entangled probe") {
    const ChoiMatrix chi = choi_of_channel(KrausChannel::identity(2));
    Matrix expected = Matrix::Zero(3, 3);
    expected(1, 1) = expected(2, 2) = expected(1, 2) = expected(2, 1) = 0.5;
    CHECK((chi.entries() - expected).cwiseAbs().maxCoeff() <= 1e-14);
  }
  SUBCASE("loss channel reproduces the closed form") {
    for (double tau : {0.5, kInvSqrt2, std::sqrt(0.75)}) {
      const ChoiMatrix chi = choi_of_channel(loss_channel(tau, 1));
      CHECK((chi.entries() - loss_choi_closed_form(tau))
                .cwiseAbs()
                .maxCoeff() <= 1e-12);
    }
  }
  SUBCASE("suppressed channel vacuum weight") {
    const ChannelParams p = ChannelParams::matched(kInvSqrt2, kInvSqrt2, 1);
    const ChoiMatrix chi =
        choi_of_channel(suppressed_channel_direct(p)).normalized();
    CHECK(chi.entries()(0, 0).real() ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-9));
  }
  SUBCASE("oversized channels rejected") {
    CHECK_THROWS_AS(choi_of_channel(loss_channel(0.5, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("channel_fidelity") {
  SUBCASE("identity channel") {
    const ChoiMatrix chi = choi_of_channel(KrausChannel::identity(2));
    CHECK(channel_fidelity(chi) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("uncompensated 50% loss") {
    const ChoiMatrix chi = choi_of_channel(loss_channel(kInvSqrt2, 1));
    const double expected = (1.0 + kInvSqrt2) * (1.0 + kInvSqrt2) / 4.0;
    CHECK(channel_fidelity(chi) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(channel_fidelity(chi) == doctest::Approx(0.72855).epsilon(1e-4));
  }
  SUBCASE("suppressed channel closed form") {
    const ChannelParams p = ChannelParams::matched(kInvSqrt2, kInvSqrt2, 1);
    const ChoiMatrix chi =
        choi_of_channel(suppressed_channel_direct(p)).normalized();
    CHECK(channel_fidelity(chi) ==
          doctest::Approx(8.0 / 9.0).epsilon(1e-10));
  }
  SUBCASE("unnormalized input rejected") {
    const ChannelParams p = ChannelParams::matched(0.5, 0.5, 1);
    const ChoiMatrix conditional =
        choi_of_channel(suppressed_channel_direct(p));
    CHECK_THROWS_AS(channel_fidelity(conditional), std::invalid_argument);
  }
}

TEST_CASE("fidelity invariant under compensated phase shifts") {
  const ChannelParams p = ChannelParams::matched(0.6, 0.8, 1);
  const KrausChannel base = suppressed_channel_direct(p);
  const double f0 = channel_fidelity(choi_of_channel(base).normalized());
  for (double phi : {0.3, 1.2, 2.9}) {
    const Matrix pre = phase_shift(phi, 2).entries();
    const Matrix post = phase_shift(-phi, 2).entries();
    std::vector<Operator> ops;
    for (const Operator &a : base.kraus_ops()) {
      ops.emplace_back(post * a.entries() * pre);
    }
    const KrausChannel rotated(2, std::move(ops));
    const double f =
        channel_fidelity(choi_of_channel(rotated).normalized());
    CHECK(f == doctest::Approx(f0).epsilon(1e-12));
  }
}

TEST_CASE("effective_transmittance") {
  SUBCASE("identity") {
    CHECK(effective_transmittance(KrausChannel::identity(2)) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("bare loss gives tau^2") {
    for (double tau : {0.3, 0.6, 0.9}) {
      CHECK(effective_transmittance(loss_channel(tau, 1)) ==
            doctest::Approx(tau * tau).epsilon(1e-12));
    }
  }
  SUBCASE("matched protocol closed form") {
    const ChannelParams p = ChannelParams::matched(kInvSqrt2, kInvSqrt2, 1);
    CHECK(effective_transmittance(suppressed_channel_direct(p)) ==
          doctest::Approx(0.8).epsilon(1e-10));
  }
}

TEST_CASE("matched closed forms match the Kraus pipeline on a grid") {
  for (double tau : {0.4, 0.55, 0.7, 0.85}) {
    for (double nu : {0.2, 0.5, 0.8, 1.0}) {
      const ChannelParams p = ChannelParams::matched(tau, nu, 1);
      const KrausChannel ch = suppressed_channel_direct(p);
      const double f = channel_fidelity(choi_of_channel(ch).normalized());
      CHECK(f == doctest::Approx(matched_fidelity(tau, nu)).epsilon(1e-10));
      CHECK(effective_transmittance(ch) ==
            doctest::Approx(matched_t_eff(tau, nu)).epsilon(1e-10));
    }
  }
}

TEST_CASE("naive_strategy_fidelity") {
  SUBCASE("identity point") {
    CHECK(naive_strategy_fidelity(1.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("maximum location and value for tau^2 = 0.5") {
    const double tau = kInvSqrt2;
    const double g_opt = (2.0 - tau * tau) / tau;
    CHECK(g_opt == doctest::Approx(2.1213203436).epsilon(1e-9));
    double best_f = 0.0, best_g = 0.0;
    for (double g = 1.0; g <= 20.0; g += 1e-4) {
      const double f = naive_strategy_fidelity(tau, g);
      if (f > best_f) {
        best_f = f;
        best_g = g;
      }
    }
    CHECK(best_f == doctest::Approx(2.5 / 3.0).epsilon(1e-6));
    CHECK(best_g == doctest::Approx(g_opt).epsilon(1e-3));
  }
  SUBCASE("large-gain limit") {
    const double tau = kInvSqrt2;
    CHECK(naive_strategy_fidelity(tau, 1e6) ==
          doctest::Approx(0.5).epsilon(1e-5));
  }
  SUBCASE("maximum formula across loss levels") {
    for (double tau2 : {0.25, 0.5, 0.75}) {
      const double tau = std::sqrt(tau2);
      const double g_opt = (2.0 - tau2) / tau;
      const double f_max = (3.0 - tau2) / (4.0 - 2.0 * tau2);
      CHECK(naive_strategy_fidelity(tau, g_opt) ==
            doctest::Approx(f_max).epsilon(1e-12));
      // Stationarity at the optimum.
      CHECK(naive_strategy_fidelity(tau, g_opt * (1.0 + 1e-4)) < f_max);
      CHECK(naive_strategy_fidelity(tau, g_opt * (1.0 - 1e-4)) < f_max);
    }
  }
  SUBCASE("invalid gain rejected") {
    CHECK_THROWS_AS(naive_strategy_fidelity(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(naive_strategy_fidelity(0.5, -1.0), std::domain_error);
  }
}

TEST_CASE("naive strategy fidelity agrees with the Kraus pipeline") {
  // The closed form and the Choi-based pipeline are two independent routes.
  for (double tau : {0.5, kInvSqrt2}) {
    for (double g : {1.0, 1.5, 2.5, 6.0}) {
      ChannelParams p{tau, 1.0, g, 1};
      const double via_choi = channel_fidelity(
          choi_of_channel(suppressed_channel_direct(p)).normalized());
      CHECK(via_choi ==
            doctest::Approx(naive_strategy_fidelity(tau, g)).epsilon(1e-12));
    }
  }
}
