// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <span>
#include <vector>

#include "dpcfade/ergodic.hpp"
#include "dpcfade/fading.hpp"

namespace dpcfade {

/// Target rate R (nats per channel use) and target outage probability.
struct OutageSpec {
    double target_rate;
    double target_eps;

    explicit OutageSpec(double rate, double eps = 0.5);
};

/// Conditional achievable rate J(alpha, a) for one fading realization.
/// J can be negative for small gains; with clamp the practical convention
/// J = max(J, 0) is applied (a nonpositive rate is replaced by sending
/// nothing).
double conditional_rate(const ChannelConfig& cfg, double alpha, double a, bool clamp = true);

/// Gain-matched inflation factor alpha_dpc(a) = a rho / (a rho + 1), the
/// maximizer of J(. , a).
double dpc_alpha_for_gain(double snr, double a);

/// Gain threshold of the event J(alpha, A) <= rate:
/// ((e^R - 1) P N + alpha^2 e^R Q N) / (P (P + Q - (1-alpha)^2 e^R Q)).
/// Returns +infinity when the denominator is nonpositive, i.e. when the
/// rate exceeds sup_a J(alpha, a) and the event is certain.
double outage_gain_threshold(const ChannelConfig& cfg, double alpha, double rate);

/// Pr[J(alpha, A) < target_rate]: probability that the realized gain cannot
/// support the target rate. Zero target rate is never in outage (clamped J
/// is nonnegative).
double outage_probability(const ChannelConfig& cfg, double alpha, const OutageSpec& spec,
                          const FadingModel& model);

/// Outage-minimizing inflation factor alpha* = 1 - e^{-R}; equivalently
/// rho*/(1 + rho*) for the virtual SNR rho* = e^R - 1.
double optimal_alpha_outage(const OutageSpec& spec);

/// min_alpha Pr[J(alpha, A) <= R] = Pr[A <= (e^R - 1)/rho]. Independent of
/// the interference level: in the quasi-static case the scheme matches the
/// no-interference outage at every SNR.
double min_outage_probability(const ChannelConfig& cfg, const OutageSpec& spec,
                              const FadingModel& model);

struct RateCdfPoint {
    double rate;
    double probability;
};

/// Pr[max(J, 0) <= r] on a nonnegative rate grid, computed analytically
/// through the threshold inversion (the clamp atom at zero is included).
std::vector<RateCdfPoint> rate_cdf(const ChannelConfig& cfg, double alpha,
                                   const FadingModel& model, std::span<const double> rate_grid);

}  // namespace dpcfade
