// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <array>
#include <optional>
#include <span>

#include "dpcfade/expectation.hpp"
#include "dpcfade/fading.hpp"

namespace dpcfade {

/// One dirty-paper channel instance: SNR rho = P/N (linear) and the
/// interference-to-power ratio beta = Q/P. Noise power is normalized to 1,
/// so P = rho and Q = beta * rho. beta may be +infinity; only gap-bound
/// style quantities accept that.
struct ChannelConfig {
    double snr;
    double ipr;

    ChannelConfig(double snr_linear, double ipr_value);
    bool ipr_finite() const;
};

/// Inflation factor of the auxiliary variable U = X + alpha * S.
struct DpcParams {
    double alpha;
    explicit DpcParams(double alpha_value);
};

/// Interference-free capacity log(1 + rho), nats per channel use. This is
/// what dirty paper coding achieves when the gain is deterministic.
double costa_capacity(double snr);

/// Integrand of the ergodic achievable rate at gain a for arbitrary alpha:
/// log( P[a(P+Q)+N] / ((1-alpha)^2 a P Q + (P + alpha^2 Q) N) ).
double rate_integrand(const ChannelConfig& cfg, double alpha, double a);

/// Integrand of the rate with the average-SNR precoding alpha = rho/(rho+1):
/// log( (rho+1)^2 [(1+beta) a rho + 1] / ((beta+1) rho^2 + (beta a + 2) rho + 1) ).
double rate_dpc_integrand(const ChannelConfig& cfg, double a);

/// Integrand of the decoder-knows-interference capacity, log(1 + a rho).
double capacity_integrand(const ChannelConfig& cfg, double a);

/// Ergodic achievable rate for a caller-chosen alpha.
double rate_general(const ChannelConfig& cfg, const DpcParams& params, const FadingModel& model,
                    const ExpectationEngine& engine);

/// Ergodic achievable rate with alpha = rho/(rho+1), precoding for the
/// average SNR.
double rate_dpc(const ChannelConfig& cfg, const FadingModel& model,
                const ExpectationEngine& engine);

/// E[log(1 + A rho)]: the capacity when the decoder also knows the
/// interference and subtracts it off.
double capacity_known_interference(const ChannelConfig& cfg, const FadingModel& model,
                                   const ExpectationEngine& engine);

/// Rate loss of fixed-alpha precoding: capacity_known_interference - rate_dpc.
double gap(const ChannelConfig& cfg, const FadingModel& model, const ExpectationEngine& engine);

/// Upper bound on the gap, the beta -> infinity limit:
/// E[log(rho + A)] + E[log(rho + 1/A)] - 2 log(rho + 1).
/// The second integrand stays integrable even when E[1/A] diverges.
double gap_bound(double snr, const FadingModel& model, const ExpectationEngine& engine);

struct GapBoundMax {
    double max_value;
    double argmax_snr;
};

/// Maximum of gap_bound over an ascending grid of linear SNRs.
GapBoundMax gap_bound_max(const FadingModel& model, std::span<const double> snr_grid,
                          const ExpectationEngine& engine);

struct OptimalAlpha {
    double alpha_star;
    double rate;
};

/// Maximizes rate_general over alpha in [0, 1] by golden section (alpha
/// tolerance 1e-6). The fixed DPC alpha is a feasible point, so the returned
/// rate is never below rate_dpc.
OptimalAlpha optimal_alpha(const ChannelConfig& cfg, const FadingModel& model,
                           const ExpectationEngine& engine);

/// High-SNR expansion R = log rho + E[log A] + c/rho + o(1/rho).
/// The 1/rho coefficients are (beta + E[1/A])/(beta + 1) for the rate and
/// E[1/A] for the capacity; both are reported as missing when E[1/A]
/// diverges, in which case the expansion involves fractional-order terms
/// that are out of scope here.
struct HighSnrExpansion {
    double log_gain_term;                          // E[log A]
    std::optional<double> rate_inv_snr_coeff;      // (beta + E[1/A]) / (beta + 1)
    std::optional<double> capacity_inv_snr_coeff;  // E[1/A]
};

HighSnrExpansion expand_high_snr(const ChannelConfig& cfg, const FadingModel& model);

/// Low-SNR expansion written with curvature coefficients,
/// R = rho + (1/2) q rho^2 + o(rho^2), i.e. q = d^2R/drho^2 at rho = 0:
/// q_rate = -[(2 beta + 1) E[A^2] - 2 beta] and q_capacity = -E[A^2].
struct LowSnrExpansion {
    double linear_coeff;              // always 1
    double quadratic_coeff_rate;      // second derivative of R at rho = 0
    double quadratic_coeff_capacity;  // second derivative of C-bar at rho = 0
};

LowSnrExpansion expand_low_snr(const ChannelConfig& cfg, const FadingModel& model);

/// Covariance of the zero-mean circularly symmetric triple (U, S, Y)
/// conditioned on A = a, with U = X + alpha S and Y = sqrt(a)(X + S) + Z.
/// Index order: U, S, Y.
struct GaussianSystem {
    std::array<std::array<double, 3>, 3> covariance;

    static GaussianSystem for_gain(const ChannelConfig& cfg, const DpcParams& params, double a);
};

/// Independent check of the rate integrand: builds the (U, S, Y) covariance
/// for a fixed gain and evaluates I(U;Y) - I(U;S) from pairwise correlations.
/// Each variable is circularly symmetric complex, so a pair contributes
/// -log(1 - corr^2); degenerate (zero-variance or zero-gain) pairs carry no
/// information and contribute 0.
double rate_via_mi_oracle(const ChannelConfig& cfg, const DpcParams& params, double a);

}  // namespace dpcfade
