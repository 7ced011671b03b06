// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "dpcfade/fading.hpp"

namespace dpcfade {

struct BroadcastUser {
    FadingModel model;
    double target_eps;
};

/// Quasi-static fading broadcast channel without transmit CSI: a common
/// transmit SNR and K users, each with its own fading law and target outage
/// probability. Users are reordered by descending effective gain G_k(eps_k)
/// at construction (the preferred encoding order) unless preserve_order is
/// set.
class BroadcastConfig {
  public:
    BroadcastConfig(double snr, std::vector<BroadcastUser> users, bool preserve_order = false);

    double snr() const { return snr_; }
    std::size_t num_users() const { return users_.size(); }
    const std::vector<BroadcastUser>& users() const { return users_; }
    /// Effective gains G_k(eps_k) in encoding order.
    const std::vector<double>& gains() const { return gains_; }

  private:
    double snr_;
    std::vector<BroadcastUser> users_;
    std::vector<double> gains_;
};

/// Per-user power fractions gamma_k >= 0 with sum 1 (tolerance 1e-12).
struct PowerAllocation {
    std::vector<double> gamma;
    explicit PowerAllocation(std::vector<double> fractions);
};

/// Time-sharing factor mu and per-slot power boosts (eta1, eta2) under the
/// average power constraint mu*eta1 + (1-mu)*eta2 = 1 (tolerance 1e-12).
struct TdParams {
    double mu;
    double eta1;
    double eta2;
    TdParams(double mu_value, double eta1_value, double eta2_value);
};

using SweepParam = std::variant<TdParams, PowerAllocation>;

struct RegionPoint {
    std::vector<double> rates;
    SweepParam param;
};

/// Pareto-filtered boundary of an outage achievable rate region; each point
/// keeps the sweep parameter that produced it.
struct RegionBoundary {
    std::vector<RegionPoint> points;
};

/// [G_k(eps_k)] for k = 1..K via the fading ICDF.
std::vector<double> effective_gains(const BroadcastConfig& cfg);

/// Two-user time-division rate point
/// (mu log[1 + eta1 G1 rho], (1-mu) log[1 + eta2 G2 rho]).
std::array<double, 2> td_rate_point(const BroadcastConfig& cfg, const TdParams& params);

/// Sweeps mu over mu_steps points in [0,1] and eta1 over eta_steps points in
/// [0, 1/mu] (eta2 fixed by the power constraint; the mu in {0,1} edges are
/// handled analytically), then Pareto-filters.
RegionBoundary td_region(const BroadcastConfig& cfg, int mu_steps, int eta_steps);

/// K-user superposition/DPC rates
/// R_k = log(1 + gamma_k G_k rho / ((sum_{i<k} gamma_i) G_k rho + 1)).
std::vector<double> dpc_rate_point_k(const BroadcastConfig& cfg, const PowerAllocation& alloc);

/// Sweeps power allocations over the uniform simplex grid with steps_per_dim
/// parts (all compositions into K bins) and Pareto-filters. Grids above 1e7
/// points are rejected; use a coarser steps_per_dim.
RegionBoundary dpc_region(const BroadcastConfig& cfg, int steps_per_dim);

/// Per-user outage probabilities of the DPC scheme at the given rates:
/// Pr[A_k <= (e^{R_k} - 1) / (gamma_k rho - (e^{R_k} - 1)(sum_{j<k} gamma_j) rho)],
/// outage 1 when the denominator is nonpositive, outage 0 at zero rate.
std::vector<double> dpc_outage_for_rates(const BroadcastConfig& cfg, const PowerAllocation& alloc,
                                         std::span<const double> rates);

/// Whether some power allocation supports the given user-ordered rate vector
/// (greedy minimal-power feasibility test).
bool dpc_supports(const BroadcastConfig& cfg, std::span<const double> rates);

struct DominanceReport {
    bool dominated;
    std::optional<std::array<double, 2>> witness_strict;
};

/// Checks that the DPC region contains the given TD boundary (via the exact
/// gamma(r1) inversion of the DPC frontier) and searches for a DPC point
/// strictly outside the TD region. The strict witness is compared against
/// the exact TD frontier, not the sampled boundary, so its margin does not
/// depend on the TD grid density.
DominanceReport verify_dominance(const BroadcastConfig& cfg, const RegionBoundary& td,
                                 int dpc_steps);

/// The gain vector (G_k(eps_k)) of the deterministic equivalent channel
/// Y_k = sqrt(G_k(eps_k)) X + Z_k: feeding these back as scaled constant
/// models reproduces the fading-channel regions point for point.
std::vector<double> equivalent_unfaded_gains(const BroadcastConfig& cfg);

}  // namespace dpcfade
