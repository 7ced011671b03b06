// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include "dpcfade/ergodic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dpcfade/errors.hpp"
#include "dpcfade/scalar_search.hpp"

namespace dpcfade {

namespace {

void require_finite_ipr(const ChannelConfig& cfg, const char* op) {
    if (!cfg.ipr_finite())
        throw std::domain_error(std::string(op) + ": requires a finite interference-to-power ratio");
}

}  // namespace

ChannelConfig::ChannelConfig(double snr_linear, double ipr_value) : snr(snr_linear), ipr(ipr_value) {
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw std::domain_error("ChannelConfig: snr must be positive and finite");
    if (std::isnan(ipr) || ipr < 0.0)
        throw std::domain_error("ChannelConfig: ipr must be nonnegative (or +infinity)");
}

bool ChannelConfig::ipr_finite() const { return std::isfinite(ipr); }

DpcParams::DpcParams(double alpha_value) : alpha(alpha_value) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("DpcParams: alpha must lie in [0, 1]");
}

double costa_capacity(double snr) {
    if (!(snr > 0.0)) throw std::domain_error("costa_capacity: snr must be positive");
    return std::log1p(snr);
}

double rate_integrand(const ChannelConfig& cfg, double alpha, double a) {
    const double p = cfg.snr;
    const double q = cfg.ipr * cfg.snr;
    const double one_minus_alpha = 1.0 - alpha;
    const double num = p * (a * (p + q) + 1.0);
    const double den = one_minus_alpha * one_minus_alpha * a * p * q + (p + alpha * alpha * q);
    return std::log(num / den);
}

double rate_dpc_integrand(const ChannelConfig& cfg, double a) {
    const double rho = cfg.snr;
    const double beta = cfg.ipr;
    const double num = (rho + 1.0) * (rho + 1.0) * ((1.0 + beta) * a * rho + 1.0);
    const double den = (beta + 1.0) * rho * rho + (beta * a + 2.0) * rho + 1.0;
    return std::log(num / den);
}

double capacity_integrand(const ChannelConfig& cfg, double a) {
    return std::log1p(a * cfg.snr);
}

double rate_general(const ChannelConfig& cfg, const DpcParams& params, const FadingModel& model,
                    const ExpectationEngine& engine) {
    require_finite_ipr(cfg, "rate_general");
    const double alpha = params.alpha;
    return engine
        .expect(model, [&cfg, alpha](double a) { return rate_integrand(cfg, alpha, a); },
                "rate_general")
        .value;
}

double rate_dpc(const ChannelConfig& cfg, const FadingModel& model, const ExpectationEngine& engine) {
    require_finite_ipr(cfg, "rate_dpc");
    return engine.expect(model, [&cfg](double a) { return rate_dpc_integrand(cfg, a); }, "rate_dpc")
        .value;
}

double capacity_known_interference(const ChannelConfig& cfg, const FadingModel& model,
                                   const ExpectationEngine& engine) {
    return engine
        .expect(model, [&cfg](double a) { return capacity_integrand(cfg, a); },
                "capacity_known_interference")
        .value;
}

double gap(const ChannelConfig& cfg, const FadingModel& model, const ExpectationEngine& engine) {
    require_finite_ipr(cfg, "gap");
    return capacity_known_interference(cfg, model, engine) - rate_dpc(cfg, model, engine);
}

double gap_bound(double snr, const FadingModel& model, const ExpectationEngine& engine) {
    if (!(snr > 0.0)) throw std::domain_error("gap_bound: snr must be positive");
    const Expectation e = engine.expect(
        model, [snr](double a) { return std::log(snr + a) + std::log(snr + 1.0 / a); },
        "gap_bound");
    return e.value - 2.0 * std::log(snr + 1.0);
}

GapBoundMax gap_bound_max(const FadingModel& model, std::span<const double> snr_grid,
                          const ExpectationEngine& engine) {
    if (snr_grid.empty()) throw std::invalid_argument("gap_bound_max: snr grid must be nonempty");
    for (std::size_t i = 1; i < snr_grid.size(); ++i) {
        if (!(snr_grid[i] >= snr_grid[i - 1]))
            throw std::invalid_argument("gap_bound_max: snr grid must be sorted ascending");
    }
    GapBoundMax best{-std::numeric_limits<double>::infinity(), snr_grid.front()};
    for (double snr : snr_grid) {
        const double v = gap_bound(snr, model, engine);
        if (v > best.max_value) best = {v, snr};
    }
    return best;
}

OptimalAlpha optimal_alpha(const ChannelConfig& cfg, const FadingModel& model,
                           const ExpectationEngine& engine) {
    require_finite_ipr(cfg, "optimal_alpha");
    auto objective = [&](double alpha) { return rate_general(cfg, DpcParams(alpha), model, engine); };
    SearchResult r = golden_section_max(objective, 0.0, 1.0, 1e-6);
    // the fixed DPC alpha is feasible; never return anything below it
    const double alpha_dpc = cfg.snr / (1.0 + cfg.snr);
    const double rate_fixed = objective(alpha_dpc);
    if (rate_fixed > r.value) return {alpha_dpc, rate_fixed};
    return {r.x, r.value};
}

HighSnrExpansion expand_high_snr(const ChannelConfig& cfg, const FadingModel& model) {
    require_finite_ipr(cfg, "expand_high_snr");
    const Moments m = model.moments();
    HighSnrExpansion out{m.mean_log, std::nullopt, std::nullopt};
    if (m.mean_inverse) {
        out.rate_inv_snr_coeff = (cfg.ipr + *m.mean_inverse) / (cfg.ipr + 1.0);
        out.capacity_inv_snr_coeff = *m.mean_inverse;
    }
    return out;
}

LowSnrExpansion expand_low_snr(const ChannelConfig& cfg, const FadingModel& model) {
    require_finite_ipr(cfg, "expand_low_snr");
    const Moments m = model.moments();
    if (!std::isfinite(m.second_moment))
        throw DivergenceError("expand_low_snr", "E[A^2] is not finite for this model");
    const double beta = cfg.ipr;
    return {1.0, -((2.0 * beta + 1.0) * m.second_moment - 2.0 * beta), -m.second_moment};
}

GaussianSystem GaussianSystem::for_gain(const ChannelConfig& cfg, const DpcParams& params,
                                        double a) {
    if (a < 0.0) throw std::domain_error("GaussianSystem: gain must be nonnegative");
    const double p = cfg.snr;
    const double q = cfg.ipr * cfg.snr;
    const double n = 1.0;
    const double alpha = params.alpha;
    const double sqrt_a = std::sqrt(a);
    GaussianSystem sys{};
    // order (U, S, Y); circularly symmetric second moments
    sys.covariance[0][0] = p + alpha * alpha * q;
    sys.covariance[1][1] = q;
    sys.covariance[2][2] = a * (p + q) + n;
    sys.covariance[0][1] = sys.covariance[1][0] = alpha * q;
    sys.covariance[0][2] = sys.covariance[2][0] = sqrt_a * (p + alpha * q);
    sys.covariance[1][2] = sys.covariance[2][1] = sqrt_a * q;
    return sys;
}

namespace {

// I(V;W) for a circularly symmetric complex pair: -log(1 - corr^2), with a
// degenerate variable carrying no information.
double pair_mutual_information(double var_v, double var_w, double cov) {
    if (!(var_v > 0.0) || !(var_w > 0.0)) return 0.0;
    const double corr2 = (cov * cov) / (var_v * var_w);
    if (corr2 <= 0.0) return 0.0;
    return -std::log1p(-corr2);
}

}  // namespace

double rate_via_mi_oracle(const ChannelConfig& cfg, const DpcParams& params, double a) {
    require_finite_ipr(cfg, "rate_via_mi_oracle");
    const GaussianSystem sys = GaussianSystem::for_gain(cfg, params, a);
    const auto& c = sys.covariance;
    const double i_uy = pair_mutual_information(c[0][0], c[2][2], c[0][2]);
    const double i_us = pair_mutual_information(c[0][0], c[1][1], c[0][1]);
    return i_uy - i_us;
}

}  // namespace dpcfade
