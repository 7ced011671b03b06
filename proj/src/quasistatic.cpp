// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include "dpcfade/quasistatic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dpcfade {

OutageSpec::OutageSpec(double rate, double eps) : target_rate(rate), target_eps(eps) {
    if (!(target_rate >= 0.0)) throw std::domain_error("OutageSpec: target rate must be nonnegative");
    if (!(target_eps > 0.0 && target_eps < 1.0))
        throw std::domain_error("OutageSpec: target outage probability must lie in (0, 1)");
}

double conditional_rate(const ChannelConfig& cfg, double alpha, double a, bool clamp) {
    if (!cfg.ipr_finite())
        throw std::domain_error("conditional_rate: requires a finite interference-to-power ratio");
    const double j = rate_integrand(cfg, alpha, a);
    return clamp ? std::max(j, 0.0) : j;
}

double dpc_alpha_for_gain(double snr, double a) {
    if (!(snr > 0.0)) throw std::domain_error("dpc_alpha_for_gain: snr must be positive");
    if (a < 0.0) throw std::domain_error("dpc_alpha_for_gain: gain must be nonnegative");
    if (std::isinf(a)) return 1.0;
    return a * snr / (a * snr + 1.0);
}

double outage_gain_threshold(const ChannelConfig& cfg, double alpha, double rate) {
    if (!cfg.ipr_finite())
        throw std::domain_error("outage_gain_threshold: requires a finite interference-to-power ratio");
    if (!(rate >= 0.0)) throw std::domain_error("outage_gain_threshold: rate must be nonnegative");
    const double p = cfg.snr;
    const double q = cfg.ipr * cfg.snr;
    const double er = std::exp(rate);
    const double one_minus_alpha = 1.0 - alpha;
    const double den = p * (p + q - one_minus_alpha * one_minus_alpha * er * q);
    if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
    const double num = std::expm1(rate) * p + alpha * alpha * er * q;
    return num / den;
}

double outage_probability(const ChannelConfig& cfg, double alpha, const OutageSpec& spec,
                          const FadingModel& model) {
    if (spec.target_rate == 0.0) return 0.0;
    const double threshold = outage_gain_threshold(cfg, alpha, spec.target_rate);
    if (std::isinf(threshold)) return 1.0;
    return model.cdf(threshold);
}

double optimal_alpha_outage(const OutageSpec& spec) { return -std::expm1(-spec.target_rate); }

double min_outage_probability(const ChannelConfig& cfg, const OutageSpec& spec,
                              const FadingModel& model) {
    if (spec.target_rate == 0.0) return 0.0;
    return model.cdf(std::expm1(spec.target_rate) / cfg.snr);
}

std::vector<RateCdfPoint> rate_cdf(const ChannelConfig& cfg, double alpha,
                                   const FadingModel& model, std::span<const double> rate_grid) {
    std::vector<RateCdfPoint> out;
    out.reserve(rate_grid.size());
    double prev = -std::numeric_limits<double>::infinity();
    for (double r : rate_grid) {
        if (!(r >= prev)) throw std::invalid_argument("rate_cdf: grid must be sorted ascending");
        prev = r;
        const double threshold = outage_gain_threshold(cfg, alpha, r);
        const double prob = std::isinf(threshold) ? 1.0 : model.cdf(threshold);
        out.push_back({r, prob});
    }
    return out;
}

}  // namespace dpcfade
