// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include "dpcfade/broadcast.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dpcfade/errors.hpp"
#include "dpcfade/scalar_search.hpp"

namespace dpcfade {

namespace {

constexpr double kSumTol = 1e-12;

std::vector<double> lex_key(const SweepParam& p) {
    if (const auto* td = std::get_if<TdParams>(&p)) return {0.0, td->mu, td->eta1, td->eta2};
    const auto& pa = std::get<PowerAllocation>(p);
    std::vector<double> key{1.0};
    key.insert(key.end(), pa.gamma.begin(), pa.gamma.end());
    return key;
}

bool param_less(const SweepParam& a, const SweepParam& b) {
    return lex_key(a) < lex_key(b);
}

// componentwise a <= b with strict inequality somewhere
bool dominated_by(const std::vector<double>& a, const std::vector<double>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

RegionBoundary pareto_filter(std::vector<RegionPoint> pts) {
    // sort by rates descending, exact-duplicate rates keep the smallest param
    std::sort(pts.begin(), pts.end(), [](const RegionPoint& x, const RegionPoint& y) {
        if (x.rates != y.rates) return x.rates > y.rates;
        return param_less(x.param, y.param);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const RegionPoint& x, const RegionPoint& y) { return x.rates == y.rates; }),
              pts.end());

    RegionBoundary out;
    if (pts.empty()) return out;
    const std::size_t dim = pts.front().rates.size();
    if (dim == 2) {
        // sweep in r1-descending order keeping the running best r2
        double best_r2 = -std::numeric_limits<double>::infinity();
        for (auto& p : pts) {
            if (p.rates[1] > best_r2) {
                best_r2 = p.rates[1];
                out.points.push_back(std::move(p));
            }
        }
        return out;
    }
    std::vector<bool> keep(pts.size(), true);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != i && dominated_by(pts[i].rates, pts[j].rates)) {
                keep[i] = false;
                break;
            }
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (keep[i]) out.points.push_back(std::move(pts[i]));
    return out;
}

double r1_dpc(double g1, double rho, double gamma) { return std::log1p(gamma * g1 * rho); }

double r2_dpc(double g2, double rho, double gamma) {
    return std::log1p((1.0 - gamma) * g2 * rho / (1.0 + gamma * g2 * rho));
}

// Exact two-user TD frontier: the largest r2 reachable at rate r1 for user 1,
// maximized over the time share with the power boost pinned by r1.
double td_frontier_r2(double g1, double g2, double rho, double r1) {
    const double r1_max = std::log1p(g1 * rho);
    if (r1 <= 0.0) return std::log1p(g2 * rho);
    if (r1 >= r1_max) return 0.0;
    // feasibility: mu*eta1 <= 1 with eta1 = (e^{r1/mu} - 1)/(g1 rho);
    // mu*expm1(r1/mu) is decreasing in mu, so the feasible set is [mu_min, 1]
    auto power_used = [&](double mu) { return mu * std::expm1(r1 / mu); };
    double lo = 1e-12;
    double hi = 1.0;
    if (power_used(1.0) > g1 * rho) return 0.0;  // cannot even reach r1
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (power_used(mid) > g1 * rho) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double mu_min = hi;
    auto r2_of = [&](double mu) {
        if (mu >= 1.0) return 0.0;
        const double eta1 = std::expm1(r1 / mu) / (g1 * rho);
        const double residual = 1.0 - mu * eta1;
        if (residual <= 0.0) return 0.0;
        const double eta2 = residual / (1.0 - mu);
        return (1.0 - mu) * std::log1p(eta2 * g2 * rho);
    };
    return grid_refine_max(r2_of, mu_min, 1.0, 1025, 1e-10).value;
}

}  // namespace

BroadcastConfig::BroadcastConfig(double snr, std::vector<BroadcastUser> users, bool preserve_order)
    : snr_(snr), users_(std::move(users)) {
    if (!(snr_ > 0.0) || !std::isfinite(snr_))
        throw std::domain_error("BroadcastConfig: snr must be positive and finite");
    if (users_.empty()) throw std::invalid_argument("BroadcastConfig: needs at least one user");
    for (const auto& u : users_) {
        if (!(u.target_eps > 0.0 && u.target_eps < 1.0))
            throw std::domain_error("BroadcastConfig: target outage probabilities must lie in (0, 1)");
    }
    if (!preserve_order) {
        std::stable_sort(users_.begin(), users_.end(), [](const BroadcastUser& a, const BroadcastUser& b) {
            return a.model.icdf(a.target_eps) > b.model.icdf(b.target_eps);
        });
    }
    gains_.reserve(users_.size());
    for (const auto& u : users_) {
        const double g = u.model.icdf(u.target_eps);
        if (!std::isfinite(g)) throw std::domain_error("BroadcastConfig: effective gain is not finite");
        gains_.push_back(g);
    }
}

PowerAllocation::PowerAllocation(std::vector<double> fractions) : gamma(std::move(fractions)) {
    if (gamma.empty()) throw std::invalid_argument("PowerAllocation: empty");
    double sum = 0.0;
    for (double g : gamma) {
        if (!(g >= 0.0)) throw std::domain_error("PowerAllocation: fractions must be nonnegative");
        sum += g;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw std::domain_error("PowerAllocation: fractions must sum to 1");
}

TdParams::TdParams(double mu_value, double eta1_value, double eta2_value)
    : mu(mu_value), eta1(eta1_value), eta2(eta2_value) {
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("TdParams: mu must lie in [0, 1]");
    if (!(eta1 >= 0.0) || !(eta2 >= 0.0))
        throw std::domain_error("TdParams: power boosts must be nonnegative");
    if (std::abs(mu * eta1 + (1.0 - mu) * eta2 - 1.0) > kSumTol)
        throw std::domain_error("TdParams: power constraint mu*eta1 + (1-mu)*eta2 = 1 violated");
}

std::vector<double> effective_gains(const BroadcastConfig& cfg) { return cfg.gains(); }

std::array<double, 2> td_rate_point(const BroadcastConfig& cfg, const TdParams& params) {
    if (cfg.num_users() != 2)
        throw UnsupportedOperation("td_rate_point: time division is defined for exactly 2 users");
    const double rho = cfg.snr();
    const auto& g = cfg.gains();
    return {params.mu * std::log1p(params.eta1 * g[0] * rho),
            (1.0 - params.mu) * std::log1p(params.eta2 * g[1] * rho)};
}

RegionBoundary td_region(const BroadcastConfig& cfg, int mu_steps, int eta_steps) {
    if (cfg.num_users() != 2)
        throw UnsupportedOperation("td_region: time division is defined for exactly 2 users");
    if (mu_steps < 2 || eta_steps < 2)
        throw std::invalid_argument("td_region: need at least 2 sweep steps per parameter");
    const double rho = cfg.snr();
    const auto& g = cfg.gains();
    std::vector<RegionPoint> pts;
    pts.reserve(static_cast<std::size_t>(mu_steps) * static_cast<std::size_t>(eta_steps));
    // single-user edges, computed without the eta2 division
    pts.push_back({{0.0, std::log1p(g[1] * rho)}, TdParams(0.0, 1.0, 1.0)});
    pts.push_back({{std::log1p(g[0] * rho), 0.0}, TdParams(1.0, 1.0, 1.0)});
    for (int i = 1; i + 1 < mu_steps; ++i) {
        const double mu = static_cast<double>(i) / (mu_steps - 1);
        for (int j = 0; j < eta_steps; ++j) {
            const double eta1 = static_cast<double>(j) / (eta_steps - 1) / mu;
            const double residual = 1.0 - mu * eta1;
            if (residual < 0.0) continue;
            const double eta2 = residual / (1.0 - mu);
            TdParams params(mu, eta1, eta2);
            const auto r = td_rate_point(cfg, params);
            pts.push_back({{r[0], r[1]}, params});
        }
    }
    return pareto_filter(std::move(pts));
}

std::vector<double> dpc_rate_point_k(const BroadcastConfig& cfg, const PowerAllocation& alloc) {
    if (alloc.gamma.size() != cfg.num_users())
        throw std::invalid_argument("dpc_rate_point_k: allocation length must match the user count");
    const double rho = cfg.snr();
    const auto& g = cfg.gains();
    std::vector<double> rates(cfg.num_users());
    double prefix = 0.0;  // sum_{i<k} gamma_i, earlier-encoded users act as noise
    for (std::size_t k = 0; k < rates.size(); ++k) {
        rates[k] = std::log1p(alloc.gamma[k] * g[k] * rho / (prefix * g[k] * rho + 1.0));
        prefix += alloc.gamma[k];
    }
    return rates;
}

RegionBoundary dpc_region(const BroadcastConfig& cfg, int steps_per_dim) {
    if (steps_per_dim < 1) throw std::invalid_argument("dpc_region: steps_per_dim must be positive");
    const std::size_t k = cfg.num_users();
    // number of compositions C(steps + K - 1, K - 1)
    double count = 1.0;
    for (std::size_t i = 1; i < k; ++i)
        count *= static_cast<double>(steps_per_dim + i) / static_cast<double>(i);
    if (count > 1e7)
        throw std::length_error("dpc_region: simplex grid exceeds 1e7 points; use a coarser steps_per_dim");

    std::vector<RegionPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    std::vector<int> parts(k, 0);
    parts[0] = steps_per_dim;
    for (;;) {
        std::vector<double> gamma(k);
        std::size_t largest = 0;
        for (std::size_t i = 0; i < k; ++i) {
            gamma[i] = static_cast<double>(parts[i]) / steps_per_dim;
            if (parts[i] > parts[largest]) largest = i;
        }
        // pin the sum to exactly 1 through the largest entry; exact zeros stay
        double rest = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            if (i != largest) rest += gamma[i];
        gamma[largest] = std::max(0.0, 1.0 - rest);
        PowerAllocation alloc(std::move(gamma));
        pts.push_back({dpc_rate_point_k(cfg, alloc), std::move(alloc)});

        // next composition in colex order
        if (k == 1) break;
        std::size_t i = 0;
        while (i + 1 < k && parts[i] == 0) ++i;
        if (i + 1 == k) break;
        const int v = parts[i];
        parts[i] = 0;
        parts[0] = v - 1;
        parts[i + 1] += 1;
    }
    return pareto_filter(std::move(pts));
}

std::vector<double> dpc_outage_for_rates(const BroadcastConfig& cfg, const PowerAllocation& alloc,
                                         std::span<const double> rates) {
    if (alloc.gamma.size() != cfg.num_users() || rates.size() != cfg.num_users())
        throw std::invalid_argument("dpc_outage_for_rates: dimension mismatch");
    const double rho = cfg.snr();
    std::vector<double> out(cfg.num_users());
    double prefix = 0.0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double r = rates[k];
        if (!(r >= 0.0)) throw std::domain_error("dpc_outage_for_rates: rates must be nonnegative");
        if (r == 0.0) {
            out[k] = 0.0;  // zero rate is never in outage
        } else {
            const double x = std::expm1(r);
            const double den = alloc.gamma[k] * rho - x * prefix * rho;
            out[k] = den > 0.0 ? cfg.users()[k].model.cdf(x / den) : 1.0;
        }
        prefix += alloc.gamma[k];
    }
    return out;
}

bool dpc_supports(const BroadcastConfig& cfg, std::span<const double> rates) {
    if (rates.size() != cfg.num_users())
        throw std::invalid_argument("dpc_supports: dimension mismatch");
    const double rho = cfg.snr();
    const auto& g = cfg.gains();
    // greedy minimal power: gamma_k = (e^{R_k} - 1)(prefix G_k rho + 1)/(G_k rho)
    double prefix = 0.0;
    for (std::size_t k = 0; k < rates.size(); ++k) {
        if (rates[k] < 0.0) return false;
        if (rates[k] == 0.0) continue;
        if (!(g[k] > 0.0)) return false;
        prefix += std::expm1(rates[k]) * (prefix * g[k] * rho + 1.0) / (g[k] * rho);
        if (prefix > 1.0 + kSumTol) return false;
    }
    return prefix <= 1.0 + kSumTol;
}

DominanceReport verify_dominance(const BroadcastConfig& cfg, const RegionBoundary& td,
                                 int dpc_steps) {
    if (cfg.num_users() != 2)
        throw UnsupportedOperation("verify_dominance: defined for exactly 2 users");
    if (dpc_steps < 2) throw std::invalid_argument("verify_dominance: need at least 2 sweep steps");
    const double rho = cfg.snr();
    double g1 = cfg.gains()[0];
    double g2 = cfg.gains()[1];
    if (g1 < g2) std::swap(g1, g2);  // containment argument assumes G1 >= G2

    // containment: every TD point sits below the DPC frontier at its r1
    bool dominated = true;
    for (const auto& p : td.points) {
        const double r1 = p.rates[0];
        const double r2 = p.rates[1];
        const double gamma = std::clamp(std::expm1(r1) / (g1 * rho), 0.0, 1.0);
        if (r2_dpc(g2, rho, gamma) < r2 - 1e-9) {
            dominated = false;
            break;
        }
    }

    // strict witness: a DPC boundary point above the exact TD frontier
    std::optional<std::array<double, 2>> witness;
    double best_excess = 0.0;
    for (int i = 1; i + 1 < dpc_steps; ++i) {
        const double gamma = static_cast<double>(i) / (dpc_steps - 1);
        const double r1 = r1_dpc(g1, rho, gamma);
        const double r2 = r2_dpc(g2, rho, gamma);
        const double excess = r2 - td_frontier_r2(g1, g2, rho, r1);
        if (excess > best_excess) {
            best_excess = excess;
            witness = std::array<double, 2>{r1, r2};
        }
    }
    if (best_excess <= 1e-6) witness.reset();
    return {dominated, witness};
}

std::vector<double> equivalent_unfaded_gains(const BroadcastConfig& cfg) { return cfg.gains(); }

}  // namespace dpcfade
