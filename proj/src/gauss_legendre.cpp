// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include "dpcfade/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dpcfade {

namespace {

// Newton iteration on the Legendre recurrence; nodes on [-1, 1] then mapped
// to (0, 1). Standard construction, exploits node symmetry.
QuadratureRule build_rule(int n) {
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x is the i-th root from the +1 end; map t = (1+x)/2
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + x);
        rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = 0.5 * w;
        rule.weights[static_cast<std::size_t>(i)] = 0.5 * w;
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre_01(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_01: node count must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<QuadratureRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::make_unique<QuadratureRule>(build_rule(n))).first;
    }
    return *it->second;
}

namespace {

QuadratureRule build_composite(int n) {
    // Panel depth grows with log2(n) so that doubling the node count always
    // probes one dyadic level deeper into each endpoint: divergent integrands
    // then keep growing under refinement instead of stalling at a truncated
    // value. Depths beyond 2^-46 would collapse onto representable-1 and
    // carry negligible mass.
    constexpr int kMaxPanelsPerSide = 45;
    const int depth = std::min(
        kMaxPanelsPerSide,
        24 + static_cast<int>(std::lround(std::log2(static_cast<double>(std::max(n, 2))))));
    const int panels_per_side = depth;
    const int panel_nodes =
        std::max(4, static_cast<int>(std::lround(static_cast<double>(n) / (2.0 * depth))));
    const QuadratureRule& base = gauss_legendre_01(panel_nodes);

    QuadratureRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(2 * panels_per_side * panel_nodes));
    rule.weights.reserve(rule.nodes.capacity());
    auto add_panel = [&](double lo, double hi) {
        const double width = hi - lo;
        for (int i = 0; i < panel_nodes; ++i) {
            rule.nodes.push_back(lo + width * base.nodes[static_cast<std::size_t>(i)]);
            rule.weights.push_back(width * base.weights[static_cast<std::size_t>(i)]);
        }
    };
    // left half: [2^-(k+1), 2^-k] * 1/2 down toward zero
    for (int k = panels_per_side - 1; k >= 0; --k)
        add_panel(0.5 * std::ldexp(1.0, -k - 1), 0.5 * std::ldexp(1.0, -k));
    // right half mirrored toward one
    for (int k = 0; k < panels_per_side; ++k)
        add_panel(1.0 - 0.5 * std::ldexp(1.0, -k), 1.0 - 0.5 * std::ldexp(1.0, -k - 1));
    return rule;
}

}  // namespace

const QuadratureRule& composite_gauss_legendre_01(int n) {
    if (n < 1)
        throw std::invalid_argument("composite_gauss_legendre_01: node count must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<QuadratureRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, std::make_unique<QuadratureRule>(build_composite(n))).first;
    }
    return *it->second;
}

}  // namespace dpcfade
