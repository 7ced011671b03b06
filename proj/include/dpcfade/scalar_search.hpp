// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <cmath>
#include <utility>

namespace dpcfade {

struct SearchResult {
    double x;
    double value;
};

/// Golden-section maximization of a unimodal function on [lo, hi] to the
/// given absolute x tolerance. Returns the best point actually evaluated.
template <class F>
SearchResult golden_section_max(F&& f, double lo, double hi, double xtol) {
    const double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    SearchResult best = f1 >= f2 ? SearchResult{x1, f1} : SearchResult{x2, f2};
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
            if (f2 > best.value) best = {x2, f2};
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
            if (f1 > best.value) best = {x1, f1};
        }
    }
    return best;
}

template <class F>
SearchResult golden_section_min(F&& f, double lo, double hi, double xtol) {
    auto neg = [&](double x) { return -f(x); };
    SearchResult r = golden_section_max(neg, lo, hi, xtol);
    return {r.x, -r.value};
}

/// Coarse grid scan followed by golden-section refinement around the best
/// cell. Robust against flat plateaus away from the optimum.
template <class F>
SearchResult grid_refine_min(F&& f, double lo, double hi, int grid_points, double xtol) {
    int best_i = 0;
    double best_v = f(lo);
    const double h = (hi - lo) / (grid_points - 1);
    for (int i = 1; i < grid_points; ++i) {
        const double v = f(lo + h * i);
        if (v < best_v) {
            best_v = v;
            best_i = i;
        }
    }
    const double a = lo + h * (best_i > 0 ? best_i - 1 : 0);
    const double b = lo + h * (best_i < grid_points - 1 ? best_i + 1 : grid_points - 1);
    SearchResult r = golden_section_min(f, a, b, xtol);
    if (best_v < r.value) return {lo + h * best_i, best_v};
    return r;
}

template <class F>
SearchResult grid_refine_max(F&& f, double lo, double hi, int grid_points, double xtol) {
    auto neg = [&](double x) { return -f(x); };
    SearchResult r = grid_refine_min(neg, lo, hi, grid_points, xtol);
    return {r.x, -r.value};
}

}  // namespace dpcfade
