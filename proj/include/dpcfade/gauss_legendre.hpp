// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <vector>

namespace dpcfade {

/// Gauss-Legendre rule mapped to the open unit interval (0, 1).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Returns the n-point Gauss-Legendre rule on (0, 1). Rules are computed once
/// per node count and cached; the returned reference stays valid for the
/// lifetime of the process. Thread safe.
const QuadratureRule& gauss_legendre_01(int n);

/// Composite Gauss-Legendre rule on (0, 1) with panels that shrink
/// dyadically toward both endpoints (16 points per panel, about n points in
/// total). Inverse-CDF transforms of the stock fading families produce
/// integrands with logarithmic endpoint behaviour; on dyadic panels every
/// such integrand is smooth, so the composite rule converges at machine
/// precision where a single rule stalls. Cached and thread safe.
const QuadratureRule& composite_gauss_legendre_01(int n);

}  // namespace dpcfade
