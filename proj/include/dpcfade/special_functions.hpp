// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

namespace dpcfade {

/// Regularized lower incomplete gamma function P(s, x) = gamma(s, x) / Gamma(s),
/// s > 0, x >= 0. Series representation for x < s + 1, continued fraction for
/// the complement otherwise.
double regularized_gamma_p(double s, double x);

/// First-order Marcum Q function Q1(a, b).
///
/// Evaluated through the modified-Bessel series with exponentially scaled
/// terms, Q1(a,b) = e^{-(a-b)^2/2} * sum_k (a/b)^k I_k(ab) e^{-ab} for b >= a
/// and the complementary series for b < a, truncated term-wise once the tail
/// is negligible at working precision.
double marcum_q1(double a, double b);

/// Exponentially scaled modified Bessel function of the first kind, I0(x) e^{-x}.
double bessel_i0_scaled(double x);

/// Digamma function psi(x) for x > 0.
double digamma(double x);

}  // namespace dpcfade
