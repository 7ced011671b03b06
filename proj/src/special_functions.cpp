// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include "dpcfade/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dpcfade {

namespace {

constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

// Scaled modified Bessel table ik[k] = I_k(x) e^{-x}, k = 0..kmax, computed by
// Miller's downward recurrence and normalized with I0 + 2*sum_{k>=1} I_k = e^x.
std::vector<double> bessel_i_scaled_table(double x, int kmax) {
    std::vector<double> ik(static_cast<std::size_t>(kmax) + 1, 0.0);
    if (x <= 0.0) {
        ik[0] = 1.0;
        return ik;
    }
    const int start = std::max(kmax, static_cast<int>(x)) +
                      static_cast<int>(15.0 * std::sqrt(std::max(x, static_cast<double>(kmax)) + 4.0)) + 20;
    double fkp1 = 0.0;
    double fk = kTiny;
    double total = 0.0;
    for (int k = start; k >= 1; --k) {
        const double fkm1 = fkp1 + (2.0 * k / x) * fk;
        fkp1 = fk;
        fk = fkm1;
        if (k - 1 <= kmax) ik[static_cast<std::size_t>(k - 1)] = fk;
        total += 2.0 * fkp1;
        if (std::abs(fk) > 1e250) {
            fk *= 1e-250;
            fkp1 *= 1e-250;
            total *= 1e-250;
            for (double& v : ik) v *= 1e-250;
        }
    }
    total += fk;  // f0
    for (double& v : ik) v /= total;
    return ik;
}

}  // namespace

double bessel_i0_scaled(double x) {
    if (x < 0.0) x = -x;  // I0 is even
    return bessel_i_scaled_table(x, 0)[0];
}

double regularized_gamma_p(double s, double x) {
    if (!(s > 0.0)) throw std::domain_error("regularized_gamma_p: shape must be positive");
    if (x < 0.0) throw std::domain_error("regularized_gamma_p: argument must be nonnegative");
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(s);
    if (x < s + 1.0) {
        // lower series
        double ap = s;
        double del = 1.0 / s;
        double sum = del;
        for (int i = 0; i < kMaxIter; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * std::numeric_limits<double>::epsilon()) break;
        }
        return sum * std::exp(-x + s * std::log(x) - lg);
    }
    // continued fraction for the upper function Q(s, x)
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < std::numeric_limits<double>::epsilon()) break;
    }
    const double q = std::exp(-x + s * std::log(x) - lg) * h;
    return 1.0 - q;
}

double marcum_q1(double a, double b) {
    if (b <= 0.0) return 1.0;
    if (a <= 0.0) return std::exp(-0.5 * b * b);
    const double x = a * b;
    // (a^2 + b^2)/2 = ab + (a-b)^2/2, so scaled Bessel terms absorb e^{-ab}
    const double expo = std::exp(-0.5 * (a - b) * (a - b));
    const bool direct = b >= a;
    const double r = direct ? a / b : b / a;
    const int kmax = static_cast<int>(std::ceil(x + 14.0 * std::sqrt(x + 1.0) + 40.0));
    const std::vector<double> ik = bessel_i_scaled_table(x, kmax);

    double sum = 0.0;
    if (direct) {
        double rk = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            const double term = rk * ik[static_cast<std::size_t>(k)];
            sum += term;
            rk *= r;
            if (static_cast<double>(k) > x && term < sum * 1e-17) break;
        }
        const double q = expo * sum;
        return q < 0.0 ? 0.0 : (q > 1.0 ? 1.0 : q);
    }
    double rk = r;
    for (int k = 1; k <= kmax; ++k) {
        const double term = rk * ik[static_cast<std::size_t>(k)];
        sum += term;
        rk *= r;
        if (static_cast<double>(k) > x && term < sum * 1e-17) break;
    }
    const double q = 1.0 - expo * sum;
    return q < 0.0 ? 0.0 : (q > 1.0 ? 1.0 : q);
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // asymptotic series ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
    const double series =
        std::log(x) - 0.5 * inv -
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return acc + series;
}

}  // namespace dpcfade
