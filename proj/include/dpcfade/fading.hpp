// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpcfade {

enum class FadingKind { Constant, Rayleigh, Rician, Nakagami, Empirical };

/// Moments of the power coefficient A used by the rate expansions.
/// mean_inverse is empty when E[1/A] diverges (Rayleigh, Rician, and
/// Nakagami with m <= 1); a divergent moment is reported as the missing
/// value, never as a floating-point infinity from overflow.
struct Moments {
    double second_moment;                 // E[A^2]
    double mean_log;                      // E[log A]
    std::optional<double> mean_inverse;   // E[1/A], empty when divergent
};

/// Distribution of the nonnegative fading/resizing power coefficient A.
///
/// All stock families are normalized to unit mean: Rayleigh power is
/// exponential with mean 1, Nakagami-m power is Gamma(m, 1/m), and the
/// Rician model is parameterized by the Rice factor K (line-of-sight power
/// over scattered power) with total power 1. Empirical data is rescaled by
/// its sample mean at construction.
///
/// Models are immutable after construction and safe to share across
/// threads; sampling takes the seed as an argument and keeps no generator
/// state inside the model.
class FadingModel {
  public:
    /// Point mass. The default is the unit-mean constant channel; a value
    /// other than 1 represents the deterministic equivalent channel with a
    /// fixed gain (see broadcast::equivalent_unfaded_gains) and is exempt
    /// from the unit-mean convention.
    static FadingModel constant(double value = 1.0);
    static FadingModel rayleigh();
    static FadingModel rician(double k_factor);
    /// Nakagami fading with fading figure m >= 1/2.
    static FadingModel nakagami(double m);
    /// Empirical distribution; samples are normalized to unit mean.
    static FadingModel empirical(std::vector<double> samples);
    /// Loads one nonnegative real per line; blank lines are ignored. A parse
    /// failure reports the offending line number.
    static FadingModel empirical_from_file(const std::string& path);
    /// Parses a model spec string: "constant", "rayleigh", "rician:K=2",
    /// "nakagami:m=4", "empirical:<path>".
    static FadingModel parse(std::string_view spec);

    FadingKind kind() const;
    /// Canonical spec string, e.g. "nakagami:m=2".
    const std::string& name() const;
    double mean() const;

    /// Density at a >= 0. Defined for the Rayleigh, Rician and Nakagami
    /// families only; point masses and empirical data have no density.
    double pdf(double a) const;
    /// Pr[A <= a] for a >= 0.
    double cdf(double a) const;
    /// Generalized inverse G(t) = inf{a : cdf(a) >= t} for t in [0, 1).
    /// At t = 0 this returns the essential infimum of the support.
    double icdf(double t) const;
    /// n i.i.d. draws; deterministic for fixed (seed, n).
    std::vector<double> sample(std::uint64_t seed, std::size_t n) const;
    Moments moments() const;

    /// Constant value (Constant kind only).
    double constant_value() const;
    /// Normalized, sorted samples (Empirical kind only).
    const std::vector<double>& empirical_values() const;

    /// icdf evaluated at the abscissas of the n-point composite Gauss-Legendre
    /// rule on (0,1), cached per model so repeated expectations share the
    /// transform.
    std::shared_ptr<const std::vector<double>> icdf_at_gl_nodes(int n) const;

    /// Streams the same draw sequence as sample() without materializing it.
    template <class F>
    void for_each_sample(std::uint64_t seed, std::size_t n, F&& fn) const;

  private:
    struct Impl;
    explicit FadingModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    double draw(void* rng_state) const;  // one draw from an mt19937_64
    std::shared_ptr<const Impl> impl_;
};

}  // namespace dpcfade

#include <random>

namespace dpcfade {

template <class F>
void FadingModel::for_each_sample(std::uint64_t seed, std::size_t n, F&& fn) const {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) fn(draw(&rng));
}

}  // namespace dpcfade
