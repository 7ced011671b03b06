// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "dpcfade/fading.hpp"

namespace dpcfade {

struct Expectation {
    double value;
    double std_error;
};

/// Computes E[f(A)] for a fading model by one of two independent methods.
///
/// Quadrature evaluates int_0^1 f(G(u)) du with Gauss-Legendre after the
/// inverse-CDF transform; the reported std_error is the disagreement between
/// the full rule and the half rule. When the disagreement stays above 1e-4
/// after doubling the node count twice, the expectation is declared
/// divergent. Monte Carlo averages f over sample(model, seed, samples) with
/// the CLT standard error (sample standard deviation over sqrt(n)).
///
/// Point-mass models return f(value) exactly; empirical models are finite
/// atom sets, so the quadrature method returns their exact average.
///
/// Engines are immutable and expect() is a pure function: identical engine
/// parameters and model give bit-identical results.
class ExpectationEngine {
  public:
    enum class Method { Quadrature, MonteCarlo };

    static constexpr int kDefaultNodes = 2048;
    static constexpr int kMinNodes = 16;
    static constexpr double kAgreementTol = 1e-4;

    static ExpectationEngine quadrature(int nodes = kDefaultNodes);
    static ExpectationEngine monte_carlo(std::size_t samples, std::uint64_t seed);

    Method method() const { return method_; }
    int nodes() const { return nodes_; }
    std::size_t samples() const { return samples_; }
    std::uint64_t seed() const { return seed_; }

    Expectation expect(const FadingModel& model, const std::function<double(double)>& f,
                       std::string_view integrand_name = "integrand") const;

  private:
    ExpectationEngine() = default;
    Method method_ = Method::Quadrature;
    int nodes_ = kDefaultNodes;
    std::size_t samples_ = 0;
    std::uint64_t seed_ = 0;
};

}  // namespace dpcfade
