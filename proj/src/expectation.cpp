// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include "dpcfade/expectation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dpcfade/errors.hpp"
#include "dpcfade/gauss_legendre.hpp"

namespace dpcfade {

ExpectationEngine ExpectationEngine::quadrature(int nodes) {
    if (nodes < kMinNodes)
        throw std::invalid_argument("quadrature engine needs at least 16 nodes");
    ExpectationEngine e;
    e.method_ = Method::Quadrature;
    e.nodes_ = nodes;
    return e;
}

ExpectationEngine ExpectationEngine::monte_carlo(std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("Monte Carlo engine needs a positive sample count");
    ExpectationEngine e;
    e.method_ = Method::MonteCarlo;
    e.samples_ = samples;
    e.seed_ = seed;
    return e;
}

namespace {

double integrate_icdf(const FadingModel& model, const std::function<double(double)>& f, int n) {
    const QuadratureRule& rule = composite_gauss_legendre_01(n);
    const auto gains = model.icdf_at_gl_nodes(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.weights.size(); ++i) sum += rule.weights[i] * f((*gains)[i]);
    return sum;
}

}  // namespace

Expectation ExpectationEngine::expect(const FadingModel& model,
                                      const std::function<double(double)>& f,
                                      std::string_view integrand_name) const {
    if (model.kind() == FadingKind::Constant) {
        return {f(model.constant_value()), 0.0};
    }
    if (method_ == Method::Quadrature) {
        if (model.kind() == FadingKind::Empirical) {
            // finite atom set: the expectation is an exact average
            const auto& s = model.empirical_values();
            double sum = 0.0;
            for (double a : s) sum += f(a);
            return {sum / static_cast<double>(s.size()), 0.0};
        }
        int n = nodes_;
        double coarse = integrate_icdf(model, f, n / 2);
        double fine = integrate_icdf(model, f, n);
        double err = std::abs(fine - coarse);
        for (int doubling = 0; doubling < 2 && !(err <= kAgreementTol); ++doubling) {
            n *= 2;
            coarse = fine;
            fine = integrate_icdf(model, f, n);
            err = std::abs(fine - coarse);
        }
        if (!(err <= kAgreementTol)) {
            std::ostringstream detail;
            detail << "node-halving disagreement " << err << " above " << kAgreementTol
                   << " at " << n << " nodes";
            throw DivergenceError(std::string(integrand_name), detail.str());
        }
        return {fine, err};
    }
    // Monte Carlo over the model's canonical draw sequence
    double sum = 0.0;
    double sumsq = 0.0;
    model.for_each_sample(seed_, samples_, [&](double a) {
        const double v = f(a);
        sum += v;
        sumsq += v * v;
    });
    const double n = static_cast<double>(samples_);
    const double mean = sum / n;
    double std_error = 0.0;
    if (samples_ > 1) {
        const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
        std_error = std::sqrt(var / n);
    }
    return {mean, std_error};
}

}  // namespace dpcfade
