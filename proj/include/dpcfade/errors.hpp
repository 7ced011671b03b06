// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <stdexcept>
#include <string>

namespace dpcfade {

/// Thrown when an operation is not defined for the given model, e.g. asking
/// for the density of an empirical or point-mass distribution.
class UnsupportedOperation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Thrown when a numerical expectation fails to converge. The usual cause is
/// an integrand that is not integrable under the chosen fading model.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(std::string integrand, const std::string& detail)
        : std::runtime_error("expectation of '" + integrand + "' did not converge: " + detail),
          integrand_(std::move(integrand)) {}

    const std::string& integrand() const noexcept { return integrand_; }

  private:
    std::string integrand_;
};

}  // namespace dpcfade
