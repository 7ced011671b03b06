// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include "dpcfade/fading.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dpcfade/errors.hpp"
#include "dpcfade/gauss_legendre.hpp"
#include "dpcfade/special_functions.hpp"

namespace dpcfade {

namespace {

inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform01_open(std::mt19937_64& g) {
    return (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
}

inline double standard_normal(std::mt19937_64& g) {
    const double u1 = uniform01_open(g);
    const double u2 = uniform01(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Marsaglia-Tsang, unit scale. Shapes below 1 use the boost via shape + 1.
double gamma_draw(std::mt19937_64& g, double shape) {
    if (shape < 1.0) {
        const double u = uniform01_open(g);
        return gamma_draw(g, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double z = standard_normal(g);
        double v = 1.0 + c * z;
        if (v <= 0.0) continue;
        v = v * v * v;
        const double u = uniform01_open(g);
        if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
        if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

struct FadingModel::Impl {
    FadingKind kind = FadingKind::Constant;
    double value = 1.0;       // Constant
    double k_factor = 0.0;    // Rician
    double m = 1.0;           // Nakagami
    std::vector<double> samples;  // Empirical (normalized, sorted)
    std::string name;

    mutable std::mutex cache_mutex;
    mutable std::map<int, std::shared_ptr<const std::vector<double>>> gl_gain_cache;
};

namespace {

std::string format_param(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Bracketed bisection of cdf for the generalized inverse. The bracket is
// grown until it covers t, then halved until the gain is resolved to about
// 1e-10 relative and the cdf residual is at working precision.
template <class Cdf>
double bisect_icdf(const Cdf& cdf, double t) {
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 2048 && cdf(hi) < t; ++i) hi *= 2.0;
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double c = cdf(mid);
        if (c >= t) {
            hi = mid;
        } else {
            lo = mid;
        }
        if (hi - lo <= 1e-10 * (1.0 + lo) && std::abs(cdf(0.5 * (lo + hi)) - t) <= 1e-11) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

FadingModel FadingModel::constant(double value) {
    if (!(value > 0.0)) throw std::domain_error("constant fading value must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = FadingKind::Constant;
    impl->value = value;
    impl->name = value == 1.0 ? "constant" : "constant:value=" + format_param(value);
    return FadingModel(std::move(impl));
}

FadingModel FadingModel::rayleigh() {
    auto impl = std::make_shared<Impl>();
    impl->kind = FadingKind::Rayleigh;
    impl->name = "rayleigh";
    return FadingModel(std::move(impl));
}

FadingModel FadingModel::rician(double k_factor) {
    if (!(k_factor >= 0.0)) throw std::domain_error("Rician K factor must be nonnegative");
    auto impl = std::make_shared<Impl>();
    impl->kind = FadingKind::Rician;
    impl->k_factor = k_factor;
    impl->name = "rician:K=" + format_param(k_factor);
    return FadingModel(std::move(impl));
}

FadingModel FadingModel::nakagami(double m) {
    if (!(m >= 0.5)) throw std::domain_error("Nakagami fading figure m must be at least 1/2");
    auto impl = std::make_shared<Impl>();
    impl->kind = FadingKind::Nakagami;
    impl->m = m;
    impl->name = "nakagami:m=" + format_param(m);
    return FadingModel(std::move(impl));
}

FadingModel FadingModel::empirical(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("empirical model needs at least one sample");
    double mean = 0.0;
    for (double s : samples) {
        if (!(s >= 0.0) || !std::isfinite(s))
            throw std::domain_error("empirical samples must be finite and nonnegative");
        mean += s;
    }
    mean /= static_cast<double>(samples.size());
    if (!(mean > 0.0)) throw std::domain_error("empirical samples must have positive mean");
    for (double& s : samples) s /= mean;
    std::sort(samples.begin(), samples.end());
    auto impl = std::make_shared<Impl>();
    impl->kind = FadingKind::Empirical;
    impl->samples = std::move(samples);
    impl->name = "empirical";
    return FadingModel(std::move(impl));
}

FadingModel FadingModel::empirical_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open empirical sample file: " + path);
    std::vector<double> samples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // trim whitespace; blank lines are skipped
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r\n");
        const std::string tok = line.substr(first, last - first + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || !(v >= 0.0) || !std::isfinite(v)) {
            throw std::runtime_error(path + ": parse failure at line " + std::to_string(line_no) +
                                     ": '" + tok + "'");
        }
        samples.push_back(v);
    }
    if (samples.empty()) throw std::runtime_error(path + ": no samples found");
    return empirical(std::move(samples));
}

FadingModel FadingModel::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string head(spec.substr(0, colon));
    const std::string rest(colon == std::string_view::npos ? "" : spec.substr(colon + 1));
    auto parse_value = [&](const std::string& key) {
        std::string s = rest;
        if (s.rfind(key + "=", 0) == 0) s = s.substr(key.size() + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid fading model spec: '" + std::string(spec) + "'");
        }
    };
    if (head == "constant") {
        return rest.empty() ? constant() : constant(parse_value("value"));
    }
    if (head == "rayleigh") {
        if (!rest.empty()) throw std::invalid_argument("rayleigh takes no parameters");
        return rayleigh();
    }
    if (head == "rician") return rician(parse_value("K"));
    if (head == "nakagami") return nakagami(parse_value("m"));
    if (head == "empirical") {
        if (rest.empty()) throw std::invalid_argument("empirical spec needs a file path");
        try {
            return empirical_from_file(rest);
        } catch (const std::runtime_error& e) {
            throw std::invalid_argument(e.what());
        }
    }
    throw std::invalid_argument("unknown fading model: '" + std::string(spec) + "'");
}

FadingKind FadingModel::kind() const { return impl_->kind; }

const std::string& FadingModel::name() const { return impl_->name; }

double FadingModel::mean() const {
    return impl_->kind == FadingKind::Constant ? impl_->value : 1.0;
}

double FadingModel::constant_value() const {
    if (impl_->kind != FadingKind::Constant)
        throw UnsupportedOperation("constant_value: model is not constant");
    return impl_->value;
}

const std::vector<double>& FadingModel::empirical_values() const {
    if (impl_->kind != FadingKind::Empirical)
        throw UnsupportedOperation("empirical_values: model is not empirical");
    return impl_->samples;
}

double FadingModel::pdf(double a) const {
    if (a < 0.0) throw std::domain_error("pdf: a must be nonnegative");
    switch (impl_->kind) {
        case FadingKind::Rayleigh:
            return std::exp(-a);
        case FadingKind::Nakagami: {
            const double m = impl_->m;
            if (a == 0.0) {
                if (m > 1.0) return 0.0;
                if (m == 1.0) return 1.0;
                return std::numeric_limits<double>::infinity();
            }
            return std::exp(m * std::log(m) + (m - 1.0) * std::log(a) - m * a - std::lgamma(m));
        }
        case FadingKind::Rician: {
            const double k = impl_->k_factor;
            const double z = 2.0 * std::sqrt(k * (k + 1.0) * a);
            // exponent: z - K - (K+1)a = -(sqrt(K) - sqrt((K+1)a))^2
            const double d = std::sqrt(k) - std::sqrt((k + 1.0) * a);
            return (k + 1.0) * bessel_i0_scaled(z) * std::exp(-d * d);
        }
        case FadingKind::Constant:
            throw UnsupportedOperation("pdf: point-mass model has no density");
        case FadingKind::Empirical:
            throw UnsupportedOperation("pdf: empirical model has no density");
    }
    throw std::logic_error("unreachable");
}

double FadingModel::cdf(double a) const {
    if (a < 0.0) throw std::domain_error("cdf: a must be nonnegative");
    switch (impl_->kind) {
        case FadingKind::Constant:
            return a >= impl_->value ? 1.0 : 0.0;
        case FadingKind::Rayleigh:
            return -std::expm1(-a);
        case FadingKind::Nakagami:
            return regularized_gamma_p(impl_->m, impl_->m * a);
        case FadingKind::Rician: {
            const double k = impl_->k_factor;
            return 1.0 - marcum_q1(std::sqrt(2.0 * k), std::sqrt(2.0 * (k + 1.0) * a));
        }
        case FadingKind::Empirical: {
            const auto& s = impl_->samples;
            const auto it = std::upper_bound(s.begin(), s.end(), a);
            return static_cast<double>(it - s.begin()) / static_cast<double>(s.size());
        }
    }
    throw std::logic_error("unreachable");
}

double FadingModel::icdf(double t) const {
    if (!(t >= 0.0) || t >= 1.0) throw std::domain_error("icdf: t must lie in [0, 1)");
    switch (impl_->kind) {
        case FadingKind::Constant:
            return impl_->value;
        case FadingKind::Rayleigh:
            return -std::log1p(-t);
        case FadingKind::Nakagami:
            if (t == 0.0) return 0.0;
            return bisect_icdf([this](double a) { return cdf(a); }, t);
        case FadingKind::Rician:
            if (t == 0.0) return 0.0;
            return bisect_icdf([this](double a) { return cdf(a); }, t);
        case FadingKind::Empirical: {
            const auto& s = impl_->samples;
            const std::size_t n = s.size();
            if (t == 0.0) return s.front();
            // smallest sample with cdf >= t; cdf(s[i]) = (i+1)/n
            const std::size_t idx =
                static_cast<std::size_t>(std::ceil(t * static_cast<double>(n))) - 1;
            return s[std::min(idx, n - 1)];
        }
    }
    throw std::logic_error("unreachable");
}

double FadingModel::draw(void* rng_state) const {
    auto& g = *static_cast<std::mt19937_64*>(rng_state);
    switch (impl_->kind) {
        case FadingKind::Constant:
            return impl_->value;
        case FadingKind::Rayleigh:
            return -std::log1p(-uniform01(g));
        case FadingKind::Nakagami:
            return gamma_draw(g, impl_->m) / impl_->m;
        case FadingKind::Rician: {
            const double k = impl_->k_factor;
            const double nu = std::sqrt(k / (k + 1.0));
            const double s = std::sqrt(0.5 / (k + 1.0));
            const double x = nu + s * standard_normal(g);
            const double y = s * standard_normal(g);
            return x * x + y * y;
        }
        case FadingKind::Empirical: {
            const auto& samp = impl_->samples;
            const std::size_t idx = std::min(
                static_cast<std::size_t>(uniform01(g) * static_cast<double>(samp.size())),
                samp.size() - 1);
            return samp[idx];
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<double> FadingModel::sample(std::uint64_t seed, std::size_t n) const {
    if (n == 0) throw std::invalid_argument("sample: n must be positive");
    std::vector<double> out;
    out.reserve(n);
    for_each_sample(seed, n, [&](double a) { out.push_back(a); });
    return out;
}

Moments FadingModel::moments() const {
    switch (impl_->kind) {
        case FadingKind::Constant: {
            const double v = impl_->value;
            return {v * v, std::log(v), 1.0 / v};
        }
        case FadingKind::Rayleigh:
            return {2.0, -std::numbers::egamma, std::nullopt};
        case FadingKind::Nakagami: {
            const double m = impl_->m;
            std::optional<double> inv;
            if (m > 1.0) inv = m / (m - 1.0);
            return {(m + 1.0) / m, digamma(m) - std::log(m), inv};
        }
        case FadingKind::Rician: {
            const double k = impl_->k_factor;
            const double second = 1.0 + (1.0 + 2.0 * k) / ((k + 1.0) * (k + 1.0));
            // E[log A] = E_J[psi(J+1)] - log(K+1), J ~ Poisson(K)
            double w = std::exp(-k);
            double mean_log = 0.0;
            for (int j = 0; j < 10000; ++j) {
                if (j > 0) w *= k / j;
                mean_log += w * digamma(j + 1.0);
                if (static_cast<double>(j) > k && w < 1e-18) break;
            }
            mean_log -= std::log1p(k);
            // density at 0 is positive, so E[1/A] diverges for every finite K
            return {second, mean_log, std::nullopt};
        }
        case FadingKind::Empirical: {
            const auto& s = impl_->samples;
            const double n = static_cast<double>(s.size());
            double second = 0.0;
            double mean_log = 0.0;
            double mean_inv = 0.0;
            bool has_zero = false;
            for (double v : s) {
                second += v * v;
                if (v == 0.0) {
                    has_zero = true;
                } else {
                    mean_log += std::log(v);
                    mean_inv += 1.0 / v;
                }
            }
            if (has_zero) {
                return {second / n, -std::numeric_limits<double>::infinity(), std::nullopt};
            }
            return {second / n, mean_log / n, mean_inv / n};
        }
    }
    throw std::logic_error("unreachable");
}

std::shared_ptr<const std::vector<double>> FadingModel::icdf_at_gl_nodes(int n) const {
    {
        std::lock_guard<std::mutex> lock(impl_->cache_mutex);
        const auto it = impl_->gl_gain_cache.find(n);
        if (it != impl_->gl_gain_cache.end()) return it->second;
    }
    const QuadratureRule& rule = composite_gauss_legendre_01(n);
    auto gains = std::make_shared<std::vector<double>>();
    gains->reserve(rule.nodes.size());
    for (double u : rule.nodes) gains->push_back(icdf(u));
    std::lock_guard<std::mutex> lock(impl_->cache_mutex);
    return impl_->gl_gain_cache.emplace(n, std::move(gains)).first->second;
}

}  // namespace dpcfade
