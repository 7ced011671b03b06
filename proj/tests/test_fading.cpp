// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "dpcfade/errors.hpp"
#include "dpcfade/fading.hpp"
#include "test_oracles.hpp"

using namespace dpcfade;

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("pdf closed forms and examples") {
    CHECK(FadingModel::rayleigh().pdf(0.0) == 1.0);
    CHECK(close(FadingModel::nakagami(1.0).pdf(1.0), std::exp(-1.0), 1e-15));
    // Nakagami m = 1 is the Rayleigh power law
    const auto nak1 = FadingModel::nakagami(1.0);
    const auto ray = FadingModel::rayleigh();
    for (double a : {0.1, 0.5, 1.0, 2.0, 5.0}) CHECK(close(nak1.pdf(a), ray.pdf(a), 1e-14));

    CHECK_THROWS_AS((void)ray.pdf(-0.1), std::domain_error);
    CHECK_THROWS_AS((void)FadingModel::constant().pdf(1.0), UnsupportedOperation);
    CHECK_THROWS_AS((void)FadingModel::empirical({1.0, 2.0}).pdf(1.0), UnsupportedOperation);
}

TEST_CASE("Rician pdf against a direct Gaussian sampling histogram") {
    const auto model = FadingModel::rician(1.0);
    // value fixed analytically: 2 e^{-2} I0(2)
    CHECK(close(model.pdf(0.5), 0.61701664510734208, 1e-10));

    const std::size_t n = 10'000'000;
    const double lo = 0.495, hi = 0.505;
    oracles::Sampler s(424242);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = s.rician_power(1.0);
        if (a >= lo && a < hi) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    const double density = p / (hi - lo);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n)) / (hi - lo);
    CHECK(std::abs(model.pdf(0.5) - density) <= 3.0 * se + 1e-6);
}

TEST_CASE("cdf examples") {
    CHECK(close(FadingModel::rayleigh().cdf(std::log(2.0)), 0.5, 1e-15));
    CHECK(FadingModel::constant().cdf(1.0) == 1.0);
    CHECK(FadingModel::constant().cdf(0.999) == 0.0);
    CHECK_THROWS_AS((void)FadingModel::rayleigh().cdf(-1e-9), std::domain_error);

    SUBCASE("Nakagami m=2 against a sum-of-exponentials sampling oracle") {
        const auto model = FadingModel::nakagami(2.0);
        CHECK(close(model.cdf(1.0), 0.59399415029016156, 1e-13));
        const std::size_t n = 10'000'000;
        oracles::Sampler s(99001);
        std::size_t below = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (s.gamma_integer(2) <= 1.0) ++below;
        const double frac = static_cast<double>(below) / static_cast<double>(n);
        const double se = std::sqrt(frac * (1.0 - frac) / static_cast<double>(n));
        CHECK(std::abs(model.cdf(1.0) - frac) <= 3.0 * se);
    }
}

TEST_CASE("icdf examples and the generalized-inverse convention") {
    CHECK(close(FadingModel::rayleigh().icdf(0.5), std::log(2.0), 1e-12));
    CHECK(FadingModel::constant().icdf(0.3) == 1.0);
    CHECK_THROWS_AS((void)FadingModel::rayleigh().icdf(1.0), std::domain_error);
    CHECK_THROWS_AS((void)FadingModel::rayleigh().icdf(-0.1), std::domain_error);

    SUBCASE("Nakagami m=4 at t=0.9: residual and sampled percentile") {
        const auto model = FadingModel::nakagami(4.0);
        const double x = model.icdf(0.9);
        CHECK(std::abs(model.cdf(x) - 0.9) <= 1e-9);

        const std::size_t n = 10'000'000;
        oracles::Sampler s(5150);
        std::vector<double> draws;
        draws.reserve(n);
        for (std::size_t i = 0; i < n; ++i) draws.push_back(s.gamma_integer(4));
        std::nth_element(draws.begin(), draws.begin() + static_cast<long>(0.9 * n), draws.end());
        const double sampled = draws[static_cast<std::size_t>(0.9 * n)];
        // percentile standard error: sqrt(t(1-t)/n) / pdf
        const double se = std::sqrt(0.9 * 0.1 / static_cast<double>(n)) / model.pdf(x);
        CHECK(std::abs(x - sampled) <= 4.0 * se + 1e-6);
    }

    SUBCASE("generalized inverse on a grid") {
        for (const auto& model :
             {FadingModel::rayleigh(), FadingModel::rician(1.0), FadingModel::nakagami(2.0)}) {
            for (double t : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
                const double x = model.icdf(t);
                CHECK(model.cdf(x) >= t - 1e-9);
                const double delta = 1e-4 * (1.0 + x);
                if (x > delta) CHECK(model.cdf(x - delta) < t + 1e-9);
            }
        }
    }

    SUBCASE("icdf-cdf round trip") {
        for (const auto& model : {FadingModel::rayleigh(), FadingModel::rician(1.0),
                                  FadingModel::nakagami(0.5), FadingModel::nakagami(2.0)}) {
            for (double a = 0.05; a <= 10.0; a += 0.35) {
                const double t = model.cdf(a);
                if (t <= 0.0 || t >= 1.0) continue;
                CHECK(std::abs(model.icdf(t) - a) <= 1e-6 * (1.0 + a));
            }
        }
    }
}

TEST_CASE("family cross-checks") {
    const auto ray = FadingModel::rayleigh();
    SUBCASE("Rician K=0 equals Rayleigh") {
        const auto ric0 = FadingModel::rician(0.0);
        for (double a = 0.0; a <= 10.0; a += 0.25) CHECK(close(ric0.cdf(a), ray.cdf(a), 1e-9));
    }
    SUBCASE("Nakagami m=1 equals Rayleigh") {
        const auto nak1 = FadingModel::nakagami(1.0);
        for (double a = 0.0; a <= 10.0; a += 0.25) CHECK(close(nak1.cdf(a), ray.cdf(a), 1e-9));
    }
    SUBCASE("Nakagami below m=1/2 is rejected") {
        CHECK_THROWS_AS(FadingModel::nakagami(0.49), std::domain_error);
        CHECK_THROWS_AS(FadingModel::rician(-0.1), std::domain_error);
    }
}

TEST_CASE("unit mean by raw-domain quadrature") {
    for (const auto& model : {FadingModel::rayleigh(), FadingModel::rician(0.5),
                              FadingModel::rician(2.0), FadingModel::rician(10.0),
                              FadingModel::nakagami(0.5), FadingModel::nakagami(1.0),
                              FadingModel::nakagami(2.0), FadingModel::nakagami(8.0)}) {
        const double mean = oracles::pdf_moment([&](double a) { return model.pdf(a); },
                                                [](double a) { return a; }, 80.0);
        CHECK(std::abs(mean - 1.0) <= 1e-6);
    }
}

TEST_CASE("sampling") {
    SUBCASE("constant model") {
        const auto s = FadingModel::constant().sample(7, 3);
        REQUIRE(s.size() == 3);
        for (double v : s) CHECK(v == 1.0);
    }
    SUBCASE("deterministic for fixed seed") {
        const auto a = FadingModel::rician(2.0).sample(123, 1000);
        const auto b = FadingModel::rician(2.0).sample(123, 1000);
        CHECK(a == b);
        const auto c = FadingModel::rician(2.0).sample(124, 1000);
        CHECK(a != c);
    }
    SUBCASE("unit sample means at one million draws") {
        for (const auto& model :
             {FadingModel::rayleigh(), FadingModel::rician(2.0), FadingModel::nakagami(0.5)}) {
            const auto draws = model.sample(2024, 1'000'000);
            double mean = 0.0;
            for (double v : draws) mean += v;
            mean /= static_cast<double>(draws.size());
            CHECK(std::abs(mean - 1.0) <= 0.004);
        }
    }
    SUBCASE("Kolmogorov-Smirnov against the model cdf at the 1% level") {
        for (const auto& model : {FadingModel::rayleigh(), FadingModel::rician(2.0),
                                  FadingModel::nakagami(4.0), FadingModel::nakagami(0.5)}) {
            const std::size_t n = 100'000;
            const double d = oracles::ks_statistic(model.sample(31337, n),
                                                   [&](double a) { return model.cdf(a); });
            CHECK(d < 1.6276 / std::sqrt(static_cast<double>(n)));
        }
    }
    CHECK_THROWS_AS(FadingModel::rayleigh().sample(1, 0), std::invalid_argument);
}

TEST_CASE("moments") {
    SUBCASE("Rayleigh") {
        const Moments m = FadingModel::rayleigh().moments();
        CHECK(close(m.second_moment, 2.0, 1e-12));
        CHECK(close(m.mean_log, -std::numbers::egamma, 1e-12));
        CHECK(!m.mean_inverse.has_value());
    }
    SUBCASE("Constant") {
        const Moments m = FadingModel::constant().moments();
        CHECK(m.second_moment == 1.0);
        CHECK(m.mean_log == 0.0);
        CHECK(m.mean_inverse == 1.0);
    }
    SUBCASE("Nakagami m=2: Gamma identities") {
        const Moments m = FadingModel::nakagami(2.0).moments();
        CHECK(close(m.second_moment, 1.5, 1e-12));
        CHECK(close(m.mean_log, -0.27036284546147817, 1e-12));
        REQUIRE(m.mean_inverse.has_value());
        CHECK(close(*m.mean_inverse, 2.0, 1e-12));
        CHECK(!FadingModel::nakagami(1.0).moments().mean_inverse.has_value());
        CHECK(!FadingModel::rician(3.0).moments().mean_inverse.has_value());
    }
    SUBCASE("verified by raw-domain quadrature") {
        for (const auto& model :
             {FadingModel::rayleigh(), FadingModel::nakagami(2.0), FadingModel::rician(1.0),
              FadingModel::rician(2.0), FadingModel::nakagami(0.5)}) {
            const Moments m = model.moments();
            const double second = oracles::pdf_moment([&](double a) { return model.pdf(a); },
                                                      [](double a) { return a * a; }, 120.0);
            CHECK(std::abs(m.second_moment - second) <= 1e-6);
        }
        // smooth log-moment integrands admit the Simpson cross-check directly
        for (const auto& model :
             {FadingModel::rayleigh(), FadingModel::nakagami(2.0), FadingModel::rician(2.0)}) {
            const double mean_log = oracles::pdf_moment(
                [&](double a) { return model.pdf(a); },
                [](double a) { return std::log(a); }, 120.0);
            CHECK(std::abs(model.moments().mean_log - mean_log) <= 1e-6);
        }
    }
    SUBCASE("Rician and half-integer Nakagami log moments against fixed references") {
        CHECK(close(FadingModel::rician(1.0).moments().mean_log, -0.473763246164425, 1e-12));
        CHECK(close(FadingModel::rician(2.0).moments().mean_log, -0.3565645974001033, 1e-12));
        CHECK(close(FadingModel::rician(10.0).moments().mean_log, -0.09530602283539517, 1e-12));
        // psi(1/2) - log(1/2)
        CHECK(close(FadingModel::nakagami(0.5).moments().mean_log, -1.2703628454614782, 1e-12));
    }
}

TEST_CASE("empirical models") {
    const auto model = FadingModel::empirical({1.0, 2.0, 3.0, 4.0});  // normalized to mean 1
    SUBCASE("normalization and cdf steps") {
        CHECK(model.mean() == 1.0);
        CHECK(close(model.cdf(0.4), 0.25, 1e-15));
        CHECK(close(model.cdf(0.39999), 0.0, 1e-15));
        CHECK(close(model.cdf(1.2), 0.75, 1e-15));
        CHECK(model.cdf(1.6) == 1.0);
    }
    SUBCASE("generalized inverse hits the order statistics") {
        CHECK(model.icdf(0.0) == doctest::Approx(0.4));
        CHECK(model.icdf(0.25) == doctest::Approx(0.4));
        CHECK(model.icdf(0.2500001) == doctest::Approx(0.8));
        CHECK(model.icdf(0.75) == doctest::Approx(1.2));
        CHECK(model.icdf(0.99) == doctest::Approx(1.6));
    }
    SUBCASE("bootstrap sampling stays inside the atom set") {
        for (double v : model.sample(5, 1000)) {
            CHECK((close(v, 0.4, 1e-12) || close(v, 0.8, 1e-12) || close(v, 1.2, 1e-12) ||
                   close(v, 1.6, 1e-12)));
        }
    }
    SUBCASE("moments from the atoms") {
        const Moments m = model.moments();
        CHECK(close(m.second_moment, (0.16 + 0.64 + 1.44 + 2.56) / 4.0, 1e-15));
        REQUIRE(m.mean_inverse.has_value());
        CHECK(close(*m.mean_inverse, (1 / 0.4 + 1 / 0.8 + 1 / 1.2 + 1 / 1.6) / 4.0, 1e-14));
    }
    SUBCASE("a zero atom flags divergent inverse moments") {
        const auto z = FadingModel::empirical({0.0, 1.0, 2.0});
        CHECK(!z.moments().mean_inverse.has_value());
    }
    CHECK_THROWS_AS(FadingModel::empirical({}), std::invalid_argument);
    CHECK_THROWS_AS(FadingModel::empirical({-1.0, 2.0}), std::domain_error);
}

TEST_CASE("empirical file loading") {
    SUBCASE("blank lines are ignored") {
        const auto path = write_temp("dpcfade_emp_ok.txt", "1.0\n\n2.0\n  \n3.0\n");
        const auto model = FadingModel::empirical_from_file(path.string());
        CHECK(model.empirical_values().size() == 3);
        std::filesystem::remove(path);
    }
    SUBCASE("parse failure reports the line number") {
        const auto path = write_temp("dpcfade_emp_bad.txt", "1.0\n2.0\nbogus\n4.0\n");
        try {
            (void)FadingModel::empirical_from_file(path.string());
            FAIL("expected a parse error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
        std::filesystem::remove(path);
    }
    SUBCASE("negative values are rejected with their line") {
        const auto path = write_temp("dpcfade_emp_neg.txt", "1.0\n-2.0\n");
        CHECK_THROWS_AS((void)FadingModel::empirical_from_file(path.string()), std::runtime_error);
        std::filesystem::remove(path);
    }
    CHECK_THROWS_AS((void)FadingModel::empirical_from_file("/nonexistent/x.txt"),
                    std::runtime_error);
}

TEST_CASE("model spec parsing") {
    CHECK(FadingModel::parse("rayleigh").kind() == FadingKind::Rayleigh);
    CHECK(FadingModel::parse("constant").kind() == FadingKind::Constant);
    CHECK(FadingModel::parse("rician:K=2").name() == "rician:K=2");
    CHECK(FadingModel::parse("nakagami:m=4").name() == "nakagami:m=4");
    CHECK_THROWS_AS(FadingModel::parse("weibull"), std::invalid_argument);
    CHECK_THROWS_AS(FadingModel::parse("rician:K=bad"), std::invalid_argument);
    CHECK_THROWS_AS(FadingModel::parse("rayleigh:2"), std::invalid_argument);
}
