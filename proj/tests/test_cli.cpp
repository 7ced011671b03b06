// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_app.hpp"

namespace cli = dpcfade::cli;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Csv {
    nlohmann::json meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream is(text);
    std::string line;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (csv.meta.is_null() && line.size() > 2)
                csv.meta = nlohmann::json::parse(line.substr(2));
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!have_header) {
            csv.columns = cells;
            have_header = true;
        } else {
            csv.rows.push_back(cells);
        }
    }
    return csv;
}

int column_index(const Csv& csv, const std::string& name) {
    for (std::size_t i = 0; i < csv.columns.size(); ++i)
        if (csv.columns[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace

TEST_CASE("gap sweep emits the expected columns and zero gap for a point mass") {
    const auto r = run_cli({"gap-sweep", "--fading", "constant", "--snr-db-range", "-5:5:1"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    CHECK(csv.columns == std::vector<std::string>{"snr_db", "rate_dpc", "capacity_bar", "gap",
                                                  "gap_bound"});
    REQUIRE(csv.rows.size() == 11);
    const int gap_col = column_index(csv, "gap");
    const int bound_col = column_index(csv, "gap_bound");
    for (const auto& row : csv.rows) {
        CHECK(std::abs(std::strtod(row[gap_col].c_str(), nullptr)) <= 1e-12);
        CHECK(std::abs(std::strtod(row[bound_col].c_str(), nullptr)) <= 1e-12);
    }

    SUBCASE("infinite beta restricts the output to the bound") {
        const auto inf = run_cli({"gap-sweep", "--fading", "rayleigh", "--beta", "inf",
                                  "--snr-db", "0"});
        REQUIRE(inf.code == 0);
        const Csv c2 = parse_csv(inf.out);
        CHECK(c2.columns == std::vector<std::string>{"snr_db", "gap_bound"});
        const double v = std::strtod(c2.rows[0][1].c_str(), nullptr);
        CHECK(std::abs(v - 0.383616) <= 1e-3);
    }
}

TEST_CASE("cdf command reproduces the analytic curves") {
    const auto r = run_cli({"cdf"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.columns.size() == 4);
    CHECK(csv.columns[0] == "rate");
    CHECK(csv.columns[3] == "cdf_reference");
    REQUIRE(csv.rows.size() == 401);

    // the alpha-curves dominate the reference everywhere
    for (const auto& row : csv.rows) {
        const double a03 = std::strtod(row[1].c_str(), nullptr);
        const double a07 = std::strtod(row[2].c_str(), nullptr);
        const double ref = std::strtod(row[3].c_str(), nullptr);
        CHECK(a03 >= ref - 1e-12);
        CHECK(a07 >= ref - 1e-12);
    }
    // first row: the reference has no mass at zero rate, the clamped curves do
    CHECK(std::strtod(csv.rows[0][3].c_str(), nullptr) == 0.0);
    CHECK(std::strtod(csv.rows[0][1].c_str(), nullptr) > 0.0);
}

TEST_CASE("outage command reports the optimum in the metadata") {
    const auto r = run_cli({"outage", "--rate", "0.6931471805599453", "--alphas", "0.5"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    CHECK(csv.meta["alpha_star"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(csv.meta["min_outage"].get<double>() ==
          doctest::Approx(0.095162581964040427).epsilon(1e-12));
    REQUIRE(csv.rows.size() == 1);
    CHECK(std::strtod(csv.rows[0][1].c_str(), nullptr) ==
          doctest::Approx(0.095162581964040427).epsilon(1e-12));
}

TEST_CASE("moments command handles divergent inverse moments") {
    const auto r = run_cli({"moments", "--fading", "rayleigh"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.rows[0][column_index(csv, "mean_inverse")] == "divergent");
    CHECK(std::strtod(csv.rows[0][column_index(csv, "second_moment")].c_str(), nullptr) == 2.0);
}

TEST_CASE("region command") {
    const auto r = run_cli({"region", "--user", "rayleigh@0.5", "--user", "rayleigh@0.1",
                            "--snr-db", "10", "--steps", "65", "--verify-dominance"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    CHECK(column_index(csv, "R_1") >= 0);
    CHECK(column_index(csv, "R_2") >= 0);
    CHECK(csv.meta["dominance"]["dominated"].get<bool>());
    CHECK(csv.meta["dominance"].contains("witness_strict"));
    bool has_td = false, has_dpc = false;
    for (const auto& row : csv.rows) {
        if (row[0] == "td") has_td = true;
        if (row[0] == "dpc") has_dpc = true;
    }
    CHECK(has_td);
    CHECK(has_dpc);

    SUBCASE("time division needs exactly two users") {
        const auto bad = run_cli({"region", "--user", "rayleigh@0.5", "--scheme", "td"});
        CHECK(bad.code == 2);
    }
    SUBCASE("single-user region is one point") {
        const auto one = run_cli({"region", "--user", "rayleigh@0.5", "--scheme", "dpc",
                                  "--steps", "16"});
        REQUIRE(one.code == 0);
        const Csv c = parse_csv(one.out);
        REQUIRE(c.rows.size() == 1);
        const double r1 = std::strtod(c.rows[0][1].c_str(), nullptr);
        CHECK(r1 == doctest::Approx(std::log1p(std::log(2.0) * 10.0)).epsilon(1e-12));
    }
}

TEST_CASE("asympt-check emits fit rows") {
    const auto r = run_cli({"asympt-check", "--fading", "nakagami:m=2", "--beta", "1"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    const int kind = column_index(csv, "kind");
    const int fitted = column_index(csv, "fitted_coeff");
    const int analytic = column_index(csv, "analytic_coeff");
    int fit_rows = 0;
    for (const auto& row : csv.rows) {
        if (row[kind] == "fit") {
            ++fit_rows;
            const double f = std::strtod(row[fitted].c_str(), nullptr);
            const double a = std::strtod(row[analytic].c_str(), nullptr);
            CHECK(std::abs(f - a) <= 0.05 * std::abs(a));
        }
    }
    CHECK(fit_rows == 2);

    SUBCASE("divergent high-SNR coefficient is marked") {
        const auto ray = run_cli({"asympt-check", "--fading", "rayleigh", "--regime", "high"});
        REQUIRE(ray.code == 0);
        const Csv c = parse_csv(ray.out);
        const int note = column_index(c, "note");
        bool marked = false;
        for (const auto& row : c.rows)
            if (row[note] == "divergent") marked = true;
        CHECK(marked);
        // and the bound column still demonstrates the vanishing gap
        const int gb = column_index(c, "gap_bound");
        double last = 1.0;
        for (const auto& row : c.rows)
            if (!row[gb].empty()) last = std::strtod(row[gb].c_str(), nullptr);
        CHECK(last < 0.02);
    }
}

TEST_CASE("bound columns order by the fading figure") {
    const auto m2 = run_cli({"gap-sweep", "--fading", "nakagami:m=2", "--beta", "inf",
                             "--snr-db-range", "-10:10:2"});
    const auto m4 = run_cli({"gap-sweep", "--fading", "nakagami:m=4", "--beta", "inf",
                             "--snr-db-range", "-10:10:2"});
    REQUIRE(m2.code == 0);
    REQUIRE(m4.code == 0);
    const Csv a = parse_csv(m2.out);
    const Csv b = parse_csv(m4.out);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const double v2 = std::strtod(a.rows[i][1].c_str(), nullptr);
        const double v4 = std::strtod(b.rows[i][1].c_str(), nullptr);
        CHECK(v4 <= v2 + 1e-12);
    }
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"gap-sweep", "--fading", "weibull"}).code == 2);
    CHECK(run_cli({"gap-sweep", "--fading", "nakagami:m=0.3"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"cdf", "--beta", "inf"}).code == 2);
    CHECK(run_cli({"cdf", "--alphas", "1.5"}).code == 2);
    CHECK(run_cli({"moments", "--fading", "empirical:/nonexistent/file.txt"}).code == 2);
    CHECK(run_cli({"outage", "--rate", "1", "--alphas", "-0.2"}).code == 2);
}

TEST_CASE("reruns are byte identical") {
    const std::vector<std::vector<std::string>> commands = {
        {"gap-sweep", "--fading", "rayleigh", "--snr-db-range", "-5:5:2.5", "--engine",
         "montecarlo", "--samples", "20000", "--seed", "7"},
        {"cdf", "--rate-max", "2", "--rate-step", "0.05"},
        {"region", "--user", "rayleigh@0.5", "--user", "rayleigh@0.1", "--steps", "33",
         "--verify-dominance"},
        {"moments", "--fading", "rician:K=2"},
        {"outage", "--rate", "1.2", "--alpha-steps", "41"},
    };
    for (const auto& cmd : commands) {
        const auto a = run_cli(cmd);
        const auto b = run_cli(cmd);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("csv numbers round trip at 17 significant digits") {
    const auto r = run_cli({"gap-sweep", "--fading", "rayleigh", "--snr-db", "3"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    for (const auto& row : csv.rows) {
        for (const auto& cell : row) {
            if (cell.empty()) continue;
            const double v = std::strtod(cell.c_str(), nullptr);
            CHECK(cli::format_double(v) == cell);
        }
    }
}

TEST_CASE("json format mirrors the csv content") {
    const auto r = run_cli({"moments", "--fading", "nakagami:m=2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["meta"]["command"] == "moments");
    CHECK(j["columns"].size() == 5);
    CHECK(j["rows"].size() == 1);
    CHECK(j["rows"][0][2].get<double>() == 1.5);
}

TEST_CASE("bits flag rescales rate columns") {
    const auto nats = run_cli({"gap-sweep", "--fading", "constant", "--snr-db", "0"});
    const auto bits = run_cli({"gap-sweep", "--fading", "constant", "--snr-db", "0", "--bits"});
    const Csv a = parse_csv(nats.out);
    const Csv b = parse_csv(bits.out);
    const int col = column_index(a, "rate_dpc");
    const double vn = std::strtod(a.rows[0][col].c_str(), nullptr);
    const double vb = std::strtod(b.rows[0][col].c_str(), nullptr);
    CHECK(vn == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(vb == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("config file values are applied and flags override them") {
    const auto path = std::filesystem::temp_directory_path() / "dpcfade_cli_cfg.ini";
    {
        std::ofstream f(path);
        f << "[moments]\nfading=nakagami:m=2\n";
    }
    const auto from_file = run_cli({"moments", "--config", path.string()});
    REQUIRE(from_file.code == 0);
    CHECK(parse_csv(from_file.out).rows[0][0] == "nakagami:m=2");

    const auto overridden =
        run_cli({"moments", "--config", path.string(), "--fading", "rician:K=1"});
    REQUIRE(overridden.code == 0);
    CHECK(parse_csv(overridden.out).rows[0][0] == "rician:K=1");
    std::filesystem::remove(path);
}

TEST_CASE("output lands in the requested file") {
    const auto path = std::filesystem::temp_directory_path() / "dpcfade_cli_out.csv";
    const auto r = run_cli({"moments", "--fading", "constant", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str().find("second_moment") != std::string::npos);
    std::filesystem::remove(path);
}
