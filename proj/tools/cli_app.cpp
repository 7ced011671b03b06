// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dpcfade/broadcast.hpp"
#include "dpcfade/errors.hpp"
#include "dpcfade/ergodic.hpp"
#include "dpcfade/expectation.hpp"
#include "dpcfade/fading.hpp"
#include "dpcfade/quasistatic.hpp"

namespace dpcfade::cli {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kNatsToBits = 1.4426950408889634;  // 1/ln 2

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

struct EngineOpts {
    std::string kind = "quadrature";
    int nodes = ExpectationEngine::kDefaultNodes;
    std::size_t samples = 200000;
    std::uint64_t seed = 12345;

    ExpectationEngine make() const {
        if (kind == "quadrature") return ExpectationEngine::quadrature(nodes);
        if (kind == "montecarlo") return ExpectationEngine::monte_carlo(samples, seed);
        throw std::invalid_argument("unknown engine kind: " + kind);
    }
    nlohmann::json echo() const {
        return {{"kind", kind}, {"nodes", nodes}, {"samples", samples}, {"seed", seed}};
    }
};

struct OutputOpts {
    std::string path;  // empty = stdout
    std::string format = "csv";
    bool bits = false;
};

std::vector<double> parse_range(const std::string& spec) {
    // "start:stop:step" in dB
    double start = 0.0, stop = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0.0))
        throw std::invalid_argument("invalid range spec '" + spec + "', expected start:stop:step");
    std::vector<double> grid;
    for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    return grid;
}

double parse_beta(const std::string& s) {
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !(v >= 0.0))
        throw std::invalid_argument("invalid beta '" + s + "'");
    return v;
}

double maybe_bits(double nats, bool bits) { return bits ? nats * kNatsToBits : nats; }

// ---------------------------------------------------------------------------
// experiment runners

struct GapSweepArgs {
    std::string fading = "rayleigh";
    std::string beta = "1";
    std::string range = "-20:30:0.25";
    std::optional<double> snr_db;
    EngineOpts engine;
    bool bits = false;
};

Table run_gap_sweep(const GapSweepArgs& args) {
    const FadingModel model = FadingModel::parse(args.fading);
    const double beta = parse_beta(args.beta);
    const bool beta_inf = std::isinf(beta);
    const ExpectationEngine engine = args.engine.make();
    std::vector<double> grid_db =
        args.snr_db ? std::vector<double>{*args.snr_db} : parse_range(args.range);

    Table t;
    t.meta = {{"command", "gap-sweep"}, {"fading", model.name()},   {"beta", args.beta},
              {"snr_db", grid_db},      {"engine", args.engine.echo()}, {"bits", args.bits},
              {"version", kVersion}};
    if (beta_inf) {
        t.columns = {"snr_db", "gap_bound"};
        for (double db : grid_db) {
            const double gb = gap_bound(db_to_linear(db), model, engine);
            t.rows.push_back({Cell{db}, Cell{maybe_bits(gb, args.bits)}});
        }
        return t;
    }
    t.columns = {"snr_db", "rate_dpc", "capacity_bar", "gap", "gap_bound"};
    for (double db : grid_db) {
        const ChannelConfig cfg(db_to_linear(db), beta);
        const double r = rate_dpc(cfg, model, engine);
        const double c = capacity_known_interference(cfg, model, engine);
        const double gb = gap_bound(cfg.snr, model, engine);
        t.rows.push_back({Cell{db}, Cell{maybe_bits(r, args.bits)}, Cell{maybe_bits(c, args.bits)},
                          Cell{maybe_bits(c - r, args.bits)}, Cell{maybe_bits(gb, args.bits)}});
    }
    return t;
}

struct CdfArgs {
    std::string fading = "rayleigh";
    double snr_db = 10.0;
    std::string beta = "1";
    std::vector<double> alphas{0.3, 0.7};
    double rate_max = 4.0;
    double rate_step = 0.01;
    bool bits = false;
};

void require_unit_interval(const std::vector<double>& alphas) {
    for (double a : alphas)
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("alpha values must lie in [0, 1]");
}

Table run_cdf(const CdfArgs& args) {
    const FadingModel model = FadingModel::parse(args.fading);
    const double beta = parse_beta(args.beta);
    if (std::isinf(beta)) throw std::invalid_argument("cdf requires a finite beta");
    require_unit_interval(args.alphas);
    const ChannelConfig cfg(db_to_linear(args.snr_db), beta);
    const ChannelConfig reference(cfg.snr, 0.0);

    std::vector<double> grid;
    for (double r = 0.0; r <= args.rate_max + 1e-12; r += args.rate_step) grid.push_back(r);

    Table t;
    t.meta = {{"command", "cdf"},     {"fading", model.name()}, {"beta", args.beta},
              {"snr_db", args.snr_db}, {"alphas", args.alphas},  {"rate_max", args.rate_max},
              {"rate_step", args.rate_step}, {"bits", args.bits}, {"version", kVersion}};
    t.columns.push_back("rate");
    for (double a : args.alphas) t.columns.push_back("cdf_alpha_" + format_double(a));
    t.columns.push_back("cdf_reference");

    std::vector<std::vector<RateCdfPoint>> curves;
    for (double a : args.alphas) curves.push_back(rate_cdf(cfg, a, model, grid));
    // beta = 0 gives the no-interference reference curve; alpha is immaterial
    const auto ref = rate_cdf(reference, 0.0, model, grid);

    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<Cell> row;
        row.push_back(Cell{maybe_bits(grid[i], args.bits)});
        for (const auto& curve : curves) row.push_back(Cell{curve[i].probability});
        row.push_back(Cell{ref[i].probability});
        t.rows.push_back(std::move(row));
    }
    return t;
}

struct OutageArgs {
    std::string fading = "rayleigh";
    double snr_db = 10.0;
    std::string beta = "1";
    double rate = 0.6931471805599453;
    std::vector<double> alphas;  // empty = uniform grid
    int alpha_steps = 201;
};

Table run_outage(const OutageArgs& args) {
    const FadingModel model = FadingModel::parse(args.fading);
    const double beta = parse_beta(args.beta);
    if (std::isinf(beta)) throw std::invalid_argument("outage requires a finite beta");
    const ChannelConfig cfg(db_to_linear(args.snr_db), beta);
    const OutageSpec spec(args.rate);
    require_unit_interval(args.alphas);

    std::vector<double> alphas = args.alphas;
    if (alphas.empty()) {
        for (int i = 0; i < args.alpha_steps; ++i)
            alphas.push_back(static_cast<double>(i) / (args.alpha_steps - 1));
    }

    Table t;
    t.meta = {{"command", "outage"},   {"fading", model.name()}, {"beta", args.beta},
              {"snr_db", args.snr_db}, {"rate", args.rate},      {"version", kVersion},
              {"alpha_star", optimal_alpha_outage(spec)},
              {"min_outage", min_outage_probability(cfg, spec, model)}};
    t.columns = {"alpha", "outage"};
    for (double a : alphas)
        t.rows.push_back({Cell{a}, Cell{outage_probability(cfg, a, spec, model)}});
    return t;
}

Table run_moments(const std::string& fading) {
    const FadingModel model = FadingModel::parse(fading);
    const Moments m = model.moments();
    Table t;
    t.meta = {{"command", "moments"}, {"fading", model.name()}, {"version", kVersion}};
    t.columns = {"model", "mean", "second_moment", "mean_log", "mean_inverse"};
    std::vector<Cell> row{Cell{model.name()}, Cell{model.mean()}, Cell{m.second_moment},
                          Cell{m.mean_log}};
    if (m.mean_inverse) {
        row.push_back(Cell{*m.mean_inverse});
    } else {
        row.push_back(Cell{std::string("divergent")});
    }
    t.rows.push_back(std::move(row));
    return t;
}

struct RegionArgs {
    std::vector<std::string> users;  // "spec@eps"
    double snr_db = 10.0;
    std::string scheme = "both";
    int steps = 0;  // 0 = pick by user count: 512 for K <= 2, 48 above
    bool verify = false;
    bool preserve_order = false;
    bool bits = false;
};

BroadcastUser parse_user(const std::string& s) {
    const auto at = s.rfind('@');
    if (at == std::string::npos)
        throw std::invalid_argument("user spec '" + s + "' must look like <fading>@<eps>");
    const double eps = std::stod(s.substr(at + 1));
    return {FadingModel::parse(s.substr(0, at)), eps};
}

Table run_region(const RegionArgs& args) {
    if (args.users.empty()) throw std::invalid_argument("region needs at least one --user");
    std::vector<BroadcastUser> users;
    for (const auto& s : args.users) users.push_back(parse_user(s));
    const std::size_t k = users.size();
    const BroadcastConfig cfg(db_to_linear(args.snr_db), std::move(users), args.preserve_order);

    const int steps = args.steps > 0 ? args.steps : (k <= 2 ? 512 : 48);
    const bool want_td = args.scheme == "td" || args.scheme == "both";
    const bool want_dpc = args.scheme == "dpc" || args.scheme == "both";
    if (!want_td && !want_dpc) throw std::invalid_argument("scheme must be td, dpc or both");
    if (want_td && k != 2) throw std::invalid_argument("time division requires exactly 2 users");

    Table t;
    nlohmann::json user_echo = nlohmann::json::array();
    for (std::size_t i = 0; i < k; ++i)
        user_echo.push_back({{"fading", cfg.users()[i].model.name()},
                             {"eps", cfg.users()[i].target_eps},
                             {"gain", cfg.gains()[i]}});
    t.meta = {{"command", "region"}, {"snr_db", args.snr_db}, {"scheme", args.scheme},
              {"steps", steps}, {"users", user_echo},   {"bits", args.bits},
              {"version", kVersion}};

    t.columns = {"scheme"};
    for (std::size_t i = 1; i <= k; ++i) t.columns.push_back("R_" + std::to_string(i));
    t.columns.insert(t.columns.end(), {"mu", "eta1", "eta2"});
    for (std::size_t i = 1; i <= k; ++i) t.columns.push_back("gamma_" + std::to_string(i));

    auto emit = [&](const char* scheme, const RegionBoundary& boundary) {
        for (const auto& p : boundary.points) {
            std::vector<Cell> row{Cell{std::string(scheme)}};
            for (double r : p.rates) row.push_back(Cell{maybe_bits(r, args.bits)});
            if (const auto* td = std::get_if<TdParams>(&p.param)) {
                row.insert(row.end(), {Cell{td->mu}, Cell{td->eta1}, Cell{td->eta2}});
                for (std::size_t i = 0; i < k; ++i) row.push_back(Cell{});
            } else {
                const auto& pa = std::get<PowerAllocation>(p.param);
                row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
                for (double gmm : pa.gamma) row.push_back(Cell{gmm});
            }
            t.rows.push_back(std::move(row));
        }
    };

    std::optional<RegionBoundary> td_boundary;
    if (want_td) {
        td_boundary = td_region(cfg, steps, steps);
        emit("td", *td_boundary);
    }
    if (want_dpc) emit("dpc", dpc_region(cfg, steps));

    if (args.verify) {
        if (!td_boundary) td_boundary = td_region(cfg, steps, steps);
        const DominanceReport rep = verify_dominance(cfg, *td_boundary, steps + 1);
        nlohmann::json dom{{"dominated", rep.dominated}};
        std::string line = std::string("dominance: dominated=") + (rep.dominated ? "true" : "false");
        if (rep.witness_strict) {
            dom["witness_strict"] = {(*rep.witness_strict)[0], (*rep.witness_strict)[1]};
            line += " witness_strict=(" + format_double((*rep.witness_strict)[0]) + "," +
                    format_double((*rep.witness_strict)[1]) + ")";
        }
        t.meta["dominance"] = dom;
        t.trailing_comments.push_back(line);
    }
    return t;
}

struct AsymptArgs {
    std::string fading = "rayleigh";
    std::string beta = "1";
    std::string regime = "both";
    EngineOpts engine;
};

Table run_asympt_check(const AsymptArgs& args) {
    const FadingModel model = FadingModel::parse(args.fading);
    const double beta = parse_beta(args.beta);
    if (std::isinf(beta)) throw std::invalid_argument("asympt-check requires a finite beta");
    const ExpectationEngine engine = args.engine.make();
    const bool low = args.regime == "low" || args.regime == "both";
    const bool high = args.regime == "high" || args.regime == "both";
    if (!low && !high) throw std::invalid_argument("regime must be low, high or both");

    Table t;
    t.meta = {{"command", "asympt-check"}, {"fading", model.name()}, {"beta", args.beta},
              {"regime", args.regime},     {"engine", args.engine.echo()}, {"version", kVersion}};
    t.columns = {"kind",      "regime",       "snr",          "numeric_rate", "expansion_value",
                 "abs_error", "gap_bound",    "fitted_coeff", "analytic_coeff", "note"};

    auto rate_at = [&](double rho) {
        return rate_dpc(ChannelConfig(rho, beta), model, engine);
    };

    if (low) {
        const LowSnrExpansion ex = expand_low_snr(ChannelConfig(1.0, beta), model);
        const std::vector<double> grid{1e-3, 5e-4, 2.5e-4};
        std::vector<double> curvature;  // 2 (R - rho) / rho^2 estimates R''(0)
        for (double rho : grid) {
            const double r = rate_at(rho);
            const double approx = rho + 0.5 * ex.quadratic_coeff_rate * rho * rho;
            curvature.push_back(2.0 * (r - rho) / (rho * rho));
            t.rows.push_back({Cell{std::string("sample")}, Cell{std::string("low")}, Cell{rho},
                              Cell{r}, Cell{approx}, Cell{std::abs(r - approx)}, Cell{}, Cell{},
                              Cell{}, Cell{}});
        }
        // Richardson step on the two smallest grid points
        const double fitted = 2.0 * curvature[2] - curvature[1];
        t.rows.push_back({Cell{std::string("fit")}, Cell{std::string("low")}, Cell{}, Cell{},
                          Cell{}, Cell{}, Cell{}, Cell{fitted}, Cell{ex.quadratic_coeff_rate},
                          Cell{}});
    }
    if (high) {
        const HighSnrExpansion ex = expand_high_snr(ChannelConfig(1.0, beta), model);
        const std::vector<double> grid{1e2, 1e3, 1e4, 2e4};
        std::vector<double> scaled;
        for (double rho : grid) {
            const double r = rate_at(rho);
            const double gb = gap_bound(rho, model, engine);
            std::vector<Cell> row{Cell{std::string("sample")}, Cell{std::string("high")}, Cell{rho},
                                  Cell{r}};
            if (ex.rate_inv_snr_coeff) {
                const double approx = std::log(rho) + ex.log_gain_term + *ex.rate_inv_snr_coeff / rho;
                row.insert(row.end(), {Cell{approx}, Cell{std::abs(r - approx)}, Cell{gb}, Cell{},
                                       Cell{}, Cell{}});
                scaled.push_back((r - std::log(rho) - ex.log_gain_term) * rho);
            } else {
                row.insert(row.end(), {Cell{}, Cell{}, Cell{gb}, Cell{}, Cell{},
                                       Cell{std::string("divergent")}});
            }
            t.rows.push_back(std::move(row));
        }
        if (ex.rate_inv_snr_coeff) {
            const double fitted = 2.0 * scaled.back() - scaled[scaled.size() - 2];
            t.rows.push_back({Cell{std::string("fit")}, Cell{std::string("high")}, Cell{}, Cell{},
                              Cell{}, Cell{}, Cell{}, Cell{fitted}, Cell{*ex.rate_inv_snr_coeff},
                              Cell{}});
        }
    }
    return t;
}

// ---------------------------------------------------------------------------

void write_output(const Table& table, const OutputOpts& out_opts, std::ostream& out) {
    const std::string rendered =
        out_opts.format == "json" ? render_json(table) : render_csv(table);
    if (out_opts.path.empty()) {
        out << rendered;
        return;
    }
    std::ofstream f(out_opts.path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_opts.path);
    f << rendered;
}

void add_common(CLI::App* cmd, OutputOpts& out, EngineOpts& engine) {
    cmd->add_option("--out", out.path, "Output file (default: stdout)");
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_flag("--bits", out.bits, "Print rates in bits instead of nats");
    cmd->add_option("--engine", engine.kind, "Expectation method")
        ->check(CLI::IsMember({"quadrature", "montecarlo"}))
        ->capture_default_str();
    cmd->add_option("--nodes", engine.nodes, "Quadrature node count")->capture_default_str();
    cmd->add_option("--samples", engine.samples, "Monte Carlo sample count")->capture_default_str();
    cmd->add_option("--seed", engine.seed, "Monte Carlo seed")->capture_default_str();
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_csv(const Table& table) {
    std::ostringstream os;
    os << "# " << table.meta.dump() << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ",";
        os << table.columns[i];
    }
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            if (const double* d = std::get_if<double>(&row[i])) {
                os << format_double(*d);
            } else if (const std::string* s = std::get_if<std::string>(&row[i])) {
                os << *s;
            }
        }
        os << "\n";
    }
    for (const auto& c : table.trailing_comments) os << "# " << c << "\n";
    return os.str();
}

std::string render_json(const Table& table) {
    nlohmann::json j;
    j["meta"] = table.meta;
    j["columns"] = table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& cell : row) {
            if (const double* d = std::get_if<double>(&cell)) {
                r.push_back(*d);
            } else if (const std::string* s = std::get_if<std::string>(&cell)) {
                r.push_back(*s);
            } else {
                r.push_back(nullptr);
            }
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dirty paper coding over resizing/fading channels: rates, outage, regions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a config file");

    GapSweepArgs gap_args;
    OutputOpts gap_out;
    auto* gap_cmd = app.add_subcommand("gap-sweep", "Rate, capacity and gap bound over an SNR grid");
    gap_cmd->add_option("--fading", gap_args.fading, "Fading model spec")->capture_default_str();
    gap_cmd->add_option("--beta", gap_args.beta, "Interference-to-power ratio, or 'inf'")
        ->capture_default_str();
    gap_cmd->add_option("--snr-db-range", gap_args.range, "dB grid start:stop:step")
        ->capture_default_str();
    gap_cmd->add_option("--snr-db", gap_args.snr_db, "Single SNR in dB (overrides the range)");
    add_common(gap_cmd, gap_out, gap_args.engine);

    CdfArgs cdf_args;
    OutputOpts cdf_out;
    auto* cdf_cmd = app.add_subcommand("cdf", "CDF of the conditional rate J(alpha, A)");
    cdf_cmd->add_option("--fading", cdf_args.fading)->capture_default_str();
    cdf_cmd->add_option("--snr-db", cdf_args.snr_db)->capture_default_str();
    cdf_cmd->add_option("--beta", cdf_args.beta)->capture_default_str();
    cdf_cmd->add_option("--alphas", cdf_args.alphas, "Inflation factors")->delimiter(',')->capture_default_str();
    cdf_cmd->add_option("--rate-max", cdf_args.rate_max)->capture_default_str();
    cdf_cmd->add_option("--rate-step", cdf_args.rate_step)->capture_default_str();
    EngineOpts cdf_engine;
    add_common(cdf_cmd, cdf_out, cdf_engine);

    OutageArgs outage_args;
    OutputOpts outage_out;
    auto* outage_cmd = app.add_subcommand("outage", "Outage probability versus alpha");
    outage_cmd->add_option("--fading", outage_args.fading)->capture_default_str();
    outage_cmd->add_option("--snr-db", outage_args.snr_db)->capture_default_str();
    outage_cmd->add_option("--beta", outage_args.beta)->capture_default_str();
    outage_cmd->add_option("--rate", outage_args.rate, "Target rate in nats")->capture_default_str();
    outage_cmd->add_option("--alphas", outage_args.alphas, "Explicit alpha list")->delimiter(',');
    outage_cmd->add_option("--alpha-steps", outage_args.alpha_steps)->capture_default_str();
    EngineOpts outage_engine;
    add_common(outage_cmd, outage_out, outage_engine);

    std::string moments_fading = "rayleigh";
    OutputOpts moments_out;
    auto* moments_cmd = app.add_subcommand("moments", "Moments of the fading power coefficient");
    moments_cmd->add_option("--fading", moments_fading)->capture_default_str();
    EngineOpts moments_engine;
    add_common(moments_cmd, moments_out, moments_engine);

    RegionArgs region_args;
    OutputOpts region_out;
    auto* region_cmd = app.add_subcommand("region", "Outage achievable rate region boundaries");
    region_cmd->add_option("--user", region_args.users, "User spec <fading>@<eps>, repeatable");
    region_cmd->add_option("--snr-db", region_args.snr_db)->capture_default_str();
    region_cmd->add_option("--scheme", region_args.scheme)
        ->check(CLI::IsMember({"td", "dpc", "both"}))
        ->capture_default_str();
    region_cmd->add_option("--steps", region_args.steps,
                           "Sweep steps (default 512 for up to 2 users, 48 above)");
    region_cmd->add_flag("--verify-dominance", region_args.verify,
                         "Check DPC-over-TD containment and report a strict witness");
    region_cmd->add_flag("--preserve-order", region_args.preserve_order,
                         "Keep the caller's user order instead of sorting by effective gain");
    EngineOpts region_engine;
    add_common(region_cmd, region_out, region_engine);

    AsymptArgs asympt_args;
    OutputOpts asympt_out;
    auto* asympt_cmd = app.add_subcommand("asympt-check", "Numeric rate versus SNR expansions");
    asympt_cmd->add_option("--fading", asympt_args.fading)->capture_default_str();
    asympt_cmd->add_option("--beta", asympt_args.beta)->capture_default_str();
    asympt_cmd->add_option("--regime", asympt_args.regime)
        ->check(CLI::IsMember({"low", "high", "both"}))
        ->capture_default_str();
    add_common(asympt_cmd, asympt_out, asympt_args.engine);

    std::vector<const char*> argv;
    argv.push_back("dpcfade");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gap_cmd->parsed()) {
            gap_args.bits = gap_out.bits;
            write_output(run_gap_sweep(gap_args), gap_out, out);
        } else if (cdf_cmd->parsed()) {
            cdf_args.bits = cdf_out.bits;
            write_output(run_cdf(cdf_args), cdf_out, out);
        } else if (outage_cmd->parsed()) {
            write_output(run_outage(outage_args), outage_out, out);
        } else if (moments_cmd->parsed()) {
            write_output(run_moments(moments_fading), moments_out, out);
        } else if (region_cmd->parsed()) {
            region_args.bits = region_out.bits;
            write_output(run_region(region_args), region_out, out);
        } else if (asympt_cmd->parsed()) {
            write_output(run_asympt_check(asympt_args), asympt_out, out);
        }
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace dpcfade::cli
