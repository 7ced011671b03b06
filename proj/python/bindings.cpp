// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dpcfade/broadcast.hpp"
#include "dpcfade/errors.hpp"
#include "dpcfade/ergodic.hpp"
#include "dpcfade/expectation.hpp"
#include "dpcfade/fading.hpp"
#include "dpcfade/quasistatic.hpp"

namespace py = pybind11;
using namespace dpcfade;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dirty paper coding over resizing/fading channels: rates, outage, regions";

    py::register_exception<UnsupportedOperation>(m, "UnsupportedOperation");
    py::register_exception<DivergenceError>(m, "DivergenceError");

    py::enum_<FadingKind>(m, "FadingKind")
        .value("Constant", FadingKind::Constant)
        .value("Rayleigh", FadingKind::Rayleigh)
        .value("Rician", FadingKind::Rician)
        .value("Nakagami", FadingKind::Nakagami)
        .value("Empirical", FadingKind::Empirical);

    py::class_<Moments>(m, "Moments")
        .def_readonly("second_moment", &Moments::second_moment)
        .def_readonly("mean_log", &Moments::mean_log)
        .def_readonly("mean_inverse", &Moments::mean_inverse)
        .def("__repr__", [](const Moments& mm) {
            return "Moments(second_moment=" + std::to_string(mm.second_moment) +
                   ", mean_log=" + std::to_string(mm.mean_log) + ", mean_inverse=" +
                   (mm.mean_inverse ? std::to_string(*mm.mean_inverse) : std::string("None")) + ")";
        });

    py::class_<FadingModel>(m, "FadingModel")
        .def_static("constant", &FadingModel::constant, py::arg("value") = 1.0)
        .def_static("rayleigh", &FadingModel::rayleigh)
        .def_static("rician", &FadingModel::rician, py::arg("k_factor"))
        .def_static("nakagami", &FadingModel::nakagami, py::arg("m"))
        .def_static("empirical", &FadingModel::empirical, py::arg("samples"))
        .def_static("empirical_from_file", &FadingModel::empirical_from_file, py::arg("path"))
        .def_static("parse", &FadingModel::parse, py::arg("spec"))
        .def_property_readonly("kind", &FadingModel::kind)
        .def_property_readonly("name", &FadingModel::name)
        .def_property_readonly("mean", &FadingModel::mean)
        .def("pdf", &FadingModel::pdf, py::arg("a"))
        .def("cdf", &FadingModel::cdf, py::arg("a"))
        .def("icdf", &FadingModel::icdf, py::arg("t"))
        .def("sample", &FadingModel::sample, py::arg("seed"), py::arg("n"))
        .def("moments", &FadingModel::moments)
        .def("__repr__", [](const FadingModel& f) { return "FadingModel('" + f.name() + "')"; });

    py::class_<Expectation>(m, "Expectation")
        .def_readonly("value", &Expectation::value)
        .def_readonly("std_error", &Expectation::std_error);

    py::class_<ExpectationEngine>(m, "ExpectationEngine")
        .def_static("quadrature", &ExpectationEngine::quadrature,
                    py::arg("nodes") = ExpectationEngine::kDefaultNodes)
        .def_static("monte_carlo", &ExpectationEngine::monte_carlo, py::arg("samples"),
                    py::arg("seed"))
        .def("expect", &ExpectationEngine::expect, py::arg("model"), py::arg("f"),
             py::arg("integrand_name") = "integrand");

    py::class_<ChannelConfig>(m, "ChannelConfig")
        .def(py::init<double, double>(), py::arg("snr"), py::arg("ipr"))
        .def_readonly("snr", &ChannelConfig::snr)
        .def_readonly("ipr", &ChannelConfig::ipr);

    py::class_<DpcParams>(m, "DpcParams")
        .def(py::init<double>(), py::arg("alpha"))
        .def_readonly("alpha", &DpcParams::alpha);

    m.def("costa_capacity", &costa_capacity, py::arg("snr"));
    m.def("rate_integrand", &rate_integrand, py::arg("cfg"), py::arg("alpha"), py::arg("a"));
    m.def("rate_dpc_integrand", &rate_dpc_integrand, py::arg("cfg"), py::arg("a"));
    m.def("rate_general", &rate_general, py::arg("cfg"), py::arg("params"), py::arg("model"),
          py::arg("engine"));
    m.def("rate_dpc", &rate_dpc, py::arg("cfg"), py::arg("model"), py::arg("engine"));
    m.def("capacity_known_interference", &capacity_known_interference, py::arg("cfg"),
          py::arg("model"), py::arg("engine"));
    m.def("gap", &gap, py::arg("cfg"), py::arg("model"), py::arg("engine"));
    m.def("gap_bound", &gap_bound, py::arg("snr"), py::arg("model"), py::arg("engine"));
    m.def(
        "gap_bound_max",
        [](const FadingModel& model, const std::vector<double>& grid,
           const ExpectationEngine& engine) {
            const GapBoundMax r = gap_bound_max(model, grid, engine);
            return py::make_tuple(r.max_value, r.argmax_snr);
        },
        py::arg("model"), py::arg("snr_grid"), py::arg("engine"));
    m.def(
        "optimal_alpha",
        [](const ChannelConfig& cfg, const FadingModel& model, const ExpectationEngine& engine) {
            const OptimalAlpha r = optimal_alpha(cfg, model, engine);
            return py::make_tuple(r.alpha_star, r.rate);
        },
        py::arg("cfg"), py::arg("model"), py::arg("engine"));

    py::class_<HighSnrExpansion>(m, "HighSnrExpansion")
        .def_readonly("log_gain_term", &HighSnrExpansion::log_gain_term)
        .def_readonly("rate_inv_snr_coeff", &HighSnrExpansion::rate_inv_snr_coeff)
        .def_readonly("capacity_inv_snr_coeff", &HighSnrExpansion::capacity_inv_snr_coeff);
    py::class_<LowSnrExpansion>(m, "LowSnrExpansion")
        .def_readonly("linear_coeff", &LowSnrExpansion::linear_coeff)
        .def_readonly("quadratic_coeff_rate", &LowSnrExpansion::quadratic_coeff_rate)
        .def_readonly("quadratic_coeff_capacity", &LowSnrExpansion::quadratic_coeff_capacity);
    m.def("expand_high_snr", &expand_high_snr, py::arg("cfg"), py::arg("model"));
    m.def("expand_low_snr", &expand_low_snr, py::arg("cfg"), py::arg("model"));
    m.def("rate_via_mi_oracle", &rate_via_mi_oracle, py::arg("cfg"), py::arg("params"),
          py::arg("a"));

    py::class_<OutageSpec>(m, "OutageSpec")
        .def(py::init<double, double>(), py::arg("target_rate"), py::arg("target_eps") = 0.5)
        .def_readonly("target_rate", &OutageSpec::target_rate)
        .def_readonly("target_eps", &OutageSpec::target_eps);

    m.def("conditional_rate", &conditional_rate, py::arg("cfg"), py::arg("alpha"), py::arg("a"),
          py::arg("clamp") = true);
    m.def("dpc_alpha_for_gain", &dpc_alpha_for_gain, py::arg("snr"), py::arg("a"));
    m.def("outage_gain_threshold", &outage_gain_threshold, py::arg("cfg"), py::arg("alpha"),
          py::arg("rate"));
    m.def("outage_probability", &outage_probability, py::arg("cfg"), py::arg("alpha"),
          py::arg("spec"), py::arg("model"));
    m.def("optimal_alpha_outage", &optimal_alpha_outage, py::arg("spec"));
    m.def("min_outage_probability", &min_outage_probability, py::arg("cfg"), py::arg("spec"),
          py::arg("model"));
    m.def(
        "rate_cdf",
        [](const ChannelConfig& cfg, double alpha, const FadingModel& model,
           const std::vector<double>& grid) {
            std::vector<std::pair<double, double>> out;
            for (const auto& p : rate_cdf(cfg, alpha, model, grid))
                out.emplace_back(p.rate, p.probability);
            return out;
        },
        py::arg("cfg"), py::arg("alpha"), py::arg("model"), py::arg("rate_grid"));

    py::class_<BroadcastUser>(m, "BroadcastUser")
        .def(py::init<FadingModel, double>(), py::arg("model"), py::arg("target_eps"))
        .def_readonly("model", &BroadcastUser::model)
        .def_readonly("target_eps", &BroadcastUser::target_eps);

    py::class_<BroadcastConfig>(m, "BroadcastConfig")
        .def(py::init<double, std::vector<BroadcastUser>, bool>(), py::arg("snr"),
             py::arg("users"), py::arg("preserve_order") = false)
        .def_property_readonly("snr", &BroadcastConfig::snr)
        .def_property_readonly("num_users", &BroadcastConfig::num_users)
        .def_property_readonly("gains", &BroadcastConfig::gains);

    py::class_<PowerAllocation>(m, "PowerAllocation")
        .def(py::init<std::vector<double>>(), py::arg("gamma"))
        .def_readonly("gamma", &PowerAllocation::gamma);

    py::class_<TdParams>(m, "TdParams")
        .def(py::init<double, double, double>(), py::arg("mu"), py::arg("eta1"), py::arg("eta2"))
        .def_readonly("mu", &TdParams::mu)
        .def_readonly("eta1", &TdParams::eta1)
        .def_readonly("eta2", &TdParams::eta2);

    py::class_<RegionPoint>(m, "RegionPoint")
        .def_readonly("rates", &RegionPoint::rates)
        .def_property_readonly("param", [](const RegionPoint& p) -> py::object {
            if (const auto* td = std::get_if<TdParams>(&p.param)) return py::cast(*td);
            return py::cast(std::get<PowerAllocation>(p.param));
        });

    py::class_<RegionBoundary>(m, "RegionBoundary").def_readonly("points", &RegionBoundary::points);

    m.def("effective_gains", &effective_gains, py::arg("cfg"));
    m.def("td_rate_point", &td_rate_point, py::arg("cfg"), py::arg("params"));
    m.def("td_region", &td_region, py::arg("cfg"), py::arg("mu_steps"), py::arg("eta_steps"));
    m.def("dpc_rate_point_k", &dpc_rate_point_k, py::arg("cfg"), py::arg("alloc"));
    m.def("dpc_region", &dpc_region, py::arg("cfg"), py::arg("steps_per_dim"));
    m.def(
        "dpc_outage_for_rates",
        [](const BroadcastConfig& cfg, const PowerAllocation& alloc,
           const std::vector<double>& rates) { return dpc_outage_for_rates(cfg, alloc, rates); },
        py::arg("cfg"), py::arg("alloc"), py::arg("rates"));
    m.def(
        "dpc_supports",
        [](const BroadcastConfig& cfg, const std::vector<double>& rates) {
            return dpc_supports(cfg, rates);
        },
        py::arg("cfg"), py::arg("rates"));
    m.def(
        "verify_dominance",
        [](const BroadcastConfig& cfg, const RegionBoundary& td, int dpc_steps) {
            const DominanceReport r = verify_dominance(cfg, td, dpc_steps);
            return py::make_tuple(r.dominated,
                                  r.witness_strict
                                      ? py::object(py::make_tuple((*r.witness_strict)[0],
                                                                  (*r.witness_strict)[1]))
                                      : py::object(py::none()));
        },
        py::arg("cfg"), py::arg("td"), py::arg("dpc_steps") = 513);
    m.def("equivalent_unfaded_gains", &equivalent_unfaded_gains, py::arg("cfg"));
}
