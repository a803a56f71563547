// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// Python bindings for scenarios, channels, placement, SCA and the harness.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pinchsec/config.hpp"
#include "pinchsec/harness.hpp"

namespace py = pybind11;
using namespace pinchsec;

namespace {

template <typename Enum>
void bind_names(py::enum_<Enum>& e)
{
    e.attr("__str__") = py::cpp_function([](Enum v) { return std::string(to_string(v)); }, py::name("__str__"),
                                         py::is_method(e));
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Dual-waveguide pinching-antenna secrecy simulation core";

    py::enum_<GuardPolicy>(m, "GuardPolicy")
        .value("HalfWavelength", GuardPolicy::HalfWavelength)
        .value("Explicit", GuardPolicy::Explicit);

    py::enum_<Layout> layout(m, "Layout");
    layout.value("Parallel", Layout::Parallel).value("Orthogonal", Layout::Orthogonal);
    bind_names(layout);
    m.def("parse_layout", &parse_layout);

    py::enum_<EveMode> eve_mode(m, "EveMode");
    eve_mode.value("Uniform", EveMode::Uniform).value("InFront", EveMode::InFront);
    bind_names(eve_mode);

    py::enum_<Objective> objective(m, "Objective");
    objective.value("SSR", Objective::SSR).value("SEE", Objective::SEE);
    bind_names(objective);
    m.def("parse_objective", &parse_objective);

    py::enum_<ScaStatus> sca_status(m, "ScaStatus");
    sca_status.value("Converged", ScaStatus::Converged)
        .value("MaxIters", ScaStatus::MaxIters)
        .value("IterLimit", ScaStatus::IterLimit)
        .value("NumericalFailure", ScaStatus::NumericalFailure);
    bind_names(sca_status);

    py::enum_<Experiment> experiment(m, "Experiment");
    experiment.value("Tables", Experiment::Tables)
        .value("Cdf", Experiment::Cdf)
        .value("SweepPmax", Experiment::SweepPmax)
        .value("SweepN", Experiment::SweepN)
        .value("SweepZeta", Experiment::SweepZeta)
        .value("SpecialInFront", Experiment::SpecialInFront)
        .value("Single", Experiment::Single);
    bind_names(experiment);
    m.def("parse_experiment", &parse_experiment);

    py::enum_<Optimizer> optimizer(m, "Optimizer");
    optimizer.value("FeaPSO", Optimizer::FeaPSO).value("ES", Optimizer::ES).value("Fixed", Optimizer::Fixed);
    bind_names(optimizer);

    py::enum_<ModelKind> model_kind(m, "ModelKind");
    model_kind.value("Phase", ModelKind::Phase).value("Atten", ModelKind::Atten);
    bind_names(model_kind);

    py::enum_<Stage> stage(m, "Stage");
    stage.value("Stage1", Stage::Stage1).value("Stage2", Stage::Stage2);
    bind_names(stage);

    py::class_<RawParams>(m, "RawParams")
        .def(py::init<>())
        .def_readwrite("num_lus", &RawParams::num_lus)
        .def_readwrite("pas_per_waveguide", &RawParams::pas_per_waveguide)
        .def_readwrite("half_size", &RawParams::half_size)
        .def_readwrite("height", &RawParams::height)
        .def_readwrite("carrier_freq", &RawParams::carrier_freq)
        .def_readwrite("refractive_index", &RawParams::refractive_index)
        .def_readwrite("guard_policy", &RawParams::guard_policy)
        .def_readwrite("guard_distance", &RawParams::guard_distance)
        .def_readwrite("noise_lu_dbm", &RawParams::noise_lu_dbm)
        .def_readwrite("noise_eve_dbm", &RawParams::noise_eve_dbm)
        .def_readwrite("pmax_dbm", &RawParams::pmax_dbm)
        .def_readwrite("pc_dbm", &RawParams::pc_dbm);

    py::class_<SystemParams>(m, "SystemParams")
        .def_readwrite("num_lus", &SystemParams::num_lus)
        .def_readwrite("pas_per_waveguide", &SystemParams::pas_per_waveguide)
        .def_readwrite("half_size", &SystemParams::half_size)
        .def_readwrite("height", &SystemParams::height)
        .def_readwrite("carrier_freq", &SystemParams::carrier_freq)
        .def_readwrite("wavelength", &SystemParams::wavelength)
        .def_readwrite("refractive_index", &SystemParams::refractive_index)
        .def_readwrite("guided_wavelength", &SystemParams::guided_wavelength)
        .def_readwrite("guard_distance", &SystemParams::guard_distance)
        .def_readwrite("noise_lu", &SystemParams::noise_lu)
        .def_readwrite("noise_eve", &SystemParams::noise_eve)
        .def_readwrite("power_budget", &SystemParams::power_budget)
        .def_readwrite("circuit_power", &SystemParams::circuit_power)
        .def_readwrite("eta", &SystemParams::eta)
        .def_readwrite("pmax_dbm", &SystemParams::pmax_dbm);

    m.def("derive_params", &derive_params, py::arg("raw") = RawParams{});
    m.def("with_power_budget_dbm", &with_power_budget_dbm, py::arg("params"), py::arg("pmax_dbm"));
    m.def("dbm_to_watts", &dbm_to_watts);
    m.def("watts_to_dbm", &watts_to_dbm);
    m.def("expected_sq_vertical_distance", &expected_sq_vertical_distance, py::arg("layout"), py::arg("half_size"),
          py::arg("height"));

    py::class_<Scenario>(m, "Scenario")
        .def_readwrite("params", &Scenario::params)
        .def_readwrite("layout", &Scenario::layout)
        .def_readwrite("lu_positions", &Scenario::lu_positions)
        .def_readwrite("eve_position", &Scenario::eve_position)
        .def_readwrite("seed", &Scenario::seed)
        .def_property_readonly("num_lus", &Scenario::num_lus);
    m.def("sample_scenario", &sample_scenario, py::arg("params"), py::arg("layout"), py::arg("seed"),
          py::arg("eve_mode") = EveMode::Uniform);

    py::class_<Placement>(m, "Placement")
        .def(py::init([](const Eigen::Matrix<double, 2, Eigen::Dynamic>& coords) { return Placement{coords}; }),
             py::arg("coords"))
        .def_readwrite("coords", &Placement::coords)
        .def("is_feasible", &Placement::is_feasible, py::arg("params"), py::arg("slack") = 1e-12);

    py::class_<ChannelModel>(m, "ChannelModel")
        .def_readonly("attenuation", &ChannelModel::attenuation)
        .def_readonly("zeta", &ChannelModel::zeta)
        .def_static("phase_only", &ChannelModel::phase_only)
        .def_static("phase_and_attenuation", &ChannelModel::phase_and_attenuation, py::arg("zeta"));

    py::class_<EffectiveChannels>(m, "EffectiveChannels")
        .def(py::init([](std::vector<Vec2c> f) { return EffectiveChannels{std::move(f)}; }), py::arg("f"))
        .def_readwrite("f", &EffectiveChannels::f)
        .def_property_readonly("num_lus", &EffectiveChannels::num_lus);
    m.def("effective_channels", &effective_channels, py::arg("scenario"), py::arg("placement"), py::arg("model"));

    py::class_<BeamSet>(m, "BeamSet")
        .def(py::init([](std::vector<Vec2c> w) { return BeamSet{std::move(w)}; }), py::arg("w"))
        .def_readwrite("w", &BeamSet::w)
        .def_static("zeros", &BeamSet::zeros, py::arg("num_lus"))
        .def("total_power", &BeamSet::total_power);

    py::class_<RateSummary>(m, "RateSummary")
        .def_readonly("sum_rate", &RateSummary::sum_rate)
        .def_readonly("sum_leakage", &RateSummary::sum_leakage)
        .def_readonly("ssr", &RateSummary::ssr)
        .def_readonly("see", &RateSummary::see)
        .def_readonly("beam_power", &RateSummary::beam_power);
    m.def("summarize", &summarize, py::arg("channels"), py::arg("beams"), py::arg("params"));
    m.def(
        "ssr",
        [](const EffectiveChannels& F, const BeamSet& b, double noise_lu, double noise_eve) {
            return ssr(F, b, {noise_lu, noise_eve});
        },
        py::arg("channels"), py::arg("beams"), py::arg("noise_lu"), py::arg("noise_eve"));
    m.def(
        "see",
        [](const EffectiveChannels& F, const BeamSet& b, double noise_lu, double noise_eve, double circuit_power) {
            return see(F, b, {noise_lu, noise_eve}, circuit_power);
        },
        py::arg("channels"), py::arg("beams"), py::arg("noise_lu"), py::arg("noise_eve"), py::arg("circuit_power"));

    m.def(
        "project_feasible",
        [](const std::vector<double>& raw, double half_size, double guard) {
            return project_feasible(raw, half_size, guard);
        },
        py::arg("raw"), py::arg("half_size"), py::arg("guard"));
    m.def("heuristic_beams", &heuristic_beams, py::arg("channels"), py::arg("power_budget"), py::arg("noise_lu"));

    py::class_<PsoConfig>(m, "PsoConfig")
        .def(py::init<>())
        .def_readwrite("swarm_size", &PsoConfig::swarm_size)
        .def_readwrite("inertia", &PsoConfig::inertia)
        .def_readwrite("accel_personal", &PsoConfig::accel_personal)
        .def_readwrite("accel_global", &PsoConfig::accel_global)
        .def_readwrite("max_iters", &PsoConfig::max_iters)
        .def_readwrite("stall_iters", &PsoConfig::stall_iters)
        .def_readwrite("stall_tol", &PsoConfig::stall_tol)
        .def_readwrite("init_spread", &PsoConfig::init_spread)
        .def_readwrite("velocity_init_range", &PsoConfig::velocity_init_range)
        .def_readwrite("inject_baseline", &PsoConfig::inject_baseline)
        .def_readwrite("seed", &PsoConfig::seed)
        .def_readwrite("workers", &PsoConfig::workers);

    py::class_<PlacementResult>(m, "PlacementResult")
        .def_readonly("placement", &PlacementResult::placement)
        .def_readonly("stage1_beams", &PlacementResult::stage1_beams)
        .def_readonly("stage1_ssr", &PlacementResult::stage1_ssr)
        .def_readonly("fitness_trace", &PlacementResult::fitness_trace)
        .def_readonly("evaluations", &PlacementResult::evaluations);
    m.def("feapso", &feapso, py::arg("scenario"), py::arg("model"), py::arg("cfg") = PsoConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def("exhaustive_search", &exhaustive_search, py::arg("scenario"), py::arg("model"), py::arg("spacing"),
          py::arg("max_combinations") = 50'000'000LL, py::call_guard<py::gil_scoped_release>());
    m.def("fixed_baseline_placement", &fixed_baseline_placement, py::arg("params"));
    m.def("evaluate_placement", &evaluate_placement, py::arg("scenario"), py::arg("model"), py::arg("placement"));

    py::class_<ScaConfig>(m, "ScaConfig")
        .def(py::init<>())
        .def_readwrite("max_iters", &ScaConfig::max_iters)
        .def_readwrite("rel_tol", &ScaConfig::rel_tol)
        .def_readwrite("beta_floor", &ScaConfig::beta_floor)
        .def_readwrite("an_init_fraction", &ScaConfig::an_init_fraction)
        .def_readwrite("activation_margin", &ScaConfig::activation_margin);

    py::class_<ScaResult>(m, "ScaResult")
        .def_readonly("beams", &ScaResult::beams)
        .def_readonly("objective", &ScaResult::objective)
        .def_readonly("trace", &ScaResult::trace)
        .def_readonly("status", &ScaResult::status)
        .def_readonly("iterations", &ScaResult::iterations)
        .def_readonly("restarted", &ScaResult::restarted);
    m.def(
        "sca_optimize",
        [](Objective objective, const EffectiveChannels& F, const SystemParams& params, const ScaConfig& cfg) {
            return sca_optimize(objective, F, params, cfg);
        },
        py::arg("objective"), py::arg("channels"), py::arg("params"), py::arg("cfg") = ScaConfig{},
        py::call_guard<py::gil_scoped_release>());

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("experiment", &ExperimentConfig::experiment)
        .def_readwrite("realizations", &ExperimentConfig::realizations)
        .def_readwrite("layouts", &ExperimentConfig::layouts)
        .def_readwrite("model", &ExperimentConfig::model)
        .def_readwrite("zetas", &ExperimentConfig::zetas)
        .def_readwrite("optimizers", &ExperimentConfig::optimizers)
        .def_readwrite("es_spacing", &ExperimentConfig::es_spacing)
        .def_readwrite("objectives", &ExperimentConfig::objectives)
        .def_readwrite("pso", &ExperimentConfig::pso)
        .def_readwrite("sca", &ExperimentConfig::sca)
        .def_readwrite("params", &ExperimentConfig::params)
        .def_readwrite("sweep_pmax", &ExperimentConfig::sweep_pmax)
        .def_readwrite("sweep_n", &ExperimentConfig::sweep_n)
        .def_readwrite("sweep_zeta", &ExperimentConfig::sweep_zeta)
        .def_readwrite("seed_base", &ExperimentConfig::seed_base)
        .def_readwrite("out", &ExperimentConfig::out)
        .def_readwrite("workers", &ExperimentConfig::workers)
        .def_readwrite("record_timing", &ExperimentConfig::record_timing)
        .def("validate", &ExperimentConfig::validate)
        .def("set", &apply_setting, py::arg("key"), py::arg("value"))
        .def("to_text", [](const ExperimentConfig& cfg) {
            std::ostringstream out;
            write_config(cfg, out);
            return out.str();
        });
    m.def("default_config", &default_config, py::arg("experiment"));
    m.def("config_keys", &config_keys);

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("scenario_id", &RunRecord::scenario_id)
        .def_readonly("layout", &RunRecord::layout)
        .def_readonly("model", &RunRecord::model)
        .def_readonly("zeta", &RunRecord::zeta)
        .def_readonly("K", &RunRecord::K)
        .def_readonly("N", &RunRecord::N)
        .def_readonly("pmax_dbm", &RunRecord::pmax_dbm)
        .def_readonly("optimizer", &RunRecord::optimizer)
        .def_readonly("stage", &RunRecord::stage)
        .def_readonly("objective", &RunRecord::objective)
        .def_readonly("sum_rate", &RunRecord::sum_rate)
        .def_readonly("sum_leakage", &RunRecord::sum_leakage)
        .def_readonly("ssr", &RunRecord::ssr)
        .def_readonly("see", &RunRecord::see)
        .def_readonly("beam_power_w", &RunRecord::beam_power_w)
        .def_readonly("sca_iters", &RunRecord::sca_iters)
        .def_readonly("wall_ms", &RunRecord::wall_ms)
        .def_readonly("status", &RunRecord::status)
        .def("ok", &RunRecord::ok);

    py::class_<Aggregate>(m, "Aggregate")
        .def_readonly("layout", &Aggregate::layout)
        .def_readonly("model", &Aggregate::model)
        .def_readonly("zeta", &Aggregate::zeta)
        .def_readonly("K", &Aggregate::K)
        .def_readonly("N", &Aggregate::N)
        .def_readonly("pmax_dbm", &Aggregate::pmax_dbm)
        .def_readonly("optimizer", &Aggregate::optimizer)
        .def_readonly("stage", &Aggregate::stage)
        .def_readonly("objective", &Aggregate::objective)
        .def_readonly("count", &Aggregate::count)
        .def_readonly("failed", &Aggregate::failed)
        .def_readonly("sum_rate", &Aggregate::sum_rate)
        .def_readonly("sum_leakage", &Aggregate::sum_leakage)
        .def_readonly("ssr", &Aggregate::ssr)
        .def_readonly("see", &Aggregate::see)
        .def_readonly("beam_power_w", &Aggregate::beam_power_w);

    m.def("run_experiment", &run_experiment, py::arg("cfg"), py::call_guard<py::gil_scoped_release>());
    m.def("aggregate", &aggregate, py::arg("records"));
    m.def("empirical_cdf", &empirical_cdf, py::arg("values"));
    m.def(
        "to_csv",
        [](const std::vector<RunRecord>& records) {
            std::ostringstream out;
            write_csv(records, out);
            return out.str();
        },
        py::arg("records"));
    m.def(
        "from_csv",
        [](const std::string& text) {
            std::istringstream in(text);
            return read_csv(in);
        },
        py::arg("text"));
    m.attr("CSV_HEADER") = kCsvHeader;
}
