// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "pinchsec/config.hpp"
#include "pinchsec/harness.hpp"

using namespace pinchsec;

namespace {

ExperimentConfig small(Experiment e)
{
    ExperimentConfig cfg = default_config(e);
    cfg.realizations = 2;
    cfg.pso.swarm_size = 40;
    cfg.pso.max_iters = 10;
    cfg.es_spacing = 2.0;
    return cfg;
}

std::string csv_of(const std::vector<RunRecord>& records)
{
    std::ostringstream out;
    write_csv(records, out);
    return out.str();
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("pinchsec_test_" + name);
}

}  // namespace

TEST_CASE("empirical CDF")
{
    const auto one = empirical_cdf({5.0});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::pair{5.0, 1.0});
    const auto four = empirical_cdf({3.0, 1.0, 4.0, 2.0});
    REQUIRE(four.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(four[i].first == i + 1.0);
        CHECK(four[i].second == doctest::Approx(0.25 * (i + 1)));
    }
    const auto flat = empirical_cdf({7.0, 7.0, 7.0});
    REQUIRE(flat.size() == 1);
    CHECK(flat[0] == std::pair{7.0, 1.0});
    const auto ties = empirical_cdf({1.0, 2.0, 2.0, 3.0});
    REQUIRE(ties.size() == 3);
    CHECK(ties[1].second == 0.75);
    CHECK_THROWS_AS(empirical_cdf({}), std::invalid_argument);
}

TEST_CASE("one fixed realization yields a stage pair per layout and objective")
{
    ExperimentConfig cfg = small(Experiment::Single);
    cfg.optimizers = {Optimizer::Fixed};
    const auto records = run_experiment(cfg);
    CHECK(records.size() == 2 * cfg.layouts.size() * cfg.objectives.size());
    for (std::size_t i = 0; i < records.size(); i += 2) {
        CHECK(records[i].stage == Stage::Stage1);
        CHECK(records[i + 1].stage == Stage::Stage2);
        CHECK(records[i].layout == records[i + 1].layout);
        CHECK(records[i].objective == records[i + 1].objective);
    }
}

TEST_CASE("records are consistent")
{
    const ExperimentConfig cfg = small(Experiment::Tables);
    const SystemParams p = derive_params(cfg.params);
    for (const RunRecord& r : run_experiment(cfg)) {
        REQUIRE(r.ok());
        CHECK(r.ssr >= 0.0);
        CHECK(r.ssr <= r.sum_rate + 1e-12);
        CHECK(r.see == doctest::Approx(r.ssr / (r.beam_power_w + p.circuit_power)).epsilon(1e-9));
        CHECK(r.beam_power_w <= p.power_budget + 1e-7);
        CHECK(r.wall_ms == 0.0);
        if (r.stage == Stage::Stage1)
            CHECK(r.sca_iters == 0);
    }
}

TEST_CASE("records follow a stable order")
{
    ExperimentConfig cfg = small(Experiment::Tables);
    cfg.realizations = 3;
    const auto records = run_experiment(cfg);
    auto key = [](const RunRecord& r) {
        return std::tuple{r.scenario_id, static_cast<int>(r.layout), static_cast<int>(r.optimizer),
                          static_cast<int>(r.objective), static_cast<int>(r.stage)};
    };
    for (std::size_t i = 1; i < records.size(); ++i)
        CHECK(key(records[i - 1]) < key(records[i]));
    CHECK(records.front().scenario_id == cfg.seed_base);
    CHECK(records.back().scenario_id == cfg.seed_base + 2);
}

TEST_CASE("identical configs give identical bytes for any worker count")
{
    ExperimentConfig cfg = small(Experiment::Tables);
    cfg.realizations = 3;
    const std::string a = csv_of(run_experiment(cfg));
    cfg.workers = 3;
    CHECK(csv_of(run_experiment(cfg)) == a);
}

TEST_CASE("zero attenuation reproduces the phase-only records")
{
    ExperimentConfig cfg = small(Experiment::SweepZeta);
    cfg.sweep_zeta = {0.0, 0.05};
    cfg.layouts = {Layout::Parallel};
    const auto records = run_experiment(cfg);
    std::vector<RunRecord> phase, zero;
    for (const RunRecord& r : records) {
        if (r.model == ModelKind::Phase)
            phase.push_back(r);
        else if (r.zeta == 0.0)
            zero.push_back(r);
    }
    REQUIRE(phase.size() == zero.size());
    REQUIRE(!phase.empty());
    for (std::size_t i = 0; i < phase.size(); ++i) {
        CHECK(phase[i].sum_rate == zero[i].sum_rate);
        CHECK(phase[i].sum_leakage == zero[i].sum_leakage);
        CHECK(phase[i].ssr == zero[i].ssr);
        CHECK(phase[i].see == zero[i].see);
        CHECK(phase[i].beam_power_w == zero[i].beam_power_w);
        CHECK(phase[i].sca_iters == zero[i].sca_iters);
    }
}

TEST_CASE("sweeps vary exactly one axis")
{
    ExperimentConfig cfg = small(Experiment::SweepPmax);
    cfg.realizations = 1;
    cfg.sweep_pmax = {20.0, 30.0};
    cfg.layouts = {Layout::Parallel};
    const auto pmax = run_experiment(cfg);
    CHECK(pmax.size() == 2 * cfg.optimizers.size() * cfg.objectives.size() * 2);
    for (const RunRecord& r : pmax) {
        CHECK(r.N == cfg.params.pas_per_waveguide);
        CHECK((r.pmax_dbm == 20.0 || r.pmax_dbm == 30.0));
    }

    ExperimentConfig n = small(Experiment::SweepN);
    n.realizations = 1;
    n.sweep_n = {1, 3};
    n.layouts = {Layout::Orthogonal};
    for (const RunRecord& r : run_experiment(n)) {
        CHECK((r.N == 1 || r.N == 3));
        CHECK(r.pmax_dbm == n.params.pmax_dbm);
    }
}

TEST_CASE("failures are recorded and left out of aggregates")
{
    ExperimentConfig cfg = small(Experiment::Single);
    cfg.optimizers = {Optimizer::ES, Optimizer::Fixed};
    cfg.es_spacing = 0.001;  // far too many combinations
    cfg.objectives = {Objective::SSR};
    cfg.layouts = {Layout::Parallel};
    const auto records = run_experiment(cfg);
    REQUIRE(records.size() == 4);
    CHECK_FALSE(records[0].ok());
    CHECK_FALSE(records[1].ok());
    CHECK(records[2].ok());
    const auto agg = aggregate(records);
    const Aggregate* es = find_aggregate(agg, Layout::Parallel, Optimizer::ES, Stage::Stage1, Objective::SSR);
    REQUIRE(es != nullptr);
    CHECK(es->count == 0);
    CHECK(es->failed == 1);
    CHECK(csv_of(records).find(",error: ") != std::string::npos);
}

TEST_CASE("aggregates are plain means")
{
    std::vector<RunRecord> records(4);
    for (int i = 0; i < 4; ++i) {
        records[i].scenario_id = i;
        records[i].ssr = i + 1.0;
        records[i].see = 2.0 * i;
    }
    records[3].status = "error: x";
    const auto agg = aggregate(records);
    REQUIRE(agg.size() == 1);
    CHECK(agg[0].count == 3);
    CHECK(agg[0].failed == 1);
    CHECK(agg[0].ssr == doctest::Approx(2.0));
    CHECK(agg[0].see == doctest::Approx(2.0));
}

TEST_CASE("CSV header and round trip")
{
    CHECK(csv_of({}) == std::string(kCsvHeader) + "\n");

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 30.0);
    std::vector<RunRecord> records(100);
    for (int i = 0; i < 100; ++i) {
        RunRecord& r = records[i];
        r.scenario_id = 1000 + i / 4;
        r.layout = i % 2 ? Layout::Orthogonal : Layout::Parallel;
        r.model = i % 3 ? ModelKind::Phase : ModelKind::Atten;
        r.zeta = r.model == ModelKind::Atten ? 0.01 * (i % 5) : 0.0;
        r.K = 2;
        r.N = 1 + i % 4;
        r.pmax_dbm = 20.0 + 5 * (i % 5);
        r.optimizer = static_cast<Optimizer>(i % 3);
        r.stage = i % 2 ? Stage::Stage2 : Stage::Stage1;
        r.objective = i % 4 < 2 ? Objective::SSR : Objective::SEE;
        r.sum_rate = u(rng);
        r.sum_leakage = u(rng) / 10;
        r.ssr = std::max(r.sum_rate - r.sum_leakage, 0.0);
        r.see = r.ssr / 1.1;
        r.beam_power_w = u(rng) / 30;
        r.sca_iters = i % 7;
        r.status = i == 13 ? "sca_numerical_failure" : "ok";
    }
    const auto path = temp_file("roundtrip.csv");
    write_csv(records, path.string());
    const auto back = read_csv(path.string());
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RunRecord& a = records[i];
        const RunRecord& b = back[i];
        CHECK(a.scenario_id == b.scenario_id);
        CHECK(a.layout == b.layout);
        CHECK(a.model == b.model);
        CHECK(a.zeta == doctest::Approx(b.zeta).epsilon(1e-6));
        CHECK(a.K == b.K);
        CHECK(a.N == b.N);
        CHECK(a.pmax_dbm == b.pmax_dbm);
        CHECK(a.optimizer == b.optimizer);
        CHECK(a.stage == b.stage);
        CHECK(a.objective == b.objective);
        for (auto [x, y] : {std::pair{a.sum_rate, b.sum_rate}, {a.sum_leakage, b.sum_leakage}, {a.ssr, b.ssr},
                            {a.see, b.see}, {a.beam_power_w, b.beam_power_w}})
            CHECK(std::abs(x - y) <= 5e-6 * std::abs(x));
        CHECK(a.sca_iters == b.sca_iters);
        CHECK(a.status == b.status);
    }
    // Six significant digits are a fixed point of write/read.
    std::ifstream first(path);
    std::stringstream original;
    original << first.rdbuf();
    CHECK(csv_of(back) == original.str());
    std::filesystem::remove(path);
}

TEST_CASE("CSV I/O errors carry the path")
{
    try {
        write_csv({}, "/nonexistent-dir/x.csv");
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent-dir/x.csv") != std::string::npos);
    }
    CHECK_THROWS_AS(read_csv("/nonexistent-dir/x.csv"), std::runtime_error);
    std::istringstream bad("scenario_id,layout\n");
    CHECK_THROWS_AS(read_csv(bad), std::runtime_error);
}

TEST_CASE("CDF file")
{
    ExperimentConfig cfg = small(Experiment::Cdf);
    cfg.realizations = 3;
    cfg.layouts = {Layout::Parallel};
    const auto records = run_experiment(cfg);
    const auto path = temp_file("cdf.csv");
    write_cdf_csv(records, path.string());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "layout,optimizer,stage,objective,ssr,probability");
    int rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    CHECK(rows >= 4);
    CHECK(last.substr(last.rfind(',') + 1) == "1");
    std::filesystem::remove(path);
}

TEST_CASE("config validation")
{
    ExperimentConfig cfg;
    cfg.realizations = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.sweep_pmax = {30.0, 20.0};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.sweep_n = {};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.layouts = {};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_NOTHROW(ExperimentConfig{}.validate());
}

TEST_CASE("config files")
{
    std::istringstream text(
        "# comment\n"
        "experiment = sweep_n\n"
        "realizations = 12   # trailing comment\n"
        "layouts = orthogonal\n"
        "optimizers = feapso, fixed\n"
        "pso_swarm_size = 250\n"
        "sca_rel_tol = 1e-5\n"
        "pmax_dbm = 35\n"
        "sweep_n = 1, 2, 4\n"
        "seed_base = 77\n");
    ExperimentConfig cfg;
    apply_config(cfg, text);
    CHECK(cfg.experiment == Experiment::SweepN);
    CHECK(cfg.realizations == 12);
    CHECK(cfg.layouts == std::vector<Layout>{Layout::Orthogonal});
    CHECK(cfg.optimizers == std::vector<Optimizer>{Optimizer::FeaPSO, Optimizer::Fixed});
    CHECK(cfg.pso.swarm_size == 250);
    CHECK(cfg.sca.rel_tol == 1e-5);
    CHECK(cfg.params.pmax_dbm == 35.0);
    CHECK(cfg.sweep_n == std::vector<int>{1, 2, 4});
    CHECK(cfg.seed_base == 77);

    std::ostringstream dumped;
    write_config(cfg, dumped);
    ExperimentConfig again;
    std::istringstream in(dumped.str());
    apply_config(again, in);
    std::ostringstream dumped2;
    write_config(again, dumped2);
    CHECK(dumped.str() == dumped2.str());

    std::istringstream unknown("realizations = 3\nswarm = 4\n");
    try {
        apply_config(cfg, unknown, "exp.cfg");
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("exp.cfg:2") != std::string::npos);
    }
    std::istringstream malformed("realizations = many\n");
    CHECK_THROWS_AS(apply_config(cfg, malformed), std::invalid_argument);
    std::istringstream no_eq("realizations 3\n");
    CHECK_THROWS_AS(apply_config(cfg, no_eq), std::invalid_argument);

    ExperimentConfig paper;
    apply_setting(paper, "preset", "paper");
    CHECK(paper.realizations == 1000);
    CHECK(paper.pso.swarm_size == 5000);
}

TEST_CASE("every config key is written")
{
    std::ostringstream out;
    write_config(ExperimentConfig{}, out);
    for (const std::string& key : config_keys())
        CHECK(out.str().find(key + " = ") != std::string::npos);
    CHECK(config_keys().size() >= 40);
}
