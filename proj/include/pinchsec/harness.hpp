// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// Batch experiments: per-realization pipelines (placement, stage-1 metrics,
// SCA stage-2 metrics), aggregation, empirical CDFs and CSV persistence.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pinchsec/placement.hpp"
#include "pinchsec/sca.hpp"
#include "pinchsec/scenario.hpp"

namespace pinchsec {

enum class Experiment { Tables, Cdf, SweepPmax, SweepN, SweepZeta, SpecialInFront, Single };

const char* to_string(Experiment experiment);
Experiment parse_experiment(const std::string& name);

enum class Optimizer { FeaPSO, ES, Fixed };

const char* to_string(Optimizer optimizer);
Optimizer parse_optimizer(const std::string& name);

enum class ModelKind { Phase, Atten };

const char* to_string(ModelKind kind);
ModelKind parse_model(const std::string& name);

struct ExperimentConfig {
    Experiment experiment = Experiment::Tables;
    int realizations = 300;
    std::vector<Layout> layouts{Layout::Parallel, Layout::Orthogonal};
    ModelKind model = ModelKind::Phase;
    /// Attenuation coefficients used with ModelKind::Atten outside sweep_zeta.
    std::vector<double> zetas{0.0};
    std::vector<Optimizer> optimizers{Optimizer::FeaPSO, Optimizer::ES, Optimizer::Fixed};
    double es_spacing = 0.4;
    std::vector<Objective> objectives{Objective::SSR, Objective::SEE};
    PsoConfig pso;
    ScaConfig sca;
    RawParams params;
    std::vector<double> sweep_pmax{20.0, 25.0, 30.0, 35.0, 40.0};
    std::vector<int> sweep_n{1, 2, 3, 4};
    std::vector<double> sweep_zeta{0.0, 0.01, 0.02, 0.05, 0.1};
    std::uint64_t seed_base = 1;
    std::string out;
    int workers = 1;
    /// Wall-clock columns are 0 unless enabled, which keeps CSVs reproducible.
    bool record_timing = false;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

enum class Stage { Stage1, Stage2 };

const char* to_string(Stage stage);
Stage parse_stage(const std::string& name);

struct RunRecord {
    std::uint64_t scenario_id = 0;
    Layout layout = Layout::Parallel;
    ModelKind model = ModelKind::Phase;
    double zeta = 0.0;
    int K = 0;
    int N = 0;
    double pmax_dbm = 0.0;
    Optimizer optimizer = Optimizer::FeaPSO;
    Stage stage = Stage::Stage1;
    Objective objective = Objective::SSR;
    double sum_rate = 0.0;
    double sum_leakage = 0.0;
    double ssr = 0.0;
    double see = 0.0;
    double beam_power_w = 0.0;
    int sca_iters = 0;
    double wall_ms = 0.0;
    /// "ok", or the reason the record must be left out of aggregates.
    std::string status = "ok";

    bool ok() const { return status == "ok"; }
};

/// Runs every realization of the configured experiment. Records are ordered
/// by scenario, layout, sweep point, optimizer, objective and stage, and are
/// identical for any worker count.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

/// Records of one realization; run_experiment concatenates these.
std::vector<RunRecord> run_realization(const ExperimentConfig& cfg, int index);

/// Sorted step function: the i-th distinct order statistic carries the
/// fraction of samples <= it. Throws std::invalid_argument on empty input.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values);

struct Aggregate {
    Layout layout = Layout::Parallel;
    ModelKind model = ModelKind::Phase;
    double zeta = 0.0;
    int K = 0;
    int N = 0;
    double pmax_dbm = 0.0;
    Optimizer optimizer = Optimizer::FeaPSO;
    Stage stage = Stage::Stage1;
    Objective objective = Objective::SSR;
    int count = 0;
    int failed = 0;
    double sum_rate = 0.0;
    double sum_leakage = 0.0;
    double ssr = 0.0;
    double see = 0.0;
    double beam_power_w = 0.0;
};

/// Means over the "ok" records of every distinct group, in order of first
/// appearance.
std::vector<Aggregate> aggregate(const std::vector<RunRecord>& records);

/// The aggregate matching the given group, or nullptr.
const Aggregate* find_aggregate(const std::vector<Aggregate>& aggregates, Layout layout, Optimizer optimizer,
                                Stage stage, Objective objective);

inline constexpr const char* kCsvHeader =
    "scenario_id,layout,model,zeta,K,N,pmax_dbm,optimizer,stage,objective,sum_rate,sum_leakage,ssr,see,"
    "beam_power_w,sca_iters,wall_ms,status";

void write_csv(const std::vector<RunRecord>& records, std::ostream& out);
/// Throws std::runtime_error with the path when the file cannot be written.
void write_csv(const std::vector<RunRecord>& records, const std::string& path);

std::vector<RunRecord> read_csv(std::istream& in);
std::vector<RunRecord> read_csv(const std::string& path);

/// CDF of stage-wise SSR per (layout, optimizer, stage) group, written as
/// "layout,optimizer,stage,objective,ssr,probability".
void write_cdf_csv(const std::vector<RunRecord>& records, const std::string& path);

/// Fixed-width summary table of the aggregates.
void print_summary(const std::vector<Aggregate>& aggregates, std::ostream& out);

}  // namespace pinchsec
