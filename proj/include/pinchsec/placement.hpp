// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// Stage-1 PA placement: the feasibility projection, heuristic (regularized
// zero-forcing) beamformers, FeaPSO, the exhaustive grid search and the
// fixed-antenna baseline.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pinchsec/channel.hpp"
#include "pinchsec/scenario.hpp"

namespace pinchsec {

/// Clamp to [-D, D], sort, rescale the free slack to fit B_max = 2D - (N-1)guard
/// and rebuild a strictly guard-spaced ascending sequence. Inputs that are
/// already feasible and sorted come back bit-identical.
/// Throws std::invalid_argument if 2D < (N-1)guard.
std::vector<double> project_feasible(std::span<const double> raw, double half_size, double guard);

/// Regularized channel-inversion beams at full power with w_0 = 0:
/// w_k = sqrt(P/K) M^-1 f_k / |M^-1 f_k|, M = I + sum_k (P/K)/noise f_k f_k^H.
BeamSet heuristic_beams(const EffectiveChannels& F, double power_budget, double noise_lu);

/// SSR of the heuristic beams on the given channels.
double heuristic_ssr(const EffectiveChannels& F, const SystemParams& params);

/// Builds a Placement from a flattened [waveguide 1 | waveguide 2] vector.
Placement placement_from_flat(std::span<const double> flat, int pas_per_waveguide);
std::vector<double> flatten(const Placement& placement);

/// Fitness of a feasible flattened candidate: SSR with heuristic beams.
double fitness(std::span<const double> candidate, const Scenario& scenario, const ChannelModel& model);

struct PsoConfig {
    int swarm_size = 1000;
    double inertia = 0.8;
    double accel_personal = 1.5;
    double accel_global = 1.5;
    int max_iters = 100;
    int stall_iters = 20;
    double stall_tol = 1e-3;
    double init_spread = 1.0;
    double velocity_init_range = 1.5;
    bool inject_baseline = true;
    std::uint64_t seed = 1;
    int workers = 1;

    void validate() const;
};

struct PlacementResult {
    Placement placement;
    BeamSet stage1_beams;
    double stage1_ssr = 0.0;
    std::vector<double> fitness_trace;
    long long evaluations = 0;
};

PlacementResult feapso(const Scenario& scenario, const ChannelModel& model, const PsoConfig& cfg);

/// Grid search over ascending guard-respecting tuples on {-D, -D+s, ...}.
/// Throws std::invalid_argument if spacing <= 0, if no feasible tuple exists
/// or if the cross product exceeds `max_combinations`.
PlacementResult exhaustive_search(const Scenario& scenario, const ChannelModel& model, double spacing,
                                  long long max_combinations = 50'000'000);

/// N antennas per waveguide centred on 0 with guard spacing.
Placement fixed_baseline_placement(const SystemParams& params);

/// Evaluates heuristic beams at an arbitrary feasible placement.
PlacementResult evaluate_placement(const Scenario& scenario, const ChannelModel& model, const Placement& placement);

}  // namespace pinchsec
