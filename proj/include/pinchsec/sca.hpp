// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// Stage-2 beamforming and artificial-noise design by successive convex
// approximation. Each iteration linearizes the rate constraints around the
// current beams and solves the resulting exponential/second-order cone
// program.
//
// Channels are divided by the receiver's noise standard deviation before the
// subproblem is built, so noise terms become 1 and the log-domain auxiliaries
// stay well scaled. Rates and objectives are unaffected.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pinchsec/channel.hpp"
#include "pinchsec/conic.hpp"

namespace pinchsec {

enum class Objective { SSR, SEE };

const char* to_string(Objective objective);
Objective parse_objective(const std::string& name);

struct ScaConfig {
    int max_iters = 30;
    double rel_tol = 1e-4;
    double beta_floor = 1e-6;
    double an_init_fraction = 0.05;
    /// Users whose starting secrecy margin R_k - max(R_eve, floor) falls
    /// below this are first re-steered away from Eve, then dropped.
    double activation_margin = 1e-6;
    conic::SolverOptions solver;

    void validate() const;
};

/// Expansion point of one SCA iteration. Auxiliary vectors are indexed by
/// LU (k - 1); entries of inactive LUs are unused.
struct ScaState {
    EffectiveChannels channels;
    NoisePowers noise;
    double power_budget = 0.0;
    double circuit_power = 0.0;
    Objective objective = Objective::SSR;

    BeamSet beams;
    std::vector<bool> active;
    std::vector<double> alpha, beta, a, b, c, d, f;
    std::vector<double> lambda, g, h;
    int iteration = 0;
    std::vector<double> trace;

    int num_lus() const { return channels.num_lus(); }
    int num_active() const;
};

/// Sets `beams` as the expansion point (inactive LUs forced to zero) and
/// recomputes every tilde auxiliary so the linearizations are tight there.
void set_expansion_point(ScaState& state, const BeamSet& beams, double beta_floor);

/// Starting point from the heuristic beams: LUs share (1 - rho0) P_max, the
/// AN vector carries rho0 P_max along Eve's channel. LUs without a positive
/// secrecy margin are re-steered into Eve's null space, and dropped if that
/// does not help.
ScaState init_state(const EffectiveChannels& channels, const SystemParams& params, const ScaConfig& cfg,
                    Objective objective);
ScaState init_state(const Scenario& scenario, const Placement& placement, const ChannelModel& model,
                    const ScaConfig& cfg, Objective objective);

/// Like init_state but starts from the given beams (rho0 is not applied).
ScaState init_state_from(const EffectiveChannels& channels, const SystemParams& params, const ScaConfig& cfg,
                         Objective objective, const BeamSet& beams);

/// Variable and block bookkeeping of a built subproblem.
struct ScaSubproblem {
    conic::ConicProblem problem;
    /// Beam slot of each beam vector (0 = AN, LU k at beam_slot[k]; -1 if inactive).
    std::vector<int> beam_slot;
    std::vector<int> alpha, beta, a, b, c, d, f;
    std::vector<int> lambda, g, h;
    /// Index of the first cone block that belongs to LU k (k - 1).
    std::vector<int> first_block;
    int power_block = -1;

    int w_re(int slot, int l) const { return 4 * slot + 2 * l; }
    int w_im(int slot, int l) const { return 4 * slot + 2 * l + 1; }
};

ScaSubproblem build_ssr_subproblem(const ScaState& state);
ScaSubproblem build_see_subproblem(const ScaState& state);
ScaSubproblem build_subproblem(const ScaState& state);

/// The expansion point of `state` as a vector of the subproblem variables.
Eigen::VectorXd expansion_vector(const ScaState& state, const ScaSubproblem& sub);

/// Beams read back from a subproblem solution.
BeamSet beams_from_solution(const ScaState& state, const ScaSubproblem& sub, const Eigen::VectorXd& x);

/// For every linearized term, |surrogate - exact| evaluated at the expansion
/// point through the built cone blocks.
std::vector<double> linearization_gaps(const ScaState& state, const ScaSubproblem& sub);

/// Largest scale-relative violation of the exact (unlinearized) auxiliary
/// constraints at a subproblem solution x. Power is checked separately.
double original_constraint_violation(const ScaState& state, const ScaSubproblem& sub, const Eigen::VectorXd& x);

/// True objective (ssr or see) of the given beams on the state's channels.
double true_objective(const ScaState& state, const BeamSet& beams);

enum class ScaStatus { Converged, MaxIters, IterLimit, NumericalFailure };

const char* to_string(ScaStatus status);

struct ScaResult {
    BeamSet beams;
    double objective = 0.0;
    std::vector<double> trace;
    ScaStatus status = ScaStatus::Converged;
    int iterations = 0;
    /// True when the returned beams come from the stage-1 start rather than
    /// the default initialization.
    bool restarted = false;
};

/// Called after every solved subproblem with the state it was built around.
using ScaObserver = std::function<void(const ScaState&, const ScaSubproblem&, const conic::ConicSolution&)>;

/// Runs SCA from `state` until the relative gain of the true objective drops
/// below rel_tol or max_iters subproblems have been solved. The trace holds
/// the true objective of the start and every accepted iterate.
ScaResult sca_iterate(ScaState state, const ScaConfig& cfg, const ScaObserver& observer = {});

/// Full stage-2 pipeline: init_state, sca_iterate, and a restart from the
/// stage-1 beams when the default start ends below them.
ScaResult sca_optimize(Objective objective, const EffectiveChannels& channels, const SystemParams& params,
                       const ScaConfig& cfg, const ScaObserver& observer = {});
ScaResult sca_optimize(Objective objective, const Scenario& scenario, const Placement& placement,
                       const ChannelModel& model, const ScaConfig& cfg, const ScaObserver& observer = {});

}  // namespace pinchsec
