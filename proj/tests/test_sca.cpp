// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pinchsec/placement.hpp"
#include "pinchsec/sca.hpp"

using namespace pinchsec;

namespace {

struct Instance {
    SystemParams params;
    EffectiveChannels channels;
};

Instance fixed_instance(std::uint64_t seed, Layout layout = Layout::Parallel, RawParams raw = {})
{
    const SystemParams p = derive_params(raw);
    const Scenario s = sample_scenario(p, layout, seed);
    return {p, effective_channels(s, fixed_baseline_placement(p), ChannelModel::phase_only())};
}

double expansion_objective(const ScaState& st)
{
    double v = 0.0;
    for (int k = 0; k < st.num_lus(); ++k)
        if (st.active[k])
            v += st.objective == Objective::SSR ? st.alpha[k] - st.beta[k] : st.lambda[k];
    return v;
}

}  // namespace

TEST_CASE("objective names")
{
    CHECK(parse_objective("ssr") == Objective::SSR);
    CHECK(parse_objective("see") == Objective::SEE);
    CHECK(std::string(to_string(Objective::SEE)) == "see");
    CHECK_THROWS(parse_objective("snr"));
}

TEST_CASE("initial state without artificial noise is the stage-1 point")
{
    const Instance in = fixed_instance(3);
    ScaConfig cfg;
    cfg.an_init_fraction = 0.0;
    const ScaState st = init_state(in.channels, in.params, cfg, Objective::SSR);
    CHECK(st.beams.w[0].norm() == 0.0);
    CHECK(st.beams.total_power() == doctest::Approx(in.params.power_budget).epsilon(1e-12));
}

TEST_CASE("initial state with artificial noise")
{
    const Instance in = fixed_instance(3);
    ScaConfig cfg;
    const ScaState st = init_state(in.channels, in.params, cfg, Objective::SSR);
    CHECK(st.beams.w[0].squaredNorm() == doctest::Approx(0.05 * in.params.power_budget).epsilon(1e-12));
    CHECK(st.beams.total_power() <= in.params.power_budget * (1.0 + 1e-12));
    const Vec2c& f0 = in.channels.f[0];
    CHECK(std::abs(f0.dot(st.beams.w[0])) == doctest::Approx(f0.norm() * st.beams.w[0].norm()).epsilon(1e-12));
}

TEST_CASE("subproblem sizes")
{
    // Pick a realization where both LUs start with a positive margin.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Instance in = fixed_instance(seed);
        const ScaState ssr_state = init_state(in.channels, in.params, ScaConfig{}, Objective::SSR);
        if (ssr_state.num_active() != 2)
            continue;
        const ScaSubproblem a = build_ssr_subproblem(ssr_state);
        CHECK(a.problem.num_vars() == 26);
        CHECK(a.problem.blocks().size() == 17);
        CHECK(a.power_block == 16);
        CHECK(a.problem.blocks()[a.power_block].dim() == 13);
        CHECK_THROWS(build_see_subproblem(ssr_state));

        const ScaState see_state = init_state(in.channels, in.params, ScaConfig{}, Objective::SEE);
        const ScaSubproblem b = build_see_subproblem(see_state);
        CHECK(b.problem.num_vars() == 32);
        return;
    }
    FAIL("no realization with two active users");
}

TEST_CASE("expansion point is feasible and tight")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Instance in = fixed_instance(seed, seed % 2 ? Layout::Orthogonal : Layout::Parallel);
        for (Objective obj : {Objective::SSR, Objective::SEE}) {
            const ScaState st = init_state(in.channels, in.params, ScaConfig{}, obj);
            const ScaSubproblem sub = build_subproblem(st);
            const Eigen::VectorXd x0 = expansion_vector(st, sub);
            CHECK(conic::max_violation(sub.problem, x0) <= 1e-9);
            for (double gap : linearization_gaps(st, sub))
                CHECK(gap <= 1e-9);
            CHECK(original_constraint_violation(st, sub, x0) <= 1e-9);

            const conic::ConicSolution sol = conic::solve(sub.problem, ScaConfig{}.solver, std::span<const double>(x0.data(), x0.size()));
            REQUIRE(sol.status == conic::SolveStatus::Optimal);
            CHECK(sol.objective >= expansion_objective(st) - 1e-6 * std::max(1.0, expansion_objective(st)));
        }
    }
}

TEST_CASE("zero power budget gives zero beams")
{
    RawParams raw;
    raw.pmax_dbm = -400.0;
    Instance in = fixed_instance(1, Layout::Parallel, raw);
    in.params.power_budget = 0.0;
    const ScaResult r = sca_optimize(Objective::SSR, in.channels, in.params, ScaConfig{});
    CHECK(r.beams.total_power() == 0.0);
    CHECK(ssr(in.channels, r.beams, noise_of(in.params)) == 0.0);
}

TEST_CASE("SCA improves on the stage-1 beams and respects the budget")
{
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        for (Layout layout : {Layout::Parallel, Layout::Orthogonal}) {
            const Instance in = fixed_instance(seed, layout);
            const BeamSet s1 = heuristic_beams(in.channels, in.params.power_budget, in.params.noise_lu);
            const NoisePowers noise = noise_of(in.params);
            for (Objective obj : {Objective::SSR, Objective::SEE}) {
                const ScaResult r = sca_optimize(obj, in.channels, in.params, ScaConfig{});
                const double start = obj == Objective::SSR ? ssr(in.channels, s1, noise)
                                                           : see(in.channels, s1, noise, in.params.circuit_power);
                CHECK(r.objective >= start - 1e-6);
                CHECK(r.beams.total_power() <= in.params.power_budget + 1e-7);
                for (std::size_t i = 1; i < r.trace.size(); ++i)
                    CHECK(r.trace[i] >= r.trace[i - 1] - 1e-6);
                const double fresh = obj == Objective::SSR ? ssr(in.channels, r.beams, noise)
                                                           : see(in.channels, r.beams, noise, in.params.circuit_power);
                CHECK(std::abs(fresh - r.objective) <= 1e-9 * std::max(1.0, fresh));
            }
        }
    }
}

TEST_CASE("every iterate satisfies the exact constraints")
{
    const Instance in = fixed_instance(9, Layout::Orthogonal);
    for (Objective obj : {Objective::SSR, Objective::SEE}) {
        int calls = 0;
        const ScaObserver check = [&](const ScaState& st, const ScaSubproblem& sub, const conic::ConicSolution& sol) {
            ++calls;
            for (double gap : linearization_gaps(st, sub))
                CHECK(gap <= 1e-9);
            if (sol.status != conic::SolveStatus::Optimal)
                return;
            CHECK(original_constraint_violation(st, sub, sol.x) <= 1e-6);
            CHECK(beams_from_solution(st, sub, sol.x).total_power() <= in.params.power_budget + 1e-7);
        };
        sca_optimize(obj, in.channels, in.params, ScaConfig{}, check);
        CHECK(calls >= 1);
    }
}

TEST_CASE("huge circuit power drives the efficiency to zero")
{
    const Instance in = fixed_instance(4);
    double prev = 1e300;
    for (double pc_dbm : {20.0, 40.0, 60.0, 80.0}) {
        SystemParams p = in.params;
        p.circuit_power = dbm_to_watts(pc_dbm);
        const ScaResult r = sca_optimize(Objective::SEE, in.channels, p, ScaConfig{});
        CHECK(r.objective < prev);
        prev = r.objective;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("invalid settings are rejected")
{
    ScaConfig cfg;
    cfg.max_iters = 0;
    CHECK_THROWS(cfg.validate());
    cfg = ScaConfig{};
    cfg.an_init_fraction = 1.0;
    CHECK_THROWS(cfg.validate());
    cfg = ScaConfig{};
    cfg.beta_floor = 0.0;
    CHECK_THROWS(cfg.validate());
}
