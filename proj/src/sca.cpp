// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include "pinchsec/sca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pinchsec/placement.hpp"

namespace pinchsec {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

using conic::AffineExpr;
using conic::ConeKind;

Vec2c normalized(const ScaState& state, int k)
{
    const double noise = k == 0 ? state.noise.eve : state.noise.lu;
    return state.channels.f[k] / std::sqrt(noise);
}

cplx inner(const Vec2c& f, const Vec2c& w) { return f.dot(w); }

// Received power of every beam at receiver k on noise-normalized channels.
struct Powers {
    std::vector<double> at;  // |f_k^H w_j|^2, j = 0..K
    double sum = 0.0;
};

Powers received(const ScaState& state, const BeamSet& beams, int k)
{
    const Vec2c fk = normalized(state, k);
    Powers p;
    p.at.resize(beams.w.size());
    for (std::size_t j = 0; j < beams.w.size(); ++j) {
        p.at[j] = std::norm(inner(fk, beams.w[j]));
        p.sum += p.at[j];
    }
    return p;
}

// Re and Im of f^H w_slot as affine expressions of the real beam variables.
std::pair<AffineExpr, AffineExpr> inner_expr(const Vec2c& f, const ScaSubproblem& sub, int slot)
{
    AffineExpr re, im;
    for (int l = 0; l < 2; ++l) {
        const double p = f(l).real();
        const double q = f(l).imag();
        re.add(sub.w_re(slot, l), p).add(sub.w_im(slot, l), q);
        im.add(sub.w_im(slot, l), p).add(sub.w_re(slot, l), -q);
    }
    return {re, im};
}

// 2 Re{conj(q) f^H w} - |q|^2, the first-order expansion of |f^H w|^2 at a
// point where f^H w = q.
AffineExpr linearized_power(const Vec2c& f, const ScaSubproblem& sub, int slot, cplx q)
{
    auto [re, im] = inner_expr(f, sub, slot);
    AffineExpr out = 2.0 * q.real() * re + 2.0 * q.imag() * im;
    out += -std::norm(q);
    return out;
}

// Rotated cone |z|^2 <= tau written as ((tau+1)/2, (tau-1)/2, z) in SOC.
std::vector<AffineExpr> rotated_rows(const AffineExpr& tau, const std::vector<AffineExpr>& z)
{
    std::vector<AffineExpr> rows;
    rows.reserve(z.size() + 2);
    rows.push_back(0.5 * (tau + AffineExpr(1.0)));
    rows.push_back(0.5 * (tau - AffineExpr(1.0)));
    rows.insert(rows.end(), z.begin(), z.end());
    return rows;
}

// e^{t}(1 + x - t) as an affine expression of variable x.
AffineExpr tangent_exp(int var, double t)
{
    const double e = std::exp(t);
    AffineExpr out = AffineExpr::var(var, e);
    out += e * (1.0 - t);
    return out;
}

bool expansion_point_usable(const ScaState& state)
{
    for (int k = 0; k < state.num_lus(); ++k) {
        if (!state.active[k])
            continue;
        const double vals[] = {state.alpha[k], state.beta[k], state.a[k], state.b[k],
                               state.c[k],     state.d[k],    state.f[k]};
        for (double v : vals)
            if (!std::isfinite(v))
                return false;
        if (state.alpha[k] < state.beta[k])
            return false;
        if (state.objective == Objective::SEE) {
            if (!(state.lambda[k] > 0.0) || !std::isfinite(state.g[k]) || !std::isfinite(state.h[k]))
                return false;
        }
    }
    return true;
}

void resize_aux(ScaState& state)
{
    const auto K = static_cast<std::size_t>(state.num_lus());
    for (auto* v : {&state.alpha, &state.beta, &state.a, &state.b, &state.c, &state.d, &state.f, &state.lambda,
                    &state.g, &state.h})
        v->assign(K, 0.0);
}

}  // namespace

const char* to_string(Objective objective) { return objective == Objective::SSR ? "ssr" : "see"; }

Objective parse_objective(const std::string& name)
{
    if (name == "ssr")
        return Objective::SSR;
    if (name == "see")
        return Objective::SEE;
    throw std::invalid_argument("unknown objective '" + name + "' (expected ssr or see)");
}

const char* to_string(ScaStatus status)
{
    switch (status) {
    case ScaStatus::Converged:
        return "converged";
    case ScaStatus::MaxIters:
        return "max_iters";
    case ScaStatus::IterLimit:
        return "iter_limit";
    case ScaStatus::NumericalFailure:
        return "numerical_failure";
    }
    return "?";
}

void ScaConfig::validate() const
{
    if (max_iters < 1)
        throw std::invalid_argument("sca max_iters must be at least 1");
    if (!(rel_tol >= 0.0))
        throw std::invalid_argument("sca rel_tol must be non-negative");
    if (!(beta_floor > 0.0))
        throw std::invalid_argument("sca beta_floor must be positive");
    if (!(an_init_fraction >= 0.0 && an_init_fraction < 1.0))
        throw std::invalid_argument("sca an_init_fraction must lie in [0, 1)");
    if (!(activation_margin >= 0.0))
        throw std::invalid_argument("sca activation_margin must be non-negative");
    if (!(solver.tol > 0.0) || solver.max_iter < 1)
        throw std::invalid_argument("invalid solver tolerance or iteration limit");
}

int ScaState::num_active() const { return static_cast<int>(std::count(active.begin(), active.end(), true)); }

void set_expansion_point(ScaState& state, const BeamSet& beams, double beta_floor)
{
    const int K = state.num_lus();
    state.beams = beams;
    for (int k = 1; k <= K; ++k)
        if (!state.active[k - 1])
            state.beams.w[k].setZero();
    resize_aux(state);
    const Powers eve = received(state, state.beams, 0);
    const double total = state.beams.total_power() + state.circuit_power;
    for (int k = 1; k <= K; ++k) {
        if (!state.active[k - 1])
            continue;
        const Powers lu = received(state, state.beams, k);
        const double signal = lu.at[k];
        const double interference = lu.sum - signal + 1.0;
        const double leak = eve.at[k];
        const double eve_interference = eve.sum - leak + 1.0;
        const int i = k - 1;
        state.alpha[i] = std::log2(1.0 + signal / interference);
        state.beta[i] = std::max(std::log2(1.0 + leak / eve_interference), beta_floor);
        state.a[i] = std::log(signal) - std::log(interference);
        state.b[i] = std::log(interference);
        state.c[i] = std::log(std::expm1(kLn2 * state.beta[i]));
        state.d[i] = std::log(eve_interference);
        state.f[i] = state.c[i] + state.d[i];
        if (state.objective == Objective::SEE) {
            state.lambda[i] = (state.alpha[i] - state.beta[i]) / total;
            state.g[i] = std::log(state.lambda[i]);
            state.h[i] = std::log(total);
        }
    }
}

ScaState init_state_from(const EffectiveChannels& channels, const SystemParams& params, const ScaConfig& cfg,
                         Objective objective, const BeamSet& beams)
{
    cfg.validate();
    const int K = channels.num_lus();
    if (static_cast<int>(beams.w.size()) != K + 1)
        throw std::invalid_argument("beam set does not match the number of LUs");
    ScaState state;
    state.channels = channels;
    state.noise = noise_of(params);
    state.power_budget = params.power_budget;
    state.circuit_power = params.circuit_power;
    state.objective = objective;
    state.active.assign(K, params.power_budget > 0.0);

    BeamSet w = beams;
    const Vec2c& f0 = channels.f[0];
    const double f0n2 = f0.squaredNorm();
    std::vector<bool> steered(K, false);
    for (int pass = 0; pass <= 2 * K + 1; ++pass) {
        bool changed = false;
        for (int k = 1; k <= K; ++k) {
            if (!state.active[k - 1])
                continue;
            const double margin = rate_lu(channels, w, k, state.noise.lu) -
                                  std::max(rate_eve(channels, w, k, state.noise.eve), cfg.beta_floor);
            if (margin >= cfg.activation_margin)
                continue;
            changed = true;
            const double norm = w.w[k].norm();
            Vec2c v = channels.f[k];
            if (f0n2 > 0.0)
                v -= f0 * (f0.dot(channels.f[k]) / f0n2);
            if (!steered[k - 1] && norm > 0.0 && v.norm() > 1e-12 * channels.f[k].norm()) {
                w.w[k] = v * (norm / v.norm());
                steered[k - 1] = true;
            } else {
                w.w[k].setZero();
                state.active[k - 1] = false;
            }
        }
        if (!changed)
            break;
    }
    set_expansion_point(state, w, cfg.beta_floor);
    return state;
}

ScaState init_state(const EffectiveChannels& channels, const SystemParams& params, const ScaConfig& cfg,
                    Objective objective)
{
    const int K = channels.num_lus();
    BeamSet beams = BeamSet::zeros(K);
    if (params.power_budget > 0.0) {
        const double rho = cfg.an_init_fraction;
        beams = heuristic_beams(channels, (1.0 - rho) * params.power_budget, params.noise_lu);
        const Vec2c& f0 = channels.f[0];
        if (rho > 0.0 && f0.norm() > 0.0)
            beams.w[0] = f0 * (std::sqrt(rho * params.power_budget) / f0.norm());
    }
    return init_state_from(channels, params, cfg, objective, beams);
}

ScaState init_state(const Scenario& scenario, const Placement& placement, const ChannelModel& model,
                    const ScaConfig& cfg, Objective objective)
{
    return init_state(effective_channels(scenario, placement, model), scenario.params, cfg, objective);
}

// ---------------------------------------------------------------------------
// Subproblem construction

ScaSubproblem build_subproblem(const ScaState& state)
{
    const int K = state.num_lus();
    const bool see = state.objective == Objective::SEE;
    ScaSubproblem sub;
    auto& P = sub.problem;

    sub.beam_slot.assign(K + 1, -1);
    sub.beam_slot[0] = 0;
    int slots = 1;
    for (int k = 1; k <= K; ++k)
        if (state.active[k - 1])
            sub.beam_slot[k] = slots++;
    for (int k = 0; k <= K; ++k) {
        if (sub.beam_slot[k] < 0)
            continue;
        for (int l = 1; l <= 2; ++l) {
            P.add_variable("w" + std::to_string(k) + ".re" + std::to_string(l));
            P.add_variable("w" + std::to_string(k) + ".im" + std::to_string(l));
        }
    }

    for (auto* v : {&sub.alpha, &sub.beta, &sub.a, &sub.b, &sub.c, &sub.d, &sub.f, &sub.lambda, &sub.g, &sub.h})
        v->assign(K, -1);
    sub.first_block.assign(K, -1);
    for (int k = 1; k <= K; ++k) {
        if (!state.active[k - 1])
            continue;
        const std::string s = std::to_string(k);
        const int i = k - 1;
        sub.alpha[i] = P.add_variable("alpha" + s);
        sub.beta[i] = P.add_variable("beta" + s);
        sub.a[i] = P.add_variable("a" + s);
        sub.b[i] = P.add_variable("b" + s);
        sub.c[i] = P.add_variable("c" + s);
        sub.d[i] = P.add_variable("d" + s);
        sub.f[i] = P.add_variable("f" + s);
        if (see) {
            sub.lambda[i] = P.add_variable("lambda" + s);
            sub.g[i] = P.add_variable("g" + s);
            sub.h[i] = P.add_variable("h" + s);
        }
    }

    AffineExpr objective;
    for (int i = 0; i < K; ++i) {
        if (!state.active[i])
            continue;
        if (see)
            objective.add(sub.lambda[i], 1.0);
        else
            objective.add(sub.alpha[i], 1.0).add(sub.beta[i], -1.0);
    }
    P.set_objective(objective);

    std::vector<AffineExpr> all_w;
    for (int v = 0; v < 4 * slots; ++v)
        all_w.push_back(AffineExpr::var(v));

    const Vec2c f0 = normalized(state, 0);
    const AffineExpr one(1.0);
    for (int k = 1; k <= K; ++k) {
        const int i = k - 1;
        if (!state.active[i])
            continue;
        const Vec2c fk = normalized(state, k);
        const int slot = sub.beam_slot[k];
        const std::string s = std::to_string(k);
        sub.first_block[i] = static_cast<int>(P.blocks().size());

        AffineExpr rate_bound = tangent_exp(sub.a[i], state.a[i]);
        rate_bound += 1.0;
        P.add_block(ConeKind::Exponential, {AffineExpr::var(sub.alpha[i], kLn2), one, rate_bound}, "rate_lu" + s);

        std::vector<AffineExpr> z;
        for (int j = 0; j <= K; ++j) {
            if (j == k || sub.beam_slot[j] < 0)
                continue;
            auto [re, im] = inner_expr(fk, sub, sub.beam_slot[j]);
            z.push_back(re);
            z.push_back(im);
        }
        AffineExpr tau = tangent_exp(sub.b[i], state.b[i]);
        tau += -1.0;
        P.add_block(ConeKind::SecondOrder, rotated_rows(tau, z), "interference_lu" + s);

        const double two_beta = std::exp2(state.beta[i]);
        AffineExpr leak_bound = AffineExpr::var(sub.beta[i], two_beta * kLn2);
        leak_bound += two_beta * (1.0 - kLn2 * state.beta[i]) - 1.0;
        P.add_block(ConeKind::Exponential, {AffineExpr::var(sub.c[i]), one, leak_bound}, "rate_eve" + s);

        AffineExpr eve_interference(1.0);
        for (int j = 0; j <= K; ++j) {
            if (j == k || sub.beam_slot[j] < 0)
                continue;
            eve_interference += linearized_power(f0, sub, sub.beam_slot[j], inner(f0, state.beams.w[j]));
        }
        P.add_block(ConeKind::Exponential, {AffineExpr::var(sub.d[i]), one, eve_interference},
                    "interference_eve" + s);

        const AffineExpr signal = linearized_power(fk, sub, slot, inner(fk, state.beams.w[k]));
        P.add_block(ConeKind::Exponential, {AffineExpr::var(sub.a[i]) + AffineExpr::var(sub.b[i]), one, signal},
                    "signal_lu" + s);

        auto [lre, lim] = inner_expr(f0, sub, slot);
        P.add_block(ConeKind::SecondOrder, rotated_rows(tangent_exp(sub.f[i], state.f[i]), {lre, lim}),
                    "leakage" + s);

        P.add_block(ConeKind::Nonneg,
                    {AffineExpr::var(sub.c[i]) + AffineExpr::var(sub.d[i]) - AffineExpr::var(sub.f[i])},
                    "leak_split" + s);
        P.add_block(ConeKind::Nonneg, {AffineExpr::var(sub.alpha[i]) - AffineExpr::var(sub.beta[i])},
                    "secrecy" + s);

        if (see) {
            P.add_block(ConeKind::Nonneg, {tangent_exp(sub.g[i], state.g[i]) - AffineExpr::var(sub.lambda[i])},
                        "efficiency" + s);
            AffineExpr budget = tangent_exp(sub.h[i], state.h[i]);
            budget += -state.circuit_power;
            P.add_block(ConeKind::SecondOrder, rotated_rows(budget, all_w), "consumed_power" + s);
            P.add_block(ConeKind::Exponential,
                        {AffineExpr::var(sub.g[i]) + AffineExpr::var(sub.h[i]), one,
                         AffineExpr::var(sub.alpha[i]) - AffineExpr::var(sub.beta[i])},
                        "fraction" + s);
        }
    }

    std::vector<AffineExpr> power_rows{AffineExpr(std::sqrt(std::max(state.power_budget, 0.0)))};
    power_rows.insert(power_rows.end(), all_w.begin(), all_w.end());
    sub.power_block = static_cast<int>(P.blocks().size());
    P.add_block(ConeKind::SecondOrder, power_rows, "power");
    return sub;
}

ScaSubproblem build_ssr_subproblem(const ScaState& state)
{
    ScaState copy = state;
    copy.objective = Objective::SSR;
    return build_subproblem(copy);
}

ScaSubproblem build_see_subproblem(const ScaState& state)
{
    if (state.objective != Objective::SEE)
        throw std::invalid_argument("state was not initialized for the SEE objective");
    return build_subproblem(state);
}

Eigen::VectorXd expansion_vector(const ScaState& state, const ScaSubproblem& sub)
{
    Eigen::VectorXd x = Eigen::VectorXd::Zero(sub.problem.num_vars());
    for (int k = 0; k <= state.num_lus(); ++k) {
        const int slot = sub.beam_slot[k];
        if (slot < 0)
            continue;
        for (int l = 0; l < 2; ++l) {
            x(sub.w_re(slot, l)) = state.beams.w[k](l).real();
            x(sub.w_im(slot, l)) = state.beams.w[k](l).imag();
        }
    }
    auto put = [&x](const std::vector<int>& idx, const std::vector<double>& val) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            if (idx[i] >= 0)
                x(idx[i]) = val[i];
    };
    put(sub.alpha, state.alpha);
    put(sub.beta, state.beta);
    put(sub.a, state.a);
    put(sub.b, state.b);
    put(sub.c, state.c);
    put(sub.d, state.d);
    put(sub.f, state.f);
    put(sub.lambda, state.lambda);
    put(sub.g, state.g);
    put(sub.h, state.h);
    return x;
}

BeamSet beams_from_solution(const ScaState& state, const ScaSubproblem& sub, const Eigen::VectorXd& x)
{
    BeamSet beams = BeamSet::zeros(state.num_lus());
    for (int k = 0; k <= state.num_lus(); ++k) {
        const int slot = sub.beam_slot[k];
        if (slot < 0)
            continue;
        for (int l = 0; l < 2; ++l)
            beams.w[k](l) = cplx(x(sub.w_re(slot, l)), x(sub.w_im(slot, l)));
    }
    return beams;
}

std::vector<double> linearization_gaps(const ScaState& state, const ScaSubproblem& sub)
{
    const Eigen::VectorXd x = expansion_vector(state, sub);
    const auto& blocks = sub.problem.blocks();
    auto row = [&](int block, int r) { return blocks[block].A.row(r).dot(x) + blocks[block].b(r); };
    auto rel = [](double surrogate, double exact) {
        return std::abs(surrogate - exact) / std::max(1.0, std::abs(exact));
    };
    const Powers eve = received(state, state.beams, 0);
    std::vector<double> gaps;
    for (int k = 1; k <= state.num_lus(); ++k) {
        const int i = k - 1;
        if (!state.active[i])
            continue;
        const int fb = sub.first_block[i];
        const Powers lu = received(state, state.beams, k);
        gaps.push_back(rel(row(fb, 2), std::exp(x(sub.a[i])) + 1.0));
        gaps.push_back(rel(row(fb + 1, 0) + row(fb + 1, 1), std::exp(x(sub.b[i])) - 1.0));
        gaps.push_back(rel(row(fb + 2, 2), std::exp2(x(sub.beta[i])) - 1.0));
        gaps.push_back(rel(row(fb + 3, 2), eve.sum - eve.at[k] + 1.0));
        gaps.push_back(rel(row(fb + 4, 2), lu.at[k]));
        gaps.push_back(rel(row(fb + 5, 0) + row(fb + 5, 1), std::exp(x(sub.f[i]))));
        if (state.objective == Objective::SEE) {
            gaps.push_back(rel(row(fb + 8, 0) + x(sub.lambda[i]), std::exp(x(sub.g[i]))));
            gaps.push_back(rel(row(fb + 9, 0) + row(fb + 9, 1), std::exp(x(sub.h[i])) - state.circuit_power));
        }
    }
    return gaps;
}

double original_constraint_violation(const ScaState& state, const ScaSubproblem& sub, const Eigen::VectorXd& x)
{
    const BeamSet beams = beams_from_solution(state, sub, x);
    const Powers eve = received(state, beams, 0);
    const double consumed = beams.total_power() + state.circuit_power;
    double worst = 0.0;
    auto geq = [&worst](double lhs, double rhs) {
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        worst = std::max(worst, (rhs - lhs) / scale);
    };
    for (int k = 1; k <= state.num_lus(); ++k) {
        const int i = k - 1;
        if (!state.active[i])
            continue;
        const Powers lu = received(state, beams, k);
        const double alpha = x(sub.alpha[i]), beta = x(sub.beta[i]);
        const double a = x(sub.a[i]), b = x(sub.b[i]), c = x(sub.c[i]), d = x(sub.d[i]), f = x(sub.f[i]);
        geq(std::exp(a), std::exp2(alpha) - 1.0);
        geq(std::exp(b), lu.sum - lu.at[k] + 1.0);
        geq(std::exp2(beta) - 1.0, std::exp(c));
        geq(eve.sum - eve.at[k] + 1.0, std::exp(d));
        geq(c + d, f);
        geq(lu.at[k], std::exp(a + b));
        geq(std::exp(f), eve.at[k]);
        geq(alpha, beta);
        if (state.objective == Objective::SEE) {
            const double lambda = x(sub.lambda[i]), g = x(sub.g[i]), h = x(sub.h[i]);
            geq(std::exp(g), lambda);
            geq(std::exp(h), consumed);
            geq(alpha - beta, std::exp(g + h));
        }
    }
    return std::max(worst, 0.0);
}

double true_objective(const ScaState& state, const BeamSet& beams)
{
    if (state.objective == Objective::SSR)
        return ssr(state.channels, beams, state.noise);
    return see(state.channels, beams, state.noise, state.circuit_power);
}

// ---------------------------------------------------------------------------
// Iteration

ScaResult sca_iterate(ScaState state, const ScaConfig& cfg, const ScaObserver& observer)
{
    cfg.validate();
    ScaResult res;
    res.beams = state.beams;
    double current = true_objective(state, state.beams);
    res.trace.push_back(current);
    res.status = ScaStatus::MaxIters;
    if (state.num_active() == 0 || state.power_budget <= 0.0 || !expansion_point_usable(state)) {
        res.status = ScaStatus::Converged;
        res.objective = current;
        return res;
    }

    for (int it = 0; it < cfg.max_iters; ++it) {
        const ScaSubproblem sub = build_subproblem(state);
        const Eigen::VectorXd start = expansion_vector(state, sub);
        const auto sol = conic::solve(sub.problem, cfg.solver,
                                      std::span<const double>(start.data(), static_cast<std::size_t>(start.size())));
        ++res.iterations;
        if (observer)
            observer(state, sub, sol);
        if (sol.status != conic::SolveStatus::Optimal) {
            res.status = sol.status == conic::SolveStatus::NumericalFailure ? ScaStatus::NumericalFailure
                                                                             : ScaStatus::IterLimit;
            break;
        }
        const BeamSet next_beams = beams_from_solution(state, sub, sol.x);
        const double value = true_objective(state, next_beams);
        if (!(value >= current)) {
            res.status = ScaStatus::Converged;
            break;
        }
        const double gain = (value - current) / std::max(std::abs(current), 1e-12);
        res.beams = next_beams;
        res.trace.push_back(value);
        current = value;

        ScaState next = state;
        set_expansion_point(next, next_beams, cfg.beta_floor);
        next.iteration = state.iteration + 1;
        if (!expansion_point_usable(next)) {
            res.status = ScaStatus::Converged;
            break;
        }
        state = std::move(next);
        if (gain < cfg.rel_tol) {
            res.status = ScaStatus::Converged;
            break;
        }
    }
    res.objective = current;
    return res;
}

ScaResult sca_optimize(Objective objective, const EffectiveChannels& channels, const SystemParams& params,
                       const ScaConfig& cfg, const ScaObserver& observer)
{
    cfg.validate();
    const int K = channels.num_lus();
    if (params.power_budget <= 0.0) {
        ScaResult res;
        res.beams = BeamSet::zeros(K);
        res.trace.push_back(0.0);
        return res;
    }
    const NoisePowers noise = noise_of(params);
    const BeamSet stage1 = heuristic_beams(channels, params.power_budget, params.noise_lu);
    const double stage1_value = objective == Objective::SSR ? ssr(channels, stage1, noise)
                                                            : see(channels, stage1, noise, params.circuit_power);

    ScaResult res = sca_iterate(init_state(channels, params, cfg, objective), cfg, observer);
    if (res.objective >= stage1_value)
        return res;

    ScaResult again = sca_iterate(init_state_from(channels, params, cfg, objective, stage1), cfg, observer);
    again.restarted = true;
    if (again.objective >= res.objective)
        res = std::move(again);
    if (res.objective < stage1_value) {
        res.beams = stage1;
        res.objective = stage1_value;
        res.trace.assign(1, stage1_value);
        res.restarted = true;
    }
    return res;
}

ScaResult sca_optimize(Objective objective, const Scenario& scenario, const Placement& placement,
                       const ChannelModel& model, const ScaConfig& cfg, const ScaObserver& observer)
{
    return sca_optimize(objective, effective_channels(scenario, placement, model), scenario.params, cfg, observer);
}

}  // namespace pinchsec
