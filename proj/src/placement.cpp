// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include "pinchsec/placement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "pinchsec/parallel.hpp"

namespace pinchsec {

std::vector<double> project_feasible(std::span<const double> raw, double half_size, double guard)
{
    const int n = static_cast<int>(raw.size());
    const double budget = 2.0 * half_size - (n - 1) * guard;
    if (n == 0)
        return {};
    if (budget < 0.0)
        throw std::invalid_argument("project_feasible: 2D < (N-1)*guard");

    std::vector<double> t(raw.begin(), raw.end());
    for (double& v : t)
        v = std::clamp(v, -half_size, half_size);
    std::sort(t.begin(), t.end());

    // Rounding in a previous projection can leave gaps an ulp short of the
    // guard; treat those as feasible so projecting twice changes nothing.
    const double slack = guard * (1.0 - 1e-12);
    bool feasible = true;
    for (int i = 1; i < n && feasible; ++i)
        feasible = t[i] - t[i - 1] >= slack;
    if (feasible)
        return t;

    std::vector<double> gap(n);
    gap[0] = t[0] + half_size;
    for (int i = 1; i < n; ++i)
        gap[i] = std::max(t[i] - t[i - 1] - guard, 0.0);
    const double total = std::accumulate(gap.begin(), gap.end(), 0.0);
    const bool shrink = total > budget;
    if (shrink) {
        const double scale = budget / total;
        for (double& g : gap)
            g *= scale;
    }

    // Without shrinking, any prefix that needed no push is copied verbatim so
    // that feasible inputs are a fixed point in floating point too.
    std::vector<double> out(n);
    bool unchanged = !shrink;
    out[0] = unchanged ? t[0] : std::max(-half_size + gap[0], -half_size);
    for (int i = 1; i < n; ++i) {
        unchanged = unchanged && t[i] - t[i - 1] >= slack;
        if (unchanged) {
            out[i] = t[i];
            continue;
        }
        out[i] = out[i - 1] + guard + gap[i];
        while (out[i] - out[i - 1] < guard)
            out[i] = std::nextafter(out[i], std::numeric_limits<double>::infinity());
    }
    // Rounding can overshoot the far end; pull the tail back one ulp at a time.
    if (out[n - 1] > half_size) {
        out[n - 1] = half_size;
        for (int i = n - 2; i >= 0 && out[i + 1] - out[i] < guard; --i) {
            out[i] = out[i + 1] - guard;
            while (out[i + 1] - out[i] < guard)
                out[i] = std::nextafter(out[i], -std::numeric_limits<double>::infinity());
        }
        out[0] = std::max(out[0], -half_size);
    }
    return out;
}

BeamSet heuristic_beams(const EffectiveChannels& F, double power_budget, double noise_lu)
{
    const int num_lus = F.num_lus();
    if (num_lus < 1)
        throw std::invalid_argument("heuristic_beams needs at least one LU");
    const double per_user = power_budget / num_lus;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    for (int k = 1; k <= num_lus; ++k)
        m += (per_user / noise_lu) * (F.f[k] * F.f[k].adjoint());
    const Eigen::Matrix2cd m_inv = m.inverse();

    BeamSet beams = BeamSet::zeros(num_lus);
    for (int k = 1; k <= num_lus; ++k) {
        Vec2c dir = m_inv * F.f[k];
        const double norm = dir.norm();
        if (norm > 0.0)
            dir /= norm;
        else
            dir = Vec2c(1.0, 0.0);
        beams.w[k] = std::sqrt(per_user) * dir;
    }
    return beams;
}

double heuristic_ssr(const EffectiveChannels& F, const SystemParams& params)
{
    return ssr(F, heuristic_beams(F, params.power_budget, params.noise_lu), noise_of(params));
}

Placement placement_from_flat(std::span<const double> flat, int pas_per_waveguide)
{
    if (static_cast<int>(flat.size()) != 2 * pas_per_waveguide)
        throw std::invalid_argument("flattened placement has wrong length");
    Placement p;
    p.coords.resize(2, pas_per_waveguide);
    for (int l = 0; l < 2; ++l)
        for (int n = 0; n < pas_per_waveguide; ++n)
            p.coords(l, n) = flat[l * pas_per_waveguide + n];
    return p;
}

std::vector<double> flatten(const Placement& placement)
{
    const int n = placement.pas_per_waveguide();
    std::vector<double> out(2 * n);
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < n; ++i)
            out[l * n + i] = placement.coords(l, i);
    return out;
}

double fitness(std::span<const double> candidate, const Scenario& scenario, const ChannelModel& model)
{
    const Placement p = placement_from_flat(candidate, scenario.params.pas_per_waveguide);
    return heuristic_ssr(effective_channels(scenario, p, model), scenario.params);
}

void PsoConfig::validate() const
{
    if (swarm_size < 1)
        throw std::invalid_argument("swarm_size must be >= 1");
    if (!(inertia >= 0.0 && inertia <= 1.0))
        throw std::invalid_argument("inertia must lie in [0, 1]");
    if (accel_personal < 0.0 || accel_global < 0.0)
        throw std::invalid_argument("acceleration coefficients must be >= 0");
    if (max_iters < 0 || stall_iters < 1)
        throw std::invalid_argument("max_iters must be >= 0 and stall_iters >= 1");
    if (init_spread < 0.0 || velocity_init_range < 0.0)
        throw std::invalid_argument("init ranges must be >= 0");
}

Placement fixed_baseline_placement(const SystemParams& params)
{
    const int n = params.pas_per_waveguide;
    Placement p;
    p.coords.resize(2, n);
    for (int i = 0; i < n; ++i) {
        const double t = (i + 1 - (n + 1) / 2.0) * params.guard_distance;
        p.coords(0, i) = t;
        p.coords(1, i) = t;
    }
    return p;
}

PlacementResult evaluate_placement(const Scenario& scenario, const ChannelModel& model, const Placement& placement)
{
    PlacementResult r;
    r.placement = placement;
    const EffectiveChannels F = effective_channels(scenario, placement, model);
    r.stage1_beams = heuristic_beams(F, scenario.params.power_budget, scenario.params.noise_lu);
    r.stage1_ssr = ssr(F, r.stage1_beams, noise_of(scenario.params));
    r.fitness_trace = {r.stage1_ssr};
    r.evaluations = 1;
    return r;
}

namespace {

void project_particle(std::vector<double>& x, int n, const SystemParams& p)
{
    for (int l = 0; l < 2; ++l) {
        const std::span<const double> row(x.data() + l * n, n);
        const std::vector<double> fixed = project_feasible(row, p.half_size, p.guard_distance);
        std::copy(fixed.begin(), fixed.end(), x.begin() + l * n);
    }
}

// Mean LU coordinate along each waveguide's movable axis.
std::array<double, 2> init_centers(const Scenario& s)
{
    double mx = 0.0;
    double my = 0.0;
    for (const auto& q : s.lu_positions) {
        mx += q.x();
        my += q.y();
    }
    mx /= s.num_lus();
    my /= s.num_lus();
    if (s.layout == Layout::Parallel)
        return {mx, mx};
    return {my, mx};
}

}  // namespace

PlacementResult feapso(const Scenario& scenario, const ChannelModel& model, const PsoConfig& cfg)
{
    cfg.validate();
    const SystemParams& p = scenario.params;
    const int n = p.pas_per_waveguide;
    const int dim = 2 * n;
    const int swarm = cfg.swarm_size;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::vector<double>> pos(swarm, std::vector<double>(dim));
    std::vector<std::vector<double>> vel(swarm, std::vector<double>(dim));
    const auto centers = init_centers(scenario);
    for (int i = 0; i < swarm; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double c = centers[j / n];
            pos[i][j] = c + cfg.init_spread * (2.0 * unit(rng) - 1.0);
            vel[i][j] = cfg.velocity_init_range * (2.0 * unit(rng) - 1.0);
        }
    }
    if (cfg.inject_baseline)
        pos[0] = flatten(fixed_baseline_placement(p));

    std::vector<double> fit(swarm);
    auto evaluate_all = [&] {
        for (auto& x : pos)
            project_particle(x, n, p);
        parallel_for(static_cast<std::size_t>(swarm), cfg.workers,
                     [&](std::size_t i) { fit[i] = fitness(pos[i], scenario, model); });
    };

    evaluate_all();
    long long evaluations = swarm;
    std::vector<std::vector<double>> best_pos = pos;
    std::vector<double> best_fit = fit;
    int g = static_cast<int>(std::max_element(fit.begin(), fit.end()) - fit.begin());
    std::vector<double> global_pos = pos[g];
    double global_fit = fit[g];

    PlacementResult result;
    result.fitness_trace.push_back(global_fit);

    int stall = 0;
    for (int iter = 0; iter < cfg.max_iters && stall < cfg.stall_iters; ++iter) {
        // Updates draw from one sequential stream; only fitness evaluation
        // runs in parallel, so results do not depend on the worker count.
        for (int i = 0; i < swarm; ++i) {
            const double eta1 = unit(rng);
            const double eta2 = unit(rng);
            for (int j = 0; j < dim; ++j) {
                vel[i][j] = cfg.inertia * vel[i][j] + cfg.accel_personal * eta1 * (best_pos[i][j] - pos[i][j]) +
                            cfg.accel_global * eta2 * (global_pos[j] - pos[i][j]);
                pos[i][j] += vel[i][j];
            }
        }
        evaluate_all();
        evaluations += swarm;

        const double previous = global_fit;
        for (int i = 0; i < swarm; ++i) {
            if (fit[i] > best_fit[i]) {
                best_fit[i] = fit[i];
                best_pos[i] = pos[i];
            }
            if (fit[i] > global_fit) {
                global_fit = fit[i];
                global_pos = pos[i];
            }
        }
        result.fitness_trace.push_back(global_fit);
        stall = (global_fit - previous < cfg.stall_tol) ? stall + 1 : 0;
    }

    result.placement = placement_from_flat(global_pos, n);
    const EffectiveChannels F = effective_channels(scenario, result.placement, model);
    result.stage1_beams = heuristic_beams(F, p.power_budget, p.noise_lu);
    result.stage1_ssr = ssr(F, result.stage1_beams, noise_of(p));
    result.evaluations = evaluations;
    return result;
}

namespace {

// Ascending index tuples on the grid whose coordinates respect the guard.
void enumerate_tuples(const std::vector<double>& grid, int n, double guard, std::vector<int>& current,
                      std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(current.size()) == n) {
        out.push_back(current);
        return;
    }
    const int start = current.empty() ? 0 : current.back() + 1;
    for (int i = start; i < static_cast<int>(grid.size()); ++i) {
        if (!current.empty() && grid[i] - grid[current.back()] < guard)
            continue;
        current.push_back(i);
        enumerate_tuples(grid, n, guard, current, out);
        current.pop_back();
    }
}

}  // namespace

PlacementResult exhaustive_search(const Scenario& scenario, const ChannelModel& model, double spacing,
                                  long long max_combinations)
{
    if (!(spacing > 0.0))
        throw std::invalid_argument("exhaustive_search: spacing must be positive");
    const SystemParams& p = scenario.params;
    const int n = p.pas_per_waveguide;
    const int num_rx = scenario.num_lus() + 1;

    const int steps = static_cast<int>(std::floor(2.0 * p.half_size / spacing + 1e-9));
    std::vector<double> grid(steps + 1);
    for (int i = 0; i <= steps; ++i)
        grid[i] = std::min(-p.half_size + i * spacing, p.half_size);

    // Ascending tuples with index gaps >= g number C(M - (g - 1)(N - 1), N);
    // refuse oversized grids before materializing them.
    const int min_step = std::max(1, static_cast<int>(std::ceil(p.guard_distance / spacing - 1e-9)));
    const double slots = static_cast<double>(grid.size()) - static_cast<double>(min_step - 1) * (n - 1);
    double tuple_count = slots >= n ? 1.0 : 0.0;
    for (int i = 0; i < n && tuple_count > 0.0; ++i)
        tuple_count *= (slots - i) / (i + 1);
    if (tuple_count * tuple_count > 4.0 * static_cast<double>(max_combinations))
        throw std::invalid_argument("exhaustive_search: too many combinations for this spacing");

    std::vector<std::vector<int>> tuples;
    std::vector<int> current;
    enumerate_tuples(grid, n, p.guard_distance, current, tuples);
    if (tuples.empty())
        throw std::invalid_argument("exhaustive_search: grid admits no feasible tuple");
    const long long combos = static_cast<long long>(tuples.size()) * static_cast<long long>(tuples.size());
    if (combos > max_combinations)
        throw std::invalid_argument("exhaustive_search: too many combinations for this spacing");

    // Per waveguide, per tuple: the summed channel term for each receiver.
    std::array<std::vector<std::vector<cplx>>, 2> partial;
    for (int l = 1; l <= 2; ++l) {
        const Point3 feed = feed_point(scenario.layout, l, p);
        std::vector<std::vector<cplx>> per_point(grid.size(), std::vector<cplx>(num_rx));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Point3 pin = pin_position(scenario.layout, l, grid[i], p);
            const cplx g = inwaveguide_gain(feed, pin, p.guided_wavelength, model);
            for (int k = 0; k < num_rx; ++k)
                per_point[i][k] = g * freespace_gain(pin, scenario.receiver(k), p.wavelength, p.eta);
        }
        auto& sums = partial[l - 1];
        sums.assign(tuples.size(), std::vector<cplx>(num_rx, 0.0));
        for (std::size_t t = 0; t < tuples.size(); ++t)
            for (int idx : tuples[t])
                for (int k = 0; k < num_rx; ++k)
                    sums[t][k] += per_point[idx][k];
    }

    EffectiveChannels F;
    F.f.assign(num_rx, Vec2c::Zero());
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best1 = 0;
    std::size_t best2 = 0;
    for (std::size_t a = 0; a < tuples.size(); ++a) {
        for (std::size_t b = 0; b < tuples.size(); ++b) {
            for (int k = 0; k < num_rx; ++k)
                F.f[k] = Vec2c(partial[0][a][k], partial[1][b][k]);
            const double value = heuristic_ssr(F, p);
            if (value > best) {
                best = value;
                best1 = a;
                best2 = b;
            }
        }
    }

    Placement placement;
    placement.coords.resize(2, n);
    for (int i = 0; i < n; ++i) {
        placement.coords(0, i) = grid[tuples[best1][i]];
        placement.coords(1, i) = grid[tuples[best2][i]];
    }
    PlacementResult r = evaluate_placement(scenario, model, placement);
    r.evaluations = combos;
    return r;
}

}  // namespace pinchsec
