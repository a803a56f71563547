// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace pinchsec::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

struct Geometry {
    Eigen::Vector3d feed;
    Eigen::Vector3d axis;
};

// Waveguide line from the layout conventions: parallel guides run along x at
// y = +-D/6, orthogonal guide 1 runs along y at x = 0 and guide 2 along x.
Geometry waveguide(Layout layout, int l, double d, double h)
{
    if (layout == Layout::Parallel) {
        const double y = l == 1 ? d / 6.0 : -d / 6.0;
        return {{-d, y, h}, {1.0, 0.0, 0.0}};
    }
    if (l == 1)
        return {{0.0, -d, h}, {0.0, 1.0, 0.0}};
    return {{-d, 0.0, h}, {1.0, 0.0, 0.0}};
}

}  // namespace

Vec2c dense_effective_channel(const Scenario& scenario, const Placement& placement, const ChannelModel& model, int k)
{
    const SystemParams& p = scenario.params;
    const int n_pa = placement.pas_per_waveguide();
    const double lambda = kSpeedOfLight / p.carrier_freq;
    const double lambda_g = lambda / p.refractive_index;
    const double eta = lambda * lambda / (16.0 * kPi * kPi);
    const Eigen::Vector3d rx = k == 0 ? scenario.eve_position : scenario.lu_positions[k - 1];

    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(2 * n_pa, 2);
    Eigen::VectorXcd hk(2 * n_pa);
    for (int l = 1; l <= 2; ++l) {
        const Geometry g = waveguide(scenario.layout, l, p.half_size, p.height);
        for (int n = 0; n < n_pa; ++n) {
            const double t = placement.coords(l - 1, n);
            Eigen::Vector3d pin = g.feed;
            pin += (t + p.half_size) * g.axis;
            const double d_in = (pin - g.feed).norm();
            const double amp = model.attenuation ? std::exp(-model.zeta * d_in) : 1.0;
            G((l - 1) * n_pa + n, l - 1) = std::polar(amp, -2.0 * kPi * d_in / lambda_g);
            const double d_out = (rx - pin).norm();
            hk((l - 1) * n_pa + n) = std::polar(std::sqrt(eta) / d_out, -2.0 * kPi * d_out / lambda);
        }
    }
    return (hk.transpose() * G).transpose();
}

double monte_carlo_sq_distance(Layout layout, double half_size, double height, long long samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-half_size, half_size);
    const double off = layout == Layout::Parallel ? half_size / 6.0 : 0.0;
    long double acc = 0.0;
    for (long long i = 0; i < samples; ++i) {
        const double x = u(rng);
        const double y = u(rng);
        // Parallel guide 1 is the line y = D/6; orthogonal guide 1 is x = 0.
        const double across = layout == Layout::Parallel ? y - off : x;
        acc += across * across + height * height;
    }
    return static_cast<double>(acc / samples);
}

double printed_shift_expectation(double d1, double d2, double shift, double offset)
{
    const double lo = d1 + 2.0 * shift;
    const double hi = d2 + 2.0 * shift;
    return (lo * lo + lo * hi + hi * hi) / 3.0 + offset;
}

double ssr_single_user(const Vec2c& f_lu, const Vec2c& f_eve, const Vec2c& w_lu, const Vec2c& w_an, double noise_lu,
                       double noise_eve)
{
    const double s_lu = std::norm(f_lu.dot(w_lu));
    const double i_lu = std::norm(f_lu.dot(w_an));
    const double s_eve = std::norm(f_eve.dot(w_lu));
    const double i_eve = std::norm(f_eve.dot(w_an));
    const double r = std::log2(1.0 + s_lu / (i_lu + noise_lu)) - std::log2(1.0 + s_eve / (i_eve + noise_eve));
    return std::max(r, 0.0);
}

GridResult brute_force_single_user(const Vec2c& f_lu, const Vec2c& f_eve, double power_budget, double noise_lu,
                                   double noise_eve, int per_dim)
{
    // x = (AN share, theta_lu, phi_lu, theta_an, phi_an, power scale)
    using Params = std::array<double, 6>;
    auto value = [&](const Params& x) {
        const double share = std::clamp(x[0], 0.0, 1.0);
        const double scale = std::clamp(x[5], 0.0, 1.0);
        const double p_an = scale * power_budget * share;
        const double p_lu = scale * power_budget * (1.0 - share);
        const Vec2c w_lu(std::sqrt(p_lu) * std::cos(x[1]), std::polar(std::sqrt(p_lu) * std::sin(x[1]), x[2]));
        const Vec2c w_an(std::sqrt(p_an) * std::cos(x[3]), std::polar(std::sqrt(p_an) * std::sin(x[3]), x[4]));
        return ssr_single_user(f_lu, f_eve, w_lu, w_an, noise_lu, noise_eve);
    };

    const int m = per_dim;
    std::vector<std::pair<double, Params>> top;
    const std::size_t keep = 8;
    GridResult res;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d)
                    for (int e = 0; e < m; ++e) {
                        const Params x{static_cast<double>(a) / m, 0.5 * kPi * b / (m - 1), 2.0 * kPi * c / m,
                                       0.5 * kPi * d / (m - 1), 2.0 * kPi * e / m, 1.0};
                        const double v = value(x);
                        ++res.grid_points;
                        if (top.size() < keep || v > top.back().first) {
                            top.emplace_back(v, x);
                            std::sort(top.begin(), top.end(),
                                      [](const auto& l, const auto& r) { return l.first > r.first; });
                            if (top.size() > keep)
                                top.pop_back();
                        }
                    }

    const Params step0{1.0 / m, 0.5 * kPi / (m - 1), 2.0 * kPi / m, 0.5 * kPi / (m - 1), 2.0 * kPi / m, 0.1};
    for (auto [best, x] : top) {
        Params step = step0;
        for (int round = 0; round < 60; ++round) {
            bool moved = false;
            for (int i = 0; i < 6; ++i) {
                for (double dir : {1.0, -1.0}) {
                    Params y = x;
                    y[i] += dir * step[i];
                    if (i == 0 || i == 5)
                        y[i] = std::clamp(y[i], 0.0, 1.0);
                    const double v = value(y);
                    if (v > best) {
                        best = v;
                        x = y;
                        moved = true;
                    }
                }
            }
            if (!moved)
                for (double& s : step)
                    s *= 0.5;
        }
        res.best = std::max(res.best, best);
    }
    return res;
}

}  // namespace pinchsec::oracle
