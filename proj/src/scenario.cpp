// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include "pinchsec/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pinchsec {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

}  // namespace

SystemParams derive_params(const RawParams& raw)
{
    require(raw.num_lus >= 1, "num_lus must be >= 1");
    require(raw.pas_per_waveguide >= 1, "pas_per_waveguide must be >= 1");
    require(raw.half_size > 0.0, "half_size must be positive");
    require(raw.height > 0.0, "height must be positive");
    require(raw.carrier_freq > 0.0, "carrier_freq must be positive");
    require(raw.refractive_index > 1.0, "refractive_index must exceed 1 (guided wavelength < free wavelength)");
    require(std::isfinite(raw.noise_lu_dbm) && std::isfinite(raw.noise_eve_dbm) &&
                std::isfinite(raw.pmax_dbm) && std::isfinite(raw.pc_dbm),
            "dBm quantities must be finite");

    SystemParams p;
    p.num_lus = raw.num_lus;
    p.pas_per_waveguide = raw.pas_per_waveguide;
    p.half_size = raw.half_size;
    p.height = raw.height;
    p.carrier_freq = raw.carrier_freq;
    p.wavelength = kSpeedOfLight / raw.carrier_freq;
    p.refractive_index = raw.refractive_index;
    p.guided_wavelength = p.wavelength / raw.refractive_index;
    switch (raw.guard_policy) {
    case GuardPolicy::HalfWavelength:
        p.guard_distance = p.wavelength / 2.0;
        break;
    case GuardPolicy::Explicit:
        require(raw.guard_distance > 0.0, "guard_distance must be positive");
        p.guard_distance = raw.guard_distance;
        break;
    }
    p.noise_lu = dbm_to_watts(raw.noise_lu_dbm);
    p.noise_eve = dbm_to_watts(raw.noise_eve_dbm);
    p.power_budget = dbm_to_watts(raw.pmax_dbm);
    p.circuit_power = dbm_to_watts(raw.pc_dbm);
    p.pmax_dbm = raw.pmax_dbm;
    const double four_pi = 4.0 * std::numbers::pi;
    p.eta = p.wavelength * p.wavelength / (four_pi * four_pi);

    if (2.0 * p.half_size < (p.pas_per_waveguide - 1) * p.guard_distance)
        throw std::invalid_argument("infeasible placement space: 2D < (N-1)*guard_distance");
    return p;
}

SystemParams with_power_budget_dbm(SystemParams params, double pmax_dbm)
{
    require(std::isfinite(pmax_dbm), "pmax_dbm must be finite");
    params.pmax_dbm = pmax_dbm;
    params.power_budget = dbm_to_watts(pmax_dbm);
    return params;
}

const char* to_string(Layout layout)
{
    return layout == Layout::Parallel ? "parallel" : "orthogonal";
}

Layout parse_layout(const std::string& name)
{
    if (name == "parallel")
        return Layout::Parallel;
    if (name == "orthogonal")
        return Layout::Orthogonal;
    throw std::invalid_argument("unknown layout '" + name + "'");
}

const char* to_string(EveMode mode) { return mode == EveMode::Uniform ? "uniform" : "in_front"; }

double parallel_offset(int l, double half_size)
{
    return l == 1 ? half_size / 6.0 : -half_size / 6.0;
}

namespace {

void check_waveguide(int l)
{
    if (l != 1 && l != 2)
        throw std::out_of_range("waveguide index must be 1 or 2");
}

}  // namespace

Point3 feed_point(Layout layout, int l, const SystemParams& params)
{
    check_waveguide(l);
    const double d = params.half_size;
    const double h = params.height;
    if (layout == Layout::Parallel)
        return {-d, parallel_offset(l, d), h};
    return l == 1 ? Point3{0.0, -d, h} : Point3{-d, 0.0, h};
}

Point3 pin_position(Layout layout, int l, double t, const SystemParams& params)
{
    check_waveguide(l);
    const double d = params.half_size;
    if (!(t >= -d && t <= d))
        throw std::out_of_range("PA coordinate outside [-D, D]");
    const double h = params.height;
    if (layout == Layout::Parallel)
        return {t, parallel_offset(l, d), h};
    return l == 1 ? Point3{0.0, t, h} : Point3{t, 0.0, h};
}

double uniform_shift_expectation(double d1, double d2, double shift, double offset)
{
    const double lo = d1 + shift;
    const double hi = d2 + shift;
    return (lo * lo + lo * hi + hi * hi) / 3.0 + offset;
}

double expected_sq_vertical_distance(Layout layout, double half_size, double height)
{
    // The receiver coordinate orthogonal to the waveguide is U(-D, D); the
    // waveguide sits at `offset` along that axis.
    const double offset = layout == Layout::Parallel ? parallel_offset(1, half_size) : 0.0;
    return uniform_shift_expectation(-half_size, half_size, -offset, height * height);
}

Scenario sample_scenario(const SystemParams& params, Layout layout, std::uint64_t seed, EveMode eve_mode)
{
    Scenario s;
    s.params = params;
    s.layout = layout;
    s.seed = seed;

    const double d = params.half_size;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-d, d);
    s.lu_positions.reserve(params.num_lus);

    if (eve_mode == EveMode::Uniform) {
        for (int k = 0; k < params.num_lus; ++k) {
            const double x = coord(rng);
            const double y = coord(rng);
            s.lu_positions.emplace_back(x, y, 0.0);
        }
        const double x = coord(rng);
        const double y = coord(rng);
        s.eve_position = {x, y, 0.0};
        return s;
    }

    std::uniform_real_distribution<double> half(0.0, d);
    double min_x = d;
    double mean_y = 0.0;
    for (int k = 0; k < params.num_lus; ++k) {
        const double x = half(rng);
        const double y = coord(rng);
        s.lu_positions.emplace_back(x, y, 0.0);
        min_x = std::min(min_x, x);
        mean_y += y;
    }
    mean_y /= params.num_lus;
    const double ex = std::uniform_real_distribution<double>(0.0, min_x)(rng);
    const double jitter = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    s.eve_position = {std::min(ex, std::nextafter(min_x, 0.0)), std::clamp(mean_y + jitter, -d, d), 0.0};
    return s;
}

bool Placement::is_feasible(const SystemParams& params, double slack) const
{
    const double d = params.half_size;
    for (int l = 0; l < 2; ++l) {
        for (int n = 0; n < coords.cols(); ++n) {
            const double t = coords(l, n);
            if (!(t >= -d - slack && t <= d + slack))
                return false;
            if (n > 0 && coords(l, n) - coords(l, n - 1) < params.guard_distance - slack)
                return false;
        }
    }
    return true;
}

}  // namespace pinchsec
