// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pinchsec/channel.hpp"
#include "pinchsec/placement.hpp"

using namespace pinchsec;

namespace {

SystemParams defaults() { return derive_params(RawParams{}); }

Placement random_placement(const SystemParams& p, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-3.0 * p.half_size, 3.0 * p.half_size);
    Placement pl;
    pl.coords.resize(2, p.pas_per_waveguide);
    for (int l = 0; l < 2; ++l) {
        std::vector<double> raw(p.pas_per_waveguide);
        for (double& v : raw)
            v = u(rng);
        const auto t = project_feasible(raw, p.half_size, p.guard_distance);
        for (int n = 0; n < p.pas_per_waveguide; ++n)
            pl.coords(l, n) = t[n];
    }
    return pl;
}

EffectiveChannels scalar_channels(Vec2c eve, Vec2c lu)
{
    EffectiveChannels F;
    F.f = {eve, lu};
    return F;
}

}  // namespace

TEST_CASE("in-waveguide gain")
{
    const Point3 feed(-10.0, 0.0, 3.0);
    CHECK(std::abs(inwaveguide_gain(feed, feed, 0.03, ChannelModel::phase_only()) - cplx(1.0, 0.0)) < 1e-15);
    const double lg = 0.0357;
    const cplx g = inwaveguide_gain(feed, feed + Point3(lg, 0.0, 0.0), lg, ChannelModel::phase_only());
    CHECK(std::abs(g - cplx(1.0, 0.0)) < 1e-12);
    const cplx a = inwaveguide_gain(feed, feed + Point3(10.0, 0.0, 0.0), lg, ChannelModel::phase_and_attenuation(0.1));
    CHECK(std::abs(a) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    double prev = 1.0;
    for (double d = 0.0; d <= 20.0; d += 0.5) {
        const double m = std::abs(inwaveguide_gain(feed, feed + Point3(d, 0.0, 0.0), lg, ChannelModel::phase_and_attenuation(0.05)));
        CHECK(m <= prev + 1e-15);
        CHECK(std::abs(std::abs(inwaveguide_gain(feed, feed + Point3(d, 0.0, 0.0), lg, ChannelModel::phase_only())) - 1.0) < 1e-14);
        prev = m;
    }
    CHECK_THROWS(ChannelModel::phase_and_attenuation(-0.1));
}

TEST_CASE("free-space gain")
{
    const SystemParams p = defaults();
    const cplx h = freespace_gain(Point3(0, 0, 3), Point3(0, 0, 0), p.wavelength, p.eta);
    CHECK(std::abs(h) == doctest::Approx(1.3253e-3).epsilon(1e-4));
    CHECK(std::abs(h) == doctest::Approx(p.wavelength / (4.0 * std::numbers::pi) / 3.0).epsilon(1e-13));
    const cplx h2 = freespace_gain(Point3(0, 0, 6), Point3(0, 0, 0), p.wavelength, p.eta);
    CHECK(std::abs(h2) == doctest::Approx(0.5 * std::abs(h)).epsilon(1e-14));
    const cplx h3 = freespace_gain(Point3(0, 0, 200 * p.wavelength), Point3(0, 0, 0), p.wavelength, p.eta);
    CHECK(std::abs(std::arg(h3)) < 1e-9);
}

TEST_CASE("effective channels match the dense h^T G oracle")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        RawParams raw;
        raw.pas_per_waveguide = 1 + trial % 4;
        const SystemParams p = derive_params(raw);
        const Layout layout = trial % 2 ? Layout::Orthogonal : Layout::Parallel;
        const Scenario s = sample_scenario(p, layout, 1000 + trial);
        const Placement pl = random_placement(p, rng);
        const ChannelModel model = trial % 3 ? ChannelModel::phase_only() : ChannelModel::phase_and_attenuation(0.05);
        const EffectiveChannels F = effective_channels(s, pl, model);
        for (int k = 0; k <= s.num_lus(); ++k) {
            const Vec2c ref = oracle::dense_effective_channel(s, pl, model, k);
            CHECK((F.f[k] - ref).norm() <= 1e-12 * std::max(1.0, ref.norm()));
            CHECK((effective_channel(s, pl, model, k) - F.f[k]).norm() <= 1e-15);
        }
    }
}

TEST_CASE("single PA channels and the triangle bound")
{
    RawParams raw;
    raw.pas_per_waveguide = 1;
    const SystemParams p = derive_params(raw);
    const Scenario s = sample_scenario(p, Layout::Parallel, 3);
    Placement pl;
    pl.coords.resize(2, 1);
    pl.coords << 2.0, -4.0;
    const Vec2c f = effective_channel(s, pl, ChannelModel::phase_only(), 1);
    for (int l = 1; l <= 2; ++l) {
        const Point3 feed = feed_point(s.layout, l, p);
        const Point3 pin = pin_position(s.layout, l, pl.coords(l - 1, 0), p);
        const cplx expect = inwaveguide_gain(feed, pin, p.guided_wavelength, ChannelModel::phase_only()) *
                            freespace_gain(pin, s.receiver(1), p.wavelength, p.eta);
        CHECK(std::abs(f(l - 1) - expect) < 1e-18);
    }

    const SystemParams p2 = defaults();
    const Scenario s2 = sample_scenario(p2, Layout::Orthogonal, 5);
    std::mt19937_64 rng(5);
    const Placement pl2 = random_placement(p2, rng);
    const Vec2c f2 = effective_channel(s2, pl2, ChannelModel::phase_only(), 1);
    for (int l = 1; l <= 2; ++l) {
        double bound = 0.0;
        for (int n = 0; n < 2; ++n)
            bound += std::sqrt(p2.eta) / (pin_position(s2.layout, l, pl2.coords(l - 1, n), p2) - s2.receiver(1)).norm();
        CHECK(std::abs(f2(l - 1)) <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("zero attenuation is the phase-only model")
{
    const SystemParams p = defaults();
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const Scenario s = sample_scenario(p, trial % 2 ? Layout::Orthogonal : Layout::Parallel, trial);
        const Placement pl = random_placement(p, rng);
        const EffectiveChannels a = effective_channels(s, pl, ChannelModel::phase_only());
        const EffectiveChannels b = effective_channels(s, pl, ChannelModel::phase_and_attenuation(0.0));
        for (int k = 0; k <= s.num_lus(); ++k)
            CHECK((a.f[k] - b.f[k]).norm() <= 1e-12);
    }
}

TEST_CASE("attenuation never strengthens a single-PA channel")
{
    // With several PAs per waveguide attenuation reweights the terms and can
    // undo destructive interference, so only N = 1 is monotone pointwise.
    RawParams raw;
    raw.pas_per_waveguide = 1;
    const SystemParams p = derive_params(raw);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Scenario s = sample_scenario(p, trial % 2 ? Layout::Orthogonal : Layout::Parallel, trial);
        const Placement pl = random_placement(p, rng);
        Vec2c prev = Vec2c::Constant(1e300);
        for (double z : {0.0, 0.01, 0.02, 0.05, 0.1}) {
            const Vec2c f = effective_channel(s, pl, ChannelModel::phase_and_attenuation(z), 1);
            for (int l = 0; l < 2; ++l)
                CHECK(std::abs(f(l)) <= std::abs(prev(l)) * (1.0 + 1e-12));
            prev = f;
        }
    }
}

TEST_CASE("LU rates")
{
    const double sigma = 1e-5;
    const double n = sigma * sigma;
    BeamSet b = BeamSet::zeros(1);
    EffectiveChannels F = scalar_channels(Vec2c(0, 1), Vec2c(1, 0));
    b.w[1] = Vec2c(std::sqrt(3.0) * sigma, 0);
    CHECK(rate_lu(F, b, 1, n) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rate_eve(F, b, 1, n) == 0.0);
    CHECK(secrecy_rate(F, b, 1, {n, n}) == doctest::Approx(2.0).epsilon(1e-12));
    b.w[1] = Vec2c(sigma, 0);
    b.w[0] = Vec2c(sigma, 0);
    CHECK(rate_lu(F, b, 1, n) == doctest::Approx(0.58496).epsilon(1e-5));
    CHECK(rate_lu(F, BeamSet::zeros(1), 1, n) == 0.0);
}

TEST_CASE("Eve leakage and clamping")
{
    const double n = 4e-10;
    const double s0 = std::sqrt(n);
    EffectiveChannels F = scalar_channels(Vec2c(1, 0), Vec2c(1, 0));
    BeamSet b = BeamSet::zeros(1);
    b.w[1] = Vec2c(s0, 0);
    b.w[0] = Vec2c(2 * s0, 0);
    CHECK(rate_eve(F, b, 1, n) == doctest::Approx(0.26303).epsilon(1e-5));
    CHECK(rate_eve(F, b, 1, n) == doctest::Approx(rate_lu(F, b, 1, n)).epsilon(1e-14));
    CHECK(secrecy_rate(F, b, 1, {n, n}) == 0.0);

    // Eve hears the user better than the user does: the clamp engages.
    F = scalar_channels(Vec2c(2, 0), Vec2c(1, 0));
    b.w[0] = Vec2c::Zero();
    CHECK(rate_eve(F, b, 1, n) > rate_lu(F, b, 1, n));
    CHECK(secrecy_rate(F, b, 1, {n, n}) == 0.0);
}

TEST_CASE("secure sum rate and energy efficiency")
{
    const double n = 1.0;
    EffectiveChannels F;
    F.f = {Vec2c(2, 0), Vec2c(0, 1), Vec2c(1, 0)};
    BeamSet b = BeamSet::zeros(2);
    b.w[1] = Vec2c(0, std::sqrt(3.0));
    b.w[2] = Vec2c(0.1, 0);
    CHECK(secrecy_rate(F, b, 1, {n, n}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(secrecy_rate(F, b, 2, {n, n}) == 0.0);
    CHECK(ssr(F, b, {n, n}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(see(F, b, {n, n}, 0.1) == doctest::Approx(2.0 / (3.0 + 0.01 + 0.1)).epsilon(1e-12));
    CHECK(ssr(F, BeamSet::zeros(2), {n, n}) == 0.0);
    CHECK(see(F, BeamSet::zeros(2), {n, n}, 0.1) == 0.0);
    CHECK_THROWS(see(F, b, {n, n}, 0.0));

    const SystemParams p = defaults();
    const RateSummary r = summarize(F, b, p);
    CHECK(r.beam_power == doctest::Approx(3.01).epsilon(1e-14));
    CHECK(r.see == doctest::Approx(r.ssr / (r.beam_power + p.circuit_power)).epsilon(1e-12));
}

TEST_CASE("unit energy efficiency denominator")
{
    // One LU with a rate of exactly 10 bits and 0.9 W of beam power.
    EffectiveChannels F = scalar_channels(Vec2c(0, 1), Vec2c(1, 0));
    BeamSet b = BeamSet::zeros(1);
    b.w[1] = Vec2c(std::sqrt(0.9), 0);
    const double noise = 0.9 / 1023.0;
    CHECK(ssr(F, b, {noise, noise}) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(see(F, b, {noise, noise}, 0.1) == doctest::Approx(10.0).epsilon(1e-12));
}
