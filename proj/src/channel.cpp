// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include "pinchsec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pinchsec {

ChannelModel ChannelModel::phase_and_attenuation(double zeta)
{
    if (!(zeta >= 0.0))
        throw std::invalid_argument("attenuation coefficient must be >= 0");
    return {true, zeta};
}

cplx inwaveguide_gain(const Point3& feed, const Point3& pin, double guided_wavelength, const ChannelModel& model)
{
    const double d = (feed - pin).norm();
    const cplx phase = std::polar(1.0, -2.0 * std::numbers::pi * d / guided_wavelength);
    if (!model.attenuation)
        return phase;
    return std::exp(-model.zeta * d) * phase;
}

cplx freespace_gain(const Point3& pin, const Point3& receiver, double wavelength, double eta)
{
    const double d = (receiver - pin).norm();
    return std::polar(std::sqrt(eta) / d, -2.0 * std::numbers::pi * d / wavelength);
}

Vec2c effective_channel(const Scenario& scenario, const Placement& placement, const ChannelModel& model, int k)
{
    const SystemParams& p = scenario.params;
    const Point3& rx = scenario.receiver(k);
    Vec2c f = Vec2c::Zero();
    for (int l = 1; l <= 2; ++l) {
        const Point3 feed = feed_point(scenario.layout, l, p);
        cplx acc = 0.0;
        for (int n = 0; n < placement.pas_per_waveguide(); ++n) {
            const Point3 pin = pin_position(scenario.layout, l, placement.coords(l - 1, n), p);
            acc += inwaveguide_gain(feed, pin, p.guided_wavelength, model) *
                   freespace_gain(pin, rx, p.wavelength, p.eta);
        }
        f(l - 1) = acc;
    }
    return f;
}

EffectiveChannels effective_channels(const Scenario& scenario, const Placement& placement, const ChannelModel& model)
{
    const SystemParams& p = scenario.params;
    const int num_rx = scenario.num_lus() + 1;
    EffectiveChannels out;
    out.f.assign(num_rx, Vec2c::Zero());
    // Loop pins outermost so each in-waveguide gain is evaluated once.
    for (int l = 1; l <= 2; ++l) {
        const Point3 feed = feed_point(scenario.layout, l, p);
        for (int n = 0; n < placement.pas_per_waveguide(); ++n) {
            const Point3 pin = pin_position(scenario.layout, l, placement.coords(l - 1, n), p);
            const cplx g = inwaveguide_gain(feed, pin, p.guided_wavelength, model);
            for (int k = 0; k < num_rx; ++k)
                out.f[k](l - 1) += g * freespace_gain(pin, scenario.receiver(k), p.wavelength, p.eta);
        }
    }
    return out;
}

BeamSet BeamSet::zeros(int num_lus)
{
    BeamSet b;
    b.w.assign(num_lus + 1, Vec2c::Zero());
    return b;
}

double BeamSet::total_power() const
{
    double p = 0.0;
    for (const auto& v : w)
        p += v.squaredNorm();
    return p;
}

namespace {

// log2(1 + |f^H w_k|^2 / (sum_{j != k} |f^H w_j|^2 + noise))
double stream_rate(const Vec2c& f, const BeamSet& beams, int k, double noise)
{
    double signal = 0.0;
    double interference = noise;
    for (int j = 0; j < static_cast<int>(beams.w.size()); ++j) {
        const double g = std::norm(f.dot(beams.w[j]));  // Eigen's dot conjugates the left operand
        if (j == k)
            signal = g;
        else
            interference += g;
    }
    return std::log2(1.0 + signal / interference);
}

}  // namespace

double rate_lu(const EffectiveChannels& F, const BeamSet& beams, int k, double noise_lu)
{
    return stream_rate(F.f[k], beams, k, noise_lu);
}

double rate_eve(const EffectiveChannels& F, const BeamSet& beams, int k, double noise_eve)
{
    return stream_rate(F.f[0], beams, k, noise_eve);
}

double secrecy_rate(const EffectiveChannels& F, const BeamSet& beams, int k, const NoisePowers& noise)
{
    return std::max(rate_lu(F, beams, k, noise.lu) - rate_eve(F, beams, k, noise.eve), 0.0);
}

double ssr(const EffectiveChannels& F, const BeamSet& beams, const NoisePowers& noise)
{
    double total = 0.0;
    for (int k = 1; k <= F.num_lus(); ++k)
        total += secrecy_rate(F, beams, k, noise);
    return total;
}

double see(const EffectiveChannels& F, const BeamSet& beams, const NoisePowers& noise, double circuit_power)
{
    if (!(circuit_power > 0.0))
        throw std::invalid_argument("circuit power must be positive");
    return ssr(F, beams, noise) / (beams.total_power() + circuit_power);
}

RateSummary summarize(const EffectiveChannels& F, const BeamSet& beams, const SystemParams& params)
{
    RateSummary s;
    for (int k = 1; k <= F.num_lus(); ++k) {
        const double r = rate_lu(F, beams, k, params.noise_lu);
        const double e = rate_eve(F, beams, k, params.noise_eve);
        s.sum_rate += r;
        s.sum_leakage += e;
        s.ssr += std::max(r - e, 0.0);
    }
    s.beam_power = beams.total_power();
    s.see = s.ssr / (s.beam_power + params.circuit_power);
    return s;
}

}  // namespace pinchsec
