// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// Pinching and free-space channels, effective per-waveguide channels and the
// rate / secrecy / energy-efficiency metrics built on them.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "pinchsec/scenario.hpp"

namespace pinchsec {

using cplx = std::complex<double>;
using Vec2c = Eigen::Vector2cd;

/// In-waveguide propagation model. zeta is the amplitude attenuation in
/// nepers per meter and is ignored for the phase-only model.
struct ChannelModel {
    bool attenuation = false;
    double zeta = 0.0;

    static ChannelModel phase_only() { return {}; }
    static ChannelModel phase_and_attenuation(double zeta);
};

/// exp(-zeta d) exp(-j 2 pi d / lambda_g) with d = |feed - pin|.
cplx inwaveguide_gain(const Point3& feed, const Point3& pin, double guided_wavelength,
                      const ChannelModel& model);

/// sqrt(eta) exp(-j 2 pi d / lambda) / d with d = |pin - receiver|.
cplx freespace_gain(const Point3& pin, const Point3& receiver, double wavelength, double eta);

/// f_k in C^2 for every receiver; index 0 is Eve, 1..K the LUs.
struct EffectiveChannels {
    std::vector<Vec2c> f;

    int num_lus() const { return static_cast<int>(f.size()) - 1; }
};

/// Component l = sum_n g(feed_l, pin_{l,n}) h(pin_{l,n}, receiver k).
Vec2c effective_channel(const Scenario& scenario, const Placement& placement,
                        const ChannelModel& model, int k);

EffectiveChannels effective_channels(const Scenario& scenario, const Placement& placement,
                                     const ChannelModel& model);

/// w[0] is the artificial-noise vector, w[1..K] the LU beamformers.
struct BeamSet {
    std::vector<Vec2c> w;

    static BeamSet zeros(int num_lus);
    double total_power() const;
};

struct NoisePowers {
    double lu = 0.0;
    double eve = 0.0;
};

inline NoisePowers noise_of(const SystemParams& p) { return {p.noise_lu, p.noise_eve}; }

/// Achievable rate of LU k (1..K) in bits/s/Hz; AN counts as interference.
double rate_lu(const EffectiveChannels& F, const BeamSet& beams, int k, double noise_lu);

/// Leakage of stream k (1..K) at Eve in bits/s/Hz.
double rate_eve(const EffectiveChannels& F, const BeamSet& beams, int k, double noise_eve);

/// max(rate_lu - rate_eve, 0).
double secrecy_rate(const EffectiveChannels& F, const BeamSet& beams, int k, const NoisePowers& noise);

/// Secure sum rate with the clamp applied per user.
double ssr(const EffectiveChannels& F, const BeamSet& beams, const NoisePowers& noise);

/// ssr / (total beam power + circuit power). Throws if circuit_power <= 0.
double see(const EffectiveChannels& F, const BeamSet& beams, const NoisePowers& noise,
           double circuit_power);

struct RateSummary {
    double sum_rate = 0.0;
    double sum_leakage = 0.0;
    double ssr = 0.0;
    double see = 0.0;
    double beam_power = 0.0;
};

RateSummary summarize(const EffectiveChannels& F, const BeamSet& beams, const SystemParams& params);

}  // namespace pinchsec
