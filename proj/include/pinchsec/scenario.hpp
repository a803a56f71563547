// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// Physical parameters, dual-waveguide geometry and receiver sampling.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace pinchsec {

using Point3 = Eigen::Vector3d;

inline constexpr double kSpeedOfLight = 299792458.0;

/// Converts a power level in dBm to watts.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

enum class GuardPolicy { HalfWavelength, Explicit };

/// Configuration-boundary parameters. Powers are in dBm here and nowhere else.
struct RawParams {
    int num_lus = 2;
    int pas_per_waveguide = 2;
    double half_size = 10.0;
    double height = 3.0;
    double carrier_freq = 6e9;
    double refractive_index = 1.4;
    GuardPolicy guard_policy = GuardPolicy::HalfWavelength;
    double guard_distance = 0.0;  // used only with GuardPolicy::Explicit
    double noise_lu_dbm = -70.0;
    double noise_eve_dbm = -70.0;
    double pmax_dbm = 30.0;
    double pc_dbm = 20.0;
};

/// Physical constants and budgets in SI units (meters, watts).
struct SystemParams {
    int num_lus = 0;
    int pas_per_waveguide = 0;
    double half_size = 0.0;
    double height = 0.0;
    double carrier_freq = 0.0;
    double wavelength = 0.0;
    double refractive_index = 0.0;
    double guided_wavelength = 0.0;
    double guard_distance = 0.0;
    double noise_lu = 0.0;
    double noise_eve = 0.0;
    double power_budget = 0.0;
    double circuit_power = 0.0;
    double eta = 0.0;
    // Kept so records and sweeps can report the configured level exactly.
    double pmax_dbm = 0.0;
};

/// Validates `raw` and derives wavelengths, eta and linear powers.
/// Throws std::invalid_argument for non-positive values or when the guard
/// spacing cannot fit N antennas on a waveguide of length 2D.
SystemParams derive_params(const RawParams& raw);

/// Re-derives the linear power budget after changing the dBm level.
SystemParams with_power_budget_dbm(SystemParams params, double pmax_dbm);

enum class Layout { Parallel, Orthogonal };

const char* to_string(Layout layout);
Layout parse_layout(const std::string& name);

/// Fixed (off-axis) coordinate of waveguide l (1-based) for the parallel
/// layout: +D/6 for l = 1 and -D/6 for l = 2.
double parallel_offset(int l, double half_size);

/// Feed point of waveguide l (1-based). Feeds sit at the negative end of the
/// movable axis.
Point3 feed_point(Layout layout, int l, const SystemParams& params);

/// Maps the free coordinate t of a PA on waveguide l to its 3D position.
/// Throws std::out_of_range if t lies outside [-D, D].
Point3 pin_position(Layout layout, int l, double t, const SystemParams& params);

/// Closed-form E{d^2} between a uniform receiver and a waveguide line.
double expected_sq_vertical_distance(Layout layout, double half_size, double height);

/// E{(X + A)^2 + B} for X ~ U(d1, d2).
double uniform_shift_expectation(double d1, double d2, double shift, double offset);

enum class EveMode { Uniform, InFront };

const char* to_string(EveMode mode);

struct Scenario {
    SystemParams params;
    Layout layout = Layout::Parallel;
    std::vector<Point3> lu_positions;
    Point3 eve_position = Point3::Zero();
    std::uint64_t seed = 0;

    /// Receiver k: 0 is Eve, 1..K are LUs.
    const Point3& receiver(int k) const { return k == 0 ? eve_position : lu_positions[k - 1]; }
    int num_lus() const { return static_cast<int>(lu_positions.size()); }
};

/// Draws LU and Eve positions. Pure function of its arguments.
Scenario sample_scenario(const SystemParams& params, Layout layout, std::uint64_t seed,
                         EveMode eve_mode = EveMode::Uniform);

/// Per-waveguide PA free coordinates; row l-1 holds waveguide l.
struct Placement {
    Eigen::Matrix<double, 2, Eigen::Dynamic> coords;

    int pas_per_waveguide() const { return static_cast<int>(coords.cols()); }

    /// Ascending rows, gaps >= guard (up to `slack`), entries within [-D, D].
    bool is_feasible(const SystemParams& params, double slack = 1e-12) const;
};

}  // namespace pinchsec
