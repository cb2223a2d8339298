// Copyright 2026 The dcegbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcegbs/types.hpp"

namespace dcegbs {

enum class Side { Left, Right };
enum class ResonanceKind { Minus, Plus };

/// A mode of one of the two resonators. Indices are 1-based, matching the
/// standing-wave number of the mode.
struct ModeRef {
    Side side = Side::Left;
    int index = 1;

    friend bool operator==(const ModeRef&, const ModeRef&) = default;
};

/// Two Dirichlet resonators sharing a movable wall at x = 0. The left cavity
/// spans [-L, 0], the right cavity [0, L'].
struct ResonatorPair {
    double length_left = 1.0;   // L, meters
    double length_right = 1.0;  // L', meters
    double speed = 1.0;         // v, meters/second
    int modes_left = 1;         // M
    int modes_right = 1;        // M'

    /// Throws Error(InvalidConfig) when any field is out of range.
    void validate() const;

    double length(Side side) const { return side == Side::Left ? length_left : length_right; }
    int modes(Side side) const { return side == Side::Left ? modes_left : modes_right; }
    int total_modes() const { return modes_left + modes_right; }

    /// k = index * pi / length
    double wavenumber(Side side, int index) const;
    /// omega = v * k
    double frequency(Side side, int index) const;
    double frequency(ModeRef mode) const { return frequency(mode.side, mode.index); }

    /// Throws Error(InvalidModeIndex) when the mode is outside the cutoffs.
    void check_mode(ModeRef mode) const;

    friend bool operator==(const ResonatorPair&, const ResonatorPair&) = default;
};

enum class PulseIntent { Squeeze, BeamSplit, Idle };

/// One sinusoidal modulation x(t) = A sin(omega_p t + phase) of the shared wall.
///
/// Squeeze and BeamSplit pulses address the pair (right mode j, left mode l).
/// An Idle pulse with a frame_mode is a pump-frame phase update on that mode
/// (zero duration); an Idle pulse without one is free evolution for `duration`.
struct PumpPulse {
    double pump_frequency = 0.0;  // rad/s
    double amplitude = 0.0;       // meters
    double phase = 0.0;           // radians
    double duration = 0.0;        // seconds
    PulseIntent intent = PulseIntent::Idle;
    int j = 0;  // right-resonator mode index
    int l = 0;  // left-resonator mode index
    std::optional<ModeRef> frame_mode;

    /// delta = A / L'
    double relative_amplitude(const ResonatorPair& cfg) const { return amplitude / cfg.length_right; }

    void validate(const ResonatorPair& cfg) const;

    friend bool operator==(const PumpPulse&, const PumpPulse&) = default;
};

struct PumpSchedule {
    std::vector<PumpPulse> pulses;
    /// Seeded amplitude draws recorded for reproducibility (empty when A is fixed).
    std::optional<std::uint64_t> amplitude_seed;

    double total_duration() const;
    void validate(const ResonatorPair& cfg) const;

    friend bool operator==(const PumpSchedule&, const PumpSchedule&) = default;
};

/// Input/output mode relation a'^dag_l = sum_j (-beta_jl a_j + alpha_jl a^dag_j).
struct BogoliubovPair {
    ComplexMatrix alpha;
    ComplexMatrix beta;
};

std::vector<double> mode_frequencies(const ResonatorPair& cfg, Side side);

/// |omega'_j - omega_l| for Minus, omega'_j + omega_l for Plus.
double resonance_frequency(const ResonatorPair& cfg, int j, int l, ResonanceKind kind);

/// Static first-order coefficients for a sudden wall displacement x = A.
struct StaticCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<std::string> warnings;
};

/// Closed-form static coefficients, cubic in A once delta = A/L' is substituted.
/// Emits a warning (not an error) when delta >= 0.1.
StaticCoefficients static_bogoliubov(const ResonatorPair& cfg, int j, int l, double amplitude);

struct QuadratureOptions {
    double relative_tolerance = 1e-11;
    double absolute_tolerance = 1e-15;
    unsigned max_depth = 15;
};

struct NumericStaticCoefficients {
    Complex alpha;
    Complex beta;
    double error_estimate = 0.0;
};

/// Klein-Gordon inner-product integrals for a sudden wall displacement,
/// evaluated by adaptive Gauss-Kronrod quadrature. Oracle for static_bogoliubov.
///
/// The left mode sin(k_l (x + L)) and the displaced right mode
/// sin(k'_j (x - A) / (1 - delta)) are both continued across the gap [0, A]
/// swept by the wall; the rest of [-L, L'] carries only one of the two fields.
/// Mode profiles are taken with unit amplitude.
NumericStaticCoefficients static_bogoliubov_numeric(const ResonatorPair& cfg, int j, int l, double amplitude,
                                                    const QuadratureOptions& options = {});

/// Klein-Gordon product (u, v) of two unperturbed modes at t = 0 using the
/// 1/sqrt(pi n) normalized profiles; equals 1 for u == v and 0 otherwise.
Complex klein_gordon_product(const ResonatorPair& cfg, ModeRef u, ModeRef v, const QuadratureOptions& options = {});

enum class TimeIntegral { ClosedForm, Quadrature };
enum class StaticSource { ClosedForm, Numeric };

struct PulseNumericOptions {
    TimeIntegral time_integral = TimeIntegral::ClosedForm;
    StaticSource static_source = StaticSource::Numeric;
    QuadratureOptions quadrature;
};

struct PulseCoefficients {
    Complex alpha;
    Complex beta;
};

/// First-order time-dependent coefficients alpha^(1)_jl(t), beta^(1)_jl(t)
/// for a single pulse, including off-resonant pairs.
PulseCoefficients pulse_bogoliubov_numeric(const ResonatorPair& cfg, const PumpPulse& pulse, int j, int l,
                                           const PulseNumericOptions& options = {});

/// int_0^t exp(-i detuning t') sin(pump t') dt', closed form.
Complex oscillating_integral(double detuning, double pump_frequency, double t);
/// Same integral by panelled Gauss-Kronrod quadrature.
Complex oscillating_integral_quadrature(double detuning, double pump_frequency, double t,
                                        const QuadratureOptions& options = {});

struct ResonanceOptions {
    double detuning_tolerance = 1e-6;  // relative to the resonance frequency
    double rwa_min = 50.0;             // minimum omega_p * t
};

struct ResonantCoefficient {
    ResonanceKind kind = ResonanceKind::Plus;
    double value = 0.0;  // alpha_jl for Minus, beta_jl for Plus
    std::vector<std::string> warnings;
};

/// Secular growth rate d(coefficient)/dt at the given resonance, signed.
double resonant_rate(const ResonatorPair& cfg, int j, int l, ResonanceKind kind, double amplitude);

/// Resonant (rotating-wave) coefficient after a pulse of duration t. A
/// zero-duration pulse yields 0 without applying the RWA gate.
ResonantCoefficient pulse_bogoliubov_resonant(const ResonatorPair& cfg, const PumpPulse& pulse, int j, int l,
                                              const ResonanceOptions& options = {});

struct Resonance {
    int j = 0;
    int l = 0;
    ResonanceKind kind = ResonanceKind::Plus;
    double frequency = 0.0;
};

struct Collision {
    Resonance first;
    Resonance second;
    double separation = 0.0;
};

/// All Plus and Minus resonances over the cutoff grid, ordered by (j, l, kind).
std::vector<Resonance> resonance_table(const ResonatorPair& cfg);

/// Pairs of resonances closer than `tolerance`. Empty means every pair of
/// modes is addressable by its own pump frequency.
std::vector<Collision> addressability_report(const ResonatorPair& cfg, double tolerance);

std::string_view to_string(Side side);
std::string_view to_string(ResonanceKind kind);
std::string_view to_string(PulseIntent intent);

}  // namespace dcegbs
