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

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "dcegbs/compiler.hpp"
#include "dcegbs/gaussian.hpp"
#include "dcegbs/physics.hpp"

namespace dcegbs {

/// M two-mode squeezed pairs on 2M modes: network mode k pairs with idle
/// mode M + k. Uniform r and phi unless per-pair values are given.
GaussianState prepare_scattershot_state(int pairs, double r, double phi = 0.0);
GaussianState prepare_scattershot_state(const std::vector<SqueezeSpec>& squeezers);

struct ScattershotRecord {
    FockPattern herald;  // idle modes
    FockPattern output;  // network modes
    bool accepted = false;
    std::uint64_t seed = 0;
    std::uint64_t draw = 0;  // index within the run

    friend bool operator==(const ScattershotRecord&, const ScattershotRecord&) = default;
};

struct ScattershotOptions {
    enum class Route { Direct, Compiled };
    /// Direct applies U as a symplectic on the network half. Compiled places
    /// the modes on the resonators and applies the compiled network schedule.
    Route route = Route::Direct;
    CompileOptions compile;
};

struct ScattershotRun {
    std::vector<ScattershotRecord> records;
    std::size_t accepted = 0;
    double acceptance_fraction = 0.0;
    /// Probability of more than n_target herald photons, excluded from the draws.
    double leakage = 0.0;
    std::optional<CompiledSchedule> compiled;
};

/// Draws n_samples joint patterns from the state truncated to at most
/// n_target herald photons and flags records whose herald total is n_target.
/// Throws NoAcceptedSamples when no record is accepted.
ScattershotRun run_scattershot(const ResonatorPair& cfg, const TargetInstance& instance, std::size_t n_samples,
                               int n_target, std::uint64_t seed, const ScattershotOptions& options = {});

/// P(T | S) = |Perm(U_{T,S})|^2 / (prod S! prod T!) over every output pattern
/// with n photons. Throws MatrixTooLarge beyond n = 4 or 10 modes.
std::map<FockPattern, double> conditional_distribution_oracle(const ComplexMatrix& u, const FockPattern& herald,
                                                              int n);

/// Joint key used by the heralded distributions: herald followed by output.
FockPattern joint_pattern(const FockPattern& herald, const FockPattern& output);

/// Oracle joint distribution of (S, T) given n heralded photons, with S
/// uniform over collision-free herald patterns.
std::map<FockPattern, double> heralded_oracle(const ComplexMatrix& u, int n);

/// Empirical joint distribution of accepted records with collision-free heralds.
std::map<FockPattern, double> heralded_empirical(const std::vector<ScattershotRecord>& records);

/// Probability that the herald total equals n given it is at most n, for
/// independent pairs with the given squeezing.
double heralding_probability(const std::vector<SqueezeSpec>& squeezers, int n);

enum class Parity { Even, Odd };

struct RamseyStep {
    int mode = 0;
    int ancilla = 0;
    double time = 0.0;  // pi g_n^2 / Delta_{n,j}
};

struct ParityReadout {
    std::vector<Parity> parities;
    std::vector<int> aliased_modes;  // count >= 2
    std::vector<RamseyStep> plan;

    bool aliasing() const { return !aliased_modes.empty(); }
};

/// Per-mode parity of an ideal qubit readout. `couplings` holds g_n per mode
/// and `detunings` Delta_{n,j} per (mode, ancilla); both may be empty.
ParityReadout parity_readout(const FockPattern& pattern, const std::vector<double>& couplings = {},
                             const RealMatrix& detunings = {});

struct ExperimentEstimate {
    double max_beta = 0.0;
    double mean_photons_per_pair = 0.0;
    /// Infinite when no pulse creates photons.
    double repetitions = std::numeric_limits<double>::infinity();
    std::size_t pulse_count = 0;
    double pulse_time = 0.0;        // seconds
    double measurement_time = 0.0;  // seconds
    double event_rate = 0.0;        // hertz

    bool attainable() const { return std::isfinite(repetitions); }
};

/// Squeeze pulses set the photon yield; every pulse counts toward the time.
ExperimentEstimate experiment_estimate(const ResonatorPair& cfg, const PumpSchedule& schedule,
                                       double measurement_time, const ResonanceOptions& options = {});

/// Timing model for an n-photon run on n^2 pairs: n^2 squeeze pulses and
/// n^2 (n^2 - 1) / 2 beam-splitter pulses, all addressing the reference pair
/// (j, l) with the given amplitude and duration.
PumpSchedule feasibility_schedule(const ResonatorPair& cfg, int n_photons, double amplitude, double duration,
                                  int j = 1, int l = 1);

}  // namespace dcegbs
