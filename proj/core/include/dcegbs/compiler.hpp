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

#include <cstdint>
#include <optional>
#include <vector>

#include "dcegbs/fock.hpp"
#include "dcegbs/gaussian.hpp"
#include "dcegbs/physics.hpp"
#include "dcegbs/types.hpp"

namespace dcegbs {

struct SqueezeSpec {
    double r = 0.0;
    double phi = 0.0;

    friend bool operator==(const SqueezeSpec&, const SqueezeSpec&) = default;
};

/// A scattershot target: n_modes network modes, one two-mode squeezer per
/// (network mode k, idle mode n_modes + k) pair, and the network unitary.
struct TargetInstance {
    int n_modes = 1;
    std::vector<SqueezeSpec> squeezers;
    ComplexMatrix unitary;
    bool real_only = false;

    /// Throws NotUnitary / InvalidConfig.
    void validate() const;
};

enum class OpKind { BeamSplitter, PhaseShift, TwoModeSqueeze };

/// Elementary operation on logical modes. `value` is theta for a beam
/// splitter, r for a squeezer and unused for a phase shift.
struct ElementaryOp {
    OpKind kind = OpKind::PhaseShift;
    int mode_a = 0;
    int mode_b = 0;
    double value = 0.0;
    double phi = 0.0;

    static ElementaryOp beam_splitter(int a, int b, double theta, double phi) {
        return {OpKind::BeamSplitter, a, b, theta, phi};
    }
    static ElementaryOp phase_shift(int a, double phi) { return {OpKind::PhaseShift, a, a, 0.0, phi}; }
    static ElementaryOp two_mode_squeeze(int a, int b, double r, double phi) {
        return {OpKind::TwoModeSqueeze, a, b, r, phi};
    }
};

/// Haar-random unitary from the QR factorization of a complex Ginibre matrix
/// with the diagonal phases of R divided out.
ComplexMatrix haar_random_unitary(int n, std::uint64_t seed);

/// Haar-random orthogonal matrix, same construction over the reals.
RealMatrix random_real_orthogonal(int n, std::uint64_t seed);

/// max |U^dag U - I|
double unitarity_error(const ComplexMatrix& u);

/// Triangular nearest-neighbor decomposition: n phase shifts followed by
/// n(n-1)/2 beam splitters on adjacent modes whose product is U.
/// Throws NotUnitary when ||U^dag U - I||_max > 1e-10.
std::vector<ElementaryOp> reck_decompose(const ComplexMatrix& u);

/// Mode-space matrix of a sequence of passive ops (first op applied first).
ComplexMatrix reconstruct_unitary(int n_modes, const std::vector<ElementaryOp>& ops);

/// Symplectic of a sequence of ops on n_modes logical modes.
SymplecticTransform ops_transform(int n_modes, const std::vector<ElementaryOp>& ops);

/// Logical mode -> resonator mode.
struct ModePlacement {
    std::vector<ModeRef> modes;

    int size() const { return static_cast<int>(modes.size()); }
};

/// Global index of a resonator mode in the engine: left modes first.
int engine_index(const ResonatorPair& cfg, ModeRef mode);

/// Network modes alternate right/left (R1, L1, R2, L2, ...) so every
/// nearest-neighbour pair sits across the shared wall; idle partner k sits on
/// the opposite resonator above the network modes. Needs n modes per side.
ModePlacement scattershot_placement(int n_network);

/// Network-only placement (the first n logical modes of scattershot_placement).
ModePlacement network_placement(int n_network);

struct AmplitudePolicy {
    enum class Mode { Fixed, Randomized };
    Mode mode = Mode::Fixed;
    double amplitude = 1e-3;  // meters
    double amplitude_min = 0.5e-3;
    double amplitude_max = 1.5e-3;
    std::uint64_t seed = 0;
    /// When the fixed-A duration would violate omega_p t >= rwa_min, stretch
    /// t to the gate and lower A instead of rejecting.
    bool lower_amplitude_for_rwa = true;
};

struct CompileOptions {
    AmplitudePolicy policy;
    ResonanceOptions resonance;
    double beta_max = 0.1;
    double collision_tolerance = 1e-6;  // relative to the pulse frequency
};

struct CompiledSchedule {
    PumpSchedule schedule;
    std::vector<double> targets;  // per pulse: |beta| or theta target, 0 for idle
    double max_beta = 0.0;
    double max_relative_error = 0.0;  // forward-evaluation round trip
    std::vector<std::string> warnings;
};

/// One pulse per op. Squeezers pump at omega'_j + omega_l, beam splitters at
/// |omega'_j - omega_l|; phase shifts become pump-frame updates.
/// Errors: FrequencyCollision, UnreachableCoefficient, RWAInvalid, InvalidModeIndex.
CompiledSchedule schedule_from_ops(const ResonatorPair& cfg, const std::vector<ElementaryOp>& ops,
                                   const ModePlacement& placement, const CompileOptions& options = {});

/// Squeezers then the network decomposition, on the scattershot placement.
std::vector<ElementaryOp> instance_ops(const TargetInstance& instance);
CompiledSchedule compile_instance(const ResonatorPair& cfg, const TargetInstance& instance,
                                  const CompileOptions& options = {});

/// Symplectic on all cfg.total_modes() modes realized by a schedule, using the
/// resonant coefficient of each pulse (sinh r = |beta|, theta = |alpha|).
SymplecticTransform schedule_transform(const ResonatorPair& cfg, const PumpSchedule& schedule,
                                       const ResonanceOptions& options = {});

/// Solves c J1(2 pi Phi/Phi0) = target on the first rising branch of J1.
/// Throws OutOfBranch when target > c max J1 or target < 0.
double flux_amplitude_for_coupling(double target, double calibration);

struct Tone {
    int j = 1;  // right mode
    int l = 1;  // left mode
    ResonanceKind kind = ResonanceKind::Plus;
    double frequency = 0.0;
    double flux_ratio = 0.0;  // Phi / Phi0
    Complex coefficient;      // g_lj or xi_lj, rad/s
};

struct MultitoneDrive {
    std::vector<Tone> tones;
    double duration = 0.0;
};

/// One tone per nonzero entry of `coupling` (Minus) and `squeezing` (Plus).
/// Both matrices are indexed (right mode j - 1, left mode l - 1).
MultitoneDrive multitone_schedule(const ResonatorPair& cfg, const ComplexMatrix& coupling,
                                  const ComplexMatrix& squeezing, double duration, double calibration,
                                  const CompileOptions& options = {});

/// Effective quadratic Hamiltonian of a drive on the engine mode ordering.
HamiltonianStep multitone_hamiltonian(const ResonatorPair& cfg, const MultitoneDrive& drive);

}  // namespace dcegbs
