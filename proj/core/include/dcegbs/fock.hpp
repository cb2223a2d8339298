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

#include <map>
#include <vector>

#include "dcegbs/combinatorics.hpp"
#include "dcegbs/gaussian.hpp"
#include "dcegbs/types.hpp"

namespace dcegbs {

/// One effective-Hamiltonian evolution step, all modes 0-based.
///
///  TwoModeSqueeze: H = i g (e^{i phi} a_i^dag a_j^dag - e^{-i phi} a_i a_j)
///  BeamSplitter:   H = i g (e^{i phi} a_j^dag a_i - e^{-i phi} a_i^dag a_j)
///  PhaseShift:     H = -g a_i^dag a_i, so g t is the phase acquired
///  Quadratic:      H = a^dag G a + (a^dag Z a^dag^T + h.c.) / 2, G Hermitian, Z symmetric
///
/// With g = strength, the step applies exp(-i H duration); for the first
/// three kinds the pulse area strength * duration equals the (r, theta, phi)
/// parameter of the matching Gaussian-engine operation.
struct HamiltonianStep {
    enum class Kind { TwoModeSqueeze, BeamSplitter, PhaseShift, Quadratic };

    Kind kind = Kind::PhaseShift;
    int i = 0;
    int j = 1;
    double strength = 0.0;
    double phase = 0.0;
    double duration = 1.0;
    ComplexMatrix coupling;   // G, Quadratic only
    ComplexMatrix squeezing;  // Z, Quadratic only

    static HamiltonianStep two_mode_squeeze(int i, int j, double r, double phi);
    static HamiltonianStep beam_splitter(int i, int j, double theta, double phi);
    static HamiltonianStep phase_shift(int i, double phi);
    static HamiltonianStep quadratic(ComplexMatrix coupling, ComplexMatrix squeezing, double duration);
};

/// Bogoliubov map (U, V) of a quadratic Hamiltonian over `duration`.
SymplecticTransform quadratic_transform(const ComplexMatrix& coupling, const ComplexMatrix& squeezing,
                                        double duration);

/// Gaussian-engine counterpart of one step.
SymplecticTransform step_transform(int n_modes, const HamiltonianStep& step);

/// Dense amplitudes over the product basis, mode 0 varying fastest.
struct TruncatedFockState {
    int n_modes = 0;
    int cutoff = 0;  // max photons per mode
    ComplexVector amplitudes;
    std::vector<double> step_leakage;

    double norm() const { return amplitudes.norm(); }
    double total_leakage() const;
    static TruncatedFockState vacuum(int n_modes, int cutoff);
};

struct FockEvolveOptions {
    double max_step_leakage = 1e-8;
    int padding = 6;  // extra levels used to measure what leaves the cutoff
};

/// Evolves the vacuum through the steps on the truncated space.
/// Throws StateSpaceTooLarge beyond 1e7 basis states and LeakageExceeded when a
/// step pushes more than max_step_leakage of probability past the cutoff.
TruncatedFockState fock_evolve(int n_modes, const std::vector<HamiltonianStep>& schedule, int cutoff,
                               const FockEvolveOptions& options = {});

/// Continue evolving an existing truncated state.
void fock_apply(TruncatedFockState& state, const HamiltonianStep& step, const FockEvolveOptions& options = {});

struct FockDistribution {
    std::map<FockPattern, double> probabilities;
    double leakage = 0.0;
};

FockDistribution fock_distribution(const TruncatedFockState& state);
FockDistribution to_fock_distribution(const TruncatedDistribution& table);

/// (1/2) sum |p - q| over the union of supports.
double total_variation_distance(const std::map<FockPattern, double>& p, const std::map<FockPattern, double>& q);

}  // namespace dcegbs
