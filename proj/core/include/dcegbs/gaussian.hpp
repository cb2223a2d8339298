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
#include <random>
#include <vector>

#include "dcegbs/physics.hpp"
#include "dcegbs/types.hpp"

namespace dcegbs {

/// Photon counts per mode.
using FockPattern = std::vector<int>;

/// Standard symplectic form for xxpp ordering: [[0, I], [-I, 0]].
RealMatrix symplectic_form(int n_modes);

/// Real 2n x 2n matrix acting on quadratures r = (x_1..x_n, p_1..p_n).
class SymplecticTransform {
public:
    SymplecticTransform() = default;
    /// Throws NotSymplectifiable when the matrix is not symplectic to 1e-10.
    explicit SymplecticTransform(RealMatrix matrix);

    static SymplecticTransform identity(int n_modes);
    /// Bogoliubov action a -> U a + V a^dag.
    static SymplecticTransform from_bogoliubov(const ComplexMatrix& u, const ComplexMatrix& v);
    /// Passive network a -> U a.
    static SymplecticTransform from_unitary(const ComplexMatrix& u);

    int n_modes() const { return static_cast<int>(matrix_.rows() / 2); }
    const RealMatrix& matrix() const { return matrix_; }

    /// max |S Omega S^T - Omega|
    double symplectic_residual() const;

    /// (*this) applied after `first`.
    SymplecticTransform compose(const SymplecticTransform& first) const;

    /// Embed an m-mode transform onto the listed modes of an n-mode system.
    SymplecticTransform embed(int n_modes, const std::vector<int>& modes) const;

private:
    RealMatrix matrix_;
};

inline constexpr double kSymplecticTolerance = 1e-10;
inline constexpr double kPhysicalTolerance = 1e-9;

/// Zero-mean Gaussian state, hbar = 2 (vacuum covariance = identity).
class GaussianState {
public:
    explicit GaussianState(int n_modes);
    GaussianState(RealMatrix covariance);

    int n_modes() const { return n_modes_; }
    const RealMatrix& covariance() const { return covariance_; }
    const RealVector& mean() const { return mean_; }

    /// Smallest eigenvalue of covariance + i Omega.
    double min_uncertainty_eigenvalue() const;
    bool is_physical(double tolerance = kPhysicalTolerance) const;

    GaussianState transformed(const SymplecticTransform& s) const;

private:
    int n_modes_;
    RealMatrix covariance_;
    RealVector mean_;
};

GaussianState vacuum_state(int n_modes);

SymplecticTransform two_mode_squeeze_transform(int n_modes, int i, int j, double r, double phi);
SymplecticTransform beam_splitter_transform(int n_modes, int i, int j, double theta, double phi);
SymplecticTransform phase_shift_transform(int n_modes, int i, double phi);

/// a_i -> cosh r a_i + e^{i phi} sinh r a_j^dag (and i <-> j).
GaussianState apply_two_mode_squeeze(const GaussianState& state, int i, int j, double r, double phi);
/// a_i -> cos t a_i - e^{-i phi} sin t a_j, a_j -> cos t a_j + e^{i phi} sin t a_i.
GaussianState apply_beam_splitter(const GaussianState& state, int i, int j, double theta, double phi);
/// a_i -> e^{i phi} a_i.
GaussianState apply_phase_shift(const GaussianState& state, int i, double phi);

struct SymplecticProjection {
    SymplecticTransform transform;
    double residual_before = 0.0;
    double residual_after = 0.0;
};

/// Promote a square Bogoliubov pair to the quadrature symplectic it
/// generates, projecting onto the symplectic group when the pair is only
/// symplectic to first order. Throws NotSymplectifiable above 0.05 residual.
SymplecticProjection bogoliubov_to_symplectic(const BogoliubovPair& pair);

/// Nearest-symplectic projection by the iteration X <- (X + Omega X^-T Omega^T) / 2.
RealMatrix project_to_symplectic(const RealMatrix& near_symplectic);

std::vector<double> mean_photon_numbers(const GaussianState& state);
double total_mean_photon_number(const GaussianState& state);

/// Fock amplitudes of a pure zero-mean Gaussian state are
/// psi_0 haf(B_n) / sqrt(n!), where B is read off the Husimi covariance.
struct FockKernel {
    ComplexMatrix b;
    double vacuum_probability = 1.0;
};

/// Throws NotSymplectifiable when the state is not pure.
FockKernel fock_kernel(const GaussianState& state);

/// Probability of `pattern` via the hafnian of B restricted to the pattern.
/// Throws CutoffTooSmall if the probability mass outside the per-mode cutoff
/// exceeds 1e-6.
double fock_probability(const GaussianState& state, const FockPattern& pattern, int cutoff);

/// Same probability without the cutoff check, by direct hafnian when the
/// photon number is small and by the amplitude recurrence otherwise.
double pattern_probability(const FockKernel& kernel, const FockPattern& pattern);

struct TruncatedDistribution {
    std::vector<FockPattern> patterns;
    std::vector<double> probabilities;
    double leakage = 0.0;  // 1 - sum(probabilities)
};

inline constexpr std::uint64_t kMaxEnumerableOutcomes = 10'000'000;

/// All patterns with every count <= cutoff, via the amplitude recurrence
/// G(n + e_k) = (sum_l B_kl sqrt(n_l) G(n - e_l)) / sqrt(n_k + 1).
TruncatedDistribution photon_distribution(const GaussianState& state, int cutoff);

/// All patterns with total photon number <= max_total.
TruncatedDistribution photon_distribution_total(const GaussianState& state, int max_total);

struct SampleBatch {
    std::vector<FockPattern> samples;
    double leakage = 0.0;
};

/// Draws i.i.d. samples from the normalized truncated distribution.
SampleBatch sample_patterns(const GaussianState& state, std::size_t n_samples, int cutoff, std::uint64_t seed);

/// Inverse-CDF draws from a fixed discrete distribution. Uniforms are built
/// from the raw 64-bit output so streams match across standard libraries.
class DiscreteSampler {
public:
    explicit DiscreteSampler(const std::vector<double>& weights);
    std::size_t draw(std::mt19937_64& rng) const;
    std::size_t size() const { return cumulative_.size(); }

private:
    std::vector<double> cumulative_;
};

}  // namespace dcegbs
