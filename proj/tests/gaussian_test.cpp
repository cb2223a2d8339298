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

#include "dcegbs/gaussian.hpp"

#include <cmath>
#include <map>

#include <gtest/gtest.h>

#include "dcegbs/error.hpp"
#include "dcegbs/fock.hpp"

namespace dcegbs {
namespace {

double max_abs(const RealMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Vacuum, CovarianceIsIdentity) {
    EXPECT_EQ(vacuum_state(1).covariance(), RealMatrix::Identity(2, 2));
    EXPECT_EQ(vacuum_state(3).covariance(), RealMatrix::Identity(6, 6));
    for (double n : mean_photon_numbers(vacuum_state(3))) EXPECT_NEAR(n, 0.0, 1e-15);
    EXPECT_TRUE(vacuum_state(2).is_physical());
}

TEST(TwoModeSqueeze, PhotonNumberIsSinhSquared) {
    const auto s = apply_two_mode_squeeze(vacuum_state(2), 0, 1, 0.1, 0.3);
    const auto n = mean_photon_numbers(s);
    EXPECT_NEAR(n[0], std::pow(std::sinh(0.1), 2), 1e-15);
    EXPECT_NEAR(n[1], 0.0100333778095379, 1e-15);
}

TEST(TwoModeSqueeze, ZeroIsIdentityAndSqueezesAdd) {
    const auto v = vacuum_state(2);
    EXPECT_LT(max_abs(apply_two_mode_squeeze(v, 0, 1, 0.0, 1.0).covariance() - v.covariance()), 1e-15);
    const auto twice = apply_two_mode_squeeze(apply_two_mode_squeeze(v, 0, 1, 0.2, 0.7), 0, 1, 0.3, 0.7);
    const auto once = apply_two_mode_squeeze(v, 0, 1, 0.5, 0.7);
    EXPECT_LT(max_abs(twice.covariance() - once.covariance()), 1e-13);
}

TEST(TwoModeSqueeze, SchmidtDistribution) {
    const double r = 0.1;
    const auto s = apply_two_mode_squeeze(vacuum_state(2), 0, 1, r, 0.0);
    EXPECT_NEAR(fock_probability(s, {0, 0}, 8), 1.0 / std::pow(std::cosh(r), 2), 1e-14);
    EXPECT_NEAR(fock_probability(s, {0, 0}, 8), 0.99006629084744, 1e-13);
    for (int n = 1; n <= 4; ++n)
        EXPECT_NEAR(fock_probability(s, {n, n}, 8), std::pow(std::tanh(r), 2 * n) / std::pow(std::cosh(r), 2), 1e-14);
    EXPECT_EQ(fock_probability(s, {1, 0}, 8), 0.0);
    EXPECT_EQ(fock_probability(s, {2, 1}, 8), 0.0);
}

TEST(BeamSplitter, PassiveOnVacuum) {
    const auto v = vacuum_state(2);
    EXPECT_LT(max_abs(apply_beam_splitter(v, 0, 1, 0.7, 2.1).covariance() - v.covariance()), 1e-15);
    const auto s = apply_two_mode_squeeze(vacuum_state(3), 0, 2, 0.4, 0.0);
    EXPECT_LT(max_abs(apply_beam_splitter(s, 0, 1, 0.0, 1.0).covariance() - s.covariance()), 1e-15);
}

TEST(BeamSplitter, HeraldedPhotonSplitsEvenly) {
    // Herald one photon in mode 2 of a pair (0, 2), then mix 0 and 1 at 50:50.
    auto s = apply_two_mode_squeeze(vacuum_state(3), 0, 2, 0.3, 0.0);
    s = apply_beam_splitter(s, 0, 1, kPi / 4.0, 0.4);
    const double p10 = fock_probability(s, {1, 0, 1}, 6);
    const double p01 = fock_probability(s, {0, 1, 1}, 6);
    EXPECT_NEAR(p10 / (p10 + p01), 0.5, 1e-13);
}

TEST(PhaseShift, FullTurnAndStatistics) {
    auto s = apply_two_mode_squeeze(vacuum_state(2), 0, 1, 0.3, 0.2);
    s = apply_beam_splitter(s, 0, 1, 0.3, 0.1);
    EXPECT_LT(max_abs(apply_phase_shift(s, 0, 2.0 * kPi).covariance() - s.covariance()), 1e-14);
    const auto rotated = apply_phase_shift(s, 1, 0.9);
    const auto a = photon_distribution(s, 6);
    const auto b = photon_distribution(rotated, 6);
    for (std::size_t k = 0; k < a.probabilities.size(); ++k)
        EXPECT_NEAR(a.probabilities[k], b.probabilities[k], 1e-14);
}

TEST(Symplectic, TransformsPreserveForm) {
    auto t = two_mode_squeeze_transform(3, 0, 2, 0.8, 0.3)
                 .compose(beam_splitter_transform(3, 1, 2, 0.4, 1.1))
                 .compose(phase_shift_transform(3, 1, 0.2));
    EXPECT_LT(t.symplectic_residual(), 1e-12);
    RealMatrix bad = RealMatrix::Identity(2, 2) * 2.0;
    EXPECT_THROW(SymplecticTransform{bad}, Error);
}

TEST(Symplectic, EmbedActsOnListedModes) {
    const auto bs = beam_splitter_transform(2, 0, 1, 0.3, 0.2).embed(3, {2, 0});
    const auto direct = beam_splitter_transform(3, 2, 0, 0.3, 0.2);
    EXPECT_LT(max_abs(bs.matrix() - direct.matrix()), 1e-15);
}

TEST(Bogoliubov, IdentityPair) {
    BogoliubovPair pair{ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)};
    const auto p = bogoliubov_to_symplectic(pair);
    EXPECT_LT(max_abs(p.transform.matrix() - RealMatrix::Identity(4, 4)), 1e-15);
    EXPECT_LT(p.residual_before, 1e-15);
}

TEST(Bogoliubov, ExactPairIsTwoModeSqueezer) {
    const double r = 0.35;
    ComplexMatrix beta = ComplexMatrix::Zero(2, 2);
    beta(0, 1) = beta(1, 0) = std::sinh(r);
    BogoliubovPair pair{std::cosh(r) * ComplexMatrix::Identity(2, 2), beta};
    const auto p = bogoliubov_to_symplectic(pair);
    EXPECT_LT(p.residual_before, 1e-14);
    EXPECT_LT(max_abs(p.transform.matrix() - two_mode_squeeze_transform(2, 0, 1, r, kPi).matrix()), 1e-14);
}

TEST(Bogoliubov, FirstOrderPairIsProjected) {
    const double b = 0.05;
    ComplexMatrix beta = ComplexMatrix::Zero(2, 2);
    beta(0, 1) = beta(1, 0) = b;
    const auto p = bogoliubov_to_symplectic({ComplexMatrix::Identity(2, 2), beta});
    EXPECT_GT(p.residual_before, 0.0);
    EXPECT_LE(p.residual_before, 4.0 * b * b);
    EXPECT_LT(p.residual_after, 1e-12);
    beta *= 10.0;
    EXPECT_THROW(bogoliubov_to_symplectic({ComplexMatrix::Identity(2, 2), beta}), Error);
}

TEST(FockProbability, VacuumAndCutoffGuard) {
    EXPECT_DOUBLE_EQ(fock_probability(vacuum_state(3), {0, 0, 0}, 2), 1.0);
    const auto s = apply_two_mode_squeeze(vacuum_state(2), 0, 1, 1.2, 0.0);
    try {
        fock_probability(s, {0, 0}, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CutoffTooSmall);
    }
}

TEST(FockProbability, HafnianAndRecurrenceAgree) {
    auto s = apply_two_mode_squeeze(vacuum_state(3), 0, 1, 0.9, 0.4);
    s = apply_beam_splitter(s, 1, 2, 0.7, 1.3);
    s = apply_two_mode_squeeze(s, 0, 2, 0.6, -0.5);
    const auto kernel = fock_kernel(s);
    const auto table = photon_distribution(s, 7);
    for (std::size_t k = 0; k < table.patterns.size(); ++k) {
        const auto& p = table.patterns[k];
        if (p[0] + p[1] + p[2] > 12) continue;
        EXPECT_NEAR(pattern_probability(kernel, p), table.probabilities[k], 1e-13);
    }
}

TEST(Distribution, SumsWithLeakage) {
    const auto s = apply_two_mode_squeeze(vacuum_state(2), 0, 1, 0.6, 0.0);
    const auto t = photon_distribution(s, 5);
    double sum = 0.0;
    for (double p : t.probabilities) sum += p;
    EXPECT_NEAR(sum + t.leakage, 1.0, 1e-12);
    const double tail = std::pow(std::tanh(0.6), 12);
    EXPECT_NEAR(t.leakage, tail, 1e-12);
    const auto by_total = photon_distribution_total(s, 4);
    EXPECT_NEAR(by_total.leakage, std::pow(std::tanh(0.6), 6), 1e-12);
}

TEST(Sampling, DeterministicAndFaithful) {
    const auto v = sample_patterns(vacuum_state(2), 100, 3, 1);
    for (const auto& p : v.samples) EXPECT_EQ(p, (FockPattern{0, 0}));

    const auto s = apply_two_mode_squeeze(vacuum_state(2), 0, 1, 0.3, 0.0);
    const auto a = sample_patterns(s, 100000, 8, 42);
    const auto b = sample_patterns(s, 100000, 8, 42);
    EXPECT_EQ(a.samples, b.samples);

    std::map<FockPattern, double> empirical, exact;
    for (const auto& p : a.samples) empirical[p] += 1e-5;
    const auto table = photon_distribution(s, 8);
    for (std::size_t k = 0; k < table.patterns.size(); ++k)
        if (table.probabilities[k] > 0.0) exact[table.patterns[k]] = table.probabilities[k];
    EXPECT_LE(total_variation_distance(empirical, exact), 0.01);
}

TEST(PhysicalState, UncertaintyHolds) {
    auto s = apply_two_mode_squeeze(vacuum_state(4), 0, 3, 1.1, 0.2);
    s = apply_beam_splitter(s, 0, 1, 0.5, 0.0);
    EXPECT_TRUE(s.is_physical());
    EXPECT_GT(s.min_uncertainty_eigenvalue(), -1e-9);
    RealMatrix bad = 0.5 * RealMatrix::Identity(2, 2);
    EXPECT_FALSE(GaussianState(bad).is_physical());
}

}  // namespace
}  // namespace dcegbs
