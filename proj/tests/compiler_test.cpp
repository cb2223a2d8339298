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

#include "dcegbs/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "dcegbs/error.hpp"
#include "dcegbs/fock.hpp"

namespace dcegbs {
namespace {

ResonatorPair microwave(int modes) { return {0.032, 0.032 * std::sqrt(2.0), 6.0e7, modes, modes}; }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

// Mode-space unitary of the network modes, lifted to all resonator modes.
SymplecticTransform lifted(const ResonatorPair& cfg, const ComplexMatrix& u, const ModePlacement& placement) {
    std::vector<int> modes;
    for (const auto& m : placement.modes) modes.push_back(engine_index(cfg, m));
    return SymplecticTransform::from_unitary(u).embed(cfg.total_modes(), modes);
}

TEST(Haar, UnitaryAndDeterministic) {
    for (int n : {1, 2, 5, 16}) {
        const auto u = haar_random_unitary(n, 7);
        EXPECT_LE(unitarity_error(u), 1e-12) << n;
        EXPECT_EQ(u, haar_random_unitary(n, 7));
    }
    EXPECT_NEAR(std::abs(haar_random_unitary(1, 3)(0, 0)), 1.0, 1e-15);
    EXPECT_NE(haar_random_unitary(3, 1), haar_random_unitary(3, 2));
}

TEST(Haar, EigenanglesAreUniform) {
    std::vector<double> angles;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Eigen::ComplexEigenSolver<ComplexMatrix> es(haar_random_unitary(4, seed));
        for (const auto& z : es.eigenvalues()) angles.push_back((std::arg(z) + kPi) / (2.0 * kPi));
    }
    std::sort(angles.begin(), angles.end());
    const double n = static_cast<double>(angles.size());
    double d = 0.0;
    for (std::size_t k = 0; k < angles.size(); ++k)
        d = std::max({d, (k + 1) / n - angles[k], angles[k] - k / n});
    EXPECT_LT(d, 1.628 / std::sqrt(n));
}

TEST(Orthogonal, HaarOrthogonal) {
    int mixed = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto o = random_real_orthogonal(3, seed);
        EXPECT_LE((o.transpose() * o - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(std::abs(o.determinant()), 1.0, 1e-12);
        mixed += (o.maxCoeff() > 0.0 && o.minCoeff() < 0.0) ? 1 : 0;
    }
    EXPECT_EQ(mixed, 1000);
}

TEST(Reck, IdentityNeedsNoMixing) {
    for (const auto& op : reck_decompose(ComplexMatrix::Identity(4, 4))) {
        EXPECT_EQ(op.value, 0.0);
        EXPECT_EQ(op.kind == OpKind::BeamSplitter ? std::fmod(op.phi, kPi) : op.phi, 0.0);
    }
}

TEST(Reck, TwoModeRotation) {
    const double t = 0.4;
    ComplexMatrix u(2, 2);
    u << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    const auto ops = reck_decompose(u);
    int splitters = 0;
    for (const auto& op : ops) {
        if (op.kind != OpKind::BeamSplitter) continue;
        ++splitters;
        EXPECT_NEAR(op.value, t, 1e-14);
    }
    EXPECT_EQ(splitters, 1);
    EXPECT_LE((reconstruct_unitary(2, ops) - u).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Reck, HaarReconstruction) {
    for (int n = 2; n <= 8; ++n) {
        const auto u = haar_random_unitary(n, 100 + n);
        const auto ops = reck_decompose(u);
        const auto bs = std::count_if(ops.begin(), ops.end(), [](auto& o) { return o.kind == OpKind::BeamSplitter; });
        EXPECT_EQ(bs, n * (n - 1) / 2);
        EXPECT_EQ(static_cast<long>(ops.size()) - bs, n);
        for (const auto& op : ops)
            if (op.kind == OpKind::BeamSplitter) EXPECT_EQ(op.mode_b, op.mode_a + 1);
        EXPECT_LE((reconstruct_unitary(n, ops) - u).cwiseAbs().maxCoeff(), 1e-10) << n;
        const auto via_engine = ops_transform(n, ops);
        EXPECT_LE((via_engine.matrix() - SymplecticTransform::from_unitary(u).matrix()).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Reck, RejectsNonUnitary) {
    EXPECT_EQ(kind_of([] { reck_decompose(ComplexMatrix::Ones(2, 2)); }), ErrorKind::NotUnitary);
}

TEST(Placement, NeighboursSitAcrossTheWall) {
    const auto p = scattershot_placement(5);
    ASSERT_EQ(p.size(), 10);
    for (int k = 0; k + 1 < 5; ++k) EXPECT_NE(p.modes[k].side, p.modes[k + 1].side);
    for (int k = 0; k < 5; ++k) EXPECT_NE(p.modes[k].side, p.modes[5 + k].side);
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) EXPECT_FALSE(p.modes[a] == p.modes[b]);
    const auto cfg = microwave(5);
    for (const auto& m : p.modes) EXPECT_NO_THROW(cfg.check_mode(m));
}

TEST(Schedule, EmptyOps) {
    const auto c = schedule_from_ops(microwave(2), {}, network_placement(2));
    EXPECT_TRUE(c.schedule.pulses.empty());
}

TEST(Schedule, SqueezerDurationAtMillimetreAmplitude) {
    const auto cfg = microwave(1);
    const auto placement = scattershot_placement(1);
    const auto c = schedule_from_ops(cfg, {ElementaryOp::two_mode_squeeze(0, 1, std::asinh(0.05), 0.0)}, placement);
    ASSERT_EQ(c.schedule.pulses.size(), 1u);
    const auto& p = c.schedule.pulses[0];
    EXPECT_EQ(p.amplitude, 1e-3);
    EXPECT_EQ(p.pump_frequency, resonance_frequency(cfg, 1, 1, ResonanceKind::Plus));
    EXPECT_GT(p.duration, 1e-8);
    EXPECT_LT(p.duration, 1e-6);
    EXPECT_NEAR(p.duration, 5.22389026396e-08, 1e-19);
    EXPECT_LE(c.max_relative_error, 1e-9);
}

TEST(Schedule, RoundTripReproducesTargets) {
    const int n = 4;
    const auto cfg = microwave(n);
    const auto u = haar_random_unitary(n, 11);
    std::vector<ElementaryOp> ops = reck_decompose(u);
    ops.push_back(ElementaryOp::two_mode_squeeze(0, n, 0.08, 0.3));
    const auto placement = scattershot_placement(n);
    const auto c = schedule_from_ops(cfg, ops, placement);
    ASSERT_EQ(c.schedule.pulses.size(), ops.size());
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto& p = c.schedule.pulses[k];
        if (p.intent == PulseIntent::Idle) continue;
        if (c.targets[k] == 0.0) continue;
        const double got = std::abs(pulse_bogoliubov_resonant(cfg, p, p.j, p.l).value);
        EXPECT_NEAR(got, c.targets[k], 1e-9 * c.targets[k]);
        EXPECT_GE(p.pump_frequency * p.duration, 50.0);
    }
    EXPECT_LE(c.max_relative_error, 1e-9);
    EXPECT_LE(c.max_beta, 0.1);
}

TEST(Schedule, CompiledNetworkRealizesUnitary) {
    for (int n : {2, 3, 5}) {
        const auto cfg = microwave(n);
        const auto u = haar_random_unitary(n, 40 + n);
        const auto placement = network_placement(n);
        const auto c = schedule_from_ops(cfg, reck_decompose(u), placement);
        const auto realized = schedule_transform(cfg, c.schedule);
        EXPECT_LE((realized.matrix() - lifted(cfg, u, placement).matrix()).cwiseAbs().maxCoeff(), 1e-8) << n;
    }
}

TEST(Schedule, CompiledSqueezerMatchesEngine) {
    const auto cfg = microwave(2);
    const auto placement = scattershot_placement(2);
    const auto op = ElementaryOp::two_mode_squeeze(1, 3, 0.07, 1.3);
    const auto c = schedule_from_ops(cfg, {op}, placement);
    const auto realized = schedule_transform(cfg, c.schedule);
    const auto expect = two_mode_squeeze_transform(cfg.total_modes(), engine_index(cfg, placement.modes[1]),
                                                   engine_index(cfg, placement.modes[3]), 0.07, 1.3);
    EXPECT_LE((realized.matrix() - expect.matrix()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Schedule, Gates) {
    const auto cfg = microwave(2);
    const auto placement = scattershot_placement(2);
    EXPECT_EQ(kind_of([&] { schedule_from_ops(cfg, {ElementaryOp::two_mode_squeeze(0, 2, 0.2, 0.0)}, placement); }),
              ErrorKind::UnreachableCoefficient);
    EXPECT_EQ(kind_of([&] { schedule_from_ops(cfg, {ElementaryOp::beam_splitter(0, 3, 0.2, 0.0)}, placement); }),
              ErrorKind::FrequencyCollision);
    ResonatorPair commensurate{0.032, 0.064, 6.0e7, 3, 3};
    EXPECT_EQ(kind_of([&] {
                  schedule_from_ops(commensurate, {ElementaryOp::beam_splitter(0, 1, 0.2, 0.0)}, placement);
              }),
              ErrorKind::FrequencyCollision);
    CompileOptions strict;
    strict.policy.lower_amplitude_for_rwa = false;
    EXPECT_EQ(kind_of([&] {
                  schedule_from_ops(cfg, {ElementaryOp::two_mode_squeeze(0, 2, 1e-5, 0.0)}, placement, strict);
              }),
              ErrorKind::RWAInvalid);
}

TEST(Schedule, WeakTargetsLowerTheAmplitude) {
    const auto cfg = microwave(1);
    const auto c = schedule_from_ops(cfg, {ElementaryOp::two_mode_squeeze(0, 1, 1e-5, 0.0)}, scattershot_placement(1));
    const auto& p = c.schedule.pulses[0];
    EXPECT_LT(p.amplitude, 1e-3);
    EXPECT_GE(p.pump_frequency * p.duration, 50.0);
    EXPECT_FALSE(c.warnings.empty());
    EXPECT_LE(c.max_relative_error, 1e-9);
}

TEST(Schedule, RandomizedAmplitudesAreRecorded) {
    const int n = 3;
    const auto cfg = microwave(n);
    CompileOptions opt;
    opt.policy.mode = AmplitudePolicy::Mode::Randomized;
    opt.policy.seed = 99;
    const auto ops = reck_decompose(haar_random_unitary(n, 5));
    const auto a = schedule_from_ops(cfg, ops, network_placement(n), opt);
    const auto b = schedule_from_ops(cfg, ops, network_placement(n), opt);
    EXPECT_EQ(a.schedule, b.schedule);
    ASSERT_TRUE(a.schedule.amplitude_seed.has_value());
    EXPECT_EQ(*a.schedule.amplitude_seed, 99u);
    EXPECT_LE(a.max_relative_error, 1e-9);
    for (const auto& p : a.schedule.pulses)
        if (p.intent != PulseIntent::Idle && p.duration > 0.0 && p.pump_frequency * p.duration > 50.0 * 1.0001)
            EXPECT_TRUE(p.amplitude >= 0.5e-3 && p.amplitude <= 1.5e-3) << p.amplitude;
}

TEST(Flux, InvertsBessel) {
    EXPECT_EQ(flux_amplitude_for_coupling(0.0, 2.0), 0.0);
    EXPECT_NEAR(flux_amplitude_for_coupling(1e-6, 2.0), 1e-6 / (kPi * 2.0), 1e-15);
    for (double target : {0.1, 0.5, 1.0, 1.16}) {
        const double phi = flux_amplitude_for_coupling(target, 2.0);
        EXPECT_LE(std::abs(2.0 * boost::math::cyl_bessel_j(1, 2.0 * kPi * phi) - target), 1e-12);
    }
    EXPECT_EQ(kind_of([] { flux_amplitude_for_coupling(1.2, 2.0); }), ErrorKind::OutOfBranch);
}

TEST(Multitone, EmptyDrive) {
    const auto cfg = microwave(2);
    const auto d = multitone_schedule(cfg, ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 2), 1e-7, 1e6);
    EXPECT_TRUE(d.tones.empty());
}

TEST(Multitone, SingleSqueezingToneMatchesSinglePulse) {
    const auto cfg = microwave(1);
    const double duration = 1e-7;
    const Complex xi = std::polar(5e5, 0.4);
    ComplexMatrix z = ComplexMatrix::Zero(1, 1);
    z(0, 0) = xi;
    const auto drive = multitone_schedule(cfg, ComplexMatrix::Zero(1, 1), z, duration, 1e6);
    ASSERT_EQ(drive.tones.size(), 1u);
    const double r = std::abs(xi) * duration;
    const double phi = std::arg(xi) - kPi / 2.0;
    const auto pulse = schedule_from_ops(cfg, {ElementaryOp::two_mode_squeeze(0, 1, r, phi)}, scattershot_placement(1));
    EXPECT_EQ(drive.tones[0].frequency, pulse.schedule.pulses[0].pump_frequency);

    const auto h = multitone_hamiltonian(cfg, drive);
    const auto from_drive = quadratic_transform(h.coupling, h.squeezing, h.duration);
    const auto from_pulse = schedule_transform(cfg, pulse.schedule);
    EXPECT_LE((from_drive.matrix() - from_pulse.matrix()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Multitone, SimultaneousDriveEngineMatchesOracle) {
    const auto cfg = microwave(2);
    ComplexMatrix g(2, 2), z(2, 2);
    g << Complex(2e6, 0.0), 0.0, Complex(0.0, -1.5e6), Complex(1e6, 1e6);
    z << Complex(1e6, 0.0), Complex(0.0, 5e5), 0.0, Complex(-7e5, 0.0);
    const auto drive = multitone_schedule(cfg, g, z, 1e-7, 5e6);
    EXPECT_EQ(drive.tones.size(), 6u);
    const auto h = multitone_hamiltonian(cfg, drive);
    const auto engine = vacuum_state(4).transformed(quadratic_transform(h.coupling, h.squeezing, h.duration));
    const auto oracle = fock_distribution(fock_evolve(4, {h}, 8));
    const auto exact = to_fock_distribution(photon_distribution(engine, 8));
    EXPECT_LE(total_variation_distance(oracle.probabilities, exact.probabilities), 1e-6);
}

TEST(Multitone, Gates) {
    const auto cfg = microwave(1);
    ComplexMatrix z(1, 1);
    z(0, 0) = 2e6;
    EXPECT_EQ(kind_of([&] { multitone_schedule(cfg, ComplexMatrix::Zero(1, 1), z, 1e-7, 1e7); }),
              ErrorKind::UnreachableCoefficient);
    ComplexMatrix g(1, 1);
    g(0, 0) = 1e7;
    EXPECT_EQ(kind_of([&] { multitone_schedule(cfg, g, ComplexMatrix::Zero(1, 1), 1e-7, 1e6); }),
              ErrorKind::UnreachableCoefficient);
}

}  // namespace
}  // namespace dcegbs
