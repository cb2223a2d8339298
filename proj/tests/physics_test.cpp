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

#include "dcegbs/physics.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "dcegbs/error.hpp"
#include "oracles.hpp"

namespace dcegbs {
namespace {

ResonatorPair incommensurate(int modes = 3) { return {1.0, std::sqrt(2.0), 1.0, modes, modes}; }

ResonatorPair microwave() { return {0.032, 0.032 * std::sqrt(2.0), 6.0e7, 2, 2}; }

PumpPulse blue_pulse(const ResonatorPair& cfg, int j, int l, double amplitude, double duration) {
    PumpPulse p;
    p.intent = PulseIntent::Squeeze;
    p.j = j;
    p.l = l;
    p.amplitude = amplitude;
    p.duration = duration;
    p.pump_frequency = resonance_frequency(cfg, j, l, ResonanceKind::Plus);
    return p;
}

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no dcegbs::Error thrown";
    return ErrorKind::ParseError;
}

TEST(Spectrum, DirichletModesAreEquallySpaced) {
    const auto cfg = incommensurate();
    const auto left = mode_frequencies(cfg, Side::Left);
    const auto right = mode_frequencies(cfg, Side::Right);
    ASSERT_EQ(left.size(), 3u);
    for (int n = 1; n <= 3; ++n) {
        EXPECT_DOUBLE_EQ(left[n - 1], n * kPi);
        EXPECT_DOUBLE_EQ(right[n - 1], n * kPi / std::sqrt(2.0));
    }
}

TEST(Spectrum, ResonanceFrequencies) {
    const auto cfg = incommensurate();
    EXPECT_DOUBLE_EQ(resonance_frequency(cfg, 2, 1, ResonanceKind::Plus), kPi * (2.0 / std::sqrt(2.0) + 1.0));
    EXPECT_NEAR(resonance_frequency(cfg, 2, 1, ResonanceKind::Minus), kPi * (2.0 / std::sqrt(2.0) - 1.0), 1e-14);
}

TEST(Spectrum, EqualFrequenciesHaveNoDifferenceResonance) {
    ResonatorPair cfg{1.0, 1.0, 1.0, 2, 2};
    EXPECT_EQ(kind_of([&] { resonance_frequency(cfg, 1, 1, ResonanceKind::Minus); }),
              ErrorKind::DegenerateResonance);
    EXPECT_NO_THROW(resonance_frequency(cfg, 1, 1, ResonanceKind::Plus));
}

TEST(Spectrum, InvalidInputs) {
    ResonatorPair bad{-1.0, 1.0, 1.0, 1, 1};
    EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::InvalidConfig);
    EXPECT_EQ(kind_of([&] { incommensurate().check_mode({Side::Right, 4}); }), ErrorKind::InvalidModeIndex);
    EXPECT_EQ(kind_of([&] { resonance_frequency(incommensurate(), 0, 1, ResonanceKind::Plus); }),
              ErrorKind::InvalidModeIndex);
}

TEST(Spectrum, AddressabilityDependsOnLengthRatio) {
    EXPECT_TRUE(addressability_report(incommensurate(4), 1e-9).empty());
    ResonatorPair commensurate{1.0, 2.0, 1.0, 3, 3};
    EXPECT_FALSE(addressability_report(commensurate, 1e-9).empty());
    EXPECT_EQ(resonance_table(incommensurate(4)).size(), 32u);
}

TEST(StaticCoefficients, ClosedFormValue) {
    // -(-1)^l j l pi^3 A^2 / (6 L) (l/L -+ j/L') delta at j = l = 1, L = 1, L' = sqrt 2.
    const auto cfg = incommensurate();
    const double delta = 1e-3;
    const double A = delta * std::sqrt(2.0);
    const auto c = static_bogoliubov(cfg, 1, 1, A);
    const double pre = std::pow(kPi, 3) * A * A * delta / 6.0;
    EXPECT_NEAR(c.alpha, pre * (1.0 - 1.0 / std::sqrt(2.0)), 1e-22);
    EXPECT_NEAR(c.beta, pre * (1.0 + 1.0 / std::sqrt(2.0)), 1e-22);
    EXPECT_NEAR(c.alpha, 3.0271760601e-09, 1e-18);
    EXPECT_TRUE(c.warnings.empty());
}

TEST(StaticCoefficients, ParityAndWarning) {
    const auto cfg = incommensurate();
    EXPECT_GT(static_bogoliubov(cfg, 1, 1, 1e-3).beta, 0.0);
    EXPECT_LT(static_bogoliubov(cfg, 1, 2, 1e-3).beta, 0.0);
    EXPECT_EQ(static_bogoliubov(cfg, 1, 1, 0.0).beta, 0.0);
    EXPECT_FALSE(static_bogoliubov(cfg, 1, 1, 0.2).warnings.empty());
}

TEST(StaticCoefficients, NumericMatchesAnalyticGapIntegral) {
    const auto cfg = incommensurate();
    for (int j = 1; j <= 3; ++j) {
        for (int l = 1; l <= 3; ++l) {
            const double A = 0.01;
            const double delta = A / cfg.length_right;
            const double kl = cfg.wavenumber(Side::Left, l);
            const double kr = cfg.wavenumber(Side::Right, j) / (1.0 - delta);
            const double overlap = testing::gap_overlap(kl, cfg.length_left, kr, A);
            const double wl = cfg.frequency(Side::Left, l);
            const double wr = cfg.frequency(Side::Right, j) / (1.0 - delta);
            const auto n = static_bogoliubov_numeric(cfg, j, l, A);
            EXPECT_NEAR(n.alpha.real(), -(wr - wl) * overlap, 1e-10 * std::abs(wr * overlap));
            EXPECT_NEAR(n.beta.real(), (wr + wl) * overlap, 1e-10 * std::abs(wr * overlap));
            EXPECT_EQ(n.alpha.imag(), 0.0);
        }
    }
}

TEST(StaticCoefficients, NumericApproachesClosedForm) {
    const auto cfg = incommensurate();
    for (double delta : {1e-3, 1e-2}) {
        const double A = delta * cfg.length_right;
        const auto c = static_bogoliubov(cfg, 2, 1, A);
        const auto n = static_bogoliubov_numeric(cfg, 2, 1, A);
        EXPECT_NEAR(n.alpha.real(), c.alpha, 5.0 * delta * std::abs(c.alpha));
        EXPECT_NEAR(n.beta.real(), c.beta, 5.0 * delta * std::abs(c.beta));
    }
}

TEST(KleinGordon, ModesAreOrthonormal) {
    const auto cfg = incommensurate();
    EXPECT_NEAR(klein_gordon_product(cfg, {Side::Left, 2}, {Side::Left, 2}).real(), 1.0, 1e-12);
    EXPECT_NEAR(klein_gordon_product(cfg, {Side::Right, 3}, {Side::Right, 3}).real(), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(klein_gordon_product(cfg, {Side::Left, 1}, {Side::Left, 3})), 0.0, 1e-12);
    EXPECT_EQ(std::abs(klein_gordon_product(cfg, {Side::Left, 1}, {Side::Right, 1})), 0.0);
}

TEST(OscillatingIntegral, ClosedFormMatchesQuadrature) {
    for (double nu : {0.0, 1e-7, 0.3, 2.0, 7.5}) {
        for (double t : {0.5, 13.0, 80.0}) {
            const Complex a = oscillating_integral(nu, 2.0, t);
            const Complex b = oscillating_integral_quadrature(nu, 2.0, t);
            EXPECT_NEAR(std::abs(a - b), 0.0, 1e-10 * std::max(1.0, std::abs(a))) << nu << " " << t;
        }
    }
    EXPECT_EQ(oscillating_integral(3.0, 2.0, 0.0), Complex(0.0));
}

TEST(OscillatingIntegral, SimpsonCrossCheck) {
    const double nu = 1.3, w = 2.1, t = 4.0;
    const double re = testing::simpson([&](double s) { return std::cos(nu * s) * std::sin(w * s); }, 0.0, t, 4000);
    const double im = testing::simpson([&](double s) { return -std::sin(nu * s) * std::sin(w * s); }, 0.0, t, 4000);
    const Complex a = oscillating_integral(nu, w, t);
    EXPECT_NEAR(a.real(), re, 1e-10);
    EXPECT_NEAR(a.imag(), im, 1e-10);
}

TEST(PulseCoefficients, ZeroDurationIsZero) {
    const auto cfg = microwave();
    const auto p = blue_pulse(cfg, 1, 1, 1e-3, 0.0);
    const auto c = pulse_bogoliubov_numeric(cfg, p, 1, 1);
    EXPECT_EQ(std::abs(c.alpha), 0.0);
    EXPECT_EQ(std::abs(c.beta), 0.0);
    EXPECT_EQ(pulse_bogoliubov_resonant(cfg, p, 1, 1).value, 0.0);
}

TEST(PulseCoefficients, ResonantRateFormula) {
    // (-1)^l w'_j w_l w_p^2 A^3 t / (12 c^3), with a minus sign on the sum resonance.
    const auto cfg = microwave();
    const double A = 1e-3, t = 100e-9;
    const auto p = blue_pulse(cfg, 1, 1, A, t);
    const double wr = 6.0e7 * kPi / (0.032 * std::sqrt(2.0));
    const double wl = 6.0e7 * kPi / 0.032;
    const double wp = wr + wl;
    const double expect = wr * wl * wp * wp * A * A * A * t / (12.0 * std::pow(6.0e7, 3));
    const auto c = pulse_bogoliubov_resonant(cfg, p, 1, 1);
    EXPECT_EQ(c.kind, ResonanceKind::Plus);
    EXPECT_NEAR(c.value, expect, 1e-12 * expect);
    EXPECT_NEAR(c.value, 0.0957141085925, 1e-12);
    EXPECT_TRUE(c.warnings.empty());
}

TEST(PulseCoefficients, NumericSlopeTracksResonantRate) {
    const auto cfg = microwave();
    const double A = 2e-4;
    const double wp = resonance_frequency(cfg, 1, 2, ResonanceKind::Plus);
    const double t1 = 200.0 / wp, t2 = 400.0 / wp;
    const auto b1 = pulse_bogoliubov_numeric(cfg, blue_pulse(cfg, 1, 2, A, t1), 1, 2).beta;
    const auto b2 = pulse_bogoliubov_numeric(cfg, blue_pulse(cfg, 1, 2, A, t2), 1, 2).beta;
    const double slope = (std::abs(b2) - std::abs(b1)) / (t2 - t1);
    const double rate = std::abs(resonant_rate(cfg, 1, 2, ResonanceKind::Plus, A));
    EXPECT_NEAR(slope, rate, 0.05 * rate);
}

TEST(PulseCoefficients, Gates) {
    const auto cfg = microwave();
    auto p = blue_pulse(cfg, 1, 1, 1e-3, 100e-9);
    p.pump_frequency *= 1.01;
    EXPECT_EQ(kind_of([&] { pulse_bogoliubov_resonant(cfg, p, 1, 1); }), ErrorKind::OffResonance);
    auto short_pulse = blue_pulse(cfg, 1, 1, 1e-3, 1e-9);
    EXPECT_EQ(kind_of([&] { pulse_bogoliubov_resonant(cfg, short_pulse, 1, 1); }), ErrorKind::RWAInvalid);
    auto strong = blue_pulse(cfg, 1, 1, 1.2e-3, 100e-9);
    EXPECT_FALSE(pulse_bogoliubov_resonant(cfg, strong, 1, 1).warnings.empty());
    auto huge = blue_pulse(cfg, 1, 1, 0.05, 100e-9);
    EXPECT_EQ(kind_of([&] { huge.validate(cfg); }), ErrorKind::InvalidPulse);
}

TEST(PulseCoefficients, SignConventions) {
    const auto cfg = microwave();
    EXPECT_GT(resonant_rate(cfg, 1, 1, ResonanceKind::Plus, 1e-3), 0.0);
    EXPECT_LT(resonant_rate(cfg, 1, 2, ResonanceKind::Plus, 1e-3), 0.0);
    EXPECT_LT(resonant_rate(cfg, 1, 1, ResonanceKind::Minus, 1e-3), 0.0);
}

}  // namespace
}  // namespace dcegbs
