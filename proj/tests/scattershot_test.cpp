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

#include "dcegbs/scattershot.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "dcegbs/error.hpp"
#include "dcegbs/fock.hpp"

namespace dcegbs {
namespace {

ResonatorPair microwave(int modes) { return {0.032, 0.032 * std::sqrt(2.0), 6.0e7, modes, modes}; }

TargetInstance instance(const ComplexMatrix& u, double r) {
    TargetInstance t;
    t.n_modes = static_cast<int>(u.rows());
    t.unitary = u;
    t.squeezers.assign(t.n_modes, SqueezeSpec{r, 0.0});
    return t;
}

TEST(Prepare, VacuumAtZeroSqueezing) {
    const auto s = prepare_scattershot_state(3, 0.0);
    EXPECT_EQ(s.n_modes(), 6);
    EXPECT_EQ(s.covariance(), RealMatrix::Identity(12, 12));
}

TEST(Prepare, OccupationIsSinhSquared) {
    const double r = 0.4;
    const auto n = mean_photon_numbers(prepare_scattershot_state(2, r));
    for (double x : n) EXPECT_NEAR(x, std::pow(std::sinh(r), 2), 1e-14);

    using Step = HamiltonianStep;
    const auto d = fock_distribution(
        fock_evolve(4, {Step::two_mode_squeeze(0, 2, r, 0.0), Step::two_mode_squeeze(1, 3, r, 0.0)}, 9));
    std::vector<double> mean(4, 0.0);
    for (const auto& [k, p] : d.probabilities)
        for (int m = 0; m < 4; ++m) mean[m] += k[m] * p;
    for (int m = 0; m < 4; ++m) EXPECT_NEAR(mean[m], n[m], 1e-7);
}

TEST(Prepare, HalvesHaveEqualMarginals) {
    const auto s = prepare_scattershot_state(3, 0.6, 0.8);
    const auto& v = s.covariance();
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(v(k, k), v(k + 3, k + 3), 1e-14);
        EXPECT_NEAR(v(k + 6, k + 6), v(k + 9, k + 9), 1e-14);
    }
}

TEST(Oracle, SinglePhotonIsColumnModuli) {
    const auto u = haar_random_unitary(4, 3);
    const auto d = conditional_distribution_oracle(u, {0, 0, 1, 0}, 1);
    ASSERT_EQ(d.size(), 4u);
    for (int t = 0; t < 4; ++t) {
        FockPattern key(4, 0);
        key[t] = 1;
        EXPECT_NEAR(d.at(key), std::norm(u(t, 2)), 1e-15);
    }
}

TEST(Oracle, IdentityIsPointMassAndSumsToOne) {
    const auto id = conditional_distribution_oracle(ComplexMatrix::Identity(5, 5), {1, 0, 2, 0, 1}, 4);
    EXPECT_NEAR(id.at({1, 0, 2, 0, 1}), 1.0, 1e-15);
    const auto d = conditional_distribution_oracle(haar_random_unitary(6, 8), {1, 0, 1, 1, 0, 1}, 4);
    double sum = 0.0;
    for (const auto& [k, p] : d) sum += p;
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_THROW(conditional_distribution_oracle(haar_random_unitary(11, 1), FockPattern(11, 0), 0), Error);
}

TEST(Run, IdentityNetworkPassesPhotonsThrough) {
    const auto run = run_scattershot(microwave(4), instance(ComplexMatrix::Identity(4, 4), 0.9), 20000, 2, 5);
    EXPECT_GT(run.accepted, 0u);
    for (const auto& rec : run.records)
        if (rec.accepted) EXPECT_EQ(rec.herald, rec.output);
}

TEST(Run, SinglePhotonMatchesColumnModuli) {
    const auto u = haar_random_unitary(4, 21);
    const auto run = run_scattershot(microwave(4), instance(u, 0.8), 100000, 1, 17);
    const double tvd = total_variation_distance(heralded_empirical(run.records), heralded_oracle(u, 1));
    EXPECT_LE(tvd, 0.02);
}

TEST(Run, AcceptanceMatchesHeraldingProbability) {
    const auto inst = instance(haar_random_unitary(3, 2), 0.7);
    const std::size_t n = 50000;
    const auto run = run_scattershot(microwave(3), inst, n, 1, 8);
    const double p = heralding_probability(inst.squeezers, 1);
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    EXPECT_NEAR(run.acceptance_fraction, p, 5.0 * sigma);
    // Three geometric pairs with q = tanh^2 r: P(1) / (P(0) + P(1)) = 3q / (1 + 3q).
    const double q = std::pow(std::tanh(0.7), 2);
    EXPECT_NEAR(p, 3.0 * q / (1.0 + 3.0 * q), 1e-14);
}

TEST(Run, ReproducibleFromSeed) {
    const auto inst = instance(haar_random_unitary(3, 4), 0.6);
    const auto a = run_scattershot(microwave(3), inst, 5000, 1, 123);
    const auto b = run_scattershot(microwave(3), inst, 5000, 1, 123);
    EXPECT_EQ(a.records, b.records);
    const auto c = run_scattershot(microwave(3), inst, 5000, 1, 124);
    EXPECT_NE(a.records, c.records);
}

TEST(Run, CompiledRouteMatchesOracle) {
    const auto u = haar_random_unitary(3, 77);
    ScattershotOptions opt;
    opt.route = ScattershotOptions::Route::Compiled;
    const auto run = run_scattershot(microwave(3), instance(u, 0.8), 100000, 1, 31, opt);
    ASSERT_TRUE(run.compiled.has_value());
    EXPECT_LE(run.compiled->max_relative_error, 1e-9);
    EXPECT_LE(total_variation_distance(heralded_empirical(run.records), heralded_oracle(u, 1)), 0.02);
}

TEST(Run, NoAcceptedSamples) {
    try {
        run_scattershot(microwave(2), instance(ComplexMatrix::Identity(2, 2), 1e-4), 10, 2, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoAcceptedSamples);
    }
}

TEST(Parity, ReadoutAndAliasing) {
    EXPECT_EQ(parity_readout({0, 0, 0}).parities, std::vector<Parity>(3, Parity::Even));
    EXPECT_EQ(parity_readout({1, 0, 1}).parities, (std::vector<Parity>{Parity::Odd, Parity::Even, Parity::Odd}));
    const auto r = parity_readout({2, 0});
    EXPECT_EQ(r.parities[0], Parity::Even);
    EXPECT_TRUE(r.aliasing());
    EXPECT_EQ(r.aliased_modes, std::vector<int>{0});
    EXPECT_FALSE(parity_readout({1, 1, 0}).aliasing());
}

TEST(Parity, RamseyTimesAsPrinted) {
    RealMatrix delta(2, 1);
    delta << 4.0, 8.0;
    const auto r = parity_readout({1, 0}, {2.0, 3.0}, delta);
    ASSERT_EQ(r.plan.size(), 2u);
    EXPECT_DOUBLE_EQ(r.plan[0].time, kPi * 4.0 / 4.0);
    EXPECT_DOUBLE_EQ(r.plan[1].time, kPi * 9.0 / 8.0);
}

TEST(Estimate, TenthBetaGivesHundredRepetitions) {
    const auto cfg = microwave(1);
    const double t = 100e-9;
    const double unit = std::abs(resonant_rate(cfg, 1, 1, ResonanceKind::Plus, 1.0));
    const double amplitude = std::cbrt(0.1 / (unit * t));
    const auto schedule = feasibility_schedule(cfg, 1, amplitude, t);
    const auto est = experiment_estimate(cfg, schedule, 1e-6);
    EXPECT_NEAR(est.max_beta, 0.1, 1e-12);
    EXPECT_EQ(est.repetitions, 100.0);
    EXPECT_NEAR(est.event_rate, 1.0 / (100.0 * 1.1e-6), 1e-6);
}

TEST(Estimate, MicrowaveParameters) {
    const auto cfg = microwave(1);
    const auto schedule = feasibility_schedule(cfg, 3, 1e-3, 100e-9);
    EXPECT_EQ(schedule.pulses.size(), 45u);
    const auto est = experiment_estimate(cfg, schedule, 1e-6);
    EXPECT_LT(est.max_beta, 0.1);
    EXPECT_NEAR(est.repetitions, 100.0, 25.0);
    EXPECT_GT(est.event_rate, 1e2);
    EXPECT_LT(est.event_rate, 1e4);
}

TEST(Estimate, LimitingCases) {
    const auto cfg = microwave(1);
    const auto zero = experiment_estimate(cfg, feasibility_schedule(cfg, 1, 0.0, 100e-9), 1e-6);
    EXPECT_FALSE(zero.attainable());
    EXPECT_EQ(zero.event_rate, 0.0);
    const auto slow =
        experiment_estimate(cfg, feasibility_schedule(cfg, 1, 1e-3, 100e-9), std::numeric_limits<double>::infinity());
    EXPECT_EQ(slow.event_rate, 0.0);
}

}  // namespace
}  // namespace dcegbs
